"""Exact block decomposition and PBW filtrations of the reduced enveloping
algebras of sl2 over small finite fields."""

from .backend import BACKEND
from .ffield import (
    DEFAULT_MAX_P,
    MAX_REGULAR_P,
    Field,
    FieldElem,
    Poly,
    artin_schreier_field,
    legendre,
    omega_of_alpha,
    prime_field,
)
from .pbw import Algebra, AlgElem, Character, algebra

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_MAX_P",
    "MAX_REGULAR_P",
    "Field",
    "FieldElem",
    "Poly",
    "Algebra",
    "AlgElem",
    "Character",
    "algebra",
    "artin_schreier_field",
    "legendre",
    "omega_of_alpha",
    "prime_field",
    "__version__",
]
