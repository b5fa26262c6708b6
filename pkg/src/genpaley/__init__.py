"""Generalized Paley graphs of primitive quadratic characters: spectra, Ramanujan property, Cheeger bounds."""

from .errors import ContractError, DomainError, ParityError, UnsupportedRangeError, ValidationError
from .paley import PaleyGraph, build
from .qchar import FundamentalDiscriminant, QuadraticCharacter, quadratic_character, validate_fundamental

__all__ = [
    "ContractError",
    "DomainError",
    "FundamentalDiscriminant",
    "PaleyGraph",
    "ParityError",
    "QuadraticCharacter",
    "UnsupportedRangeError",
    "ValidationError",
    "build",
    "quadratic_character",
    "validate_fundamental",
]
