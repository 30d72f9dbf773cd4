"""Exact arithmetic substrate: Z[1/p], phases mod 1, rational p-adics."""

from .errors import (
    NotPrime,
    PrimeMismatch,
    SolenoidError,
    SymbolMismatch,
    UndecidableSign,
    check_prime,
    is_prime,
)
from .padic import PAdicInt, PAdicNumber, canonical_word, frac_p, padic_invert
from .rational import PAdicRational, padic_norm, rational_valuation, valuation
from .real import Phase, Real, Symbol, phase_add, phase_scale, phase_sum

__all__ = [
    "NotPrime",
    "PAdicInt",
    "PAdicNumber",
    "PAdicRational",
    "Phase",
    "PrimeMismatch",
    "Real",
    "SolenoidError",
    "Symbol",
    "SymbolMismatch",
    "UndecidableSign",
    "canonical_word",
    "check_prime",
    "frac_p",
    "is_prime",
    "padic_invert",
    "padic_norm",
    "phase_add",
    "phase_scale",
    "phase_sum",
    "rational_valuation",
    "valuation",
]
