"""Frobenius splittings and compatibly split ideals over F_p."""

from ._fsplit import (
    Error,
    Ideal,
    NotASplitting,
    ParseError,
    Polynomial,
    Ring,
    Splitting,
    frobenius,
    run_scenario,
    standard_splitting,
    trace,
)

__all__ = [
    "Error",
    "Ideal",
    "NotASplitting",
    "ParseError",
    "Polynomial",
    "Ring",
    "Splitting",
    "frobenius",
    "run_scenario",
    "standard_splitting",
    "trace",
]
