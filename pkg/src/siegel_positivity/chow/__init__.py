"""Tautological-ring arithmetic on the flag bundle of the Siegel variety."""

from .fixtures import EOFixture, load_fixture, not_nef_witness, parse_fixture, verify
from .poly import Poly, parse_poly
from .ring import (
    PPoly,
    TautClass,
    first_chern,
    intersection_number,
    invariant_ideal_generators,
    normal_form,
    quotient_dimensions,
)

__all__ = [
    "EOFixture",
    "PPoly",
    "Poly",
    "TautClass",
    "first_chern",
    "intersection_number",
    "invariant_ideal_generators",
    "load_fixture",
    "normal_form",
    "not_nef_witness",
    "parse_fixture",
    "parse_poly",
    "quotient_dimensions",
    "verify",
]
