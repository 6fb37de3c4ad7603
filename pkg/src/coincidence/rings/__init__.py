"""Exact arithmetic in Z[i], Z[tau], Q(tau) and Z[xi] (xi a fifth root of unity)."""

from .cyclotomic import CycloInt, cyclo_normalize, from_golden
from .factor import (
    PrimeSplit,
    abs_norm,
    factor_element,
    golden_sqrt,
    multiply_out,
    ring_of,
    ring_tag,
    split_prime,
    unit_normalize,
)
from .gaussian import GaussInt, gauss_gcd, gauss_normalize
from .golden import GoldenInt, QTau, golden_gcd, golden_normalize, unit_exponent
from .text import format_element, parse_element, parse_scalar

__all__ = [
    "CycloInt", "GaussInt", "GoldenInt", "PrimeSplit", "QTau",
    "abs_norm", "cyclo_normalize", "factor_element", "format_element",
    "from_golden", "gauss_gcd", "gauss_normalize", "golden_gcd",
    "golden_normalize", "golden_sqrt", "multiply_out", "parse_element",
    "parse_scalar", "ring_of", "ring_tag", "split_prime", "unit_exponent",
    "unit_normalize",
]
