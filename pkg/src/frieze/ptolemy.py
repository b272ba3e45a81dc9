"""Ptolemy relations on a frieze with coefficients.

For vertices i <= j <= k <= l of the polygon, the relation asks that the
products of the labels on the two crossing diagonals equal the sum of the
products on opposite sides: c(i,k)c(j,l) = c(i,l)c(j,k) + c(i,j)c(k,l).
Quadruples with repeated vertices hold automatically because c(v, v) = 0.
"""

from __future__ import annotations

from itertools import combinations

from .core import FriezeMap, ValidationReport, Violation
from .scalars import scalar_to_str


def ptolemy_holds(f: FriezeMap, i: int, j: int, k: int, l: int) -> bool:
    """Exact check of one Ptolemy relation for 1 <= i <= j <= k <= l <= m."""
    if not (1 <= i <= j <= k <= l <= f.m):
        raise ValueError("vertices must be weakly increasing within 1..m")
    return (f.value(i, k) * f.value(j, l)
            == f.value(i, l) * f.value(j, k) + f.value(i, j) * f.value(k, l))


def verify_all_ptolemy(f: FriezeMap) -> ValidationReport:
    """Check every strictly increasing quadruple; degenerate ones hold trivially.

    The report lists all failures in lexicographic order, which keeps
    mutation-style tests deterministic.
    """
    bad = []
    for i, j, k, l in combinations(range(1, f.m + 1), 4):
        lhs = f.value(i, k) * f.value(j, l)
        rhs = f.value(i, l) * f.value(j, k) + f.value(i, j) * f.value(k, l)
        if lhs != rhs:
            bad.append(Violation(
                "ptolemy", (i, j, k, l),
                f"{scalar_to_str(lhs)} != {scalar_to_str(rhs)}"))
    return ValidationReport(tuple(bad))
