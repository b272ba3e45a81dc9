"""Propagation calculus: the 2x2 matrices that walk a frieze pattern.

Two consecutive entries of a row, multiplied on the right by the matrix
``mu(c, d, e)`` built from one quiddity value and two boundary values,
yield the next two consecutive entries.  Iterating from the extended seed
(-d_{i-1}, 0) generates whole rows; one full period of the product
collapses to -Id exactly when the data closes up into a frieze.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import PatternGrid
from .scalars import as_scalar


class Mat2:
    """Immutable exact 2x2 matrix."""

    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11, a12, a21, a22) -> None:
        object.__setattr__(self, "a11", as_scalar(a11))
        object.__setattr__(self, "a12", as_scalar(a12))
        object.__setattr__(self, "a21", as_scalar(a21))
        object.__setattr__(self, "a22", as_scalar(a22))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Mat2 is immutable")

    def __mul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def transpose(self) -> Mat2:
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat2)
                and (self.a11, self.a12, self.a21, self.a22)
                == (other.a11, other.a12, other.a21, other.a22))

    def __hash__(self) -> int:
        return hash((self.a11, self.a12, self.a21, self.a22))

    def __repr__(self) -> str:
        return f"Mat2({self.a11}, {self.a12}, {self.a21}, {self.a22})"


#: The swap matrix [[0, 1], [1, 0]] conjugating mu- and eta-matrices.
TAU = Mat2(0, 1, 1, 0)

_NEG_IDENTITY = Mat2(-1, 0, 0, -1)


def mu(c, d, e) -> Mat2:
    """[[0, -d/e], [1, c/e]]; determinant d/e.  Requires e != 0."""
    c, d, e = as_scalar(c), as_scalar(d), as_scalar(e)
    if e == 0:
        raise ValueError("mu requires a nonzero third argument")
    return Mat2(0, -d / e, 1, c / e)


def eta(c, d, e) -> Mat2:
    """[[c/e, -d/e], [1, 0]]; the classic propagation matrix is eta(c, 1, 1)."""
    c, d, e = as_scalar(c), as_scalar(d), as_scalar(e)
    if e == 0:
        raise ValueError("eta requires a nonzero third argument")
    return Mat2(c / e, -d / e, 1, 0)


def propagate_row(prev: tuple, c_prev, d_next, d_prev) -> tuple[Fraction, Fraction]:
    """One row step: (x, y) * mu(c_prev, d_next, d_prev) = (y, next).

    The first returned component always equals the second input component,
    so iterating this slides a length-2 window along the row.
    """
    x, y = as_scalar(prev[0]), as_scalar(prev[1])
    d_prev = as_scalar(d_prev)
    if d_prev == 0:
        raise ValueError("propagation divides by the previous boundary entry")
    return (y, (as_scalar(c_prev) * y - as_scalar(d_next) * x) / d_prev)


def _coerce_cycle(values: Sequence, what: str) -> tuple[Fraction, ...]:
    cycle = tuple(as_scalar(v) for v in values)
    if len(cycle) < 3:
        raise ValueError(f"{what} needs at least 3 values")
    return cycle


def _coerce_boundary(values: Sequence) -> tuple[Fraction, ...]:
    cycle = _coerce_cycle(values, "boundary sequence")
    if any(v == 0 for v in cycle):
        raise ValueError("boundary entries must be nonzero")
    return cycle


def build_pattern(boundary: Sequence, quiddity: Sequence) -> PatternGrid:
    """Generate one period of the pattern determined by boundary + quiddity.

    Row i grows from the extended seed (c(i, i-1), c(i, i)) = (-d_{i-1}, 0)
    by repeated row propagation; indices into both cycles are taken mod m.
    The trailing entry c(i, i+m) is the definitional zero of the array, so
    building never fails on mathematically inconsistent input: a quiddity
    whose propagation does not close back to zero simply leaves local-rule
    violations for the validators to report.  Division only ever happens
    by boundary entries.
    """
    d = _coerce_boundary(boundary)
    q = _coerce_cycle(quiddity, "quiddity cycle")
    m = len(d)
    if len(q) != m:
        raise ValueError("boundary and quiddity must have the same length")
    rows = []
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        pair = (-d[(i - 1) % m], Fraction(0))
        for j in range(i, i + m - 1):
            pair = propagate_row(pair, q[(j - 1) % m], d[j % m], d[(j - 1) % m])
            row[j - i + 1] = pair[1]
        rows.append(row)
    return PatternGrid(rows)


def _mu_at(d: tuple, q: tuple, k: int) -> Mat2:
    m = len(d)
    return mu(q[(k - 1) % m], d[k % m], d[(k - 1) % m])


def closure_product(boundary: Sequence, quiddity: Sequence) -> Mat2:
    """The ordered product of mu-matrices over one full period, k = 1..m.

    Index convention pinned down once and for all: factor k is
    ``mu(q[k-1], d[k], d[k-1])`` with both cycles read mod m.  The product
    equals -Id exactly when the data extends to a tame frieze with
    coefficients; an off-by-one here would silently break everything
    downstream, hence the explicit spelling.
    """
    d = _coerce_boundary(boundary)
    q = _coerce_cycle(quiddity, "quiddity cycle")
    if len(q) != len(d):
        raise ValueError("boundary and quiddity must have the same length")
    product = Mat2.identity()
    for k in range(1, len(d) + 1):
        product = product * _mu_at(d, q, k)
    return product


def closes_to_negative_identity(boundary: Sequence, quiddity: Sequence) -> bool:
    return closure_product(boundary, quiddity) == _NEG_IDENTITY


def entry_via_product(boundary: Sequence, quiddity: Sequence, i: int, j: int) -> Fraction:
    """Recover c(i, j) as -d_{i-1} times the (1,1) entry of a mu-product.

    Valid for i - 1 <= j <= i + m - 1; the empty product at j = i - 1
    correctly returns the extended entry -d_{i-1}.
    """
    d = _coerce_boundary(boundary)
    q = _coerce_cycle(quiddity, "quiddity cycle")
    m = len(d)
    if len(q) != m:
        raise ValueError("boundary and quiddity must have the same length")
    if not i - 1 <= j <= i + m - 1:
        raise ValueError(f"entry ({i}, {j}) is not reachable by the product formula")
    product = Mat2.identity()
    for k in range(i, j + 1):
        product = product * _mu_at(d, q, k)
    return -d[(i - 1) % m] * product.a11
