"""The two faces of a frieze with coefficients.

A :class:`PatternGrid` is the raw doubly-indexed array one gets by
propagating a boundary sequence and quiddity cycle: rows 0..m-1, each
holding the entries c(i, i) .. c(i, i+m), plus the two extended diagonals
c(i, i-1) = -c(i-1, i) and c(i, i+m+1) = -c(i, i+1).  Nothing about a grid
is assumed valid; the validators below certify the local determinant rule,
tameness, and the glide symmetry.

A :class:`FriezeMap` is the glide-quotiented view: one value for every
edge and diagonal of an m-gon with vertices 1..m.  ``normalize_index`` is
the single conversion point between grid indices and polygon pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .scalars import as_scalar, scalar_from_str, scalar_to_str


class _ZeroEntry:
    """Lookup result for the structurally forced zeros c(i, i) and c(i, i+m)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZeroEntry"


#: Singleton returned by :func:`normalize_index` for forced-zero positions.
ZERO_ENTRY = _ZeroEntry()


def normalize_index(m: int, i: int, j: int):
    """Map a grid index (i, j) to its polygon pair under the glide symmetry.

    Requires i <= j <= i + m.  Returns :data:`ZERO_ENTRY` when j is i or
    i + m (the forced zeros); otherwise translates by multiples of m so
    that 1 <= i <= m and returns the pair (i, j) if j <= m, else the
    glide-reflected pair (j - m, i).  Output pairs are sorted.
    """
    if m < 3:
        raise ValueError("polygon needs at least 3 vertices")
    if j < i or j > i + m:
        raise ValueError(f"index ({i}, {j}) outside the fundamental strip")
    if j == i or j == i + m:
        return ZERO_ENTRY
    r = (i - 1) % m + 1
    j += r - i
    if j <= m:
        return (r, j)
    return (j - m, r)


@dataclass(frozen=True)
class Violation:
    """A single failed check; ``at`` holds the indices it failed at."""

    rule: str
    at: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def merged(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(self.violations + other.violations)


class PatternGrid:
    """Raw frieze pattern: m rows of m+1 entries, row i covering c(i, i..i+m).

    Immutable after construction.  Row indices are read modulo m, matching
    the periodicity of any pattern generated from an m-periodic boundary
    and quiddity.  Structural invariants (stored zeros at both ends of each
    row, nonzero boundary entries) are enforced here; mathematical validity
    is a separate concern for the validators.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows) -> None:
        table = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        m = len(table)
        if m < 3:
            raise ValueError("pattern needs at least 3 rows")
        for i, row in enumerate(table):
            if len(row) != m + 1:
                raise ValueError(f"row {i} must hold {m + 1} entries")
            if row[0] != 0 or row[m] != 0:
                raise ValueError(f"row {i} must start and end with 0")
            if row[1] == 0:
                raise ValueError(f"boundary entry c({i}, {i + 1}) is zero")
        self._rows = table

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def n(self) -> int:
        """Height of the pattern (m - 3)."""
        return len(self._rows) - 3

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        """c(i, j) for any integer row i and i - 1 <= j <= i + m + 1.

        The two extra offsets are the extended diagonals of the pattern.
        """
        m = self.m
        r = i % m
        offset = j - i
        if offset == -1:
            return -self._rows[(r - 1) % m][1]
        if offset == m + 1:
            return -self._rows[r][1]
        if 0 <= offset <= m:
            return self._rows[r][offset]
        raise ValueError(f"entry ({i}, {j}) outside the extended strip")

    @property
    def boundary_sequence(self) -> tuple[Fraction, ...]:
        """d_i = c(i, i+1) for i = 0..m-1."""
        return tuple(row[1] for row in self._rows)

    @property
    def quiddity_cycle(self) -> tuple[Fraction, ...]:
        """q_i = c(i, i+2) for i = 0..m-1."""
        return tuple(row[2] for row in self._rows)

    def replace_entry(self, i: int, j: int, value) -> PatternGrid:
        """A copy with c(i, j) replaced; used by mutation-style tests."""
        m = self.m
        r, offset = i % m, j - i
        if not 0 <= offset <= m:
            raise ValueError("can only replace stored entries")
        rows = [list(row) for row in self._rows]
        rows[r][offset] = as_scalar(value)
        return PatternGrid(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, PatternGrid) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"PatternGrid(m={self.m}, n={self.n})"


def validate_local(grid: PatternGrid) -> ValidationReport:
    """Check every 2x2 determinant condition, extended diagonals included.

    The condition at (i, j) asks that the adjacent 2x2 determinant equal
    the product of the two boundary entries c(i+1, i+m) and c(j, j+1); a
    row that fails to glide back onto the boundary therefore shows up here.
    """
    m = grid.m
    bad = []
    for i in range(m):
        for j in range(i, i + m + 1):
            lhs = (grid.entry(i, j) * grid.entry(i + 1, j + 1)
                   - grid.entry(i, j + 1) * grid.entry(i + 1, j))
            rhs = grid.entry(i + 1, i + m) * grid.entry(j, j + 1)
            if lhs != rhs:
                bad.append(Violation(
                    "local", (i, j),
                    f"determinant {scalar_to_str(lhs)} != {scalar_to_str(rhs)}"))
    return ValidationReport(tuple(bad))


def _det3(rows) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def validate_tame(grid: PatternGrid) -> ValidationReport:
    """Report every complete adjacent 3x3 submatrix with nonzero determinant.

    Runs over the extended pattern, so the window top-left corner (i, j)
    ranges over j = i+1 .. i+m-1.
    """
    m = grid.m
    bad = []
    for i in range(m):
        for j in range(i + 1, i + m):
            det = _det3([
                [grid.entry(i + di, j + dj) for dj in range(3)]
                for di in range(3)
            ])
            if det != 0:
                bad.append(Violation(
                    "tame", (i, j), f"3x3 determinant {scalar_to_str(det)} != 0"))
    return ValidationReport(tuple(bad))


def check_glide(grid: PatternGrid) -> bool:
    """True iff c(i, j) = c(j, i + m) for every stored entry."""
    m = grid.m
    return all(
        grid.entry(i, j) == grid.entry(j, i + m)
        for i in range(m)
        for j in range(i, i + m + 1)
    )


class FriezeMap:
    """A frieze with coefficients: values on all edges and diagonals of an m-gon.

    Entries are stored for unordered pairs {p, q} with 1 <= p < q <= m and
    looked up symmetrically; c(v, v) reads as 0 but is never stored.  The
    map is immutable, hence safe to share between threads.
    """

    __slots__ = ("m", "_entries", "_key")

    def __init__(self, m: int, entries: Mapping[tuple[int, int], object]) -> None:
        if m < 3:
            raise ValueError("polygon needs at least 3 vertices")
        table: dict[tuple[int, int], Fraction] = {}
        for (p, q), value in entries.items():
            if not (1 <= p < q <= m):
                raise ValueError(f"bad vertex pair ({p}, {q}) for m={m}")
            table[(p, q)] = as_scalar(value)
        expected = m * (m - 1) // 2
        if len(table) != expected:
            raise ValueError(f"need all {expected} vertex pairs, got {len(table)}")
        for p in range(1, m + 1):
            q = p % m + 1
            if table[(min(p, q), max(p, q))] == 0:
                raise ValueError(f"boundary entry at edge ({p}, {q}) is zero")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_entries", table)
        object.__setattr__(self, "_key", (m, tuple(sorted(table.items()))))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("FriezeMap is immutable")

    def value(self, p: int, q: int) -> Fraction:
        """Symmetric lookup for vertices 1..m; equal vertices read as 0."""
        if not (1 <= p <= self.m and 1 <= q <= self.m):
            raise ValueError(f"vertices must lie in 1..{self.m}")
        if p == q:
            return Fraction(0)
        return self._entries[(min(p, q), max(p, q))]

    def value_indexed(self, i: int, j: int) -> Fraction:
        """Grid-style lookup via :func:`normalize_index` (i <= j <= i + m)."""
        pair = normalize_index(self.m, i, j)
        if pair is ZERO_ENTRY:
            return Fraction(0)
        return self._entries[pair]

    def pairs(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._entries.items()))

    @property
    def boundary_sequence(self) -> tuple[Fraction, ...]:
        """d_i = c(i, i+1), i = 0..m-1, aligned with grid row indexing."""
        return tuple(self.value_indexed(i, i + 1) for i in range(self.m))

    @property
    def quiddity_cycle(self) -> tuple[Fraction, ...]:
        """q_i = c(i, i+2), i = 0..m-1."""
        return tuple(self.value_indexed(i, i + 2) for i in range(self.m))

    @property
    def edge_values(self) -> tuple[Fraction, ...]:
        """Edge labels read around the polygon: (1,2), (2,3), ..., (m,1)."""
        return tuple(self.value(p, p % self.m + 1) for p in range(1, self.m + 1))

    def diagonal_items(self) -> list[tuple[tuple[int, int], Fraction]]:
        m = self.m
        return [((p, q), v) for (p, q), v in sorted(self._entries.items())
                if q - p not in (1, m - 1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, FriezeMap) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def sort_key(self):
        return self._key

    def __repr__(self) -> str:
        return f"FriezeMap(m={self.m})"


def to_polygon(grid: PatternGrid) -> FriezeMap:
    """Quotient a glide-symmetric grid to its polygon map.

    Raises ValueError if the grid does not satisfy the glide symmetry,
    since the quotient would then be ill-defined.
    """
    if not check_glide(grid):
        raise ValueError("grid is not glide-symmetric; cannot fold onto a polygon")
    m = grid.m
    entries = {
        (p, q): grid.entry(p, q)
        for p in range(1, m)
        for q in range(p + 1, m + 1)
    }
    return FriezeMap(m, entries)


def grid_from_polygon(f: FriezeMap) -> PatternGrid:
    """Unfold a polygon map to one glide period of the raw pattern."""
    m = f.m
    return PatternGrid([
        [f.value_indexed(i, i + offset) for offset in range(m + 1)]
        for i in range(m)
    ])


def scale(f: FriezeMap, z) -> FriezeMap:
    """Multiply every entry by a nonzero rational (Remark-style rescaling)."""
    factor = as_scalar(z)
    if factor == 0:
        raise ValueError("scaling factor must be nonzero")
    return FriezeMap(f.m, {pair: v * factor for pair, v in f.pairs()})


# -- JSON wire format ------------------------------------------------------


def frieze_to_json(f: FriezeMap) -> dict:
    """``{"m": 6, "entries": {"1,3": "4", ...}}`` with every pair present."""
    return {
        "m": f.m,
        "entries": {f"{p},{q}": scalar_to_str(v) for (p, q), v in f.pairs()},
    }


def frieze_from_json(obj) -> FriezeMap:
    """Strict loader for the frieze JSON format.

    Rejects missing or extraneous pairs, malformed scalars, and zero
    boundary entries (the FriezeMap constructor enforces the latter two).
    """
    if not isinstance(obj, dict) or "m" not in obj or "entries" not in obj:
        raise ValueError("frieze JSON needs 'm' and 'entries'")
    m = obj["m"]
    if not isinstance(m, int):
        raise ValueError("'m' must be an integer")
    raw = obj["entries"]
    if not isinstance(raw, dict):
        raise ValueError("'entries' must be an object")
    entries: dict[tuple[int, int], Fraction] = {}
    for key, text in raw.items():
        parts = key.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad pair key {key!r}")
        try:
            p, q = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad pair key {key!r}") from None
        if not isinstance(text, str):
            raise ValueError(f"entry for {key!r} must be a string scalar")
        entries[(p, q)] = scalar_from_str(text)
    return FriezeMap(m, entries)
