"""Polygon triangulations and the classic integer friezes they generate.

The vertex-labelling recurrence (seed a vertex with 0, its neighbours with
1, and let every triangle force the label of its third corner to be the
sum of the other two) computes a whole row of the classic frieze at once;
running it from every vertex fills in the polygon map.  The accordion
construction runs the Euclidean algorithm backwards along a number line to
plant two prescribed coprime labels across a unit edge, and three-way
gluing welds marked edges onto a central unit triangle.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .core import FriezeMap


def _crossing(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """Strict interior crossing of two chords on the circular vertex order."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return (a < c < b < d) or (c < a < d < b)


class Triangulation:
    """A triangulation of a convex m-gon: m - 3 pairwise noncrossing diagonals."""

    __slots__ = ("m", "diagonals", "_triangles")

    def __init__(self, m: int, diagonals: Iterable[Sequence[int]]) -> None:
        if m < 3:
            raise ValueError("polygon needs at least 3 vertices")
        diags = set()
        for pair in diagonals:
            p, q = sorted(pair)
            if not (1 <= p < q <= m):
                raise ValueError(f"diagonal ({p}, {q}) outside 1..{m}")
            if q - p == 1 or (p, q) == (1, m):
                raise ValueError(f"({p}, {q}) is a polygon edge, not a diagonal")
            diags.add((p, q))
        if len(diags) != m - 3:
            raise ValueError(f"a triangulated {m}-gon has {m - 3} diagonals, "
                             f"got {len(diags)}")
        items = sorted(diags)
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                if _crossing(items[a], items[b]):
                    raise ValueError(f"diagonals {items[a]} and {items[b]} cross")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "diagonals", frozenset(diags))
        object.__setattr__(self, "_triangles", None)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Triangulation is immutable")

    def is_segment(self, p: int, q: int) -> bool:
        """True if {p, q} is a polygon edge or a diagonal of this triangulation."""
        p, q = min(p, q), max(p, q)
        if q - p == 1 or (p, q) == (1, self.m):
            return True
        return (p, q) in self.diagonals

    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """The m - 2 triangular faces.

        In a noncrossing family any three pairwise connected vertices bound
        a face (a segment entering the triangle would cross a side), so a
        cubic scan over segment-connected triples is exact.
        """
        if self._triangles is None:
            faces = []
            for a in range(1, self.m + 1):
                for b in range(a + 1, self.m + 1):
                    if not self.is_segment(a, b):
                        continue
                    for c in range(b + 1, self.m + 1):
                        if self.is_segment(b, c) and self.is_segment(a, c):
                            faces.append((a, b, c))
            assert len(faces) == self.m - 2
            object.__setattr__(self, "_triangles", tuple(faces))
        return self._triangles

    def reflected(self) -> Triangulation:
        """Mirror image under the reflection fixing vertex 1 (v -> m + 2 - v)."""
        m = self.m

        def mirror(v: int) -> int:
            return 1 if v == 1 else m + 2 - v

        return Triangulation(m, [(mirror(p), mirror(q)) for p, q in self.diagonals])

    def sort_key(self):
        return (self.m, tuple(sorted(self.diagonals)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Triangulation)
                and self.m == other.m and self.diagonals == other.diagonals)

    def __hash__(self) -> int:
        return hash((self.m, self.diagonals))

    def __repr__(self) -> str:
        return f"Triangulation(m={self.m}, diagonals={sorted(self.diagonals)})"


def triangulation_to_json(t: Triangulation) -> dict:
    return {"m": t.m, "diagonals": [list(pair) for pair in sorted(t.diagonals)]}


def triangulation_from_json(obj) -> Triangulation:
    if not isinstance(obj, dict) or "m" not in obj or "diagonals" not in obj:
        raise ValueError("triangulation JSON needs 'm' and 'diagonals'")
    if not isinstance(obj["m"], int):
        raise ValueError("'m' must be an integer")
    return Triangulation(obj["m"], obj["diagonals"])


def cc_labels_from(t: Triangulation, v: int) -> list:
    """Labels of all vertices seen from v; label(w) = c(v, w) in the classic frieze.

    Seeds v with 0 and its polygon neighbours with 1, then repeatedly lets
    any triangle with two labelled corners label the third with their sum.
    The result is independent of the processing order (every label is a
    frieze entry), which tests assert by shuffling.

    Returns a list of length m + 1 indexed by vertex; index 0 is unused.
    """
    m = t.m
    if not 1 <= v <= m:
        raise ValueError(f"vertex {v} outside 1..{m}")
    labels: list = [None] * (m + 1)
    labels[v] = 0
    labels[v % m + 1] = 1
    labels[(v - 2) % m + 1] = 1
    remaining = m - 3
    triangles = t.triangles()
    while remaining > 0:
        progressed = False
        for a, b, c in triangles:
            known = [x for x in (a, b, c) if labels[x] is not None]
            if len(known) == 2:
                missing = a + b + c - known[0] - known[1]
                labels[missing] = labels[known[0]] + labels[known[1]]
                remaining -= 1
                progressed = True
        if not progressed:  # pragma: no cover - impossible for a triangulation
            raise RuntimeError("labelling stalled; triangulation is inconsistent")
    return labels


def frieze_from_triangulation(t: Triangulation) -> FriezeMap:
    """The classic Conway-Coxeter frieze of a triangulation, as a polygon map.

    Asserts the characteristic facts along the way: the labelling is
    symmetric in its two vertices, every edge carries 1, and the non-edge
    pairs carrying 1 are exactly the diagonals of the triangulation.
    """
    m = t.m
    table = [cc_labels_from(t, v) for v in range(1, m + 1)]
    entries: dict[tuple[int, int], int] = {}
    for p in range(1, m + 1):
        for q in range(p + 1, m + 1):
            value = table[p - 1][q]
            assert value == table[q - 1][p], "labelling must be symmetric"
            entries[(p, q)] = value
    for p in range(1, m + 1):
        q = p % m + 1
        assert entries[(min(p, q), max(p, q))] == 1, "edges must carry 1"
    ones = {pair for pair, v in entries.items() if v == 1
            and pair[1] - pair[0] != 1 and pair != (1, m)}
    assert ones == set(t.diagonals), "unit non-edges must be the diagonals"
    return FriezeMap(m, entries)


def cut_subpolygon(f: FriezeMap, verts: Sequence[int]) -> FriezeMap:
    """Restrict a frieze to the subpolygon spanned by the given vertices.

    The Ptolemy relations restrict, so the result is again a frieze with
    coefficients on a len(verts)-gon.
    """
    verts = list(verts)
    if len(verts) < 3:
        raise ValueError("a subpolygon needs at least 3 vertices")
    if any(not 1 <= v <= f.m for v in verts):
        raise ValueError(f"vertices must lie in 1..{f.m}")
    if any(a >= b for a, b in zip(verts, verts[1:])):
        raise ValueError("vertices must be strictly increasing")
    k = len(verts)
    entries = {
        (a + 1, b + 1): f.value(verts[a], verts[b])
        for a in range(k)
        for b in range(a + 1, k)
    }
    return FriezeMap(k, entries)


def _euclid_quotients(a: int, b: int) -> list[int]:
    """Quotients of the Euclidean algorithm on a >= b >= 1, ending at remainder 0."""
    quotients = []
    r0, r1 = a, b
    while r1:
        q, r = divmod(r0, r1)
        quotients.append(q)
        r0, r1 = r1, r
    return quotients


def _accordion_triangulation(a: int, b: int) -> Triangulation:
    """Number-line construction for a >= b >= 1 with gcd(a, b) = 1.

    Working through the Euclidean quotients in reverse, fan arcs
    alternately to the left and to the right of the starting edge (1, 2);
    the integers touched become the polygon's vertices, renumbered
    consecutively with vertex 1 kept in place.  The final arc joins the two
    extremes and is the closing edge of the polygon; every other arc is a
    diagonal.
    """
    arcs = []
    left_end, right_end = 1, 2
    anchor = 2
    for index, q in enumerate(reversed(_euclid_quotients(a, b))):
        if index % 2 == 0:
            for target in range(left_end - 1, left_end - 1 - q, -1):
                arcs.append((anchor, target))
            left_end -= q
            anchor = left_end
        else:
            for target in range(right_end + 1, right_end + 1 + q):
                arcs.append((anchor, target))
            right_end += q
            anchor = right_end
    m = right_end - left_end + 1

    def renumber(v: int) -> int:
        return (v - 1) % m + 1

    diagonals = [(renumber(x), renumber(y)) for x, y in arcs[:-1]]
    return Triangulation(m, diagonals)


def accordion(a: int, b: int) -> tuple[Triangulation, int]:
    """A triangulation whose frieze shows a and b across a unit edge.

    Returns (T, k) such that the classic frieze of T has c(1, k) = a,
    c(k, k+1) = 1 and c(1, k+1) = b, with k + 1 read cyclically.  Needs
    gcd(a, b) = 1; the degenerate pairs (0, 1) and (1, 0) sit on a bare
    triangle.  When the direct construction places the two labels in the
    wrong rotational order, its mirror image does the job.
    """
    if a < 0 or b < 0:
        raise ValueError("accordion labels must be nonnegative")
    if gcd(a, b) != 1:
        raise ValueError(f"accordion needs coprime labels, got gcd({a}, {b}) = "
                         f"{gcd(a, b)}")
    triangle = Triangulation(3, [])
    if a == 0:
        return triangle, 1
    if b == 0:
        return triangle, 3
    t = _accordion_triangulation(max(a, b), min(a, b))
    for candidate in (t, t.reflected()):
        labels = cc_labels_from(candidate, 1)
        for k in range(1, candidate.m + 1):
            if labels[k] == a and labels[k % candidate.m + 1] == b:
                return candidate, k
    raise AssertionError(f"accordion construction failed for ({a}, {b})")


def glue_three(
    t1: Triangulation, edge1: tuple[int, int],
    t2: Triangulation, edge2: tuple[int, int],
    t3: Triangulation, edge3: tuple[int, int],
) -> tuple[Triangulation, tuple[dict, dict, dict]]:
    """Glue three triangulations so the marked edges frame a central triangle.

    Each mark is an ordered boundary edge (s, t) with t = s + 1 cyclically;
    walking piece 1 from s1 the long way to t1, then piece 2 from s2 = t1,
    then piece 3 from s3 = t2 (with t3 = s1) traces the boundary of the
    glued (m1 + m2 + m3 - 3)-gon.  The three marked edges become diagonals
    bounding a central triangle whose sides all carry frieze value 1.

    Returns the glued triangulation together with one vertex map per piece,
    so callers can locate specific vertices afterwards.
    """
    pieces = [(t1, edge1), (t2, edge2), (t3, edge3)]
    paths = []
    for t, (s, e) in pieces:
        if not (1 <= s <= t.m and e == s % t.m + 1):
            raise ValueError(f"mark ({s}, {e}) is not an oriented edge of an "
                             f"{t.m}-gon")
        path = [s]
        v = s
        while v != e:
            v = v - 1 if v > 1 else t.m
            path.append(v)
        paths.append(path)
    m1, m2, m3 = (t.m for t, _ in pieces)
    total = m1 + m2 + m3 - 3
    shared = (1, m1, m1 + m2 - 1)  # glued numbers of s1=t3, t1=s2, t2=s3
    maps: list[dict[int, int]] = []
    offsets = (0, m1 - 1, m1 + m2 - 2)
    for index, path in enumerate(paths):
        vmap = {}
        for pos, vertex in enumerate(path):
            number = offsets[index] + pos + 1
            vmap[vertex] = 1 if number == total + 1 else number
        maps.append(vmap)
    diagonals = []
    for (t, _), vmap in zip(pieces, maps):
        diagonals.extend((vmap[p], vmap[q]) for p, q in t.diagonals)
    diagonals.extend([
        (shared[0], shared[1]),
        (shared[1], shared[2]),
        (shared[0], shared[2]),
    ])
    return Triangulation(total, diagonals), (maps[0], maps[1], maps[2])


def enumerate_triangulations(m: int) -> list[Triangulation]:
    """All triangulations of the m-gon, canonically sorted; 3 <= m <= 12.

    Counted by the Catalan number C(m - 2).  The guardrail exists because
    the list explodes quickly and nothing here needs more than desk scale.
    """
    if not 3 <= m <= 12:
        raise ValueError("enumerate_triangulations supports 3 <= m <= 12")

    def fillings(vertices: tuple[int, ...]):
        if len(vertices) < 3:
            yield []
            return
        first, last = vertices[0], vertices[-1]
        for mid in range(1, len(vertices) - 1):
            apex = vertices[mid]
            for left in fillings(vertices[: mid + 1]):
                for right in fillings(vertices[mid:]):
                    yield [(first, apex), (apex, last)] + left + right

    results = []
    for chords in fillings(tuple(range(1, m + 1))):
        diagonals = {
            (p, q) for p, q in (sorted(chord) for chord in chords)
            if q - p != 1 and (p, q) != (1, m)
        }
        results.append(Triangulation(m, diagonals))
    results.sort(key=Triangulation.sort_key)
    assert len(results) == len(set(results))
    return results


def triangle_label_gcds_divide(f: FriezeMap, i: int, j: int, k: int) -> bool:
    """gcd of any two of c(i,j), c(j,k), c(i,k) divides the third.

    Holds in every classic Conway-Coxeter frieze; exposed as a helper so
    tests can sweep it over vertex triples.
    """
    x, y, z = f.value(i, j), f.value(j, k), f.value(i, k)
    if any(v.denominator != 1 for v in (x, y, z)):
        raise ValueError("gcd divisibility is about integer friezes")
    x, y, z = x.numerator, y.numerator, z.numerator

    def divides(d: int, n: int) -> bool:
        return n % d == 0 if d != 0 else n == 0

    return (divides(gcd(x, y), z) and divides(gcd(y, z), x)
            and divides(gcd(x, z), y))
