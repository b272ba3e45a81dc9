"""Which label triples sit on a triangle inside a classic integer frieze.

The answer runs through a six-coordinate calculus: a triangle (a, b, c)
cut out of a classic frieze factors through a separating unit triangle
into three coprime pairs, and conversely any nonnegative coprime-pair
tuple can be realized by gluing three accordion triangulations.  The
arithmetic fingerprint of realizability is a gcd condition plus a
condition on 2-valuations; the constructive direction finds a witness
tuple by Bezout + per-prime residue selection, then drives it into the
nonnegative orthant with a determinant-one transform.
"""

from __future__ import annotations

from itertools import permutations
from math import gcd
from typing import Iterator, NamedTuple

from .scalars import p_valuation, prime_factors
from .triangulation import Triangulation, accordion, cc_labels_from, glue_three


class CoeffTuple(NamedTuple):
    """Element (a1, a2, b1, b2, c1, c2) of the coprime-pair set."""

    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int


def in_coefficient_set(t: CoeffTuple) -> bool:
    """Membership test: the three coordinate pairs must each be coprime."""
    return (gcd(t.a1, t.a2) == 1 and gcd(t.b1, t.b2) == 1
            and gcd(t.c1, t.c2) == 1)


def delta(t: CoeffTuple) -> tuple[int, int, int]:
    """The triangle triple carried by a coefficient tuple."""
    if not in_coefficient_set(t):
        raise ValueError(f"{t} has a non-coprime coordinate pair")
    a1, a2, b1, b2, c1, c2 = t
    return (
        b1 * c1 + b1 * c2 + b2 * c2,
        a1 * c1 + a2 * c1 + a2 * c2,
        a1 * b1 + a1 * b2 + a2 * b2,
    )


def gamma_t(t: CoeffTuple, param: int) -> CoeffTuple:
    """The delta-preserving transform; blockwise determinant-one, so it
    maps coprime-pair tuples to coprime-pair tuples."""
    a1, a2, b1, b2, c1, c2 = t
    s = param
    return CoeffTuple(
        a1 * s - a2,
        a1 * (1 - s) + a2,
        -b2,
        b1 + b2 * (s + 1),
        c1 * s + c2 * (s - 1),
        c1 + c2,
    )


def classify_triangle(a: int, b: int, c: int) -> bool:
    """Can (a, b, c) appear as the labels of a triangle in a classic frieze?

    True iff gcd(a, b) = gcd(b, c) = gcd(a, c) and the 2-valuations of
    a, b, c are either all zero or take at least two distinct values.
    """
    if min(a, b, c) < 1:
        raise ValueError("triangle labels must be positive integers")
    if not gcd(a, b) == gcd(b, c) == gcd(a, c):
        return False
    v2 = {p_valuation(2, a), p_valuation(2, b), p_valuation(2, c)}
    return v2 == {0} or len(v2) > 1


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def _crt(residues: list[int], moduli: list[int]) -> int:
    """Smallest nonnegative solution of k = r_i (mod m_i), moduli coprime."""
    k, modulus = 0, 1
    for r, m in zip(residues, moduli):
        g, inv, _ = _extended_gcd(modulus % m, m)
        assert g == 1
        k += modulus * (((r - k) * inv) % m)
        modulus *= m
    return k % modulus


def coefficient_witness(a: int, b: int, c: int) -> tuple[int, int]:
    """Integers (a1, b2) with a1*a + b*b2 = c, gcd(a1, b) = gcd(a, b2) = 1.

    Bezout on a/d and b/d gives a one-parameter family of solutions; a
    residue for the parameter is picked separately at each prime dividing
    d = gcd(a, b) (at p = 2 the choice is forced by the parity pattern of
    a/d, b/d, c/d, which the classification condition makes favourable),
    and the residues are combined by the Chinese Remainder Theorem.
    """
    if not classify_triangle(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) admits no coefficient witness")
    d = gcd(a, b)
    ap, bp, cp = a // d, b // d, c // d
    g, u, v = _extended_gcd(ap, bp)
    assert g == 1
    residues, moduli = [], []
    for p in prime_factors(d) if d > 1 else []:
        for k in range(p):
            if (u * cp + k * bp) % p and (v * cp - k * ap) % p:
                residues.append(k)
                moduli.append(p)
                break
        else:  # pragma: no cover - ruled out by the classification condition
            raise AssertionError(f"no usable residue mod {p}")
    k = _crt(residues, moduli) if moduli else 0
    a1 = u * cp + k * bp
    b2 = v * cp - k * ap
    assert a1 * a + b * b2 == c and gcd(a1, b) == 1 and gcd(a, b2) == 1
    return a1, b2


def descent_steps(t: CoeffTuple) -> Iterator[CoeffTuple]:
    """Yield the tuples visited by the iceberg descent, start and end included.

    Expects a coprime-pair tuple with componentwise positive delta whose
    third component is minimal and with a1 >= 0 (the shape produced by the
    witness construction).  Each step applies gamma with parameter
    ceil(a2/a1); while b2 stays negative it must strictly increase, which
    is asserted and bounds the number of steps by |b2|.
    """
    if not in_coefficient_set(t):
        raise ValueError(f"{t} has a non-coprime coordinate pair")
    target = delta(t)
    if min(target) <= 0:
        raise ValueError("descent expects a componentwise positive delta")
    if target[2] > target[0] or target[2] > target[1]:
        raise ValueError("descent expects the third delta component minimal")
    if t.a1 < 0:
        raise ValueError("descent expects a1 >= 0")
    yield t
    if min(t) >= 0:
        return
    if t.a1 == 0:
        a, _, c = target
        final = CoeffTuple(0, 1, a - c, c, 0, 1)
        assert delta(final) == target
        yield final
        return
    current = t
    while True:
        s = -(-current.a2 // current.a1)  # ceil(a2 / a1)
        nxt = gamma_t(current, s)
        assert delta(nxt) == target
        yield nxt
        if nxt.a1 == 0:
            # forces a2 = 1 and b2 = c >= 0, so the tuple is complete
            assert min(nxt) >= 0
            return
        if min(nxt) >= 0:
            return
        assert 0 > nxt.b2 > current.b2, "descent must strictly raise b2"
        current = nxt


def iceberg_descent(t: CoeffTuple) -> CoeffTuple:
    """Drive a witness tuple into the nonnegative orthant, delta unchanged."""
    final = t
    for final in descent_steps(t):
        pass
    assert min(final) >= 0 and in_coefficient_set(final)
    return final


def _initial_tuple(a: int, b: int, c: int, a1: int, b2: int) -> CoeffTuple:
    if a1 == 0:
        # gcd(a1, b) = 1 forces b = 1; use the closed-form preimage
        return CoeffTuple(0, 1, a - c, c, 0, 1)
    return CoeffTuple(a1, b, a - b2, b2, 0, 1)


def realize_triangle(a: int, b: int, c: int) -> tuple[Triangulation, tuple[int, int, int]]:
    """A triangulation whose classic frieze shows labels (a, b, c) on a triangle.

    Pipeline: permute the triple so its minimum sits last, take a
    coefficient witness (swapping the two roles if its first component is
    negative), descend to a nonnegative tuple, realize each coordinate
    pair with an accordion, glue the three pieces around a central unit
    triangle, and read the three apexes off the vertex maps.  The returned
    vertices (i, j, k) are ordered so that (c(i,j), c(j,k), c(k,i)) equals
    (a, b, c) exactly, which is verified before returning.
    """
    if not classify_triangle(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) is not realizable")
    triple = (a, b, c)
    order = min(
        ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)),
        key=lambda p: (triple[p[2]], p),
    )
    pa, pb, pc = (triple[index] for index in order)
    a1, b2 = coefficient_witness(pa, pb, pc)
    if a1 < 0:
        pa, pb = pb, pa
        a1, b2 = b2, a1
    tup = iceberg_descent(_initial_tuple(pa, pb, pc, a1, b2))
    assert delta(tup) == (pa, pb, pc)

    piece_a, k_a = accordion(tup.a1, tup.a2)
    piece_b, k_b = accordion(tup.b1, tup.b2)
    piece_c, k_c = accordion(tup.c1, tup.c2)
    glued, (map_a, map_c, map_b) = glue_three(
        piece_a, (k_a, k_a % piece_a.m + 1),
        piece_c, (k_c, k_c % piece_c.m + 1),
        piece_b, (k_b, k_b % piece_b.m + 1),
    )
    vertex_k = map_a[1]
    vertex_j = map_c[1]
    vertex_i = map_b[1]
    tables = {v: cc_labels_from(glued, v) for v in {vertex_i, vertex_j, vertex_k}}

    def label(p: int, q: int) -> int:
        return 0 if p == q else tables[p][q]

    assert (label(vertex_i, vertex_j), label(vertex_j, vertex_k),
            label(vertex_k, vertex_i)) == (pa, pb, pc)
    for i, j, k in permutations((vertex_i, vertex_j, vertex_k)):
        if (label(i, j), label(j, k), label(k, i)) == (a, b, c):
            return glued, (i, j, k)
    raise AssertionError("realized triangle does not match the request")


def separating_unit_triangle(
    t: Triangulation, i: int, j: int, k: int
) -> tuple[int, int, int]:
    """A unit-labelled triangle (i', j', k') interleaving the arcs of (i, j, k).

    Searches the closed arcs [i..j], [j..k], [k..i] in cyclic order for the
    first triple whose three connecting labels are all 1; one always exists
    for a triangulated polygon.  When (i, j, k) is itself a face -- in
    particular when j = i + 1 and the edge (i, j) lies in some triangle of
    the triangulation -- the face itself qualifies.
    """
    m = t.m
    if not (1 <= i < j < k <= m):
        raise ValueError("need 1 <= i < j < k <= m")
    tables = {v: cc_labels_from(t, v) for v in range(1, m + 1)}

    def value(p: int, q: int) -> int:
        return 0 if p == q else tables[p][q]

    arc_ij = list(range(i, j + 1))
    arc_jk = list(range(j, k + 1))
    arc_ki = list(range(k, m + 1)) + list(range(1, i + 1))
    for ip in arc_ij:
        for jp in arc_jk:
            if value(ip, jp) != 1:
                continue
            for kp in arc_ki:
                if value(jp, kp) == 1 and value(kp, ip) == 1:
                    return ip, jp, kp
    raise AssertionError("no separating unit triangle found")  # pragma: no cover


def decompose_triangle(t: Triangulation, i: int, j: int, k: int) -> CoeffTuple:
    """Factor a triangle of a classic frieze through a separating unit triangle.

    Returns the nonnegative coprime-pair tuple
    (c(k,k'), c(j',k), c(i,i'), c(k',i), c(j,j'), c(i',j)) whose delta is
    exactly (c(i,j), c(j,k), c(k,i)).
    """
    ip, jp, kp = separating_unit_triangle(t, i, j, k)
    tables = {v: cc_labels_from(t, v) for v in {i, j, k, ip, jp, kp}}

    def value(p: int, q: int) -> int:
        return 0 if p == q else tables[p][q]

    tup = CoeffTuple(value(k, kp), value(jp, k), value(i, ip),
                     value(kp, i), value(j, jp), value(ip, j))
    assert min(tup) >= 0 and in_coefficient_set(tup)
    assert delta(tup) == (value(i, j), value(j, k), value(k, i))
    return tup
