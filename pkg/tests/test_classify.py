import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frieze import (CoeffTuple, cc_labels_from, classify_triangle,
                    coefficient_witness, decompose_triangle, delta,
                    descent_steps, enumerate_triangulations,
                    frieze_from_triangulation, gamma_t, iceberg_descent,
                    in_coefficient_set, realize_triangle,
                    separating_unit_triangle)

ints = st.integers(min_value=-40, max_value=40)


def coprime_pairs():
    return st.tuples(ints, ints).filter(lambda p: gcd(p[0], p[1]) == 1)


def tuples_in_s():
    return st.tuples(coprime_pairs(), coprime_pairs(), coprime_pairs()).map(
        lambda t: CoeffTuple(*t[0], *t[1], *t[2]))


def test_delta_examples():
    assert delta(CoeffTuple(0, 1, 7 - 3, 3, 0, 1)) == (7, 1, 3)
    assert delta(CoeffTuple(1, 1, 1, 0, 1, 1)) == (2, 3, 1)
    assert delta(CoeffTuple(2, 3, 3, -1, 0, 1)) == (2, 3, 1)
    with pytest.raises(ValueError):
        delta(CoeffTuple(2, 4, 1, 0, 0, 1))


def test_gamma_example():
    assert gamma_t(CoeffTuple(2, 3, 3, -1, 0, 1), 2) == CoeffTuple(1, 1, 1, 0, 1, 1)


@given(tuples_in_s(), st.integers(min_value=-20, max_value=20))
def test_gamma_preserves_delta_and_membership(t, param):
    image = gamma_t(t, param)
    assert in_coefficient_set(image)
    assert delta(image) == delta(t)


def test_classify_examples():
    assert not classify_triangle(1, 2, 2)
    assert classify_triangle(1, 1, 1)
    assert not classify_triangle(2, 2, 2)
    assert classify_triangle(2, 4, 6)
    assert classify_triangle(4, 2, 2)
    assert classify_triangle(3, 9, 21)
    assert not classify_triangle(2, 3, 4)  # gcds 1, 1, 2 differ
    with pytest.raises(ValueError):
        classify_triangle(0, 1, 1)


def _witness_exists_by_search(a, b, c, bound=10):
    for a1 in range(-bound, bound + 1):
        for b2 in range(-bound, bound + 1):
            if (a1 * a + b * b2 == c and gcd(a1, b) == 1
                    and gcd(a, b2) == 1):
                return True
    return False


@pytest.mark.parametrize("triple", [(2, 3, 1), (2, 4, 6), (1, 1, 1),
                                    (4, 2, 2), (6, 10, 4), (9, 3, 3)])
def test_coefficient_witness_postcondition(triple):
    a, b, c = triple
    assert _witness_exists_by_search(a, b, c)
    a1, b2 = coefficient_witness(a, b, c)
    assert a1 * a + b * b2 == c
    assert gcd(a1, b) == 1 and gcd(a, b2) == 1


def test_coefficient_witness_unit_b():
    # with b = 1 both coprimality conditions trivialize
    a1, b2 = coefficient_witness(7, 1, 3)
    assert a1 * 7 + b2 == 3 and gcd(7, b2) == 1


def test_coefficient_witness_rejects_unrealizable():
    with pytest.raises(ValueError):
        coefficient_witness(1, 2, 2)


def test_descent_single_step_example():
    steps = list(descent_steps(CoeffTuple(2, 3, 3, -1, 0, 1)))
    assert steps == [CoeffTuple(2, 3, 3, -1, 0, 1), CoeffTuple(1, 1, 1, 0, 1, 1)]
    assert iceberg_descent(CoeffTuple(2, 3, 3, -1, 0, 1)) == CoeffTuple(1, 1, 1, 0, 1, 1)


def test_descent_nonnegative_fixed_point():
    t = CoeffTuple(1, 2, 1, 0, 0, 1)  # delta (1, 2, 1), already nonnegative
    assert iceberg_descent(t) == t


def test_descent_validates_input_shape():
    # delta (2, 3, 1): positive with third minimal, but a1 < 0
    with pytest.raises(ValueError):
        iceberg_descent(CoeffTuple(-1, 3, 1, 1, 0, 1))
    with pytest.raises(ValueError):
        iceberg_descent(CoeffTuple(2, 4, 1, 0, 0, 1))


def _random_admissible_triple(rng, limit=50):
    while True:
        a, b, c = (rng.randint(1, limit) for _ in range(3))
        if classify_triangle(a, b, c):
            return a, b, c


def _normalized_witness_tuple(a, b, c):
    """Min-last permutation plus witness, as the realization pipeline builds it."""
    low, mid, high = sorted([a, b, c])
    pa, pb, pc = mid, high, low
    a1, b2 = coefficient_witness(pa, pb, pc)
    if a1 < 0:
        pa, pb = pb, pa
        a1, b2 = b2, a1
    if a1 == 0:
        return CoeffTuple(0, 1, pa - pc, pc, 0, 1), (pa, pb, pc)
    return CoeffTuple(a1, pb, pa - b2, b2, 0, 1), (pa, pb, pc)


def test_descent_on_random_admissible_triples():
    rng = random.Random(2024)
    for _ in range(500):
        a, b, c = _random_admissible_triple(rng)
        start, target = _normalized_witness_tuple(a, b, c)
        assert delta(start) == target
        trace = list(descent_steps(start))
        final = trace[-1]
        assert min(final) >= 0
        assert in_coefficient_set(final)
        assert delta(final) == target
        negatives = [t.b2 for t in trace if t.b2 < 0]
        assert negatives == sorted(negatives)  # strictly increasing toward 0
        assert len(set(negatives)) == len(negatives)


def test_realize_triangle_examples():
    for triple in [(1, 1, 1), (2, 3, 1), (2, 4, 6), (4, 2, 2), (5, 8, 3)]:
        tri, (i, j, k) = realize_triangle(*triple)
        tables = {v: cc_labels_from(tri, v) for v in (i, j, k)}
        assert (tables[i][j], tables[j][k], tables[k][i]) == triple
    with pytest.raises(ValueError):
        realize_triangle(1, 2, 2)


def test_separating_unit_triangle_hexagon(hexagon_fan):
    assert separating_unit_triangle(hexagon_fan, 1, 3, 5) == (2, 4, 5)
    # a face of the triangulation separates itself
    assert separating_unit_triangle(hexagon_fan, 2, 4, 5) == (2, 4, 5)
    with pytest.raises(ValueError):
        separating_unit_triangle(hexagon_fan, 3, 1, 5)


def test_decompose_hexagon(hexagon_fan):
    tup = decompose_triangle(hexagon_fan, 1, 3, 5)
    assert delta(tup) == (4, 2, 2)
    assert classify_triangle(4, 2, 2)
    face = decompose_triangle(hexagon_fan, 2, 4, 5)
    assert delta(face) == (1, 1, 1)
    assert face == CoeffTuple(0, 1, 0, 1, 0, 1)


def test_decompose_adjacent_pair_case(hexagon_fan):
    # j = i + 1 forces the unit triangle containing that edge
    tup = decompose_triangle(hexagon_fan, 1, 2, 4)
    assert delta(tup) == (1, 1, 3)


def test_decompose_exhaustive_m6():
    for tri in enumerate_triangulations(6):
        f = frieze_from_triangulation(tri)
        for i, j, k in combinations(range(1, 7), 3):
            tup = decompose_triangle(tri, i, j, k)
            assert min(tup) >= 0 and in_coefficient_set(tup)
            assert delta(tup) == (f.value(i, j), f.value(j, k), f.value(k, i))


def test_decompose_of_realized_triangle_recovers_triple():
    for triple in [(2, 3, 1), (4, 2, 2), (3, 5, 4)]:
        tri, (i, j, k) = realize_triangle(*triple)
        ordered = tuple(sorted((i, j, k)))
        tables = {v: cc_labels_from(tri, v) for v in ordered}
        expected = (tables[ordered[0]][ordered[1]],
                    tables[ordered[1]][ordered[2]],
                    tables[ordered[2]][ordered[0]])
        assert delta(decompose_triangle(tri, *ordered)) == expected
        assert sorted(expected) == sorted(triple)
