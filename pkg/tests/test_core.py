import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicliques.core import (
    INF,
    Biclique,
    BipartiteGraph,
    InstanceError,
    InvalidBicliqueError,
    ParameterError,
    as_weight,
    balanced_count,
    characteristic_vector,
    enumerate_balanced,
    enumerate_unbalanced,
    evaluate_all,
    format_weight,
    unbalanced_count,
    weight_of,
)
from conftest import random_graph


def test_characteristic_vector_examples():
    n = 2
    assert characteristic_vector(Biclique({0}, {1}), n) == (0, 1, 0, 0)
    assert characteristic_vector(Biclique({0, 1}, {0, 1}), n) == (1, 1, 1, 1)
    bits = characteristic_vector(Biclique({0, 2}, {1}), 3)
    assert [p for p, b in enumerate(bits) if b] == [1, 7]


def test_characteristic_vector_out_of_range():
    with pytest.raises(InvalidBicliqueError):
        characteristic_vector(Biclique({0, 3}, {1}), 3)


def test_biclique_needs_both_parts():
    with pytest.raises(InvalidBicliqueError):
        Biclique([], [0])


def test_biclique_is_sorted_and_deduplicated():
    b = Biclique([2, 0, 2], (1,))
    assert b.u == (0, 2) and b.v == (1,)


def test_weight_of_examples():
    for k in (1, 2, 3):
        g = BipartiteGraph.constant(4, 1)
        assert weight_of(Biclique(range(k), range(k)), g) == k * k
    assert weight_of(Biclique({0, 1}, {2}), BipartiteGraph.constant(3, 0)) == 0
    g = BipartiteGraph([[1, 2], [3, 4]])
    assert weight_of(Biclique({0, 1}, {1}), g) == 6


def test_weight_of_infinite():
    g = BipartiteGraph([[1, "inf"], [0, 2]])
    assert weight_of(Biclique({0}, {0, 1}), g) == INF
    assert weight_of(Biclique({1}, {0, 1}), g) == 2


def test_weight_parsing_round_trip():
    for s in ["3", "-7/2", "inf", "0"]:
        assert format_weight(as_weight(s)) == s
    assert as_weight("6/4") == Fraction(3, 2)
    assert format_weight(Fraction(6, 4)) == "3/2"
    with pytest.raises(InstanceError):
        as_weight(0.5)
    with pytest.raises(InstanceError):
        as_weight("abc")


def test_graph_must_be_square():
    with pytest.raises(InstanceError):
        BipartiteGraph([[1, 2], [3]])


@pytest.mark.parametrize("n,k,count", [(2, 1, 4), (4, 2, 36), (3, 3, 1)])
def test_enumerate_balanced_examples(n, k, count):
    assert len(enumerate_balanced(n, k)) == count


@pytest.mark.parametrize("n,k,count", [(2, 2, 4), (2, 4, 1), (3, 2, 9)])
def test_enumerate_unbalanced_examples(n, k, count):
    assert len(enumerate_unbalanced(n, k)) == count


def test_enumeration_parameter_errors():
    with pytest.raises(ParameterError):
        enumerate_balanced(3, 4)
    with pytest.raises(ParameterError):
        enumerate_balanced(3, 0)
    with pytest.raises(ParameterError):
        enumerate_unbalanced(3, 1)
    with pytest.raises(ParameterError):
        enumerate_unbalanced(3, 7)


def _count_by_subsets(n, k, balanced):
    total = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if (balanced and a == b == k) or (not balanced and a + b == k):
                total += sum(1 for _ in combinations(range(n), a)) * sum(1 for _ in combinations(range(n), b))
    return total


@pytest.mark.parametrize("n", range(1, 7))
def test_feasible_cardinalities_and_shape(n):
    for k in range(1, n + 1):
        fs = enumerate_balanced(n, k)
        assert len(fs) == balanced_count(n, k) == _count_by_subsets(n, k, True) == math.comb(n, k) ** 2
        assert all(len(b.u) == len(b.v) == k for b in fs)
        assert list(fs.members) == sorted(fs.members)
        assert len(set(fs.members)) == len(fs)
    for k in range(2, 2 * n + 1):
        fs = enumerate_unbalanced(n, k)
        assert len(fs) == unbalanced_count(n, k) == _count_by_subsets(n, k, False)
        assert all(len(b.u) + len(b.v) == k and b.u and b.v for b in fs)
        assert list(fs.members) == sorted(fs.members)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_characteristic_vector_injective_and_rank_one(n):
    seen = set()
    for k in range(2, 2 * n + 1):
        for b in enumerate_unbalanced(n, k):
            bits = characteristic_vector(b, n)
            assert sum(bits) == len(b.u) * len(b.v)
            u = [int(i in b.u) for i in range(n)]
            v = [int(j in b.v) for j in range(n)]
            assert all(bits[i * n + j] == u[i] * v[j] for i in range(n) for j in range(n))
            assert bits not in seen
            seen.add(bits)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_weight_of_matches_inner_product(n, rnd):
    g = random_graph(rnd, n)
    flat = g.flat()
    ua = rnd.randint(1, n)
    vb = rnd.randint(1, n)
    b = Biclique(rnd.sample(range(n), ua), rnd.sample(range(n), vb))
    bits = characteristic_vector(b, n)
    assert weight_of(b, g) == sum(x * w for x, w in zip(bits, flat))


def test_evaluate_all_is_exact(rng):
    g = random_graph(rng, 3, inf_rate=0.2)
    fs = enumerate_unbalanced(3, 4)
    values, scale, infinite = evaluate_all(fs, g.flat())
    for r, b in enumerate(fs):
        w = weight_of(b, g)
        assert bool(infinite[r]) == (w == INF)
        if w != INF:
            assert Fraction(int(values[r]), scale) == w
