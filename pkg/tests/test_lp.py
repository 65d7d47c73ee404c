import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog as scipy_linprog

from bicliques.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, is_feasible, linprog


def test_textbook_maximum():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), value 36
    res = linprog([3, 5], A_ub=[[1, 0], [0, 2], [3, 2]], b_ub=[4, 12, 18])
    assert res.status == OPTIMAL
    assert res.x == [2, 6] and res.value == 36


def test_beale_cycling_example_terminates():
    # cycles under the largest-coefficient rule; Bland's rule must finish
    c = [Fraction(3, 4), -20, Fraction(1, 2), -6]
    A = [
        [Fraction(1, 4), -8, -1, 9],
        [Fraction(1, 2), -12, Fraction(-1, 2), 3],
        [0, 0, 1, 0],
    ]
    res = linprog(c, A_ub=A, b_ub=[0, 0, 1])
    assert res.status == OPTIMAL
    assert res.value == Fraction(5, 4)


def test_infeasible_and_unbounded():
    assert linprog([1], A_ub=[[1]], b_ub=[-1]).status == INFEASIBLE
    assert linprog([1, 0], A_ub=[[-1, 1]], b_ub=[1]).status == UNBOUNDED
    assert not is_feasible([[1, 1]], [-1], 2)
    assert is_feasible([[1, 1]], [1], 2)


def test_redundant_equalities_are_dropped():
    res = linprog([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[3, 6])
    assert res.status == OPTIMAL and res.value == 3


def test_negative_rhs_inequality():
    # x >= 2 written as -x <= -2; minimize x
    res = linprog([-1], A_ub=[[-1]], b_ub=[-2])
    assert res.status == OPTIMAL and res.x == [2]


def test_sparse_rows_accepted():
    res = linprog([1, 1], A_ub=[{0: 1}, {1: 1}], b_ub=[2, Fraction(1, 3)])
    assert res.value == Fraction(7, 3)


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_floating_point_reference(seed):
    rng = random.Random(seed)
    nvar, nub, neq = rng.randint(1, 5), rng.randint(0, 5), rng.randint(0, 2)
    c = [rng.randint(-4, 4) for _ in range(nvar)]
    A_ub = [[rng.randint(-3, 5) for _ in range(nvar)] for _ in range(nub)]
    b_ub = [rng.randint(-2, 8) for _ in range(nub)]
    A_eq = [[rng.randint(-2, 3) for _ in range(nvar)] for _ in range(neq)]
    b_eq = [rng.randint(-3, 5) for _ in range(neq)]
    # cap every variable so the reference never reports unbounded
    A_cap = A_ub + [[1 if j == i else 0 for j in range(nvar)] for i in range(nvar)]
    b_cap = b_ub + [10] * nvar
    ours = linprog(c, A_ub=A_cap, b_ub=b_cap, A_eq=A_eq, b_eq=b_eq)
    ref = scipy_linprog(
        -np.array(c, dtype=float),
        A_ub=np.array(A_cap, dtype=float),
        b_ub=np.array(b_cap, dtype=float),
        A_eq=np.array(A_eq, dtype=float) if neq else None,
        b_eq=np.array(b_eq, dtype=float) if neq else None,
        bounds=[(0, None)] * nvar,
        method="highs",
    )
    if ref.status == 2:
        assert ours.status == INFEASIBLE
        return
    assert ref.status == 0
    assert ours.status == OPTIMAL
    assert float(ours.value) == pytest.approx(-ref.fun, abs=1e-7)
    x = ours.x
    for row, b in zip(A_cap, b_cap):
        assert sum(a * xi for a, xi in zip(row, x)) <= b
    for row, b in zip(A_eq, b_eq):
        assert sum(a * xi for a, xi in zip(row, x)) == b
    assert all(xi >= 0 for xi in x)
