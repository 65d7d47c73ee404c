"""Exact solvers for the balanced, maximum and minimum weighted biclique problems.

For a fixed left part the best right part of a given size is read off the
restricted column sums, so each solver enumerates left parts only. Ties are
resolved globally by the key ``(len(u), u, v)``, smallest first; inside a
completion equal column sums go to the smaller column index. The brute-force
oracle scans the whole feasible set with the same rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    INF,
    Biclique,
    BipartiteGraph,
    InstanceError,
    Kind,
    ParameterError,
    Sense,
    Weight,
    enumerate_feasible,
    format_weight,
    is_inf,
    split_range,
    weight_of,
)


@dataclass(frozen=True)
class Solution:
    biclique: Biclique
    value: Weight

    def to_json(self) -> dict:
        return {"value": format_weight(self.value), "u": list(self.biclique.u), "v": list(self.biclique.v)}


def _tie_key(b: Biclique):
    return (len(b.u), b.u, b.v)


def _better(value, b, best_value, best_b, sense: Sense) -> bool:
    if best_b is None:
        return True
    if value != best_value:
        return value > best_value if sense is Sense.MAX else value < best_value
    return _tie_key(b) < _tie_key(best_b)


def _column_sums(g: BipartiteGraph, u: tuple[int, ...]) -> list[Weight]:
    sums = []
    for j in range(g.n):
        total = Fraction(0)
        for i in u:
            w = g.weights[i][j]
            if is_inf(w):
                total = INF
                break
            total += w
        sums.append(total)
    return sums


def best_completion(g: BipartiteGraph, u: tuple[int, ...], size: int, sense: Sense) -> tuple[Weight, tuple[int, ...]]:
    """Best right part of ``size`` columns for left part ``u``, and its total weight."""
    sums = _column_sums(g, u)
    if sense is Sense.MAX:
        order = sorted(range(g.n), key=lambda j: (-sums[j], j))
    else:
        order = sorted(range(g.n), key=lambda j: (sums[j], j))
    v = tuple(sorted(order[:size]))
    total = Fraction(0)
    for j in v:
        total = total + sums[j]
    return total, v


def _solve(g: BipartiteGraph, splits, sense: Sense) -> Solution:
    """Best biclique over the given ``(left size, right size)`` splits."""
    best_value, best_b = None, None
    for a, b_size in splits:
        for u in combinations(range(g.n), a):
            value, v = best_completion(g, u, b_size, sense)
            b = Biclique(u, v)
            if _better(value, b, best_value, best_b, sense):
                best_value, best_b = value, b
    return Solution(best_b, best_value)


def solve_wbcbs(g: BipartiteGraph, k: int, sense: Sense = Sense.MAX) -> Solution:
    """Optimal k-balanced biclique (max or min total weight) on a finite instance."""
    sense = Sense(sense)
    if not 1 <= k <= g.n:
        raise ParameterError(f"k must satisfy 1 <= k <= n={g.n}, got k={k}")
    if not g.is_finite:
        raise InstanceError("balanced problem requires finite weights")
    return _solve(g, [(k, k)], sense)


def _check_unbalanced(g: BipartiteGraph, k: int) -> None:
    if not 2 <= k <= 2 * g.n:
        raise ParameterError(f"k must satisfy 2 <= k <= 2n={2 * g.n}, got k={k}")
    if not g.is_nonnegative:
        raise InstanceError("unbalanced problems require nonnegative weights")


def solve_maxwcbs(g: BipartiteGraph, k: int) -> Solution:
    _check_unbalanced(g, k)
    if not g.is_finite:
        raise InstanceError("maximum problem requires finite weights")
    return _solve(g, [(a, k - a) for a in split_range(g.n, k)], Sense.MAX)


def solve_minwcbs(g: BipartiteGraph, k: int) -> Solution:
    """Minimum-weight biclique on k vertices. Infinite weights are allowed."""
    _check_unbalanced(g, k)
    return _solve(g, [(a, k - a) for a in split_range(g.n, k)], Sense.MIN)


def solve(g: BipartiteGraph, k: int, problem: str, sense: Sense = Sense.MAX) -> Solution:
    if problem == "wbcbs":
        return solve_wbcbs(g, k, sense)
    if problem == "maxwcbs":
        return solve_maxwcbs(g, k)
    if problem == "minwcbs":
        return solve_minwcbs(g, k)
    raise ParameterError(f"unknown problem {problem!r}")


def brute_force_oracle(g: BipartiteGraph, k: int, kind: Kind, sense: Sense) -> Solution:
    """Scan every feasible biclique and keep the best under the shared tie-break."""
    feasible = enumerate_feasible(g.n, k, Kind(kind))
    sense = Sense(sense)
    best_value, best_b = None, None
    for b in feasible:
        value = weight_of(b, g)
        if _better(value, b, best_value, best_b, sense):
            best_value, best_b = value, b
    return Solution(best_b, best_value)
