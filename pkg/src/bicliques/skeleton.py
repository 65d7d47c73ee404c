"""1-skeletons and cone-decomposition graphs of biclique feasible sets.

Three adjacency tests are available:

* the combinatorial criterion for balanced bicliques (common parts);
* the midpoint LP: distinct vertices ``x, y`` of a 0/1 polytope are
  non-adjacent iff ``(x + y) / 2`` is a convex combination of the other
  feasible points;
* the margin LP: maximize ``t`` over weight vectors ``c`` in a box such that
  ``x`` and ``y`` tie and every other feasible point is worse by at least
  ``t``. A positive optimum is a weight vector lying in exactly the two cones
  ``K(x)`` and ``K(y)``; this strict-separation condition is what the cone
  graphs below record as adjacency.

All decisions are made in exact rational arithmetic.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .core import (
    INF,
    Biclique,
    FeasibleSet,
    Kind,
    ParameterError,
    Sense,
    Weight,
    evaluate_all,
    format_weight,
    is_inf,
)
from .lp import OPTIMAL, linprog

LP_WARN_SIZE = 200
# beyond this many feasible points the margin LP adds constraints lazily
LAZY_CONSTRAINT_SIZE = 2000


class Method(str, Enum):
    CRITERION = "criterion"
    MIDPOINT_LP = "midpoint-lp"
    CONE_MAX = "cone-max"
    CONE_MIN = "cone-min"


class Domain(str, Enum):
    FULL_SPACE = "full"
    ORTHANT = "orthant"


def adjacent_balanced_criterion(x: Biclique, y: Biclique) -> bool:
    """Adjacency of two k-balanced bicliques in the balanced biclique polytope.

    Adjacent iff they share no part, or share one part and differ in exactly
    one vertex of the other.
    """
    if x == y:
        raise ParameterError("adjacency test needs two distinct bicliques")
    k = len(x.u)
    if not (len(x.v) == len(y.u) == len(y.v) == k):
        raise ParameterError("both bicliques must be balanced with the same k")
    if x.u != y.u and x.v != y.v:
        return True
    if x.u == y.u:
        return len(set(x.v) - set(y.v)) == 1
    return len(set(x.u) - set(y.u)) == 1


def adjacent_midpoint_lp(x_idx: int, y_idx: int, feasible: FeasibleSet) -> bool:
    """True iff the midpoint of x and y is NOT a convex combination of the other points.

    Coordinates where x and y agree pin every usable point to the same value
    (weights are nonnegative and sum to one), so those points are filtered out
    before the LP is built over the coordinates where x and y differ.
    """
    if x_idx == y_idx:
        raise ParameterError("adjacency test needs two distinct indices")
    vecs = feasible.vectors
    x, y = vecs[x_idx], vecs[y_idx]
    agree = [e for e in range(len(x)) if x[e] == y[e]]
    differ = [e for e in range(len(x)) if x[e] != y[e]]
    cands = [
        vecs[r]
        for r in range(len(vecs))
        if r != x_idx and r != y_idx and all(vecs[r][e] == x[e] for e in agree)
    ]
    if not cands:
        return True
    half = Fraction(1, 2)
    A_eq = [[z[e] for z in cands] for e in differ]
    b_eq = [half] * len(differ)
    A_eq.append([1] * len(cands))
    b_eq.append(1)
    return linprog([0] * len(cands), A_eq=A_eq, b_eq=b_eq).status != OPTIMAL


@dataclass(frozen=True)
class ConeAdjacencyCertificate:
    c: tuple[Fraction, ...]
    margin: Fraction
    sense: Sense
    domain: Domain

    @property
    def adjacent(self) -> bool:
        return self.margin > 0

    def to_json(self, n: int) -> dict:
        return {
            "n": n,
            "weights": [[format_weight(w) for w in self.c[i * n:(i + 1) * n]] for i in range(n)],
            "margin": format_weight(self.margin),
            "sense": self.sense.value,
            "domain": self.domain.value,
        }


def _margin_lp(x, y, others, sign: int, lo: int, hi: int):
    """Build and solve the margin LP against the listed competitor vectors."""
    d = len(x)
    t = d
    c = [0] * d + [1]
    A_ub, b_ub = [], []
    for z in others:
        # t - sign * <c, x - z> <= 0 with c = c' + lo
        row = {e: -sign * (x[e] - z[e]) for e in range(d) if x[e] != z[e]}
        row[t] = 1
        A_ub.append(row)
        b_ub.append(sign * lo * sum(x[e] - z[e] for e in range(d)))
    for e in range(d):
        A_ub.append({e: 1})
        b_ub.append(hi - lo)
    A_ub.append({t: 1})
    b_ub.append(d)
    eq = {e: x[e] - y[e] for e in range(d) if x[e] != y[e]}
    A_eq = [eq] if eq else []
    b_eq = [-lo * sum(x[e] - y[e] for e in range(d))] if eq else []
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq)
    if res.status != OPTIMAL:
        raise RuntimeError(f"margin LP ended with status {res.status}")
    cert = tuple(res.x[e] + lo for e in range(d))
    return cert, res.x[t]


def cone_adjacent_margin(
    x_idx: int,
    y_idx: int,
    feasible: FeasibleSet,
    sense: Sense = Sense.MAX,
    domain: Domain = Domain.ORTHANT,
) -> tuple[bool, ConeAdjacencyCertificate]:
    """Exact optimal separation margin of two feasible points.

    Weights live in ``[0, 1]^d`` (orthant) or ``[-1, 1]^d`` (full space).
    Large feasible sets are handled by constraint generation: the LP is solved
    against a growing subset of competitors until the certificate is checked
    against the whole set and nothing is violated.
    """
    if x_idx == y_idx:
        raise ParameterError("adjacency test needs two distinct indices")
    sense, domain = Sense(sense), Domain(domain)
    sign = 1 if sense is Sense.MAX else -1
    lo, hi = (0, 1) if domain is Domain.ORTHANT else (-1, 1)
    vecs = feasible.vectors
    x, y = vecs[x_idx], vecs[y_idx]
    rest = [r for r in range(len(vecs)) if r != x_idx and r != y_idx]

    if len(rest) <= LAZY_CONSTRAINT_SIZE:
        cert, t = _margin_lp(x, y, [vecs[r] for r in rest], sign, lo, hi)
    else:
        active: list[int] = []
        rest_arr = np.array(rest)
        while True:
            cert, t = _margin_lp(x, y, [vecs[r] for r in active], sign, lo, hi)
            values, scale, _ = evaluate_all(feasible, cert)
            t = Fraction(t)
            slack = sign * (values[x_idx] - values[rest_arr]) * t.denominator - t.numerator * scale
            violated = np.nonzero(slack < 0)[0]
            if len(violated) == 0:
                break
            worst = violated[np.argsort(slack[violated], kind="stable")[:40]]
            active.extend(int(rest_arr[w]) for w in worst)
    return t > 0, ConeAdjacencyCertificate(cert, t, sense, domain)


def finite_certificate(c: Sequence[Weight], k: int) -> tuple[Fraction, ...]:
    """Replace infinite entries and rescale a nonnegative certificate into ``[0, 1]``.

    Infinite entries become ``W = (k*k + 1) * max_finite + 1`` before dividing
    everything by ``W``; any biclique on k vertices that avoids infinite edges
    then weighs less than any biclique that uses one.
    """
    finite = [Fraction(w) for w in c if not is_inf(w)]
    if any(w < 0 for w in finite):
        raise ParameterError("finite substitution needs a nonnegative certificate")
    big = (k * k + 1) * max(finite, default=Fraction(0)) + 1
    return tuple(Fraction(1) if is_inf(w) else Fraction(w) / big for w in c)


def verify_certificate(
    c: Sequence[Weight], x_idx: int, y_idx: int, feasible: FeasibleSet, sense: Sense = Sense.MAX
) -> Weight:
    """Margin of ``c`` at the pair, checked against every member of ``feasible``.

    Returns ``min over z of (<c,x> - <c,z>)`` (reversed for MIN) when x and y
    tie at a finite value, ``INF`` if every other point is infinitely worse,
    and a non-positive value if the certificate fails. Infinite entries are
    evaluated symbolically; the finite substitution of
    :func:`finite_certificate` must agree on which points are worse.
    """
    sense = Sense(sense)
    sign = 1 if sense is Sense.MAX else -1
    values, scale, infinite = evaluate_all(feasible, c)
    if infinite[x_idx] or infinite[y_idx] or values[x_idx] != values[y_idx]:
        return Fraction(0)
    mask = np.ones(len(feasible), dtype=bool)
    mask[[x_idx, y_idx]] = False
    finite_rest = mask & ~infinite
    if (infinite & mask).any() and sense is Sense.MAX:
        return Fraction(0)
    if not finite_rest.any():
        margin: Weight = INF
    else:
        diffs = sign * (values[x_idx] - values[finite_rest])
        margin = Fraction(int(diffs.min()), scale)
    if any(is_inf(w) for w in c):
        sub = finite_certificate(c, feasible.k)
        sv, sscale, _ = evaluate_all(feasible, sub)
        sub_worse = sign * (sv[x_idx] - sv[mask]) > 0
        if not bool(sub_worse.all()) and margin > 0:
            raise RuntimeError("finite substitution disagrees with symbolic evaluation")
    return margin


@dataclass(frozen=True)
class SkeletonGraph:
    feasible: FeasibleSet
    edges: frozenset[tuple[int, int]]
    method: Method

    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in range(len(self.feasible))]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def to_dot(self) -> str:
        lines = ["graph skeleton {"]
        for i, b in enumerate(self.feasible):
            lines.append(f'  {i} [label="{b}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.feasible.n,
            "k": self.feasible.k,
            "kind": self.feasible.kind.value,
            "method": self.method.value,
            "vertices": [{"u": list(b.u), "v": list(b.v)} for b in self.feasible],
            "edges": [list(e) for e in sorted(self.edges)],
        }

    def to_csv(self) -> str:
        return "source,target\n" + "".join(f"{i},{j}\n" for i, j in sorted(self.edges))


def pair_adjacent(i: int, j: int, feasible: FeasibleSet, method: Method) -> bool:
    method = Method(method)
    if method is Method.CRITERION:
        return adjacent_balanced_criterion(feasible[i], feasible[j])
    if method is Method.MIDPOINT_LP:
        return adjacent_midpoint_lp(i, j, feasible)
    sense = Sense.MAX if method is Method.CONE_MAX else Sense.MIN
    return cone_adjacent_margin(i, j, feasible, sense, Domain.ORTHANT)[0]


def _pair_chunk(args):
    pairs, feasible, method = args
    return [p for p in pairs if pair_adjacent(p[0], p[1], feasible, method)]


def build_skeleton(feasible: FeasibleSet, method: Method = Method.CRITERION, workers: int = 1) -> SkeletonGraph:
    method = Method(method)
    if len(feasible) < 2:
        raise ParameterError("a skeleton needs at least two feasible points")
    if method is Method.CRITERION and feasible.kind is not Kind.BALANCED:
        raise ParameterError("the combinatorial criterion applies to balanced feasible sets only")
    if method is not Method.CRITERION and len(feasible) > LP_WARN_SIZE:
        warnings.warn(
            f"{len(feasible)} feasible points: LP-based skeleton needs "
            f"{len(feasible) * (len(feasible) - 1) // 2} exact LP solves",
            stacklevel=2,
        )
    pairs = list(combinations(range(len(feasible)), 2))
    if workers <= 1:
        edges = _pair_chunk((pairs, feasible, method))
    else:
        chunks = [pairs[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            edges = [p for part in pool.map(_pair_chunk, [(ch, feasible, method) for ch in chunks]) for p in part]
    return SkeletonGraph(feasible, frozenset(edges), method)


@dataclass(frozen=True)
class CliqueReport:
    omega: int
    witness: tuple[int, ...]

    @property
    def lower_bound_direct_type(self) -> int:
        # direct-type algorithms need at least omega - 1 linear comparisons
        return self.omega - 1

    def to_json(self) -> dict:
        return {"omega": self.omega, "witness": list(self.witness), "lower_bound_direct_type": self.lower_bound_direct_type}


def max_clique_adjacency(nbrs: Sequence[set[int]]) -> tuple[int, ...]:
    """Maximum clique by Bron-Kerbosch with Tomita pivoting and a size bound.

    Vertex sets are int bitmasks. Returns the lexicographically first witness
    found by the ascending scan.
    """
    count = len(nbrs)
    masks = [sum(1 << j for j in nb) for nb in nbrs]
    best: list[int] = []

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal best
        if not p:
            if not x and len(r) > len(best):
                best = list(r)
            return
        if len(r) + p.bit_count() <= len(best):
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda u: (masks[u] & p).bit_count())
        for vtx in _bits(p & ~masks[pivot]):
            r.append(vtx)
            expand(r, p & masks[vtx], x & masks[vtx])
            r.pop()
            p &= ~(1 << vtx)
            x |= 1 << vtx
            if len(r) + p.bit_count() <= len(best):
                return

    if count:
        expand([], (1 << count) - 1, 0)
    return tuple(sorted(best))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique(sg: SkeletonGraph) -> CliqueReport:
    witness = max_clique_adjacency(sg.neighbors())
    return CliqueReport(len(witness), witness)

