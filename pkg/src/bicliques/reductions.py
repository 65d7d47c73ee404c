"""Instance transformers behind the hardness results, plus weight-level normalization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import INF, BipartiteGraph, InstanceError, ParameterError, Weight, is_inf
from .matching import UnweightedBipartiteGraph


@dataclass(frozen=True)
class ReductionOutput:
    instance: BipartiteGraph
    k_out: int
    threshold: Fraction
    direction: str

    def metadata(self) -> dict:
        return {"threshold": str(self.threshold), "k": self.k_out, "direction": self.direction}


def _indicator_graph(g: UnweightedBipartiteGraph) -> BipartiteGraph:
    return BipartiteGraph([[Fraction(a) for a in row] for row in g.adjacency])


def bcbs_to_wbcbs(g: UnweightedBipartiteGraph, k: int) -> ReductionOutput:
    """Weight 1 on edges of ``g``, 0 on non-edges; a k-balanced biclique exists iff the optimum is k^2."""
    if not 1 <= k <= g.n:
        raise ParameterError(f"need 1 <= k <= n={g.n}, got k={k}")
    return ReductionOutput(
        _indicator_graph(g), k, Fraction(k * k),
        "source has a k-balanced biclique iff the maximum balanced weight equals threshold",
    )


def bcbs_to_maxwcbs(g: UnweightedBipartiteGraph, k: int) -> ReductionOutput:
    """Same weighting; a k-balanced biclique exists iff the best biclique on 2k vertices weighs k^2."""
    if not 1 <= k <= g.n:
        raise ParameterError(f"need 1 <= k <= n={g.n}, got k={k}")
    return ReductionOutput(
        _indicator_graph(g), 2 * k, Fraction(k * k),
        "source has a k-balanced biclique iff the maximum weight on 2k vertices equals threshold",
    )


def minwcbs_to_qcover(g: BipartiteGraph, k: int) -> tuple[UnweightedBipartiteGraph, int]:
    """Heavy-edge graph and q for a minimum instance with weights in ``{1, n^2}``.

    Choosing the k kept vertices is choosing the ``q = 2n - k`` removed ones;
    the heavy edges left inside are those the removed set fails to cover.
    """
    n = g.n
    if not 2 <= k <= 2 * n:
        raise ParameterError(f"need 2 <= k <= 2n={2 * n}, got k={k}")
    heavy = Fraction(n * n)
    adj = []
    for row in g.weights:
        if any(is_inf(w) or w not in (1, heavy) for w in row):
            raise InstanceError(f"weights must be exactly 1 or n^2={n * n}")
        adj.append([1 if w == heavy else 0 for w in row])
    return UnweightedBipartiteGraph(adj), 2 * n - k


def best_qcover(h: UnweightedBipartiteGraph, q: int, light: BipartiteGraph | None = None) -> tuple[int, int]:
    """Brute-force maximum q-vertex cover restricted to removals that keep both parts non-empty.

    Returns ``(covered, remainder)``: the largest number of edges of ``h``
    touched by q removed vertices, and among removals achieving it, the fewest
    light (non-``h``) edges left among the kept vertices. Exponential; test
    scale only.
    """
    n = h.n
    edges = h.edges()
    best = None
    for removed in combinations(range(2 * n), q):
        rl = {x for x in removed if x < n}
        rr = {x - n for x in removed if x >= n}
        if len(rl) == n or len(rr) == n:
            continue
        covered = sum(1 for i, j in edges if i in rl or j in rr)
        remainder = sum(
            1 for i in range(n) if i not in rl for j in range(n) if j not in rr and not h.has_edge(i, j)
        )
        key = (-covered, remainder)
        if best is None or key < best:
            best = key
    if best is None:
        raise ParameterError("no removal of q vertices keeps both parts non-empty")
    return -best[0], best[1]


def qcover_predicted_value(g: BipartiteGraph, k: int) -> Fraction:
    """Minimum biclique weight predicted from the q-cover side: ``n^2 (|E*| - cover) + remainder``."""
    h, q = minwcbs_to_qcover(g, k)
    covered, remainder = best_qcover(h, q)
    return Fraction(g.n * g.n) * (len(h.edges()) - covered) + remainder


def _level_key(level):
    return (1, 0) if is_inf(level) else (0, Fraction(level))


def normalize_weights(levels, n: int) -> dict:
    """Map weight levels (finite rationals and/or INF) to positive integers.

    Levels are sorted ascending with INF on top and sent to ``a_1 = 1``,
    ``a_i = n^2 a_{i-1} + 1``, so each level outweighs n^2 edges of the level
    below. At most four levels are accepted.
    """
    uniq = sorted(set(INF if is_inf(w) else Fraction(w) for w in levels), key=_level_key)
    if len(uniq) > 4:
        raise ParameterError("at most four weight levels are supported")
    out = {}
    a = 1
    for level in uniq:
        out[level] = a
        a = n * n * a + 1
    return out


def apply_level_map(g: BipartiteGraph, level_map: dict) -> BipartiteGraph:
    def lookup(w: Weight):
        return level_map[INF if is_inf(w) else Fraction(w)]

    return BipartiteGraph([[lookup(w) for w in row] for row in g.weights])
