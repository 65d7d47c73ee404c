"""Bipartite matching and König duality on unweighted n x n bipartite graphs.

Includes the polynomial algorithm for the largest biclique (by total vertex
count) in an unweighted bipartite graph: a biclique of ``g`` is an independent
set of the bipartite complement of ``g``, and independent sets of bipartite
graphs are complements of vertex covers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import Biclique, BicliqueError, InstanceError


class NotMaximumError(BicliqueError):
    """Raised when a matching handed to the König construction is not maximum."""


@dataclass(frozen=True)
class UnweightedBipartiteGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(a) for a in row) for row in adjacency)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InstanceError("adjacency matrix must be square n x n")
        if any(a not in (0, 1) for r in rows for a in r):
            raise InstanceError("adjacency entries must be 0 or 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", rows)

    @classmethod
    def from_edges(cls, n: int, edges) -> "UnweightedBipartiteGraph":
        adj = [[0] * n for _ in range(n)]
        for i, j in edges:
            adj[i][j] = 1
        return cls(adj)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "UnweightedBipartiteGraph":
        """Graph whose edge ``(i, j)`` is bit ``i*n + j`` of ``mask``."""
        return cls([[(mask >> (i * n + j)) & 1 for j in range(n)] for i in range(n)])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(self.n) if self.adjacency[i][j]]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i][j])

    def complement(self) -> "UnweightedBipartiteGraph":
        return UnweightedBipartiteGraph([[1 - a for a in row] for row in self.adjacency])

    def neighbors(self, i: int) -> list[int]:
        return [j for j, a in enumerate(self.adjacency[i]) if a]


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def mate_left(self) -> dict[int, int]:
        return dict(self.pairs)

    def mate_right(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}


@dataclass(frozen=True)
class VertexCover:
    left: frozenset[int]
    right: frozenset[int]

    def __len__(self) -> int:
        return len(self.left) + len(self.right)

    def covers(self, g: UnweightedBipartiteGraph) -> bool:
        return all(i in self.left or j in self.right for i, j in g.edges())


def max_matching(g: UnweightedBipartiteGraph) -> Matching:
    """Hopcroft-Karp maximum matching. Vertices and neighbours are scanned in ascending order."""
    n = g.n
    adj = [g.neighbors(i) for i in range(n)]
    mate_l = [-1] * n
    mate_r = [-1] * n
    unreached = n + 1

    while True:
        # layered BFS from free left vertices
        dist = [unreached] * n
        queue = deque()
        for i in range(n):
            if mate_l[i] < 0:
                dist[i] = 0
                queue.append(i)
        found = unreached
        while queue:
            i = queue.popleft()
            if dist[i] >= found:
                continue
            for j in adj[i]:
                i2 = mate_r[j]
                if i2 < 0:
                    found = min(found, dist[i] + 1)
                elif dist[i2] == unreached:
                    dist[i2] = dist[i] + 1
                    queue.append(i2)
        if found == unreached:
            break

        def augment(i: int) -> bool:
            for j in adj[i]:
                i2 = mate_r[j]
                if (i2 < 0 and dist[i] + 1 == found) or (
                    i2 >= 0 and dist[i2] == dist[i] + 1 and augment(i2)
                ):
                    mate_l[i] = j
                    mate_r[j] = i
                    return True
            dist[i] = unreached
            return False

        for i in range(n):
            if mate_l[i] < 0:
                augment(i)

    return Matching(frozenset((i, j) for i, j in enumerate(mate_l) if j >= 0))


def min_vertex_cover(g: UnweightedBipartiteGraph, m: Matching) -> VertexCover:
    """König's construction of a minimum vertex cover from a maximum matching.

    Let Z be the vertices reachable from free left vertices by alternating
    paths (non-matching edges left to right, matching edges right to left).
    The cover is ``(L \\ Z) | (R & Z)``. Reaching a free right vertex means an
    augmenting path exists, so ``m`` was not maximum and NotMaximumError is raised.
    """
    n = g.n
    mate_l = m.mate_left()
    mate_r = m.mate_right()
    for i, j in m.pairs:
        if not g.has_edge(i, j):
            raise InstanceError(f"matching pair {(i, j)} is not an edge")
    seen_l = [False] * n
    seen_r = [False] * n
    queue = deque(i for i in range(n) if i not in mate_l)
    for i in queue:
        seen_l[i] = True
    while queue:
        i = queue.popleft()
        for j in g.neighbors(i):
            if seen_r[j] or mate_l.get(i) == j:
                continue
            seen_r[j] = True
            i2 = mate_r.get(j)
            if i2 is None:
                raise NotMaximumError("augmenting path found; matching is not maximum")
            if not seen_l[i2]:
                seen_l[i2] = True
                queue.append(i2)
    return VertexCover(
        frozenset(i for i in range(n) if not seen_l[i]),
        frozenset(j for j in range(n) if seen_r[j]),
    )


def max_independent_set(g: UnweightedBipartiteGraph) -> tuple[frozenset[int], frozenset[int]]:
    cover = min_vertex_cover(g, max_matching(g))
    everything = frozenset(range(g.n))
    return everything - cover.left, everything - cover.right


def _independent_with(h: UnweightedBipartiteGraph, i: int, j: int) -> tuple[set[int], set[int]]:
    """Largest independent set of ``h`` containing left ``i`` and right ``j`` (non-adjacent in h)."""
    n = h.n
    left = [a for a in range(n) if a != i and not h.has_edge(a, j)]
    right = [b for b in range(n) if b != j and not h.has_edge(i, b)]
    if not left or not right:
        return {i, *left}, {j, *right}
    # pad to square by adding isolated vertices on the short side
    size = max(len(left), len(right))
    padded = [[h.adjacency[a][b] for b in right] + [0] * (size - len(right)) for a in left]
    padded += [[0] * size for _ in range(size - len(left))]
    sl, sr = max_independent_set(UnweightedBipartiteGraph(padded))
    return {i} | {left[a] for a in sl if a < len(left)}, {j} | {right[b] for b in sr if b < len(right)}


def max_unbalanced_biclique_unweighted(g: UnweightedBipartiteGraph) -> Biclique | None:
    """Biclique of ``g`` with the most vertices among those with both parts non-empty.

    Returns None when ``g`` has no edges. If the unconstrained independent set
    of the complement is one-sided, every edge ``(i, j)`` of ``g`` is forced in
    turn and the best two-sided completion is kept; ties go to the first edge
    in ascending order.
    """
    h = g.complement()
    left, right = max_independent_set(h)
    if left and right:
        return Biclique(left, right)
    best = None
    for i, j in g.edges():
        l2, r2 = _independent_with(h, i, j)
        if best is None or len(l2) + len(r2) > best.order:
            best = Biclique(l2, r2)
    return best


def is_biclique_of(b: Biclique, g: UnweightedBipartiteGraph) -> bool:
    return all(g.has_edge(i, j) for i in b.u for j in b.v)
