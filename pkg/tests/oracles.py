"""Brute-force reference implementations. Exponential; used only at test scale."""

from __future__ import annotations

from itertools import combinations

from bicliques.matching import UnweightedBipartiteGraph


def brute_max_matching_size(g: UnweightedBipartiteGraph) -> int:
    edges = g.edges()
    for size in range(min(g.n, len(edges)), 0, -1):
        for chosen in combinations(edges, size):
            if len({i for i, _ in chosen}) == size and len({j for _, j in chosen}) == size:
                return size
    return 0


def brute_min_cover_size(g: UnweightedBipartiteGraph) -> int:
    n = g.n
    edges = g.edges()
    for size in range(0, 2 * n + 1):
        for chosen in combinations(range(2 * n), size):
            s = set(chosen)
            if all(i in s or (n + j) in s for i, j in edges):
                return size
    raise AssertionError("unreachable")


def brute_max_biclique_order(g: UnweightedBipartiteGraph) -> int:
    """Most vertices in a biclique of g with both parts non-empty, 0 if none."""
    n = g.n
    best = 0
    for a in range(1, n + 1):
        for u in combinations(range(n), a):
            v = [j for j in range(n) if all(g.has_edge(i, j) for i in u)]
            if v:
                best = max(best, a + len(v))
    return best


def brute_bcbs(g: UnweightedBipartiteGraph, k: int) -> bool:
    n = g.n
    for u in combinations(range(n), k):
        common = [j for j in range(n) if all(g.has_edge(i, j) for i in u)]
        if len(common) >= k:
            return True
    return False
