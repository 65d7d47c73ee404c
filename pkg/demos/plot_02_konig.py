"""
Matchings, covers and the unweighted maximum biclique
=====================================================
"""

import random

from bicliques.matching import (
    UnweightedBipartiteGraph,
    max_independent_set,
    max_matching,
    max_unbalanced_biclique_unweighted,
    min_vertex_cover,
)

g = UnweightedBipartiteGraph.from_edges(4, [(0, 0), (0, 1), (1, 0), (2, 2), (3, 2), (3, 3)])

m = max_matching(g)
cover = min_vertex_cover(g, m)
print("matching:", sorted(m.pairs))
print("cover:", sorted(cover.left), sorted(cover.right))
# König: the two sizes coincide and the cover touches every edge
print(len(m), "==", len(cover), "covers all edges:", cover.covers(g))

# the complement of a cover is an independent set; in the bipartite
# complement graph it becomes a biclique with as many vertices as possible
left, right = max_independent_set(g)
print("independent set:", sorted(left), sorted(right))
print("largest biclique:", max_unbalanced_biclique_unweighted(g))

# a quick random sweep
rnd = random.Random(1)
for _ in range(5):
    n = rnd.randint(3, 8)
    h = UnweightedBipartiteGraph([[int(rnd.random() < 0.4) for _ in range(n)] for _ in range(n)])
    mm = max_matching(h)
    print(n, len(mm), len(min_vertex_cover(h, mm)))
