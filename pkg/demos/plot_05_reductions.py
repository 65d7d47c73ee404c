"""
Hardness reductions and weight normalization
============================================
"""

from bicliques import BipartiteGraph
from bicliques.matching import UnweightedBipartiteGraph
from bicliques.reductions import (
    apply_level_map,
    bcbs_to_maxwcbs,
    bcbs_to_wbcbs,
    minwcbs_to_qcover,
    normalize_weights,
    qcover_predicted_value,
)
from bicliques.solvers import solve_maxwcbs, solve_minwcbs, solve_wbcbs

g = UnweightedBipartiteGraph.from_edges(3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
for k in (1, 2, 3):
    out = bcbs_to_wbcbs(g, k)
    top = solve_wbcbs(out.instance, k).value
    alt = bcbs_to_maxwcbs(g, k)
    top2 = solve_maxwcbs(alt.instance, alt.k_out).value
    print(f"k={k}: balanced optimum {top}, unbalanced optimum {top2}, threshold {out.threshold}")

# minimum problem with light (1) and heavy (n^2) edges vs. maximum q-vertex cover
w = BipartiteGraph([[9, 1, 1], [1, 9, 1], [9, 9, 1]])
h, q = minwcbs_to_qcover(w, 3)
print("heavy edges:", h.edges(), "q =", q)
print("solver:", solve_minwcbs(w, 3).value, "cover side:", qcover_predicted_value(w, 3))

# levels -1 < 0 < 1 become positive integers with big gaps
level_map = normalize_weights({-1, 0, 1}, 3)
print(level_map)
print(apply_level_map(BipartiteGraph([[-1, 0, 1], [1, 1, 0], [0, -1, 1]]), level_map).weights)
