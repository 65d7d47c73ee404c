"""
Skeletons of biclique polytopes and their clique numbers
========================================================

Vertices are feasible bicliques; an edge joins two of them when some
objective makes exactly those two optimal.
"""

from bicliques import enumerate_balanced, enumerate_unbalanced
from bicliques.families import family_balanced
from bicliques.skeleton import Method, build_skeleton, max_clique

fs = enumerate_balanced(4, 2)
print(len(fs), "balanced bicliques with k=2 on 4+4 vertices")

# the combinatorial criterion and the exact LP give the same graph
fast = build_skeleton(fs, Method.CRITERION)
slow = build_skeleton(fs, Method.MIDPOINT_LP)
print("edges:", len(fast.edges), "same graph:", fast.edges == slow.edges)

report = max_clique(fast)
print("clique number:", report.omega)
print("direct-type lower bound on comparisons:", report.lower_bound_direct_type)

# the diagonal family is one explicit clique
fam = family_balanced(4, 2)
idx = [fs.index(b) for b in fam]
print("diagonal family is a clique:",
      all(fast.has_edge(a, b) for a in idx for b in idx if a < b))

# unbalanced sets use the cone graph (margin LPs over the orthant)
small = enumerate_unbalanced(2, 3)
cone = build_skeleton(small, Method.CONE_MAX)
print(cone.to_dot())
