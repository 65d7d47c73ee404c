"""
Solving small biclique problems exactly
=======================================

Three flavours on one weight matrix, each checked against brute force.
"""

from fractions import Fraction

from bicliques import BipartiteGraph, Kind, Sense
from bicliques.solvers import brute_force_oracle, solve_maxwcbs, solve_minwcbs, solve_wbcbs

# weights may be integers, fractions, "p/q" strings or "inf"
g = BipartiteGraph([[1, 2, Fraction(-1, 2)], [3, 4, 0], ["1/3", 5, 2]])

# k-balanced: k left and k right vertices
best = solve_wbcbs(g, 2, Sense.MAX)
print("balanced, k=2, max:", best.biclique, best.value)
print("oracle agrees:", best == brute_force_oracle(g, 2, Kind.BALANCED, Sense.MAX))

worst = solve_wbcbs(g, 2, Sense.MIN)
print("balanced, k=2, min:", worst.biclique, worst.value)

# unbalanced problems need nonnegative weights
h = BipartiteGraph([[1, 2, 0], [3, 4, 1], [0, 5, 2]])
for k in (3, 4):
    print(f"max on {k} vertices:", solve_maxwcbs(h, k).to_json())

# infinite edges are simply avoided by the minimum problem
inf_g = BipartiteGraph([["inf", 1, 2], [1, "inf", 1], [3, 1, "inf"]])
print("min on 3 vertices:", solve_minwcbs(inf_g, 3).to_json())
print("min on 6 vertices:", solve_minwcbs(inf_g, 6).to_json())
