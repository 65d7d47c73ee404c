"""
Clique families and their certificate weights
=============================================

Each pair of members comes with weights on which exactly that pair is
optimal. Every certificate is re-verified against the whole feasible set.
"""

from bicliques.families import (
    certify_family,
    family_max,
    family_min,
    nonadjacency_witness,
    theorem_inequality_violations,
)
from bicliques import Biclique

for n, k in [(4, 4), (4, 3)]:
    fam = family_max(n, k)
    certs = certify_family(fam)
    print(f"max family n={n} k={k}: {len(fam)} members,",
          "sources", sorted({c.source for c in certs}),
          "all certified", all(c.certified for c in certs))

# the minimum family needs (9/4) m < k < 3m with m = n // 2
fam = family_min(10, 12)
print("min family:", [str(b) for b in fam])
certs = certify_family(fam)
print("values", {str(c.value) for c in certs}, "margins", {str(c.margin) for c in certs})

# the competitor inequality behind the minimum family, on a finite window
print("violations for m <= 30:", theorem_inequality_violations(30))

# pairs sharing a side and differing in two or more vertices are never adjacent
x, y = Biclique((0, 1), (0, 1)), Biclique((2, 3), (0, 1))
z, t = nonadjacency_witness(x, y)
print(x, "+", y, "=", z, "+", t)
