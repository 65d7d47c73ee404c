"""Clique families of the skeleton / cone graphs and their certificate weights.

Members of a family are pairwise adjacent; each pair comes with an explicit
weight vector on which exactly the two members are optimal. Certificates are
flat row-major tuples of length n*n that may contain :data:`~bicliques.core.INF`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .core import (
    INF,
    Biclique,
    BipartiteGraph,
    FeasibleSet,
    ParameterError,
    Sense,
    Weight,
    enumerate_balanced,
    enumerate_unbalanced,
    weight_of,
)
from .skeleton import Domain, cone_adjacent_margin, verify_certificate


class FamilyKind(str, Enum):
    BALANCED_DIAGONAL = "balanced"
    MAX_EVEN = "max-even"
    MAX_ODD = "max-odd"
    MIN_PARTITION = "min"


@dataclass(frozen=True)
class CliqueFamily:
    kind: FamilyKind
    n: int
    k: int
    members: tuple[Biclique, ...]
    m: int | None = None
    s: int | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def bound(self) -> int:
        """The binomial lower bound on the clique number this family realizes."""
        if self.kind is FamilyKind.BALANCED_DIAGONAL:
            return math.comb(self.n, self.k)
        if self.kind is FamilyKind.MAX_EVEN:
            return math.comb(self.n, self.k // 2)
        if self.kind is FamilyKind.MAX_ODD:
            return math.comb(self.n - 1, self.k // 2)
        return math.comb(self.m, self.s)


def family_balanced(n: int, k: int) -> CliqueFamily:
    """All diagonal bicliques ``(S, S)`` with ``|S| = k``."""
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    members = tuple(Biclique(S, S) for S in combinations(range(n), k))
    return CliqueFamily(FamilyKind.BALANCED_DIAGONAL, n, k, members)


def family_max(n: int, k: int) -> CliqueFamily:
    """Clique family for the maximum unbalanced problem on k vertices.

    Even ``k = 2s``: diagonal s-balanced bicliques. Odd ``k = 2s + 1``: left
    part ``S`` inside ``[0, n-1)``, right part ``S + {n-1}``.
    """
    s, odd = divmod(k, 2)
    if not odd:
        if not 1 <= s <= n:
            raise ParameterError(f"even k=2s needs 1 <= s <= n, got n={n}, k={k}")
        members = tuple(Biclique(S, S) for S in combinations(range(n), s))
        return CliqueFamily(FamilyKind.MAX_EVEN, n, k, members, s=s)
    if not 1 <= s <= n - 1:
        raise ParameterError(f"odd k=2s+1 needs 1 <= s <= n-1, got n={n}, k={k}")
    members = tuple(Biclique(S, S + (n - 1,)) for S in combinations(range(n - 1), s))
    return CliqueFamily(FamilyKind.MAX_ODD, n, k, members, s=s)


def family_min(n: int, k: int) -> CliqueFamily:
    """Clique family for the minimum unbalanced problem.

    With ``m = n // 2`` the parts split into halves ``U1 = V1 = [0, m)`` and
    ``V2 = [m, 2m)``; for odd n the vertex ``n - 1`` of each part is unused.
    The member for ``S`` (``|S| = s = k / 3``) is ``(S, S + (S shifted by m))``.
    Requires ``k = 3s`` and ``(9/4) m < k < 3m``.
    """
    m = n // 2
    if k % 3:
        raise ParameterError(f"k must be a multiple of 3, got k={k}")
    if not 4 * k > 9 * m:
        raise ParameterError(f"violated (9/4)*m < k: k={k}, m={m}")
    if not k < 3 * m:
        raise ParameterError(f"violated k < 3*m: k={k}, m={m}")
    s = k // 3
    members = tuple(Biclique(S, S + tuple(i + m for i in S)) for S in combinations(range(m), s))
    return CliqueFamily(FamilyKind.MIN_PARTITION, n, k, members, m=m, s=s)


def _matrix(n: int, rule) -> tuple[Weight, ...]:
    return tuple(rule(i, j) for i in range(n) for j in range(n))


def cert_union(x: Biclique, y: Biclique, n: int) -> tuple[Fraction, ...]:
    """0/1 weights: 1 on the edges of x or of y, 0 elsewhere."""
    xu, xv, yu, yv = set(x.u), set(x.v), set(y.u), set(y.v)
    one, zero = Fraction(1), Fraction(0)
    return _matrix(n, lambda i, j: one if (i in xu and j in xv) or (i in yu and j in yv) else zero)


def cert_disjoint_parts(x: Biclique, y: Biclique, n: int) -> tuple[Fraction, ...]:
    """:func:`cert_union` for balanced bicliques that share no part.

    Both weigh ``k^2``, the most any k-balanced biclique can reach, and no
    other k-balanced biclique does.
    """
    if len({len(x.u), len(x.v), len(y.u), len(y.v)}) != 1:
        raise ParameterError("bicliques must be balanced with equal k")
    if x.u == y.u or x.v == y.v:
        raise ParameterError("bicliques share a part")
    return cert_union(x, y, n)


def cert_common_part(x: Biclique, y: Biclique, n: int) -> tuple[Fraction, ...]:
    """Weights 1 / 0 / -1 for two bicliques sharing one part and differing in one vertex."""
    if x.v == y.v and len(set(x.u) - set(y.u)) == 1:
        common, sym, shared = set(x.u) & set(y.u), set(x.u) ^ set(y.u), set(x.v)

        def rule(i, j):
            if j in shared and i in common:
                return Fraction(1)
            if j in shared and i in sym:
                return Fraction(0)
            return Fraction(-1)

        return _matrix(n, rule)
    if x.u == y.u and len(set(x.v) - set(y.v)) == 1:
        flat = cert_common_part(x.transpose(), y.transpose(), n)
        return tuple(flat[j * n + i] for i in range(n) for j in range(n))
    raise ParameterError("bicliques must share one part and differ in exactly one vertex of the other")


def cert_min_family(x: Biclique, y: Biclique, family: CliqueFamily) -> tuple[Weight, ...]:
    """Extended weights 0 / 1 / INF separating two members of the minimum family.

    Zero on ``(Ux - Uy) x Vx``, ``(Uy - Ux) x Vy`` and ``(Ux | Uy) x (Vx & Vy)``;
    one on ``(Ux & Uy) x (Vx ^ Vy)``; infinite elsewhere. Both members then
    weigh ``2a(s - a)`` with ``a = |Ux & Uy|``.
    """
    if family.kind is not FamilyKind.MIN_PARTITION:
        raise ParameterError("certificate applies to the minimum family only")
    if x == y or x not in family.members or y not in family.members:
        raise ParameterError("need two distinct members of the family")
    xu, xv, yu, yv = set(x.u), set(x.v), set(y.u), set(y.v)

    def rule(i, j):
        if (i in xu - yu and j in xv) or (i in yu - xu and j in yv) or (i in xu | yu and j in xv & yv):
            return Fraction(0)
        if i in xu & yu and j in xv ^ yv:
            return Fraction(1)
        return INF

    return _matrix(family.n, rule)


def min_family_pair_value(a: int, s: int) -> int:
    """Weight of both certified members when they share ``a`` left vertices."""
    return 2 * a * (s - a)


def min_family_inner_value(a: int, b: int, s: int) -> int:
    """Weight of a biclique whose left part is ``b`` vertices of the common left part."""
    return b * (3 * s - b - 2 * a)


def theorem_inequality_violations(max_m: int = 30) -> list[tuple[int, int, int, int]]:
    """Integer points of the side constraints with ``b(3s-b-2a) <= 2a(s-a)``.

    Ranges: ``3m/4 < s < m``, ``2s - m <= a < s``, ``3s - 2m <= b <= a``, all
    of m, s, a, b positive. An empty result confirms the minimum family's
    competitors with left part inside the common part are strictly heavier.
    """
    bad = []
    for m in range(1, max_m + 1):
        for s in range(1, m):
            if not 4 * s > 3 * m:
                continue
            for a in range(max(1, 2 * s - m), s):
                for b in range(max(1, 3 * s - 2 * m), a + 1):
                    if min_family_inner_value(a, b, s) <= min_family_pair_value(a, s):
                        bad.append((m, s, a, b))
    return bad


def nonadjacency_witness(x: Biclique, y: Biclique) -> tuple[Biclique, Biclique]:
    """Two other bicliques z, t with ``char(x) + char(y) == char(z) + char(t)``.

    Applies when x and y share one part and differ in at least two vertices of
    the other. The symmetric difference of the differing parts is listed in
    ascending order and dealt alternately to z and t; if that reproduces x or
    y, the last elements of z and t are swapped.
    """
    if x.v == y.v and x.u != y.u:
        xu, yu = set(x.u), set(y.u)
        if len(x.u) != len(y.u) or len(xu - yu) < 2:
            raise ParameterError("witness needs |U(x) \\ U(y)| >= 2 with equal part sizes")
        common = xu & yu
        sym = sorted(xu ^ yu)
        zs, ts = sym[0::2], sym[1::2]
        if set(zs) in (xu - yu, yu - xu):
            zs[-1], ts[-1] = ts[-1], zs[-1]
        return Biclique(common | set(zs), x.v), Biclique(common | set(ts), x.v)
    if x.u == y.u and x.v != y.v:
        z, t = nonadjacency_witness(x.transpose(), y.transpose())
        return z.transpose(), t.transpose()
    raise ParameterError("witness needs two bicliques sharing exactly one part")


def family_feasible_set(family: CliqueFamily) -> tuple[FeasibleSet, Sense]:
    """The feasible set and optimization sense the family is a clique for."""
    if family.kind is FamilyKind.BALANCED_DIAGONAL:
        return enumerate_balanced(family.n, family.k), Sense.MAX
    sense = Sense.MIN if family.kind is FamilyKind.MIN_PARTITION else Sense.MAX
    return enumerate_unbalanced(family.n, family.k), sense


def family_certificate(family: CliqueFamily, x: Biclique, y: Biclique) -> tuple[Weight, ...]:
    if family.kind is FamilyKind.MIN_PARTITION:
        return cert_min_family(x, y, family)
    return cert_union(x, y, family.n)


@dataclass(frozen=True)
class PairCertificate:
    x: Biclique
    y: Biclique
    weights: tuple[Weight, ...]
    value: Weight
    margin: Weight
    source: str = "construction"

    @property
    def certified(self) -> bool:
        return self.margin > 0


def certify_family(
    family: CliqueFamily, feasible: FeasibleSet | None = None, lp_fallback: bool = True
) -> list[PairCertificate]:
    """Build and verify the certificate of every member pair against the whole feasible set.

    The explicit 0/1 rule only ties for odd-k maximum pairs sharing ``s - 1``
    left vertices: ``(Ux | Uy, Vx & Vy)`` reaches the same weight. With
    ``lp_fallback`` such pairs get the optimal margin-LP certificate instead,
    marked ``source="lp"``.
    """
    sense = Sense.MIN if family.kind is FamilyKind.MIN_PARTITION else Sense.MAX
    if feasible is None:
        feasible, sense = family_feasible_set(family)
    n = family.n
    out = []
    for x, y in combinations(family.members, 2):
        xi, yi = feasible.index(x), feasible.index(y)
        c = family_certificate(family, x, y)
        source = "construction"
        margin = verify_certificate(c, xi, yi, feasible, sense)
        if margin <= 0 and lp_fallback:
            _, cert = cone_adjacent_margin(xi, yi, feasible, sense, Domain.ORTHANT)
            c, source = cert.c, "lp"
            margin = verify_certificate(c, xi, yi, feasible, sense)
        g = BipartiteGraph([c[i * n:(i + 1) * n] for i in range(n)])
        out.append(PairCertificate(x, y, tuple(c), weight_of(x, g), margin, source))
    return out
