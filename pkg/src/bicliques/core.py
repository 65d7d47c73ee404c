"""Core domain types: weighted bipartite graphs, bicliques and feasible sets.

Vertices are 0-based. Characteristic vectors use row-major layout, edge
``(i, j)`` sits at position ``i * n + j``.

Finite weights are :class:`fractions.Fraction`. The infinite weight is the
symbolic tag :data:`INF` (``math.inf``); it compares above every Fraction and
absorbs addition, which is all the arithmetic the solvers need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

INF = math.inf

Weight = Union[Fraction, float]


class BicliqueError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidBicliqueError(BicliqueError):
    pass


class ParameterError(BicliqueError):
    pass


class InstanceError(BicliqueError):
    pass


class Kind(str, Enum):
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"


class Sense(str, Enum):
    MAX = "max"
    MIN = "min"


def is_inf(w) -> bool:
    return isinstance(w, float) and w == INF


def as_weight(w) -> Weight:
    """Coerce ``w`` to an exact weight.

    Accepts ints, Fractions, strings ``"p/q"`` / ``"7"`` / ``"inf"`` and
    ``math.inf``. Finite floats are rejected, they are never exact enough.
    """
    if isinstance(w, Fraction):
        return w
    if isinstance(w, bool):
        raise InstanceError(f"boolean is not a weight: {w!r}")
    if isinstance(w, int):
        return Fraction(w)
    if isinstance(w, float):
        if w == INF:
            return INF
        raise InstanceError(f"floating-point weight {w!r} not allowed")
    if isinstance(w, str):
        s = w.strip().lower()
        if s in ("inf", "+inf", "infinity"):
            return INF
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceError(f"unparseable weight {w!r}") from exc
    raise InstanceError(f"unsupported weight type {type(w).__name__}")


def format_weight(w: Weight) -> str:
    if is_inf(w):
        return "inf"
    w = Fraction(w)
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True, order=True)
class Biclique:
    """A pair of vertex subsets, one per part. Both parts are non-empty."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __init__(self, u: Iterable[int], v: Iterable[int]):
        u = tuple(sorted(set(int(i) for i in u)))
        v = tuple(sorted(set(int(j) for j in v)))
        if not u or not v:
            raise InvalidBicliqueError("both parts of a biclique must be non-empty")
        if u[0] < 0 or v[0] < 0:
            raise InvalidBicliqueError("negative vertex index")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def order(self) -> int:
        return len(self.u) + len(self.v)

    def check(self, n: int) -> None:
        if self.u[-1] >= n or self.v[-1] >= n:
            raise InvalidBicliqueError(f"vertex index out of range for n={n}: {self}")

    def transpose(self) -> "Biclique":
        return Biclique(self.v, self.u)

    def __str__(self) -> str:
        return "u:{%s}|v:{%s}" % (",".join(map(str, self.u)), ",".join(map(str, self.v)))


def characteristic_vector(b: Biclique, n: int) -> tuple[int, ...]:
    """0/1 vector of length n*n with a one at ``i*n + j`` for every edge of ``b``."""
    b.check(n)
    bits = [0] * (n * n)
    for i in b.u:
        row = i * n
        for j in b.v:
            bits[row + j] = 1
    return tuple(bits)


@dataclass(frozen=True)
class BipartiteGraph:
    """Complete bipartite graph on n + n vertices with exact edge weights."""

    n: int
    weights: tuple[tuple[Weight, ...], ...]

    def __init__(self, weights: Sequence[Sequence]):
        rows = tuple(tuple(as_weight(w) for w in row) for row in weights)
        n = len(rows)
        if n == 0:
            raise InstanceError("graph must have at least one vertex per part")
        if any(len(r) != n for r in rows):
            raise InstanceError("weight matrix must be square n x n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", rows)

    @classmethod
    def constant(cls, n: int, w) -> "BipartiteGraph":
        return cls([[w] * n for _ in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Weight:
        i, j = ij
        return self.weights[i][j]

    def flat(self) -> tuple[Weight, ...]:
        return tuple(w for row in self.weights for w in row)

    @property
    def is_finite(self) -> bool:
        return not any(is_inf(w) for row in self.weights for w in row)

    @property
    def is_nonnegative(self) -> bool:
        return all(w >= 0 for row in self.weights for w in row)

    def negated(self) -> "BipartiteGraph":
        if not self.is_finite:
            raise InstanceError("cannot negate an instance with infinite weights")
        return BipartiteGraph([[-w for w in row] for row in self.weights])


def weight_of(b: Biclique, g: BipartiteGraph) -> Weight:
    """Total weight of the edges inside ``b``; ``INF`` if any of them is infinite."""
    b.check(g.n)
    total = Fraction(0)
    for i in b.u:
        row = g.weights[i]
        for j in b.v:
            w = row[j]
            if is_inf(w):
                return INF
            total += w
    return total


@dataclass(frozen=True)
class FeasibleSet:
    n: int
    k: int
    kind: Kind
    members: tuple[Biclique, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, idx: int) -> Biclique:
        return self.members[idx]

    @cached_property
    def _positions(self) -> dict[Biclique, int]:
        return {b: i for i, b in enumerate(self.members)}

    def index(self, b: Biclique) -> int:
        try:
            return self._positions[b]
        except KeyError:
            raise InvalidBicliqueError(f"{b} is not a member of this feasible set") from None

    @cached_property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(characteristic_vector(b, self.n) for b in self.members)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Characteristic vectors stacked as rows, dtype int8."""
        n = self.n
        out = np.zeros((len(self.members), n * n), dtype=np.int8)
        for r, b in enumerate(self.members):
            for i in b.u:
                out[r, [i * n + j for j in b.v]] = 1
        return out


def balanced_count(n: int, k: int) -> int:
    return math.comb(n, k) ** 2


def unbalanced_count(n: int, k: int) -> int:
    return sum(math.comb(n, a) * math.comb(n, k - a) for a in split_range(n, k))


def split_range(n: int, k: int) -> range:
    """Admissible left-part sizes ``a`` for bicliques on k vertices, both parts non-empty."""
    return range(max(1, k - n), min(n, k - 1) + 1)


def enumerate_balanced(n: int, k: int) -> FeasibleSet:
    if not 1 <= k <= n:
        raise ParameterError(f"balanced enumeration needs 1 <= k <= n, got n={n}, k={k}")
    subsets = list(combinations(range(n), k))
    members = tuple(Biclique(u, v) for u in subsets for v in subsets)
    return FeasibleSet(n, k, Kind.BALANCED, members)


def enumerate_unbalanced(n: int, k: int) -> FeasibleSet:
    if n < 1 or not 2 <= k <= 2 * n:
        raise ParameterError(f"unbalanced enumeration needs 2 <= k <= 2n, got n={n}, k={k}")
    members = [
        Biclique(u, v)
        for a in split_range(n, k)
        for u in combinations(range(n), a)
        for v in combinations(range(n), k - a)
    ]
    members.sort()
    return FeasibleSet(n, k, Kind.UNBALANCED, tuple(members))


def enumerate_feasible(n: int, k: int, kind: Kind) -> FeasibleSet:
    if Kind(kind) is Kind.BALANCED:
        return enumerate_balanced(n, k)
    return enumerate_unbalanced(n, k)


def scaled_integer_weights(weights: Sequence[Weight], inf_value: int | None = None) -> tuple[np.ndarray, int]:
    """Scale a rational weight vector to integers.

    Returns ``(ints, scale)`` with ``ints[e] == weights[e] * scale`` for finite
    entries. Infinite entries become ``inf_value`` (already in scaled units),
    or, when it is None, a value larger than twice the absolute sum of all
    finite scaled entries, so that any 0/1 vector touching an infinite entry
    outweighs any 0/1 vector that does not.
    """
    finite = [Fraction(w) for w in weights if not is_inf(w)]
    scale = math.lcm(*(w.denominator for w in finite)) if finite else 1
    ints = [int(w * scale) for w in finite]
    if inf_value is None:
        inf_value = 2 * sum(abs(x) for x in ints) + 1
    out = []
    it = iter(ints)
    for w in weights:
        out.append(inf_value if is_inf(w) else next(it))
    bound = sum(abs(x) for x in out)
    dtype = np.int64 if bound < 2**62 else object
    return np.array(out, dtype=dtype), scale


def evaluate_all(feasible: FeasibleSet, weights: Sequence[Weight]) -> tuple[np.ndarray, int, np.ndarray]:
    """Exact objective of every member of ``feasible`` at once.

    Returns ``(values, scale, infinite)``: ``values[r] / scale`` is the sum of
    the finite weights inside member ``r`` and ``infinite[r]`` tells whether it
    also contains an infinite edge (in which case its true value is ``INF``).
    """
    inf_mask = np.array([1 if is_inf(w) else 0 for w in weights], dtype=np.int64)
    finite = [Fraction(0) if is_inf(w) else w for w in weights]
    ints, scale = scaled_integer_weights(finite)
    mat = feasible.matrix
    values = mat.astype(object if ints.dtype == object else np.int64) @ ints
    infinite = (mat.astype(np.int64) @ inf_mask) > 0
    return values, scale, infinite
