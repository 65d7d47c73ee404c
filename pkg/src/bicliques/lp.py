"""Exact rational linear programming: two-phase primal simplex with Bland's rule.

Solves::

    maximize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x >= 0

over :class:`fractions.Fraction`. Bland's smallest-index rule is used both for
the entering and leaving variable, which rules out cycling on the highly
degenerate systems produced by the adjacency tests. Rows are stored sparsely
as ``{column: coefficient}`` dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None
    pivots: int = 0

    @property
    def success(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, rows: list[dict[int, Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.obj: dict[int, Fraction] = {}
        self.obj_value = _ZERO
        self.pivots = 0

    def set_objective(self, cost: dict[int, Fraction]) -> None:
        # reduced costs r_j = c_j - c_B B^-1 A_j; objective value c_B x_B
        obj = dict(cost)
        value = _ZERO
        for r, b in enumerate(self.basis):
            cb = cost.get(b, _ZERO)
            if cb:
                value += cb * self.rhs[r]
                for j, a in self.rows[r].items():
                    nv = obj.get(j, _ZERO) - cb * a
                    if nv:
                        obj[j] = nv
                    else:
                        obj.pop(j, None)
        for b in self.basis:
            obj.pop(b, None)
        self.obj = obj
        self.obj_value = value

    def pivot(self, r: int, j: int) -> None:
        prow = self.rows[r]
        p = prow[j]
        if p != 1:
            prow = {k: v / p for k, v in prow.items()}
            self.rows[r] = prow
            self.rhs[r] /= p
        prhs = self.rhs[r]
        items = list(prow.items())
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row.get(j)
            if f is None:
                continue
            for k, v in items:
                nv = row.get(k, _ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    del row[k]
            if prhs:
                self.rhs[i] -= f * prhs
        f = self.obj.get(j)
        if f is not None:
            obj = self.obj
            for k, v in items:
                nv = obj.get(k, _ZERO) - f * v
                if nv:
                    obj[k] = nv
                else:
                    del obj[k]
            self.obj_value += f * prhs
        self.basis[r] = j
        self.pivots += 1

    def run(self, allowed: int) -> str:
        """Maximize the current objective; columns >= ``allowed`` never enter."""
        while True:
            entering = min((j for j, v in self.obj.items() if v > 0 and j < allowed), default=None)
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)


def _frac_row(row) -> dict[int, Fraction]:
    out = {}
    for j, a in enumerate(row):
        if a:
            out[j] = Fraction(a)
    return out


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximize ``c . x`` exactly. Dense row sequences or ``{col: coef}`` dicts are accepted."""
    nvar = len(c)
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")

    def sparse(row):
        if isinstance(row, dict):
            return {j: Fraction(a) for j, a in row.items() if a}
        return _frac_row(row)

    rows: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    needs_art: list[int] = []
    nslack = len(A_ub)
    for r, (row, b) in enumerate(zip(A_ub, b_ub)):
        d = sparse(row)
        b = Fraction(b)
        s = nvar + r
        if b >= 0:
            d[s] = Fraction(1)
            basis.append(s)
        else:
            d = {j: -a for j, a in d.items()}
            d[s] = Fraction(-1)
            b = -b
            basis.append(-1)
            needs_art.append(len(rows))
        rows.append(d)
        rhs.append(b)
    for row, b in zip(A_eq, b_eq):
        d = sparse(row)
        b = Fraction(b)
        if b < 0:
            d = {j: -a for j, a in d.items()}
            b = -b
        basis.append(-1)
        needs_art.append(len(rows))
        rows.append(d)
        rhs.append(b)

    first_art = nvar + nslack
    for t, r in enumerate(needs_art):
        col = first_art + t
        rows[r][col] = Fraction(1)
        basis[r] = col
    tab = _Tableau(rows, rhs, basis)

    if needs_art:
        tab.set_objective({first_art + t: Fraction(-1) for t in range(len(needs_art))})
        tab.run(first_art + len(needs_art))
        if tab.obj_value < 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out of the basis, dropping redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= first_art:
                col = min((j for j in tab.rows[r] if j < first_art), default=None)
                if col is None:
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, col)
            r += 1
        for row in tab.rows:
            for j in [j for j in row if j >= first_art]:
                del row[j]

    tab.set_objective({j: Fraction(a) for j, a in enumerate(c) if a})
    status = tab.run(first_art)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = [_ZERO] * nvar
    for r, b in enumerate(tab.basis):
        if b < nvar:
            x[b] = tab.rhs[r]
    return LPResult(OPTIMAL, x, tab.obj_value, tab.pivots)


def is_feasible(A_eq: Sequence[Sequence], b_eq: Sequence, nvar: int) -> bool:
    """Whether ``{x >= 0 : A_eq x = b_eq}`` is non-empty."""
    return linprog([0] * nvar, A_eq=A_eq, b_eq=b_eq).status != INFEASIBLE
