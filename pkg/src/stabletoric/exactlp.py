"""Exact rational linear programming: feasibility of nonnegative combinations,
solved by a dense phase-1 simplex over fractions with Bland's rule (no cycling,
no floating point anywhere)."""

from __future__ import annotations

from fractions import Fraction


def nonneg_solve(columns, target):
    """Find rational lambda >= 0 with  sum_j lambda_j * columns[j] = target,
    or return None when infeasible.

    ``columns`` is a list of integer vectors (the generators), ``target`` an
    integer/rational vector of the same length.  The returned list has one
    Fraction per column.
    """
    m = len(columns)
    if m == 0:
        return [] if all(x == 0 for x in target) else None
    dim = len(target)
    if any(len(c) != dim for c in columns):
        raise ValueError("column/target dimension mismatch")

    # rows of the tableau: one equation per coordinate, b made nonnegative
    rows = []
    rhs = []
    for i in range(dim):
        coeffs = [Fraction(columns[j][i]) for j in range(m)]
        b = Fraction(target[i])
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
        rows.append(coeffs)
        rhs.append(b)

    # phase 1: artificial variable per row, minimize their sum
    nvar = m + dim
    tab = []
    for i in range(dim):
        row = rows[i] + [Fraction(1) if k == i else Fraction(0) for k in range(dim)]
        row.append(rhs[i])
        tab.append(row)
    basis = [m + i for i in range(dim)]

    # objective row: cost 1 on artificials; store negated reduced costs
    obj = [Fraction(0)] * (nvar + 1)
    for i in range(dim):
        for j in range(nvar + 1):
            obj[j] -= tab[i][j]
    for i in range(dim):
        obj[m + i] += 1  # artificial costs cancel against their unit columns

    while True:
        enter = next((j for j in range(nvar) if obj[j] < 0), None)
        if enter is None:
            break
        ratio = None
        leave = None
        for i in range(dim):
            a = tab[i][enter]
            if a > 0:
                r = tab[i][nvar] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-1 objective unbounded; input malformed")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(dim):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter

    if -obj[nvar] != 0:  # minimum of artificial sum
        return None
    lam = [Fraction(0)] * m
    for i, bv in enumerate(basis):
        if bv < m:
            lam[bv] = tab[i][nvar]
        elif tab[i][nvar] != 0:
            return None  # basic artificial at a nonzero level
    return lam


def cone_feasible(columns, target) -> bool:
    """True iff target lies in the rational cone spanned by the columns."""
    return nonneg_solve(columns, target) is not None
