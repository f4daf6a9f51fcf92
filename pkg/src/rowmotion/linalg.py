"""Exact linear algebra over Q and Q(q).

The rational path scales rows to integers and eliminates fraction-free
(cross-multiplication with per-row content stripping), so intermediate
entries stay integral.  The Q(q) path eliminates in the fraction field with
gcd-normalized rational functions and picks lowest-degree pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm

from .qpoly import Polynomial, RationalFunction, RF_ONE, RF_ZERO


# -- integer echelon over Q -------------------------------------------------------


def _scale_row_to_int(row):
    lcm = 1
    for x in row:
        if isinstance(x, Fraction):
            lcm = _int_lcm(lcm, x.denominator)
    out = []
    for x in row:
        if isinstance(x, Fraction):
            out.append(int(x * lcm))
        else:
            out.append(int(x) * lcm)
    return out


def _strip_content(row):
    g = 0
    for v in row:
        g = _int_gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        row = [v // g for v in row]
    return row


class IntEchelon:
    """Incremental integer row echelon with content-stripped rows."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot column -> integer row

    def reduce(self, row):
        """Reduce a row against the current basis; returns the residue."""
        row = _scale_row_to_int(row)
        for c in sorted(self.rows):
            if row[c]:
                piv = self.rows[c]
                a, b = piv[c], row[c]
                g = _int_gcd(a, b)
                fa, fb = a // g, b // g
                row = [fa * x - fb * y for x, y in zip(row, piv)]
                row = _strip_content(row)
        return row

    def add(self, row):
        """Insert a row; returns its pivot column or None if dependent."""
        row = self.reduce(row)
        for c, v in enumerate(row):
            if v:
                self.rows[c] = row
                return c
        return None

    @property
    def rank(self):
        return len(self.rows)


def rank_rational(rows) -> int:
    if not rows:
        return 0
    ech = IntEchelon(len(rows[0]))
    for row in rows:
        ech.add(list(row))
    return ech.rank


def solve_exact(columns, rhs):
    """Solve sum_j x_j * columns[j] = rhs exactly over Q.

    Requires the columns to be linearly independent.  Returns the unique
    solution as Fractions, or None when the system is inconsistent.
    """
    k = len(columns)
    m = len(rhs)
    ech = IntEchelon(k + 1)
    pivots_a = 0
    kept = []
    for i in range(m):
        row = [columns[j][i] for j in range(k)] + [rhs[i]]
        c = ech.add(row)
        if c is None:
            continue
        if c == k:
            return None  # 0 = nonzero
        pivots_a += 1
        kept.append(i)
        if pivots_a == k:
            break
    if pivots_a < k:
        raise ValueError("columns are linearly dependent")
    sol = [Fraction(0)] * k
    for c in sorted(ech.rows, reverse=True):
        row = ech.rows[c]
        acc = Fraction(row[k])
        for j in range(c + 1, k):
            acc -= row[j] * sol[j]
        sol[c] = acc / row[c]
    # the echelon only saw a spanning prefix; verify against every row
    for i in range(m):
        acc = Fraction(0)
        for j in range(k):
            v = columns[j][i]
            if v:
                acc += sol[j] * v
        if acc != rhs[i]:
            return None
    return sol


# -- elimination over Q(q) ----------------------------------------------------------


class RFEchelon:
    """Incremental echelon over Q(q) with monic pivots."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    def reduce(self, row):
        for c in sorted(self.rows):
            if row[c]:
                piv = self.rows[c]
                f = row[c]
                row = [x - f * y for x, y in zip(row, piv)]
        return row

    def add(self, row):
        row = self.reduce(row)
        pivot = None
        for c, v in enumerate(row):
            if v:
                pivot = c
                break
        if pivot is None:
            return None
        inv = RF_ONE / row[pivot]
        row = [x * inv for x in row]
        self.rows[pivot] = row
        return pivot

    @property
    def rank(self):
        return len(self.rows)


def solve_exact_rf(columns, rhs, verify=True):
    """Solve over Q(q); mirrors solve_exact with RationalFunction scalars.

    With verify=False the solution of a full-rank row prefix is returned
    unchecked; the caller must confirm it against every row (sound because
    the columns are independent, so a solution is unique if one exists).
    """
    k = len(columns)
    m = len(rhs)
    ech = RFEchelon(k + 1)
    pivots_a = 0
    for i in range(m):
        row = [columns[j][i] for j in range(k)] + [rhs[i]]
        c = ech.add(row)
        if c is None:
            continue
        if c == k:
            return None
        pivots_a += 1
        if pivots_a == k:
            break
    if pivots_a < k:
        raise ValueError("columns are linearly dependent")
    sol = [RF_ZERO] * k
    for c in sorted(ech.rows, reverse=True):
        row = ech.rows[c]
        acc = row[k]
        for j in range(c + 1, k):
            if row[j]:
                acc = acc - row[j] * sol[j]
        sol[c] = acc
    if verify:
        for i in range(m):
            acc = RF_ZERO
            for j in range(k):
                v = columns[j][i]
                if v:
                    acc = acc + sol[j] * v
            if acc != rhs[i]:
                return None
    return sol


def rank_poly_matrix(rows) -> int:
    """Rank over Q(q) of a matrix of Polynomial entries.

    Exact via specialization: any r x r minor has q-degree at most the sum of
    the r largest per-row entry degrees, so evaluating at more integer points
    than that bound and taking the maximum integer rank is exact.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    row_deg = sorted(
        (max((max(e.degree, 0) for e in r), default=0) for r in rows),
        reverse=True,
    )
    bound = sum(row_deg[: min(len(rows), ncols)])
    best = 0
    for z in range(1, bound + 2):
        zf = Fraction(z)
        num_rows = [[e.evaluate(zf) for e in r] for r in rows]
        best = max(best, rank_rational(num_rows))
    return best


# -- subspace arithmetic over Q -------------------------------------------------------


def null_space_basis(equations, nvars):
    """Basis of {z : row . z = 0 for every equation row}, over Q."""
    ech = IntEchelon(nvars)
    for row in equations:
        ech.add(list(row))
    pivots = sorted(ech.rows)
    free = [c for c in range(nvars) if c not in ech.rows]
    basis = []
    for f in free:
        z = [Fraction(0)] * nvars
        z[f] = Fraction(1)
        for c in reversed(pivots):
            row = ech.rows[c]
            acc = Fraction(0)
            for j in range(c + 1, nvars):
                if row[j] and z[j]:
                    acc += row[j] * z[j]
            z[c] = -acc / row[c]
        basis.append(z)
    return basis


def span_basis(vectors):
    """An independent subset spanning the same space."""
    if not vectors:
        return []
    ech = IntEchelon(len(vectors[0]))
    out = []
    for v in vectors:
        if ech.add(list(v)) is not None:
            out.append(list(v))
    return out


def intersect_spans(abasis, bbasis):
    """Basis of span(abasis) & span(bbasis)."""
    if not abasis or not bbasis:
        return []
    dim = len(abasis[0])
    # x = sum a_i A_i = sum b_j B_j: one equation per coordinate
    equations = []
    for k in range(dim):
        equations.append(
            [v[k] for v in abasis] + [-v[k] for v in bbasis]
        )
    combos = null_space_basis(equations, len(abasis) + len(bbasis))
    vecs = []
    for combo in combos:
        x = [Fraction(0)] * dim
        for i, v in enumerate(abasis):
            if combo[i]:
                for k in range(dim):
                    x[k] += combo[i] * v[k]
        vecs.append(x)
    return span_basis(vecs)
