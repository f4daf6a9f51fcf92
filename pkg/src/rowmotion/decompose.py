"""Exact decomposition of statistics as constant + signed-toggleability span.

A Decomposition is the certificate f = c + sum_p c_p T_p (or its q-analogue
with T^q_p over Q(q)).  Every returned certificate is verified entrywise by
exact reconstruction before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    intersect_spans,
    null_space_basis,
    rank_rational,
    solve_exact,
    solve_exact_rf,
    span_basis,
)
from .poset import CapExceededError, Poset
from .qpoly import (
    Polynomial,
    RationalFunction,
    q_binomial,
    q_factorial,
    q_number,
    rational_roots,
)
from .statistics import QRATIONAL, RATIONAL, Statistic, t_in, t_out, t_q, t_signed

__all__ = [
    "Decomposition",
    "decompose",
    "q_decompose",
    "verify_independence",
    "toggleability_space_dims",
    "antichain_span_dim",
    "q_number",
    "q_factorial",
    "q_binomial",
]


@dataclass(frozen=True)
class Decomposition:
    """Certificate f = constant + sum_p coeffs[p] * T_p (or T^q_p)."""

    poset: Poset
    constant: object
    coeffs: tuple
    kind: str

    def reconstruction(self):
        """The statistic vector c + sum_p c_p T_p, recomputed from scratch."""
        P = self.poset
        out = []
        for mask in P.ideal_masks():
            acc = self.constant
            for p in range(P.n):
                c = self.coeffs[p]
                if not c:
                    continue
                if mask >> p & 1:
                    if P.up_covers[p] & mask == 0:  # toggle-out
                        if self.kind == QRATIONAL:
                            acc = acc - c * RationalFunction.q()
                        else:
                            acc = acc - c
                else:
                    if P.down_covers[p] & mask == P.down_covers[p]:  # toggle-in
                        acc = acc + c
            out.append(acc)
        return tuple(out)

    def to_json_dict(self):
        if self.kind == RATIONAL:
            enc = _frac_str
            cst = enc(self.constant)
        else:
            enc = _rf_json
            cst = enc(self.constant)
        return {
            "kind": self.kind,
            "constant": cst,
            "coeffs": {str(p): enc(c) for p, c in enumerate(self.coeffs)},
            "verified": True,
        }


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _rf_json(x: RationalFunction):
    return {
        "num": [_frac_str(c) for c in x.num.coeffs],
        "den": [_frac_str(c) for c in x.den.coeffs],
    }


def decompose(P: Poset, f: Statistic):
    """Unique certificate f = c + sum c_p T_p over Q, or None if f is not in
    the span.  The certificate is verified by exact reconstruction."""
    if f.kind != RATIONAL:
        raise ValueError("decompose expects a rational-valued statistic")
    if f.poset is not P:
        raise ValueError("statistic lives on a different poset")
    masks = P.ideal_masks()
    ones = [Fraction(1)] * len(masks)
    columns = [ones] + [t_signed(P, p).values for p in range(P.n)]
    sol = solve_exact(columns, list(f.values))
    if sol is None:
        return None
    dec = Decomposition(P, sol[0], tuple(sol[1:]), RATIONAL)
    assert dec.reconstruction() == f.values, "certificate failed verification"
    return dec


def q_decompose(P: Poset, f: Statistic):
    """Certificate f = c(q) + sum c_p(q) T^q_p over Q(q), or None.

    The input is a rational-valued statistic viewed inside Q(q).  Returned
    coefficients are asserted to have no poles at any nonnegative rational
    (their denominators have no nonnegative rational roots and are positive
    at sampled points), which is what makes every specialization q := r/s
    legal.
    """
    if f.poset is not P:
        raise ValueError("statistic lives on a different poset")
    fq = f.as_q()
    masks = P.ideal_masks()
    one_rf = RationalFunction.const(1)
    ones = [one_rf] * len(masks)
    columns = [ones] + [t_q(P, p).values for p in range(P.n)]
    sol = solve_exact_rf(columns, list(fq.values), verify=False)
    if sol is None:
        return None
    if not _verify_q_certificate(P, fq, sol):
        return None
    dec = Decomposition(P, sol[0], tuple(sol[1:]), QRATIONAL)
    for c in (dec.constant, *dec.coeffs):
        _assert_no_nonnegative_pole(c)
    return dec


def _verify_q_certificate(P, fq, sol):
    """Exact reconstruction check, cleared to a polynomial identity.

    With h(q) the product of all coefficient denominators, verifying
    h*f(I) = h*c + sum_p (h*c_p) * T^q_p(I) entrywise over Q[q] is
    equivalent to the rational-function identity and avoids per-entry gcds.
    """
    from .qpoly import poly_gcd

    h = Polynomial((1,))
    for c in sol:
        if c.den.degree > 0:
            h = h.exact_div(poly_gcd(h, c.den)) * c.den
    cleared = [c.num * h.exact_div(c.den) for c in sol]
    qpow = Polynomial((0, 1))
    for i, mask in enumerate(P.ideal_masks()):
        acc = cleared[0]
        for p in range(P.n):
            cp = cleared[p + 1]
            if cp.is_zero():
                continue
            if mask >> p & 1:
                if P.up_covers[p] & mask == 0:
                    acc = acc - cp * qpow
            elif P.down_covers[p] & mask == P.down_covers[p]:
                acc = acc + cp
        target = fq.values[i]
        if acc * target.den != target.num * h:
            return False
    return True


def _assert_no_nonnegative_pole(c: RationalFunction):
    den = c.den
    if den.degree <= 0:
        return
    roots = rational_roots(den)
    assert all(r < 0 for r in roots), f"denominator {den} has a root >= 0"
    for z in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)):
        assert den.evaluate(z) > 0, f"denominator {den} not positive at q={z}"


def verify_independence(P: Poset, q_value) -> bool:
    """Exact rank check: {1} and the T^q_p at a fixed q >= 0 are independent."""
    q_value = Fraction(q_value)
    if q_value < 0:
        raise ValueError("independence is only guaranteed for q >= 0")
    masks = P.ideal_masks()
    rows = [[Fraction(1)] * len(masks)]
    for p in range(P.n):
        row = []
        for mask in masks:
            if mask >> p & 1:
                row.append(-q_value if P.up_covers[p] & mask == 0 else Fraction(0))
            else:
                addable = P.down_covers[p] & mask == P.down_covers[p]
                row.append(Fraction(1) if addable else Fraction(0))
        rows.append(row)
    return rank_rational(rows) == P.n + 1


def toggleability_space_dims(P: Poset) -> dict:
    """Dimensions of {f = const mod toggleability} intersected with the spans
    of the antichain indicators (dim_A) and ideal indicators (dim_I), plus
    their q-analogues.

    All four spaces consist of rational-coefficient combinations of the
    observables.  For the q-analogues, membership of a rational vector in the
    Q(q)-span of {1, T^q_p} is decided exactly by specialization: the
    defining minors have q-degree at most n+1, so membership at n+2 distinct
    nonnegative integers (where the specialized columns stay independent) is
    equivalent to membership over Q(q).
    """
    masks = P.ideal_masks()
    nideals = len(masks)
    ones = [1] * nideals
    t_rows = [t_signed(P, p).values for p in range(P.n)]
    out_rows = [t_out(P, p).values for p in range(P.n)]
    ind_rows = []
    for p in range(P.n):
        ind_rows.append([1 if m >> p & 1 else 0 for m in masks])

    base = [ones] + t_rows
    rank_m = rank_rational(base)
    dim_a = P.n - (rank_rational(base + out_rows) - rank_m)
    dim_i = P.n - (rank_rational(base + ind_rows) - rank_m)

    tin_rows = [t_in(P, p).values for p in range(P.n)]

    def q_dim(obs_rows):
        space = None
        for z in range(P.n + 2):
            zf = Fraction(z)
            cols = [ones] + [
                [a - zf * b for a, b in zip(tin_rows[p], out_rows[p])]
                for p in range(P.n)
            ]
            # x feasible at q=z iff [cols | -obs] has a null vector over x
            equations = []
            for i in range(nideals):
                equations.append(
                    [col[i] for col in cols] + [-row[i] for row in obs_rows]
                )
            nv = len(cols) + len(obs_rows)
            basis = null_space_basis(equations, nv)
            proj = span_basis([v[len(cols):] for v in basis])
            space = proj if space is None else intersect_spans(space, proj)
            if not space:
                return 0
        return len(space)

    return {
        "dim_A": dim_a,
        "dim_I": dim_i,
        "dim_A_q": q_dim(out_rows),
        "dim_I_q": q_dim(ind_rows),
    }


def antichain_span_dim(P: Poset, cap: int = 1000) -> int:
    """Dimension of the span of the antichain toggleability statistics T_A."""
    masks = P.ideal_masks()
    if len(masks) > cap:
        raise CapExceededError(f"antichain count {len(masks)} exceeds cap {cap}")
    anti = [P.max_of_ideal_mask(m) for m in masks]  # all antichains, via max(I)
    rows = []
    for am in anti:
        row = []
        for mask in masks:
            tin = int(P.min_complement_mask(mask) & am == am)
            tout = int(P.max_of_ideal_mask(mask) & am == am)
            row.append(tin - tout)
        rows.append(row)
    return rank_rational(rows)
