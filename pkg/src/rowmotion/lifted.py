"""Piecewise-linear and birational rowmotion over exact rationals.

Points carry boundary parameters alpha and omega (the values attached to the
adjoined bottom and top elements).  All arithmetic is Fraction-exact; orbit
return is detected by exact equality.  Birational statistics with fractional
exponents stay in factored form and are compared after clearing exponent
denominators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .poset import CapExceededError, OrderIdeal, Poset, _bits
from .statistics import Statistic


@dataclass(frozen=True)
class PLPoint:
    poset: Poset
    values: tuple
    alpha: Fraction = Fraction(0)
    omega: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "omega", Fraction(self.omega))
        if len(self.values) != self.poset.n:
            raise ValueError("point length must equal the element count")

    def replace_value(self, p, v):
        vals = list(self.values)
        vals[p] = v
        return PLPoint(self.poset, vals, self.alpha, self.omega)


@dataclass(frozen=True)
class BPoint:
    poset: Poset
    values: tuple
    alpha: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "omega", Fraction(self.omega))
        if len(self.values) != self.poset.n:
            raise ValueError("point length must equal the element count")
        if self.alpha <= 0 or self.omega <= 0 or any(v <= 0 for v in self.values):
            raise ValueError("birational points must be strictly positive")

    def replace_value(self, p, v):
        vals = list(self.values)
        vals[p] = v
        return BPoint(self.poset, vals, self.alpha, self.omega)


def vertex_point(I: OrderIdeal, alpha=Fraction(0), omega=Fraction(1)) -> PLPoint:
    """Indicator of the complement of I; the combinatorial embedding."""
    P = I.poset
    vals = [Fraction(0) if I.mask >> p & 1 else Fraction(1) for p in range(P.n)]
    return PLPoint(P, vals, alpha, omega)


def _lower_values(pt, p):
    P = pt.poset
    dm = P.down_covers[p]
    if dm == 0:
        return (pt.alpha,)
    return tuple(pt.values[r] for r in _bits(dm))


def _upper_values(pt, p):
    P = pt.poset
    um = P.up_covers[p]
    if um == 0:
        return (pt.omega,)
    return tuple(pt.values[r] for r in _bits(um))


# -- piecewise-linear level ---------------------------------------------------------


def pl_toggle(pt: PLPoint, p: int) -> PLPoint:
    new = min(_upper_values(pt, p)) + max(_lower_values(pt, p)) - pt.values[p]
    return pt.replace_value(p, new)


def pl_rowmotion(pt: PLPoint) -> PLPoint:
    for p in reversed(pt.poset._linext):
        pt = pl_toggle(pt, p)
    return pt


def _sigma_order(P, sigma):
    from .dynamics import _check_rank_permutation

    sigma = _check_rank_permutation(P, sigma)
    order = []
    for i in reversed(sigma):
        order.extend(_bits(P.rank_mask(i)))
    return order


def pl_rowmotion_sigma(pt: PLPoint, sigma) -> PLPoint:
    for p in _sigma_order(pt.poset, sigma):
        pt = pl_toggle(pt, p)
    return pt


def pl_t_in(pt: PLPoint, p: int) -> Fraction:
    return pt.values[p] - max(_lower_values(pt, p))


def pl_t_out(pt: PLPoint, p: int) -> Fraction:
    return min(_upper_values(pt, p)) - pt.values[p]


def pl_t_signed(pt: PLPoint, p: int) -> Fraction:
    return pl_t_in(pt, p) - pl_t_out(pt, p)


# -- birational level ----------------------------------------------------------------


def b_toggle(pt: BPoint, p: int) -> BPoint:
    num = sum(_lower_values(pt, p))
    den = pt.values[p] * sum(1 / v for v in _upper_values(pt, p))
    return pt.replace_value(p, num / den)


def b_rowmotion(pt: BPoint) -> BPoint:
    for p in reversed(pt.poset._linext):
        pt = b_toggle(pt, p)
    return pt


def b_rowmotion_sigma(pt: BPoint, sigma) -> BPoint:
    for p in _sigma_order(pt.poset, sigma):
        pt = b_toggle(pt, p)
    return pt


def b_t_in(pt: BPoint, p: int) -> Fraction:
    return pt.values[p] / sum(_lower_values(pt, p))


def b_t_out(pt: BPoint, p: int) -> Fraction:
    return 1 / (pt.values[p] * sum(1 / v for v in _upper_values(pt, p)))


def b_t_ratio(pt: BPoint, p: int) -> Fraction:
    return b_t_in(pt, p) / b_t_out(pt, p)


def lifted_toggleability(pt, p: int, kind: str) -> Fraction:
    """T+/T-/signed at the level of the given point (PL or birational)."""
    table = {
        (PLPoint, "in"): pl_t_in,
        (PLPoint, "out"): pl_t_out,
        (PLPoint, "signed"): pl_t_signed,
        (BPoint, "in"): b_t_in,
        (BPoint, "out"): b_t_out,
        (BPoint, "signed"): b_t_ratio,
    }
    try:
        fn = table[(type(pt), kind)]
    except KeyError:
        raise ValueError(f"no lifted statistic for {type(pt).__name__}/{kind}")
    return fn(pt, p)


# -- lifting linear statistics ---------------------------------------------------------


@dataclass(frozen=True)
class LiftedStatistic:
    """Coefficients (a_p, a'_p, a''_p) on T+_p, T-_p and the ideal indicator."""

    poset: Poset
    coeff_in: tuple
    coeff_out: tuple
    coeff_ind: tuple
    label: str = ""

    def eval_pl(self, pt: PLPoint) -> Fraction:
        acc = Fraction(0)
        for p in range(self.poset.n):
            if self.coeff_in[p]:
                acc += self.coeff_in[p] * pl_t_in(pt, p)
            if self.coeff_out[p]:
                acc += self.coeff_out[p] * pl_t_out(pt, p)
            if self.coeff_ind[p]:
                acc += self.coeff_ind[p] * (pt.omega - pt.values[p])
        return acc

    def b_factors(self, pt: BPoint):
        """Factored form [(base, exponent), ...] of the birational value."""
        out = []
        for p in range(self.poset.n):
            if self.coeff_in[p]:
                out.append((b_t_in(pt, p), self.coeff_in[p]))
            if self.coeff_out[p]:
                out.append((b_t_out(pt, p), self.coeff_out[p]))
            if self.coeff_ind[p]:
                out.append((pt.omega / pt.values[p], self.coeff_ind[p]))
        return out


def lift_statistic(stat: Statistic, check_hypothesis: bool = True) -> LiftedStatistic:
    """Lift a linear statistic to the PL and birational levels.

    The constancy transfer is only guaranteed on posets where every element
    covers at most two elements and is covered by at most two, so other
    posets are refused.
    """
    if stat.combo is None:
        raise ValueError(
            "statistic has no toggle/indicator expansion; only linear "
            "combinations of T+, T-, and ideal indicators lift"
        )
    P = stat.poset
    if check_hypothesis:
        bad = [
            p
            for p in range(P.n)
            if bin(P.up_covers[p]).count("1") > 2
            or bin(P.down_covers[p]).count("1") > 2
        ]
        if bad:
            raise ValueError(
                f"lifting requires every element to cover and be covered by "
                f"at most two elements; violated at {bad}"
            )
    tin, tout, ind = stat.combo
    return LiftedStatistic(P, tin, tout, ind, label=stat.label)


def certificate_witness(stat: Statistic, decomposition) -> tuple:
    """The lifted statistic h = f - sum c_p T_p together with its constant.

    At the combinatorial level h equals the certificate constant identically,
    so its PL and birational lifts are constant as well.
    """
    lifted = lift_statistic(stat)
    c = decomposition.coeffs
    tin = tuple(a - cp for a, cp in zip(lifted.coeff_in, c))
    tout = tuple(a + cp for a, cp in zip(lifted.coeff_out, c))
    h = LiftedStatistic(stat.poset, tin, tout, lifted.coeff_ind,
                        label=f"{stat.label} - certificate part")
    return h, decomposition.constant


def check_pl_constant(h: LiftedStatistic, c: Fraction, pt: PLPoint) -> bool:
    return h.eval_pl(pt) == c * (pt.omega - pt.alpha)


def check_b_constant(h: LiftedStatistic, c: Fraction, pt: BPoint) -> bool:
    """Compare the factored product with (omega/alpha)^c after clearing
    exponent denominators."""
    factors = h.b_factors(pt)
    c = Fraction(c)
    scale = lcm(c.denominator, *(e.denominator for _, e in factors)) if factors else c.denominator
    lhs = Fraction(1)
    for base, e in factors:
        lhs *= base ** int(e * scale)
    rhs = (pt.omega / pt.alpha) ** int(c * scale)
    return lhs == rhs


# -- orbits and orbit laws --------------------------------------------------------------


def lifted_orbit(start, sigma=None, max_iter: int = 10_000):
    """Forward orbit of PL or birational rowmotion from `start`.

    Returns the orbit states; raises CapExceededError if the point does not
    return within max_iter steps (reported as inconclusive by callers).
    """
    if isinstance(start, PLPoint):
        step = pl_rowmotion if sigma is None else (lambda x: pl_rowmotion_sigma(x, sigma))
    else:
        step = b_rowmotion if sigma is None else (lambda x: b_rowmotion_sigma(x, sigma))
    states = [start]
    cur = step(start)
    while cur != start:
        if len(states) >= max_iter:
            raise CapExceededError(f"no return within {max_iter} iterations")
        states.append(cur)
        cur = step(cur)
    return states


@dataclass(frozen=True)
class LiftedOrbitReport:
    finite: bool
    period: int
    holds: object  # bool, or None when inconclusive
    lhs: object
    rhs: object


def orbit_homomesy_lifted(h: LiftedStatistic, c, start, sigma=None,
                          max_iter: int = 10_000) -> LiftedOrbitReport:
    """Verify the orbit sum law (PL) or orbit product law (birational).

    For a statistic with certificate constant c, the sum over a finite PL
    orbit is #O * c * (omega - alpha), and the product over a finite
    birational orbit is (omega/alpha)^(#O * c).
    """
    try:
        states = lifted_orbit(start, sigma=sigma, max_iter=max_iter)
    except CapExceededError:
        return LiftedOrbitReport(False, 0, None, None, None)
    c = Fraction(c)
    if isinstance(start, PLPoint):
        lhs = sum((h.eval_pl(pt) for pt in states), Fraction(0))
        rhs = len(states) * c * (start.omega - start.alpha)
        return LiftedOrbitReport(True, len(states), lhs == rhs, lhs, rhs)
    factors = []
    for pt in states:
        factors.extend(h.b_factors(pt))
    scale = lcm(c.denominator, *(e.denominator for _, e in factors)) if factors else c.denominator
    lhs = Fraction(1)
    for base, e in factors:
        lhs *= base ** int(e * scale)
    rhs = (start.omega / start.alpha) ** int(c * scale * len(states))
    return LiftedOrbitReport(True, len(states), lhs == rhs, lhs, rhs)


# -- sampling ------------------------------------------------------------------------


def random_fraction(rng: random.Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_pl_point(P: Poset, rng: random.Random, alpha=Fraction(0),
                    omega=Fraction(1), bound: int = 100) -> PLPoint:
    vals = [random_fraction(rng, bound) for _ in range(P.n)]
    return PLPoint(P, vals, alpha, omega)


def random_b_point(P: Poset, rng: random.Random, alpha=Fraction(1),
                   omega=Fraction(1), bound: int = 100) -> BPoint:
    vals = [random_fraction(rng, bound) for _ in range(P.n)]
    return BPoint(P, vals, alpha, omega)
