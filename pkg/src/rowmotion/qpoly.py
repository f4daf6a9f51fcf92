"""Exact arithmetic in Q[q] and its fraction field Q(q).

Polynomials are dense coefficient tuples of Fractions; rational functions
are kept normalized (coprime numerator/denominator, monic denominator) so
that equality is plain componentwise comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class Polynomial:
    """Dense univariate polynomial over Q; coeffs[k] multiplies q**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def q_power(cls, k):
        return cls((0,) * k + (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """Exact long division: (quotient, remainder) over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            if rem[k]:
                f = rem[k] / lead
                quot[k - dq] = f
                for j, c in enumerate(other.coeffs):
                    rem[j + k - dq] -= f * c
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def evaluate(self, z):
        z = z if isinstance(z, Fraction) else Fraction(z)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                parts.append(var if c == 1 else f"-{var}" if c == -1 else f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial((x,))
    return None


def _int_content(ints):
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
        if g == 1:
            break
    return g


def _to_primitive_int(p: Polynomial):
    """Integer coefficient list of p with content 1 (sign of leading kept)."""
    if p.is_zero():
        return []
    lcm = 1
    for c in p.coeffs:
        d = c.denominator
        lcm = lcm // _int_gcd(lcm, d) * d
    ints = [int(c * lcm) for c in p.coeffs]
    g = _int_content(ints)
    return [v // g for v in ints]


def _prem(a, b):
    """Pseudo-remainder of integer coefficient lists a, b (deg a >= deg b)."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        k = len(a) - 1
        coef = a[-1]
        a = [c * lead for c in a]
        for j in range(len(b)):
            a[j + k - db] -= coef * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd via a content-stripped pseudo-remainder sequence."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a, b = _to_primitive_int(f), _to_primitive_int(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        if r:
            c = _int_content(r)
            r = [v // c for v in r]
        a, b = b, r
    return Polynomial(a).monic()


class RationalFunction:
    """Element of Q(q): coprime numerator/denominator, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = Polynomial((1,)) if den is None else _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading()
        if lead != 1:
            num = Polynomial(tuple(c / lead for c in num.coeffs))
            den = Polynomial(tuple(c / lead for c in den.coeffs))
        self.num, self.den = num, den

    @classmethod
    def const(cls, c):
        return cls(Polynomial((c,)))

    @classmethod
    def q(cls):
        return cls(Polynomial((0, 1)))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == Polynomial((1,))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def evaluate(self, z):
        z = z if isinstance(z, Fraction) else Fraction(z)
        d = self.den.evaluate(z)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {z}")
        return self.num.evaluate(z) / d

    def complexity(self):
        """Degree proxy used for pivot selection in exact elimination."""
        return max(self.num.degree, 0) + max(self.den.degree, 0)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _coerce_poly(x):
    p = _as_poly(x)
    if p is None:
        raise TypeError(f"cannot build a polynomial from {x!r}")
    return p


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.const(x)
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    return None


RF_ZERO = RationalFunction.const(0)
RF_ONE = RationalFunction.const(1)


# -- q-numbers -------------------------------------------------------------------


def q_number(n: int) -> Polynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q-number of a negative integer")
    return Polynomial((1,) * n)


def q_factorial(n: int) -> Polynomial:
    out = Polynomial((1,))
    for k in range(1, n + 1):
        out = out * q_number(k)
    return out


def q_binomial(n: int, k: int) -> RationalFunction:
    """Gaussian binomial; always a polynomial in q, asserted on construction."""
    if not 0 <= k <= n:
        raise ValueError("require 0 <= k <= n")
    out = RationalFunction(q_factorial(n), q_factorial(k) * q_factorial(n - k))
    assert out.is_polynomial(), "q-binomial failed to reduce to a polynomial"
    return out


def rational_roots(p: Polynomial):
    """All rational roots of a nonzero polynomial, via the rational-root test."""
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    ints = _to_primitive_int(p)
    shift = 0
    while ints[shift] == 0:
        shift += 1
    roots = set()
    if shift:
        roots.add(Fraction(0))
        ints = ints[shift:]
    a0, an = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for pden in _divisors(an):
            for cand in (Fraction(pnum, pden), Fraction(-pnum, pden)):
                if cand not in roots and p.evaluate(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
