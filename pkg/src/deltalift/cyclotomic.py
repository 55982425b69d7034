"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are coefficient vectors modulo the n-th cyclotomic polynomial.
Orders 1 and 2 collapse to plain rationals.  This is a small dense
implementation; the orders used here stay modest (conductors <= a few
hundred), so no sparsity tricks are needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import divisors, moebius


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    # Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}
    num = [Fraction(1)]
    den = [Fraction(1)]
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        f = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]  # x^d - 1
        if mu == 1:
            num = _poly_mul(num, f)
        else:
            den = _poly_mul(den, f)
    q, r = _poly_divmod(num, den)
    assert all(x == 0 for x in r)
    return tuple(q)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
        db -= 1
    q = [Fraction(0)] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(x != 0 for x in a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - db
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i in range(db + 1):
            a[shift + i] -= coef * b[i]
        a.pop()
    if not a:
        a = [Fraction(0)]
    return q, a


def _poly_xgcd(a, b):
    """(g, u, v) with u*a + v*b = g over Q[x], g monic or zero."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while any(x != 0 for x in r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    lead = next((c for c in reversed(r0) if c != 0), Fraction(1))
    r0 = [c / lead for c in r0]
    s0 = [c / lead for c in s0]
    t0 = [c / lead for c in t0]
    return r0, s0, t0


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]


class CycScalar:
    """An element of Q(zeta_n), stored as coefficients mod Phi_n.

    n = 1 or 2 behaves as a plain rational. Mixed-order arithmetic lifts both
    operands into Q(zeta_lcm).
    """

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords):
        self.n = n
        deg = len(cyclotomic_poly(n)) - 1
        c = [Fraction(x) for x in coords]
        if len(c) > deg:
            c = _reduce_mod(c, cyclotomic_poly(n))
        c += [Fraction(0)] * (deg - len(c))
        self.coords = tuple(c)

    # -- constructors -----------------------------------------------------
    @staticmethod
    def from_rational(x) -> "CycScalar":
        return CycScalar(1, [Fraction(x)])

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CycScalar":
        power %= n
        deg = len(cyclotomic_poly(n)) - 1
        if power < deg:
            coords = [Fraction(0)] * power + [Fraction(1)]
            return CycScalar(n, coords)
        coords = [Fraction(0)] * power + [Fraction(1)]
        return CycScalar(n, coords)

    # -- coercion ----------------------------------------------------------
    def lift_to(self, m: int) -> "CycScalar":
        """Image under zeta_n -> zeta_m^(m/n); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only lift along divisibility")
        step = m // self.n
        out = CycScalar(m, [0])
        for i, c in enumerate(self.coords):
            if c != 0:
                out = out + CycScalar.zeta(m, i * step) * CycScalar(m, [c])
        return out

    @staticmethod
    def _common(a: "CycScalar", b: "CycScalar"):
        from math import gcd

        n = a.n * b.n // gcd(a.n, b.n)
        return a.lift_to(n), b.lift_to(n), n

    # -- ring ops ----------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, CycScalar):
            return other
        return CycScalar.from_rational(other)

    def __add__(self, other):
        a, b, n = CycScalar._common(self, self._wrap(other))
        return CycScalar(n, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.n, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        a, b, n = CycScalar._common(self, self._wrap(other))
        prod = _poly_mul(list(a.coords), list(b.coords))
        return CycScalar(n, _reduce_mod(prod, cyclotomic_poly(n)))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        phi = list(cyclotomic_poly(self.n))
        g, u, v = _poly_xgcd(list(self.coords), phi)
        if len([c for c in g if c != 0]) != 1 or g[0] == 0 or any(
            c != 0 for c in g[1:]
        ):
            raise ZeroDivisionError("not invertible")
        inv = [c / g[0] for c in u]
        return CycScalar(self.n, _reduce_mod(inv, cyclotomic_poly(self.n)))

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycScalar.from_rational(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def conjugate(self) -> "CycScalar":
        """Complex conjugation zeta -> zeta^{-1}."""
        out = CycScalar(self.n, [0])
        for i, c in enumerate(self.coords):
            if c != 0:
                out = out + CycScalar.zeta(self.n, -i) * CycScalar(self.n, [c])
        return out

    def __eq__(self, other):
        if not isinstance(other, CycScalar):
            other = CycScalar.from_rational(other)
        a, b, _ = CycScalar._common(self, other)
        return a.coords == b.coords

    def __hash__(self):
        return hash((self.n, self.coords))

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = [
            ("" if c == 1 and i else str(c)) + (f"*z{self.n}^{i}" if i else "")
            for i, c in enumerate(self.coords)
            if c != 0
        ]
        return " + ".join(terms) if terms else "0"

    def to_complex(self, mp=None):
        """Numeric value with zeta_n = exp(2 pi i / n); mpmath context optional."""
        if mp is None:
            import mpmath as mp  # noqa: F811
        z = mp.exp(2j * mp.pi / self.n)
        return sum(mp.mpf(c.numerator) / mp.mpf(c.denominator) * z**i
                   for i, c in enumerate(self.coords))


def _reduce_mod(poly, phi):
    _, r = _poly_divmod(list(poly), list(phi))
    deg = len(phi) - 1
    r += [Fraction(0)] * (deg - len(r))
    return r[:deg]
