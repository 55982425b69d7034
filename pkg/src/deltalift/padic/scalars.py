"""Finite-precision p-adic scalars with explicit precision bookkeeping.

A PadicScalar holds a value known modulo p^prec.  Operations never claim
more precision than their inputs support; division by non-units shifts the
precision down and is tracked.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import valuation


@dataclass(frozen=True)
class PadicScalar:
    p: int
    value: int  # canonical representative in [0, p^prec)
    prec: int   # value is known mod p^prec

    @staticmethod
    def make(p: int, value: int, prec: int) -> "PadicScalar":
        if prec <= 0:
            return PadicScalar(p, 0, max(prec, 0))
        return PadicScalar(p, value % p**prec, prec)

    @staticmethod
    def from_rational(p: int, num: int, den: int, prec: int) -> "PadicScalar":
        vden = valuation(den, p) if den else 0
        if den == 0:
            raise ZeroDivisionError
        if vden:
            raise ValueError("denominator not a p-adic integer unit part")
        inv = pow(den % p**prec, -1, p**prec)
        return PadicScalar.make(p, num * inv, prec)

    @property
    def valuation(self) -> int:
        if self.value == 0:
            return self.prec  # >= prec, only a lower bound
        return valuation(self.value, self.p)

    def is_zero(self) -> bool:
        """Indistinguishable from zero at the working precision."""
        return self.value % self.p**self.prec == 0

    def _common(self, other):
        if not isinstance(other, PadicScalar):
            other = PadicScalar.make(self.p, other, self.prec)
        if other.p != self.p:
            raise ValueError("mixed primes")
        return other

    def __add__(self, other):
        o = self._common(other)
        prec = min(self.prec, o.prec)
        return PadicScalar.make(self.p, self.value + o.value, prec)

    __radd__ = __add__

    def __neg__(self):
        return PadicScalar.make(self.p, -self.value, self.prec)

    def __sub__(self, other):
        return self + (-self._common(other))

    def __rsub__(self, other):
        return self._common(other) - self

    def __mul__(self, other):
        o = self._common(other)
        # prec of the product accounts for valuations amplifying precision
        prec = min(
            self.prec + min(o.valuation, o.prec),
            o.prec + min(self.valuation, self.prec),
        )
        prec = min(prec, self.prec + o.prec)
        return PadicScalar.make(self.p, self.value * o.value, prec)

    __rmul__ = __mul__

    def unit_inverse(self):
        if self.valuation != 0:
            raise ZeroDivisionError("not a unit")
        inv = pow(self.value, -1, self.p**self.prec)
        return PadicScalar.make(self.p, inv, self.prec)

    def __truediv__(self, other):
        o = self._common(other)
        v = o.valuation
        if v >= o.prec:
            raise ZeroDivisionError("division by (numerical) zero")
        if v == 0:
            return self * o.unit_inverse()
        sv = self.valuation
        if sv < v:
            raise ValueError("quotient is not a p-adic integer")
        p = self.p
        prec = min(self.prec, o.prec) - v
        num = self.value // p**v
        den = o.value // p**v
        inv = pow(den % p**prec, -1, p**prec)
        return PadicScalar.make(p, num * inv, prec)

    def congruent(self, other, prec: int | None = None) -> bool:
        o = self._common(other)
        m = min(self.prec, o.prec)
        if prec is not None:
            if prec > m:
                raise ValueError(f"claimed precision {prec} exceeds known {m}")
            m = prec
        return (self.value - o.value) % self.p**m == 0

    def __repr__(self):
        return f"{self.value} + O({self.p}^{self.prec})"


def teichmuller(p: int, a: int, prec: int) -> int:
    """The Teichmuller representative of a mod p^prec (a a unit mod p)."""
    mod = p**prec
    x = a % mod
    for _ in range(prec + 2):
        x = pow(x, p, mod)
    return x


def padic_log_unit_arg(p: int, u: int, prec: int) -> int:
    """log(u) mod p^prec for u = 1 mod p, as an integer representative.

    The canonical representative of x = u - 1 is divisible by p as an
    integer, so x^j is divisible by p^j and the series terms x^j / j are
    computed by exact integer division at the p-part of j.
    """
    B = prec + 4
    mod = p**B
    x = (u - 1) % mod
    if x % p:
        raise ValueError("argument must be 1 mod p")
    total = 0
    xj = 1
    j = 0
    while True:
        j += 1
        xj = xj * x % mod
        vj = _vp_int(j, p)
        if j - vj > prec + 2 or j >= B:
            break
        t = xj
        if vj:
            assert t % p**vj == 0
            t //= p**vj
        t = t * pow(j // p**vj, -1, mod) % mod
        if j % 2 == 0:
            t = -t
        total = (total + t) % mod
    return total % p**prec


def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def log_over_log1p(p: int, v: int, prec: int) -> int:
    """l(v) = log<v> / log(1+p) mod p^prec, for a unit v.

    <v> = v / omega(v) is 1 mod p, and log(1+p) has valuation 1, so the
    quotient is a p-adic integer.
    """
    mod = p ** (prec + 2)
    om = teichmuller(p, v, prec + 2)
    vv = v % mod * pow(om, -1, mod) % mod
    num = padic_log_unit_arg(p, vv, prec + 1)  # v_p >= 1
    den = padic_log_unit_arg(p, 1 + p, prec + 1)
    assert num % p == 0 and den % p == 0 and (den // p) % p != 0
    return (num // p) * pow(den // p, -1, p**prec) % p**prec
