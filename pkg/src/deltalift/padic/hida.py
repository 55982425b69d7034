"""Ordinary p-stabilization and finite Hida-family data."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import kronecker, primes_up_to, valuation
from ..modsym import EigenformData


def p_stabilize(f: EigenformData, p: int, prec: int):
    """Unit and non-unit roots of X^2 - a_p X + chi^2(p) p^(2k-1), Hensel-refined.

    Returns (alpha, beta, prec) as integers mod p^prec; requires a_p to be
    a p-adic unit (ordinarity).  For forms already new at p (p | level) the
    pair is (a_p, 0).
    """
    if f.level % p == 0:
        ap = f.ap(p)
        if ap.denominator % p == 0 or ap.numerator % p == 0:
            raise ValueError("not ordinary at p")
        mod = p**prec
        return int(ap) % mod, 0, prec
    ap = f.ap(p)
    if ap.numerator % p == 0:
        raise ValueError("not ordinary at p")
    mod = p**prec
    a = int(ap) % mod
    c = p ** (f.weight - 1) % mod
    x = a % mod  # alpha = a_p mod p
    for _ in range(prec + 2):
        fx = (x * x - a * x + c) % mod
        dfx = (2 * x - a) % mod
        x = (x - fx * pow(dfx, -1, mod)) % mod
    alpha = x
    # beta = p^(2k-1)/alpha: valuation 2k-1
    beta = c * pow(alpha, -1, mod) % mod
    return alpha, beta, prec


@dataclass(frozen=True)
class ClassicalPoint:
    """A classical point of the metaplectic weight cover.

    `k` determines the half-integral weight k + 1/2 and the integral weight
    2k of the underlying form; the point lies on the branch r0 iff
    k = r0 mod (p-1), else on the complementary branch r0 + (p-1)/2.
    """

    k: int
    label: str = ""

    def on_branch(self, r0: int, p: int) -> bool:
        return (self.k - r0) % (p - 1) == 0


@dataclass
class HidaMember:
    point: ClassicalPoint
    form: EigenformData
    alpha: int  # unit U_p eigenvalue mod p^prec
    beta: int
    symbol_table: list | None = None  # integer coordinate tables mod p^prec


@dataclass
class HidaSpec:
    """A finite slice of an ordinary family: two classical members with a
    congruence certificate.  The branch selector r0 is an explicit input
    everywhere downstream."""

    p: int
    tame_level: int
    members: list
    certificate_bound: int = 50
    congruences_ok: bool | None = None

    def certify_congruences(self) -> bool:
        """Check a_l agree mod p at good primes l <= bound, pairwise."""
        ok = True
        ms = self.members
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                fi, fj = ms[i].form, ms[j].form
                for ell in primes_up_to(self.certificate_bound):
                    if (self.p * self.tame_level * fi.level * fj.level) % ell == 0:
                        continue
                    d = fi.ap(ell) - fj.ap(ell)
                    if d.denominator % self.p == 0 or int(d) % self.p:
                        ok = False
        self.congruences_ok = ok
        return ok

    def weights_single_class(self) -> bool:
        ks = [m.point.k for m in self.members]
        return all((k - ks[0]) % ((self.p - 1) // 2) == 0 for k in ks)
