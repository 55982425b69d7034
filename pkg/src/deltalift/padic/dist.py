"""Finite approximations of measures on primitive vectors.

A measure mu on the chart {(x, y) : x a unit} of primitive vectors, with
z := y/x in Z_p, is stored through the residue-disc-refined moments

    m[a][i][s] = integral over {z = a mod p} of
                 ((z - a)/p)^i * binom(l(x^2), s) d mu,

for 0 <= a < p, i < n_disc_moments, s < n_weight_moments, where
l(v) := log<v> / log(1+p).  These functionals span enough to specialize to
any classical weight on the branch (where omega-parts of x cancel), to push
forward along unit-valued quadratic forms including the branch character,
and to transform under the matrices that arise (Gamma0(Np), the U_p coset
matrices, and the involution).

Moments are integers mod p^prec; the natural filtration (the i-th disc
moment only matters mod p^(prec - i)) is what makes the U_p iteration
converge, and reported precisions account for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..qforms import Mat
from .scalars import log_over_log1p, teichmuller


@dataclass(frozen=True)
class DistParams:
    """Parameters of the moment model.

    weight_exp = e >= 0 selects the fixed-weight model whose moments carry
    the factor x^e (e = 2k - 2 for a weight-2k symbol); matrices then act
    with the extra polynomial prefactor (A0 + p c w)^e.  The weight-family
    direction (index s) tracks Mahler coefficients of l(x^2) on top of
    that; a purely classical lift at one weight uses n_wt = 1.
    """

    p: int
    n_disc: int  # number of local moments per disc (index i)
    n_wt: int  # number of weight-direction moments (index s)
    prec: int  # moments stored mod p^prec
    weight_exp: int = 0

    @property
    def mod(self) -> int:
        return self.p**self.prec

    @property
    def block(self) -> int:
        return self.n_disc * self.n_wt


# -- truncated power series helpers (coefficients mod `mod`) ----------------


def _ser_mul(a, b, n, mod):
    out = [0] * n
    for i, x in enumerate(a):
        if not x:
            continue
        if i >= n:
            break
        for j, y in enumerate(b):
            if i + j >= n:
                break
            if y:
                out[i + j] = (out[i + j] + x * y) % mod
    return out


def _ser_pow(a, e, n, mod):
    out = [1] + [0] * (n - 1)
    base = list(a)
    while e:
        if e & 1:
            out = _ser_mul(out, base, n, mod)
        e >>= 1
        if e:
            base = _ser_mul(base, base, n, mod)
    return out


def _binom_series(g, t, n, mod, p):
    """C(g(w), t) as a w-series, g a series with integer coefficients.

    t < p so t! is a unit.
    """
    num = [1] + [0] * (n - 1)
    for i in range(t):
        shifted = list(g)
        shifted[0] = (shifted[0] - i) % mod
        num = _ser_mul(num, shifted, n, mod)
    from math import factorial

    inv = pow(factorial(t), -1, mod)
    return [c * inv % mod for c in num]


@lru_cache(maxsize=None)
def _log_series_coeffs(p: int, c_over_a: int, prec: int, n: int):
    """Series l((1 + p*c_over_a*w)^2)-style building block:
    2 * log(1 + p*c_over_a*w) / log(1+p), coefficients mod p^prec.

    The j-th log coefficient is (-1)^(j-1) (p c_over_a)^j / j; dividing by
    log(1+p) = p*(unit) keeps everything integral.
    """
    B = prec + 4
    mod = p**B
    from .scalars import padic_log_unit_arg, _vp_int

    logu = padic_log_unit_arg(p, 1 + p, B - 2)  # = p * unit
    u_inv = pow(logu // p, -1, mod)
    out = [0] * n
    for j in range(1, n):
        vj = _vp_int(j, p)
        # term (p*c)^j / j / (p*unit) = p^(j-1-vj) c^j / (j/p^vj) / unit
        e = j - 1 - vj
        if e >= prec:
            continue
        t = pow(c_over_a, j, mod) * p**e % mod
        t = t * pow(j // p**vj, -1, mod) % mod
        t = t * u_inv % mod
        if j % 2 == 0:
            t = -t % mod
        out[j] = 2 * t % mod
    return tuple(c % p**prec for c in out)


@lru_cache(maxsize=None)
def transform_data(params: DistParams, g: Mat):
    """Per-disc transform of moments under the right translation action.

    For nu = mu | g defined by  integral F d nu = integral F((x,y) g) d mu,
    with (x', y') = (x, y) g: x' = x (A0 + p c w)-type local data on each
    source disc.  Returns a list over source discs a0 of
    (target disc a', matrix T[(i', s')][(i, s)]) with

        w'^(i') C(l(x'^2), s') = sum T[..][..] w^i C(l(x^2), s)

    truncated to the stored ranges; entries are integers mod p^prec.
    """
    p, n_disc, n_wt, prec = params.p, params.n_disc, params.n_wt, params.prec
    mod = params.mod
    al, be, ga, de = g  # (x, y) g = (al x + ga y, be x + de y)
    out = []
    for a0 in range(p):
        # z' = (be + de z)/(al + ga z); local z = a0 + p w
        A0 = (al + ga * a0) % mod
        if A0 % p == 0:
            raise ArithmeticError(f"matrix {g} leaves the unit-x chart at disc {a0}")
        B0 = (be + de * a0) % mod
        A0inv = pow(A0, -1, mod)
        a_target = B0 * A0inv % p
        # w' = (z' - a')/p = [e0 + (de - a' ga) w] / (A0 + p ga w)
        e0 = (B0 - a_target * A0) % mod
        assert e0 % p == 0
        e0 //= p
        lin = (de - a_target * ga) % mod
        inv_series = [0] * n_disc
        # 1/(A0 + p ga w) = A0inv * sum (-p ga A0inv w)^j
        t = 1
        for j in range(n_disc):
            inv_series[j] = A0inv * t % mod
            t = t * (-p * ga % mod) % mod * A0inv % mod
        num_series = [e0 % mod, lin % mod] + [0] * (n_disc - 2)
        wprime = _ser_mul(num_series, inv_series, n_disc, mod)
        # l(x'^2) = l(x^2) + l((A0 + p ga w)^2 / A0-unit...) decomposed as
        # l(x^2) + l(A0^2) + 2 log(1 + p ga A0inv w)/log(1+p)
        base_shift = log_over_log1p(p, A0 % p**(prec + 2), prec)
        gser = list(_log_series_coeffs(p, ga * A0inv % mod, prec, n_disc))
        gser[0] = (gser[0] + 2 * base_shift) % mod
        # fixed-weight prefactor (A0 + p ga w)^weight_exp, a w-polynomial
        if params.weight_exp:
            pref = _ser_pow([A0 % mod, p * ga % mod], params.weight_exp, n_disc, mod)
        else:
            pref = None
        # assemble T: for each (i', s'):
        # w'^(i') * C(l + g(w), s') with C(l + g, s') =
        #   sum_{s''<=s'} C(l, s'') * C(g(w), s' - s'')
        wp_pows = [[1] + [0] * (n_disc - 1)]
        for _ in range(n_disc - 1):
            wp_pows.append(_ser_mul(wp_pows[-1], wprime, n_disc, mod))
        if pref is not None:
            wp_pows = [_ser_mul(w, pref, n_disc, mod) for w in wp_pows]
        binom_g = [_binom_series(gser, t2, n_disc, mod, p) for t2 in range(n_wt)]
        # Vandermonde: C(l + g(w), s') = sum_{s''} C(l, s'') C(g(w), s'-s'')
        T = [[0] * params.block for _ in range(params.block)]
        for ip in range(n_disc):
            for sp in range(n_wt):
                row = ip * n_wt + sp
                for s2 in range(sp + 1):
                    cmix = _ser_mul(wp_pows[ip], binom_g[sp - s2], n_disc, mod)
                    for i in range(n_disc):
                        v = cmix[i]
                        if v:
                            T[row][i * n_wt + s2] = (
                                T[row][i * n_wt + s2] + v
                            ) % mod
        out.append((a_target, T))
    return tuple(out)


class MomentDistribution:
    """Moment table of a measure on the unit-x chart of primitive vectors."""

    __slots__ = ("params", "m")

    def __init__(self, params: DistParams, m=None):
        self.params = params
        if m is None:
            m = [
                [[0] * params.n_wt for _ in range(params.n_disc)]
                for _ in range(params.p)
            ]
        self.m = m

    @staticmethod
    def zero(params: DistParams) -> "MomentDistribution":
        return MomentDistribution(params)

    def copy(self):
        return MomentDistribution(
            self.params, [[row[:] for row in disc] for disc in self.m]
        )

    def __add__(self, other):
        P = self.params
        out = MomentDistribution(P)
        for a in range(P.p):
            for i in range(P.n_disc):
                for s in range(P.n_wt):
                    out.m[a][i][s] = (self.m[a][i][s] + other.m[a][i][s]) % P.mod
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        P = self.params
        out = MomentDistribution(P)
        for a in range(P.p):
            for i in range(P.n_disc):
                for s in range(P.n_wt):
                    out.m[a][i][s] = self.m[a][i][s] * c % P.mod
        return out

    def scale_series(self, series):
        """Multiply by an Iwasawa-algebra element: the s-index is the
        w-power of the weight variable, so scaling is a convolution."""
        P = self.params
        out = MomentDistribution(P)
        for a in range(P.p):
            for i in range(P.n_disc):
                row = self.m[a][i]
                orow = out.m[a][i]
                for s in range(P.n_wt):
                    acc = 0
                    for s2 in range(s + 1):
                        cs = series[s - s2] if s - s2 < len(series) else 0
                        if cs and row[s2]:
                            acc += cs * row[s2]
                    orow[s] = acc % P.mod
        return out

    def mass_series(self):
        """Total mass as a weight-variable series (list over s)."""
        P = self.params
        return [
            sum(self.m[a][0][s] for a in range(P.p)) % P.mod
            for s in range(P.n_wt)
        ]

    def apply_matrix(self, g: Mat) -> "MomentDistribution":
        P = self.params
        data = transform_data(P, g)
        out = MomentDistribution(P)
        nb = P.block
        for a0 in range(P.p):
            tgt, T = data[a0]
            src = self.m[a0]
            flat = [src[i][s] for i in range(P.n_disc) for s in range(P.n_wt)]
            dst = out.m[tgt]
            for row in range(nb):
                Tr = T[row]
                acc = 0
                for colv, x in zip(Tr, flat):
                    if colv and x:
                        acc += colv * x
                if acc:
                    ip, sp = divmod(row, P.n_wt)
                    dst[ip][sp] = (dst[ip][sp] + acc) % P.mod
        return out

    def apply_involution(self) -> "MomentDistribution":
        """(x, y) -> (x, -y): z -> -z, per-disc affine flip."""
        P = self.params
        out = MomentDistribution(P)
        from math import comb

        for a in range(P.p):
            tgt = (-a) % P.p
            # z = a + p w -> z' = -a - p w; a' = (-a) mod p = tgt;
            # w' = (z' - a')/p = (-a - p w - tgt)/p = c0 - w with
            # c0 = (-a - tgt)/p  (0 or -1)
            c0 = (-a - tgt) // P.p
            for i in range(P.n_disc):
                for s in range(P.n_wt):
                    v = self.m[a][i][s]
                    if not v:
                        continue
                    # (c0 - w)^(i') expansion: contribution of w^i to w'^(i')
                    # accumulate directly: w'^(i') = sum_i C(i',i) c0^(i'-i)(-1)^i w^i
                    for ip in range(i, P.n_disc):
                        coef = comb(ip, i) * c0 ** (ip - i) * (-1) ** i
                        if coef:
                            out.m[tgt][ip][s] = (
                                out.m[tgt][ip][s] + coef * v
                            ) % P.mod
        return out

    # -- integration ---------------------------------------------------------

    def total_mass(self) -> int:
        P = self.params
        return sum(self.m[a][0][0] for a in range(P.p)) % P.mod

    def integrate_disc_poly(self, coeffs_per_disc) -> int:
        """integral of sum over discs a of P_a(w) * <x^2>^(t_a-encoded) ...

        `coeffs_per_disc[a]` is a list over s of lists over i: the functional
        sum_{i,s} c[s][i] * w^i * C(l(x^2), s) restricted to disc a.
        """
        P = self.params
        total = 0
        for a in range(P.p):
            ca = coeffs_per_disc[a]
            for s in range(min(len(ca), P.n_wt)):
                for i in range(min(len(ca[s]), P.n_disc)):
                    c = ca[s][i]
                    if c:
                        total += c * self.m[a][i][s]
        return total % P.mod

    def integrate_weighted_poly(self, zpoly, t_exp: int, disc_weights=None) -> int:
        """integral of  Q(z) * <x^2>^t_exp  d mu, optionally with an extra
        locally-constant weight per disc (e.g. a quadratic character of the
        reduction), where Q is an integer polynomial in z (ascending coeffs).

        <x^2>^t = sum_s binom(t*l, s)-expansion via the Mahler basis:
        (1+p)^(t l) = sum_s C(t l, s) p^s, and C(t l, s) is re-expanded in
        C(l, s'') with integer coefficients.
        """
        P = self.params
        mod = P.mod
        from math import comb

        # Mahler re-expansion: C(t*l, s) = sum_{s''<=s} S[s][s''] C(l, s'')
        S = [[0] * P.n_wt for _ in range(P.n_wt)]
        for s in range(P.n_wt):
            for s2 in range(s + 1):
                acc = 0
                for i2 in range(s2 + 1):
                    acc += (-1) ** (s2 - i2) * comb(s2, i2) * comb(t_exp * i2, s)
                S[s][s2] = acc % mod
        coeffs = []
        for a in range(P.p):
            # Q(a + p w) as a w-polynomial
            qloc = _shift_poly(zpoly, a, P.p, P.n_disc, mod)
            wt = disc_weights[a] if disc_weights is not None else 1
            ca = [[0] * P.n_disc for _ in range(P.n_wt)]
            for s2 in range(P.n_wt):
                # weight-direction coefficient: sum_s p^s S[s][s2]
                wcoef = sum(P.p**s * S[s][s2] for s in range(P.n_wt)) % mod
                if not wcoef:
                    continue
                for i in range(P.n_disc):
                    ca[s2][i] = wt * wcoef * qloc[i] % mod
            coeffs.append(ca)
        return self.integrate_disc_poly(coeffs)

    def max_abs_valuation_deficit(self, other) -> int:
        """Largest k such that the distributions differ mod p^k at some
        stored moment, respecting the total filtration (the (i, s) moment
        is compared at precision prec - i - s: the maximal ideal of the
        Iwasawa algebra counts both the prime and the weight variable).
        Returns 0 if equal within the filtration."""
        P = self.params
        worst = 0
        for a in range(P.p):
            for i in range(P.n_disc):
                for s in range(P.n_wt):
                    lvl = max(P.prec - i - s, 0)
                    if lvl == 0:
                        continue
                    d = (self.m[a][i][s] - other.m[a][i][s]) % P.p**lvl
                    if d:
                        from ..arith import valuation

                        v = valuation(d, P.p)
                        worst = max(worst, lvl - v)
        return worst


def _shift_poly(zpoly, a, p, n, mod):
    """Coefficients in w of Q(a + p*w), truncated to length n."""
    from math import comb

    out = [0] * n
    for d, c in enumerate(zpoly):
        if not c:
            continue
        # (a + p w)^d
        for i in range(min(d, n - 1) + 1):
            out[i] = (out[i] + c * comb(d, i) * pow(a, d - i, mod) * p**i) % mod
    return out
