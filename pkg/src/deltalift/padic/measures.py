"""Measure-valued modular symbols: storage, evaluation, U_p lifting,
specialization to classical weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..modsym import (
    INF,
    Divisor,
    ModularSymbolSpace,
    Symbol,
    mat_on_cusp,
    unimodular_path_mats,
)
from ..qforms import Mat, mat_inv, mat_mul
from .dist import DistParams, MomentDistribution
from .scalars import PadicScalar


@dataclass
class MeasureSymbol:
    """A table of measure values on the unimodular paths of a symbol space.

    The table lives over the same P^1(Z/M) bookkeeping as the classical
    space (M = Np); `values[x]` approximates Phi(g_x({0} - {infinity})).
    `up_eigenvalue` is the p-adic unit the U_p iteration converged to, and
    `achieved` records the filtration level at which the eigen-equation
    holds (see `lift_overconvergent`).
    """

    space: ModularSymbolSpace
    params: DistParams
    values: list  # MomentDistribution per P^1 index
    up_eigenvalue: int = 1
    achieved: int = 0
    iterations: int = 0
    center_weight: int = 2
    label: str = ""
    up_family_eigenvalue: list | None = None

    # -- evaluation (same path reduction as the classical space) -----------
    def value_on_path(self, g: Mat) -> MomentDistribution:
        sp = self.space
        y = sp.p1.index((g[2], g[3]))
        gamma = mat_mul(g, mat_inv(sp.p1.lift(y)))
        assert gamma[2] % sp.M == 0
        return self.values[y].apply_matrix(mat_inv(gamma))

    def evaluate(self, D: Divisor) -> MomentDistribution:
        total = MomentDistribution.zero(self.params)
        for cusp, coeff in D.items():
            if cusp == INF:
                continue
            acc = MomentDistribution.zero(self.params)
            for h in unimodular_path_mats(cusp):
                acc = acc + self.value_on_path(h)
            total = total + acc.scale(coeff)
        return total

    def _clone_with(self, new_values) -> "MeasureSymbol":
        return MeasureSymbol(
            self.space,
            self.params,
            new_values,
            self.up_eigenvalue,
            self.achieved,
            self.iterations,
            self.center_weight,
            self.label,
            self.up_family_eigenvalue,
        )

    def apply_coset_operator(self, cosets) -> "MeasureSymbol":
        """Phi | sum of coset matrices, computed on the stored paths."""
        sp = self.space
        new_values = []
        for x in range(sp.n_gens):
            gx = sp.p1.lift(x)
            base = Divisor.path(mat_on_cusp(gx, INF), mat_on_cusp(gx, (0, 1)))
            acc = MomentDistribution.zero(self.params)
            for g in cosets:
                acc = acc + self.evaluate(base.apply(g)).apply_matrix(g)
            new_values.append(acc)
        return self._clone_with(new_values)

    def apply_up(self) -> "MeasureSymbol":
        """The value table of Phi | U_p (no eigenvalue division)."""
        p = self.params.p
        return self.apply_coset_operator([(1, b, 0, p) for b in range(p)])

    def apply_tl(self, ell: int) -> "MeasureSymbol":
        """Phi | T_ell for ell coprime to the level (and to p)."""
        return self.apply_coset_operator(
            [(ell, 0, 0, 1)] + [(1, j, 0, ell) for j in range(ell)]
        )

    def minus_projection(self) -> "MeasureSymbol":
        iota = (1, 0, 0, -1)
        sp = self.space
        new_values = []
        inv2 = pow(2, -1, self.params.mod)
        for x in range(sp.n_gens):
            gx = sp.p1.lift(x)
            base = Divisor.path(mat_on_cusp(gx, INF), mat_on_cusp(gx, (0, 1)))
            v = self.evaluate(base.apply(iota)).apply_involution()
            new_values.append((self.values[x] - v).scale(inv2))
        return self._clone_with(new_values)

    def isotypic_projection(self, hecke_killers) -> "MeasureSymbol":
        """Damp non-isotypic unit components: apply the minus projection and
        the operators (T_ell - a)/(a_f - a) for each (ell, a, a_f) given.

        Each pass annihilates the unwanted unit eigendirections to first
        order in the (p, w)-filtration; inside the lifting loop this is
        enough, since the loop reapplies it every iteration.
        """
        out = self.minus_projection()
        for (ell, a_other, a_f) in hecke_killers:
            inv = pow((a_f - a_other) % self.params.mod, -1, self.params.mod)
            t = out.apply_tl(ell)
            out = out._clone_with(
                [
                    (t.values[x] - out.values[x].scale(a_other)).scale(inv)
                    for x in range(self.space.n_gens)
                ]
            )
        return out

    # -- specialization -----------------------------------------------------
    def specialize_value(self, x: int, weight: int):
        """Classical divided-powers coordinates of sp_k(values[x]) mod p^*.

        weight = 2k; the kernel (xX + yY)^r/r! has e_n-coordinate
        x^n y^(r-n) = x^r z^(r-n).  In the fixed-weight model
        (weight_exp = r) the x^r factor is built into the moments; in the
        family model (weight_exp = 0) it is produced through the Mahler
        expansion of <x^2>^(r/2), which needs r = 0 mod (p-1).
        """
        P = self.params
        r = weight - 2
        p = P.p
        out = []
        mu = self.values[x]
        if P.weight_exp == r:
            t_exp, prec = 0, P.prec
        elif P.weight_exp == 0:
            if r % (p - 1):
                raise ValueError("off-branch classical weight for this model")
            t_exp = r // 2
            prec = P.prec if r == 0 else min(P.prec, P.n_wt)
        else:
            raise ValueError("model weight does not match the requested weight")
        for n in range(r + 1):
            val = mu.integrate_weighted_poly([0] * (r - n) + [1], t_exp)
            out.append(PadicScalar.make(p, val, prec))
        return out

    def specialize(self, weight: int):
        """All specialized value vectors, as lists of PadicScalar."""
        return [self.specialize_value(x, weight) for x in range(self.space.n_gens)]


def classical_to_initial(
    phi, params: DistParams, center_weight: int, space=None, label=""
) -> MeasureSymbol:
    """A first finite-moment lift of a classical symbol.

    `phi` is either a Symbol or a list of integer coordinate vectors (one
    per generator, length 2k-1, values mod p^prec).  The seed places pure
    disc masses solving the Vandermonde system sum_a lam_a a^j = t_j with
    t_j the classical moment targets, which keeps everything p-integral
    and makes the seed specialize exactly; requires 2k - 1 <= p.
    """
    r = center_weight - 2
    P = params
    if P.weight_exp not in (0, r):
        raise ValueError("params weight_exp must be 0 (weight 2) or 2k-2")
    if r > 0 and P.weight_exp != r:
        raise NotImplementedError("higher-weight seeds need the fixed-weight model")
    if r + 1 > P.p:
        raise ValueError("seed needs 2k-1 <= p disc nodes")
    if isinstance(phi, Symbol):
        space = phi.space
        label = label or phi.label
        tables = [
            [int(Fraction(phi.values[x * (r + 1) + n])) for n in range(r + 1)]
            for x in range(space.n_gens)
        ]
    else:
        tables = phi
        if space is None:
            raise ValueError("space required for raw tables")
    # Vandermonde nodes 0..r: solve sum_a lam_a a^j = t_j for j = 0..r,
    # where t_j = value at coordinate n = r - j  (e_n-coord = int x^r z^(r-n))
    nodes = list(range(r + 1))
    values = []
    for x in range(space.n_gens):
        t = [tables[x][r - j] % P.mod for j in range(r + 1)]
        lam = _solve_vandermonde(nodes, t, P.mod)
        mu = MomentDistribution.zero(P)
        for a, la in zip(nodes, lam):
            mu.m[a][0][0] = la % P.mod
        values.append(mu)
    return MeasureSymbol(space, P, values, center_weight=center_weight, label=label)


def _solve_vandermonde(nodes, targets, mod):
    """Solve sum_a lam_a * a^j = targets[j] over Z/mod (nodes distinct mod p)."""
    n = len(nodes)
    A = [[pow(a, j, mod) for a in nodes] for j in range(n)]
    b = list(targets)
    # Gaussian elimination with unit pivots (node differences are units)
    for col in range(n):
        piv = next(
            i for i in range(col, n) if A[i][col] % mod and _unit(A[i][col], mod)
        )
        A[col], A[piv] = A[piv], A[col]
        b[col], b[piv] = b[piv], b[col]
        inv = pow(A[col][col], -1, mod)
        A[col] = [x * inv % mod for x in A[col]]
        b[col] = b[col] * inv % mod
        for i in range(n):
            if i != col and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % mod for x, y in zip(A[i], A[col])]
                b[i] = (b[i] - f * b[col]) % mod
    return b


def _unit(x, mod):
    from math import gcd

    return gcd(x % mod, mod) == 1


def series_inverse(series, n, mod):
    """Inverse of a unit power series mod (p^prec, w^n)."""
    a0 = series[0] % mod
    inv0 = pow(a0, -1, mod)
    out = [inv0] + [0] * (n - 1)
    for s in range(1, n):
        acc = 0
        for j in range(1, s + 1):
            c = series[j] if j < len(series) else 0
            if c and out[s - j]:
                acc += c * out[s - j]
        out[s] = -inv0 * acc % mod
    return out


def lift_overconvergent(
    phi,
    params: DistParams | None = None,
    ap_unit: int = 1,
    hecke_killers=(),
    max_iterations: int | None = None,
) -> MeasureSymbol:
    """Iterate a_p^(-1) U_p from a seed until the table stabilizes.

    `phi` is a classical Symbol (seeded internally at its own weight) or an
    already-seeded MeasureSymbol.  The eigenvalue is re-estimated each pass
    from the mass of a reference generator, so the iteration locks onto
    the unit root without knowing it in advance; `hecke_killers` damps
    other unit eigendirections of the classical level (the sign projection
    plus (T_ell - a)/(a_f - a) factors) when they would otherwise be
    re-excited through relation defects of intermediate tables.
    Convergence is measured in the total (p, w)-filtration; `achieved` is
    prec minus the final eigen-equation residual.
    """
    if isinstance(phi, MeasureSymbol):
        sym = phi
        P = sym.params
    else:
        P = params
        sym = classical_to_initial(phi, P, phi.space.weight)
    max_iterations = max_iterations or (2 * (P.prec + P.n_disc + P.n_wt) + 8)
    # reference generator whose seed mass is a unit
    ref = next(
        x
        for x in range(sym.space.n_gens)
        if sym.values[x].total_mass() % P.p != 0
    )
    prev = sym
    alpha = [ap_unit % P.mod] + [0] * (P.n_wt - 1)
    for it in range(1, max_iterations + 1):
        nxt = prev.apply_up().isotypic_projection(hecke_killers)
        num = nxt.values[ref].mass_series()
        den = prev.values[ref].mass_series()
        alpha = [
            x % P.mod
            for x in _series_mul(num, series_inverse(den, P.n_wt, P.mod), P.n_wt, P.mod)
        ]
        ainv = series_inverse(alpha, P.n_wt, P.mod)
        nxt.values = [v.scale_series(ainv) for v in nxt.values]
        deficit = 0
        for x in range(len(nxt.values)):
            deficit = max(
                deficit, nxt.values[x].max_abs_valuation_deficit(prev.values[x])
            )
        prev = nxt
        prev.iterations = it
        if deficit == 0:
            break
    check = prev.apply_up().isotypic_projection(hecke_killers)
    ainv = series_inverse(alpha, P.n_wt, P.mod)
    check.values = [v.scale_series(ainv) for v in check.values]
    worst = 0
    for x in range(len(prev.values)):
        worst = max(worst, check.values[x].max_abs_valuation_deficit(prev.values[x]))
    prev.achieved = P.prec - worst
    prev.up_eigenvalue = alpha[0] % P.mod
    prev.up_family_eigenvalue = alpha
    return prev


def _series_mul(a, b, n, mod):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            if y:
                out[i + j] = (out[i + j] + x * y) % mod
    return out
