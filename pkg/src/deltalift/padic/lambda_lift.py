"""The p-adic interpolation of the lifting: pushforwards along quadratic
forms, interpolated coefficients, the restricted p-adic L-value, the
coefficient/L-value identity over the weight cover, and exceptional-zero
detection."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..arith import divisors, is_fundamental_discriminant, kronecker, moebius
from ..characters import CharacterSpec
from ..modsym import Divisor, INF
from ..qforms import QuadForm, enumerate_L, genus_char
from ..shintani import geodesic_divisor
from .dist import MomentDistribution
from .hida import ClassicalPoint
from .measures import MeasureSymbol
from .scalars import PadicScalar, teichmuller


# ---------------------------------------------------------------------------
# pushforward along a unit-valued quadratic form
# ---------------------------------------------------------------------------


@dataclass
class PushforwardValues:
    """Evaluations of the pushforward measure at classical points.

    The underlying element of the one-variable Iwasawa algebra is realized
    by its values at the finitely many metaplectic classical points asked
    for; provenance records which measure produced each value.
    """

    form: QuadForm
    r0: int
    values: dict  # ClassicalPoint -> PadicScalar
    provenance: str = "measure-pushforward"


def _form_unit_on_chart(Q: QuadForm, p: int) -> list[int] | None:
    """Reduction mod p of u(x, y) = Q(y, -x) per z-disc, None if non-unit.

    On the unit-x chart with z = y/x, u = x^2 q(z) with
    q(z) = A z^2 - B z + C for Q = [A, B, C]; unit-valuedness on the
    support needs q(a) a unit for every disc a.
    """
    A, B, C = Q.a, Q.b, Q.c
    vals = []
    for a in range(p):
        q = (A * a * a - B * a + C) % p
        if q == 0:
            return None
        vals.append(q)
    return vals


def jq_pushforward(
    mu: MomentDistribution,
    Q: QuadForm,
    r0: int,
    points: list[ClassicalPoint],
    chi0: CharacterSpec | None = None,
) -> PushforwardValues:
    """Evaluate the pushforward of mu along u = Q(y, -x) at classical points.

    At a point of weight k - 1 on the branch (k = r0 mod p-1) the value is
    chi0(Q) * integral of u^(k-1) d mu; off the branch the integrand gains
    the quadratic residue character of u mod p.  The model's weight
    exponent must match 2k - 2 (fixed-weight realization) or be 0 with
    k = 1.
    """
    P = mu.params
    p = P.p
    qvals = _form_unit_on_chart(Q, p)
    if qvals is None:
        raise ValueError(f"{Q} is not unit-valued on the support (wrong type)")
    chi0_factor = 1 if chi0 is None or chi0.conductor == 1 else chi0(Q.c)
    out = {}
    for pt in points:
        k = pt.k
        e = 2 * k - 2
        if P.weight_exp not in (0, e) or (P.weight_exp == 0 and e != 0):
            raise ValueError(
                f"moment model weight {P.weight_exp} cannot evaluate weight 2k={2*k}"
            )
        # q(z)^(k-1) as a z-polynomial
        poly = [1]
        qz = [Q.c, -Q.b, Q.a]
        for _ in range(k - 1):
            poly = _poly_mul_int(poly, qz)
        if pt.on_branch(r0, p):
            weights = None
        else:
            # omega(u)^((p-1)/2) = Legendre symbol of q(a) mod p, per disc
            weights = [kronecker(qv, p) for qv in qvals]
        val = mu.integrate_weighted_poly(poly, 0, disc_weights=weights)
        val = val * chi0_factor
        out[pt] = PadicScalar.make(p, val, _poly_eval_precision(P, k))
    return PushforwardValues(form=Q, r0=r0, values=out)


def _poly_eval_precision(P, k) -> int:
    # z-polynomial integration respects the filtration; the binding cut is
    # the number of stored disc moments against the polynomial degree.
    deg = 2 * (k - 1)
    if deg >= P.n_disc:
        return max(P.prec - (deg - P.n_disc + 1), 0)
    return P.prec


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# interpolated coefficients of the lifting
# ---------------------------------------------------------------------------


@dataclass
class LambdaCoefficientSample:
    delta: int
    m: int
    r0: int
    values: dict  # ClassicalPoint -> PadicScalar
    provenance: dict = field(default_factory=dict)


def lambda_shintani_coeff(
    Phi: MeasureSymbol,
    delta: int,
    m: int,
    r0: int,
    points: list[ClassicalPoint],
    tame_level: int = 1,
    chi: CharacterSpec | None = None,
) -> LambdaCoefficientSample:
    """The m-th interpolated coefficient evaluated at classical points.

    Realizes, at each requested point, the class-sum
        sum over L_{Np}^{[p]}(|delta| m t^2)-classes of
        genus_char * (pushforward evaluation),
    dressed with the Moebius/character/weight factors of the t-sum over
    divisors of the tame part.  Indices with chi_delta(-1) m not a square
    residue pattern mod 4 give zero.
    """
    P = Phi.params
    p = P.p
    if not is_fundamental_discriminant(delta) or delta % p:
        raise ValueError("delta must be a fundamental discriminant divisible by p")
    chi = chi or CharacterSpec.trivial(1)
    N0 = chi.conductor
    N1 = tame_level // N0
    Np = Phi.space.M
    sample = LambdaCoefficientSample(delta=delta, m=m, r0=r0, values={})
    sgn = kronecker(delta, -1)
    if (sgn * m) % 4 not in (0, 1):
        for pt in points:
            sample.values[pt] = PadicScalar.make(p, 0, P.prec)
        sample.provenance["support"] = "out of plus-space support, identically zero"
        return sample
    chi0 = chi.primitive_part() if N0 > 1 else None
    acc = {pt: PadicScalar.make(p, 0, P.prec) for pt in points}
    for t in divisors(N1):
        mu_t = moebius(t)
        if mu_t == 0:
            continue
        tw = kronecker(delta, t) * (chi0(t) if chi0 else 1)
        if tw == 0:
            continue
        # t-weight: t^(-2) omega(t)^(r0-1) kappa([<t>])^(-1); for t = 1 all
        # factors are 1 (the tame levels in scope keep t = 1 only)
        if t > 1:
            raise NotImplementedError(
                "t > 1 interpolation weights need the [<t>]-evaluation; "
                "tame levels with nontrivial surviving divisors are out of scope"
            )
        for Q, ls in enumerate_L(Np, N0, abs(delta) * m * t * t, p_mark=p):
            w = genus_char(Q, delta)
            if w == 0:
                continue
            gd = geodesic_divisor(Q, Np)
            mu = Phi.evaluate(gd.divisor)
            push = jq_pushforward(mu, Q, r0, points, chi0)
            for pt in points:
                acc[pt] = acc[pt] + push.values[pt] * w
    sample.values = acc
    sample.provenance["path"] = "class-sum pushforward"
    return sample


# ---------------------------------------------------------------------------
# the restricted p-adic L-value
# ---------------------------------------------------------------------------


def gs_pvalue(
    Phi: MeasureSymbol,
    psi_tame_disc: int,
    point: ClassicalPoint,
    r0: int,
    alpha: int,
) -> PadicScalar:
    """Riemann-sum value of the measure symbol against the central twist.

    `psi_tame_disc` is the fundamental discriminant of the quadratic
    character chi_delta (times a trivial tame part) defining the twist
    psi = chi_delta chi_0 omega^(r0-1); at a classical point of weight
    k - 1 the classical avatar character is theta := psi omega^(1-k),
    which is chi_delta on the branch and chi_{delta/p*} off it.  The value
    is

        alpha^(-m) sum over a mod c of
            thetabar omega^(k-1)(a) <Phi({inf} - {a/c})-slice, twist poly>

    with c the conductor of theta times p when theta is unramified at p
    (unit-restricted Riemann sum), m = v_p(cond theta).
    """
    P = Phi.params
    p = P.p
    k = point.k
    e = 2 * k - 2
    if P.weight_exp != e:
        raise ValueError("moment model weight does not match the point")
    delta = psi_tame_disc
    if point.on_branch(r0, p):
        theta_disc = delta  # conductor divisible by p exactly once
        c = abs(delta)
        m_exp = 1
    else:
        pstar = p if p % 4 == 1 else -p
        theta_disc = delta // pstar
        if not is_fundamental_discriminant(theta_disc) and theta_disc != 1:
            raise ValueError("delta/p* is not a discriminant")
        c = abs(theta_disc) * p  # unit-restricted sum at level c0 * p
        m_exp = 0
    mod = P.mod
    total = 0
    for a in range(1, c + 1):
        if gcd(a, c) != 1:
            continue
        th = kronecker(theta_disc, a)
        if th == 0:
            continue
        om = pow(teichmuller(p, a % p, P.prec), k - 1, mod) if k > 1 else 1
        coeff = th * om % mod
        D = Divisor.path((a, c), INF)  # {infinity} - {a/c}
        mu = Phi.evaluate(D)
        # twist kernel (c X - a Y)^(k-1) Y^(k-1) evaluated at (y, -x):
        # (-1)^(k-1) x^(2k-2) (a + c z)^(k-1); x-power matches the model
        poly = [1]
        for _ in range(k - 1):
            poly = _poly_mul_int(poly, [a, c])
        val = mu.integrate_weighted_poly(poly, 0)
        total = (total + coeff * val * (-1) ** (k - 1)) % mod
    if m_exp:
        total = total * pow(alpha, -m_exp, mod) % mod
    else:
        total = total * pow(alpha, -1, mod) % mod  # one U_p-level unfolding
    return PadicScalar.make(p, total, _poly_eval_precision(P, k))


# ---------------------------------------------------------------------------
# the coefficient / L-value identity over the cover, and exceptional zeros
# ---------------------------------------------------------------------------


@dataclass
class LambdaKohnenReport:
    delta: int
    r0: int
    ok: bool
    comparisons: list = field(default_factory=list)


def lambda_kohnen_check(
    Phi: MeasureSymbol,
    f_members: dict,
    delta: int,
    r0: int,
    points: list[ClassicalPoint],
    tame_level: int = 1,
) -> LambdaKohnenReport:
    """Dual-path identity: the |delta|-th interpolated coefficient equals

        chi_delta(-1) * a_p * R_delta * (p-adic L-value)

    at each supplied classical point; the left side comes from class-sum
    pushforwards, the right from twisted Riemann sums.  `f_members` maps
    each point to (EigenformData of the underlying newform, alpha).
    """
    p = Phi.params.p
    rep = LambdaKohnenReport(delta=delta, r0=r0, ok=True)
    sample = lambda_shintani_coeff(
        Phi, delta, abs(delta), r0, points, tame_level=tame_level
    )
    for pt in points:
        f, alpha = f_members[pt]
        lhs = sample.values[pt]
        L = gs_pvalue(Phi, delta, pt, r0, alpha)
        from ..lfunc import R_factor

        Rd = R_factor(f, delta)
        rhs = (
            L
            * kronecker(delta, -1)
            * alpha
            * PadicScalar.from_rational(p, Rd.numerator, Rd.denominator, L.prec)
        )
        prec = min(lhs.prec, rhs.prec)
        good = lhs.congruent(rhs, prec)
        rep.comparisons.append(
            {
                "point": pt,
                "lhs": lhs,
                "rhs": rhs,
                "agree_mod": prec if good else 0,
                "ok": good,
            }
        )
        rep.ok = rep.ok and good
    return rep


@dataclass
class ExceptionalZeroReport:
    delta: int
    r0: int
    flagged: list = field(default_factory=list)
    entries: list = field(default_factory=list)


def exceptional_zero_scan(
    f_members: dict,
    delta: int,
    r0: int,
    points: list[ClassicalPoint],
    p: int,
    prec: int,
) -> ExceptionalZeroReport:
    """Evaluate the off-branch Euler-like factor and flag its zeros.

    For an off-branch point of weight k - 1 the factor is
    1 - chi_{delta/p*} chi_0(p) p^(k-1) / a_p(kappa); the scan flags points
    where it vanishes mod p^prec.  The interpolated value there carries the
    factor times the algebraic twisted L-value, so a flag means forced
    vanishing beyond the complex L-value's order.
    """
    rep = ExceptionalZeroReport(delta=delta, r0=r0)
    pstar = p if p % 4 == 1 else -p
    dd = delta // pstar
    mod = p**prec
    for pt in points:
        if pt.on_branch(r0, p):
            continue
        f, alpha = f_members[pt]
        k = pt.k
        euler = (1 - kronecker(dd, p) * p ** (k - 1) * pow(alpha, -1, mod)) % mod
        flagged = euler % mod == 0 if k > 1 else euler % p**prec == 0
        entry = {
            "point": pt,
            "euler_factor": PadicScalar.make(p, euler, prec),
            "flagged": bool(flagged),
        }
        rep.entries.append(entry)
        if flagged:
            rep.flagged.append(pt)
    return rep
