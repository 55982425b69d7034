"""Exact modular symbols for Gamma0(M) with divided-powers polynomial values.

A weight-2k symbol assigns to each degree-zero divisor on the cusps a vector
in Sym^{2k-2} over Q, written in the divided-powers basis

    e_n = X^n/n! * Y^(r-n)/(r-n)!,   r = 2k - 2,

with the right action (F|g)(X, Y) = F((X, Y) g^T).  A symbol is stored by
its values on the unimodular paths g_x({0} - {infinity}), one path per class
in P^1(Z/M); Manin's two- and three-term relations cut out exactly the
symbol space, and continued fractions reduce any divisor to these paths.

Only trivial nebentype is supported here (the lifting pipelines take
characters of order <= 2, whose square is trivial).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .arith import factor, kronecker
from .characters import CharacterSpec
from .linalg import (
    charpoly,
    kernel_basis,
    mat_vec,
    rational_roots,
    rref,
    solve_in_span,
)
from .p1line import P1
from .qforms import MAT_S, Mat, QuadForm, mat_inv, mat_mul

MAT_TAU: Mat = (0, -1, 1, -1)  # order 3: 0 -> 1 -> infinity -> 0
INF = (1, 0)


# ---------------------------------------------------------------------------
# polynomial module: divided-powers action and the pairing with Sym^r*
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def action_matrix(g: Mat, r: int):
    """Matrix P with coords(v|g) = P . coords(v) on the divided-powers basis."""
    al, be, ga, de = g
    cols = []
    for n in range(r + 1):
        # (al X + be Y)^n (ga X + de Y)^(r-n), coefficient of X^m Y^(r-m)
        conv = [0] * (r + 1)
        for i in range(n + 1):
            ci = comb(n, i) * al**i * be ** (n - i)
            for j in range(r - n + 1):
                cj = comb(r - n, j) * ga**j * de ** (r - n - j)
                conv[i + j] += ci * cj
        col = [
            Fraction(conv[m])
            * Fraction(
                __import__("math").factorial(m)
                * __import__("math").factorial(r - m),
                __import__("math").factorial(n)
                * __import__("math").factorial(r - n),
            )
            for m in range(r + 1)
        ]
        cols.append(col)
    return tuple(tuple(cols[n][m] for n in range(r + 1)) for m in range(r + 1))


def apply_action(g: Mat, v, r: int):
    P = action_matrix(g, r)
    return tuple(sum(P[m][n] * v[n] for n in range(r + 1)) for m in range(r + 1))


def pairing(p_coords, dual_coords) -> Fraction:
    """The perfect pairing <e_i, X^(r-j) Y^j> = (-1)^j delta_ij.

    `p_coords` are divided-powers coordinates, `dual_coords[i]` is the
    coefficient of X^(r-i) Y^i in the dual polynomial.
    """
    if len(p_coords) != len(dual_coords):
        raise ValueError("degree mismatch in pairing")
    return sum(
        ((-1) ** i) * p * q for i, (p, q) in enumerate(zip(p_coords, dual_coords))
    )


def dual_quadform_power(Q: QuadForm, e: int, r: int):
    """Coordinates of Q(X, Y)^e in the dual basis (coeff of X^(r-i) Y^i)."""
    if 2 * e != r:
        raise ValueError("degree mismatch: Q^e has degree 2e")
    coeffs = {0: Fraction(1)}  # X-degree -> coefficient, for Q^0
    poly = [Fraction(0)] * (r + 1)
    # expand (a X^2 + b XY + c Y^2)^e by multinomial
    from math import factorial

    a, b, c = Q.a, Q.b, Q.c
    for i in range(e + 1):
        for j in range(e - i + 1):
            k2 = e - i - j
            coef = Fraction(
                factorial(e), factorial(i) * factorial(j) * factorial(k2)
            ) * (a**i) * (b**j) * (c**k2)
            xdeg = 2 * i + j
            poly[xdeg] += coef
    return tuple(poly[r - i] for i in range(r + 1))


def dual_twist_poly(c: int, a: int, j: int, r: int):
    """Coordinates of (c X - a Y)^(j-1) Y^(r+1-j) in the dual basis."""
    if not (1 <= j <= r + 1):
        raise ValueError("j out of the critical range")
    out = [Fraction(0)] * (r + 1)
    for i in range(j):
        # X^(j-1-i) Y^(i + r + 1 - j): dual index = r - (j-1-i)
        out[r - (j - 1 - i)] += comb(j - 1, i) * Fraction(c) ** (j - 1 - i) * Fraction(
            -a
        ) ** i
    return tuple(out)


# ---------------------------------------------------------------------------
# cusps, divisors, unimodular paths
# ---------------------------------------------------------------------------


def cusp_normalize(p: int, q: int) -> tuple[int, int]:
    if q == 0:
        return (1, 0)
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return (p, q)


def mat_on_cusp(g: Mat, cusp) -> tuple[int, int]:
    p, q = cusp
    return cusp_normalize(g[0] * p + g[1] * q, g[2] * p + g[3] * q)


class Divisor:
    """Degree-zero divisor on the rational cusps, sparse dict representation."""

    def __init__(self, items=()):
        self.d: dict[tuple[int, int], int] = {}
        for coeff, cusp in items:
            self.add(coeff, cusp)

    def add(self, coeff: int, cusp):
        cusp = cusp_normalize(*cusp)
        new = self.d.get(cusp, 0) + coeff
        if new:
            self.d[cusp] = new
        else:
            self.d.pop(cusp, None)

    @staticmethod
    def path(frm, to) -> "Divisor":
        """{to} - {frm}."""
        return Divisor([(1, to), (-1, frm)])

    def apply(self, g: Mat) -> "Divisor":
        out = Divisor()
        for cusp, coeff in self.d.items():
            out.add(coeff, mat_on_cusp(g, cusp))
        return out

    def negate(self) -> "Divisor":
        out = Divisor()
        for cusp, coeff in self.d.items():
            out.add(-coeff, cusp)
        return out

    def items(self):
        return self.d.items()

    def __repr__(self):
        return " + ".join(f"{c}*{{{p}/{q}}}" for (p, q), c in self.d.items()) or "0"


@lru_cache(maxsize=None)
def unimodular_path_mats(cusp) -> tuple[Mat, ...]:
    """Matrices h_j in SL2(Z) with sum h_j({0}-{inf}) = {cusp} - {inf}."""
    if cusp == INF:
        return ()
    p, q = cusp
    # continued fraction of p/q by floor division
    quots = []
    a, b = p, q
    while b:
        quots.append(a // b)
        a, b = b, a - (a // b) * b
    # convergents
    pm, qm = 1, 0  # p_{-1}, q_{-1}
    pc, qc = quots[0], 1
    mats = [(pm, pc, qm, qc)]  # j = 0: ((-1)^0 p_{-1}, p_0; (-1)^0 q_{-1}, q_0)
    sign = -1
    for t in quots[1:]:
        pn, qn = t * pc + pm, t * qc + qm
        mats.append((sign * pc, pn, sign * qc, qn))
        pm, qm, pc, qc = pc, qc, pn, qn
        sign = -sign
    assert (pc, qc) == cusp or (-pc, -qc) == cusp
    return tuple(mats)


# ---------------------------------------------------------------------------
# the symbol space
# ---------------------------------------------------------------------------


class ModularSymbolSpace:
    """Weight-2k modular symbols over Gamma0(M), trivial nebentype."""

    def __init__(self, M: int, weight: int):
        if weight < 2 or weight % 2:
            raise ValueError("weight must be an even integer >= 2")
        self.M = M
        self.weight = weight
        self.k = weight // 2
        self.r = weight - 2
        self.p1 = P1(M)
        self.n_gens = len(self.p1)
        self.ncoords = self.n_gens * (self.r + 1)
        self._lifts = [self.p1.lift(i) for i in range(self.n_gens)]
        self.basis = self._solve_relations()
        self._basis_rows = [list(v) for v in self.basis]

    # -- construction -------------------------------------------------------
    def _lookup_blocks(self, g: Mat):
        """Class index y and matrix A with Phi(g{0,inf}) = A . v[y]."""
        y = self.p1.index((g[2], g[3]))
        gamma = mat_mul(g, mat_inv(self._lifts[y]))
        assert gamma[2] % self.M == 0
        return y, action_matrix(mat_inv(gamma), self.r)

    def _solve_relations(self):
        r1 = self.r + 1
        rows = []
        for x in range(self.n_gens):
            gx = self._lifts[x]
            # two-term: v[x] + A.v[y] = 0 for g_x sigma
            y, A = self._lookup_blocks(mat_mul(gx, MAT_S))
            for m in range(r1):
                row = [Fraction(0)] * self.ncoords
                row[x * r1 + m] += 1
                for n in range(r1):
                    row[y * r1 + n] += A[m][n]
                rows.append(row)
            # three-term: v[x] + A1.v[y1] + A2.v[y2] = 0
            y1, A1 = self._lookup_blocks(mat_mul(gx, MAT_TAU))
            y2, A2 = self._lookup_blocks(mat_mul(gx, mat_mul(MAT_TAU, MAT_TAU)))
            for m in range(r1):
                row = [Fraction(0)] * self.ncoords
                row[x * r1 + m] += 1
                for n in range(r1):
                    row[y1 * r1 + n] += A1[m][n]
                    row[y2 * r1 + n] += A2[m][n]
                rows.append(row)
        return [tuple(v) for v in kernel_basis(rows, self.ncoords)]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    # -- evaluation -----------------------------------------------------------
    def value_on_path(self, values, g: Mat):
        """Phi(g({0} - {infinity})) for a stored value table."""
        y, A = self._lookup_blocks(g)
        r1 = self.r + 1
        block = values[y * r1 : (y + 1) * r1]
        return tuple(sum(A[m][n] * block[n] for n in range(r1)) for m in range(r1))

    def value_to_inf(self, values, cusp):
        """Phi({cusp} - {infinity})."""
        total = [Fraction(0)] * (self.r + 1)
        for h in unimodular_path_mats(cusp):
            v = self.value_on_path(values, h)
            total = [a + b for a, b in zip(total, v)]
        return tuple(total)

    def evaluate(self, values, D: Divisor):
        total = [Fraction(0)] * (self.r + 1)
        for cusp, coeff in D.items():
            if cusp == INF:
                continue
            v = self.value_to_inf(values, cusp)
            total = [a + coeff * b for a, b in zip(total, v)]
        return tuple(total)

    # -- Hecke ------------------------------------------------------------------
    def _coset_reps(self, op) -> list[Mat]:
        kind = op[0]
        if kind == "T":
            ell = op[1]
            if self.M % ell == 0:
                raise ValueError("T_l needs l coprime to the level; use ('U', l)")
            return [(ell, 0, 0, 1)] + [(1, j, 0, ell) for j in range(ell)]
        if kind == "U":
            q = op[1]
            if self.M % q:
                raise ValueError("U_q needs q | level")
            return [(1, j, 0, q) for j in range(q)]
        if kind == "iota":
            return [(1, 0, 0, -1)]
        raise ValueError(f"unknown operator {op!r}")

    def apply_operator(self, values, op):
        """New value table of Phi|op, op in {('T', l), ('U', q), ('iota',)}."""
        reps = self._coset_reps(op)
        r1 = self.r + 1
        out = []
        for x in range(self.n_gens):
            gx = self._lifts[x]
            base = Divisor.path(mat_on_cusp(gx, INF), mat_on_cusp(gx, (0, 1)))
            acc = [Fraction(0)] * r1
            for delta in reps:
                v = self.evaluate(values, base.apply(delta))
                v = apply_action(delta, v, self.r)
                acc = [a + b for a, b in zip(acc, v)]
            out.extend(acc)
        return tuple(out)

    def hecke_matrix(self, op):
        """Matrix of the operator on the basis, columns = images of basis."""
        cols = []
        for v in self.basis:
            w = self.apply_operator(v, op)
            x = solve_in_span(self._basis_rows, list(w))
            if x is None:
                raise ArithmeticError(f"operator {op} does not preserve the space")
            cols.append(x)
        n = len(self.basis)
        return [[cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# symbols as first-class values
# ---------------------------------------------------------------------------


@dataclass
class Symbol:
    """A stored modular symbol: a value table over a symbol space.

    `sign` is the eigenvalue of the involution when the symbol is sign-pure
    (else 0); `scale_shift` supports virtual symbols like the p-dilation
    used for oldforms, composing the evaluation with a matrix and scalar.
    """

    space: ModularSymbolSpace
    values: tuple
    sign: int = 0
    label: str = ""

    @property
    def weight(self):
        return self.space.weight

    @property
    def level(self):
        return self.space.M

    def evaluate(self, D: Divisor):
        return self.space.evaluate(self.values, D)

    def __add__(self, other):
        if self.space is not other.space:
            raise ValueError("symbols on different spaces")
        return Symbol(
            self.space,
            tuple(a + b for a, b in zip(self.values, other.values)),
            sign=self.sign if self.sign == other.sign else 0,
        )

    def __neg__(self):
        return Symbol(self.space, tuple(-a for a in self.values), sign=self.sign)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Symbol":
        c = Fraction(c)
        return Symbol(
            self.space, tuple(c * a for a in self.values), sign=self.sign,
            label=self.label,
        )

    def involution(self) -> "Symbol":
        w = self.space.apply_operator(self.values, ("iota",))
        return Symbol(self.space, w, sign=-self.sign if self.sign else 0)

    def hecke(self, op) -> "Symbol":
        w = self.space.apply_operator(self.values, op)
        return Symbol(self.space, w, sign=self.sign)


class DilatedSymbol:
    """Evaluation view of p^(1-2k) * (Phi | (p,0;0,1)) at level M*p.

    This realizes the symbol of the p-dilation z -> p z of the underlying
    eigenform without building a level-Mp space: it only needs evaluations.
    """

    def __init__(self, base: Symbol, p: int):
        self.base = base
        self.p = p
        self.weight = base.weight
        self.level = base.level * p
        g = (p, 0, 0, 1)
        self._g = g
        self._scalar = Fraction(1, p ** (base.weight - 1))

    def evaluate(self, D: Divisor):
        v = self.base.evaluate(D.apply(self._g))
        v = apply_action(self._g, v, self.base.space.r)
        return tuple(self._scalar * x for x in v)


# ---------------------------------------------------------------------------
# eigenforms and eigensymbols
# ---------------------------------------------------------------------------


@dataclass
class EigenformData:
    """Rational Hecke eigenform data: level, weight 2k, prime eigenvalues."""

    level: int
    weight: int
    eigenvalues: dict[int, Fraction]
    character_disc: int = 1
    is_newform: bool = True
    atkin_lehner: dict[int, Fraction] = field(default_factory=dict)
    label: str = ""

    def ap(self, p: int) -> Fraction:
        return Fraction(self.eigenvalues[p])

    def an(self, n: int) -> Fraction:
        """Coefficient a_n by multiplicativity and the Hecke recurrences."""
        if n == 1:
            return Fraction(1)
        out = Fraction(1)
        for p, e in factor(n):
            out *= self._prime_power(p, e)
        return out

    def _prime_power(self, p: int, e: int) -> Fraction:
        ap = self.ap(p)
        if self.level % p == 0:
            return ap**e
        chi_p = kronecker(self.character_disc, p) ** 2  # trivial square character
        prev, cur = Fraction(1), ap
        for _ in range(e - 1):
            prev, cur = cur, ap * cur - Fraction(p ** (self.weight - 1)) * chi_p * prev
        return cur

    def atkin_lehner_eigenvalue(self, q: int) -> Fraction:
        """w_q for q || level, trivial character: w_q = -a_q q^(1-k)."""
        if q in self.atkin_lehner:
            return Fraction(self.atkin_lehner[q])
        if self.level % q or (self.level // q) % q == 0:
            raise ValueError("q must exactly divide the level")
        k = self.weight // 2
        return -self.ap(q) * Fraction(1, q ** (k - 1))


def sign_subspace(space: ModularSymbolSpace, sign: int):
    """Basis (as coordinate vectors over space.basis) of the sign eigenspace."""
    iota = space.hecke_matrix(("iota",))
    n = len(iota)
    rows = [
        [iota[i][j] - (sign if i == j else 0) for j in range(n)] for i in range(n)
    ]
    return kernel_basis([list(map(Fraction, row)) for row in rows], n)


def eigensymbol(space: ModularSymbolSpace, f: EigenformData, sign: int) -> Symbol:
    """The normalized sign-pure eigensymbol attached to rational eigendata.

    Values are scaled to unit content with the first nonzero coordinate
    positive; this fixes the implicit period normalization used everywhere.
    """
    if f.weight != space.weight:
        raise ValueError("weight mismatch")
    if space.M % f.level:
        raise ValueError("space level must be a multiple of the form's level")
    sub = sign_subspace(space, sign)
    n = len(space.basis)
    ops = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        if p in f.eigenvalues:
            ops.append((("U", p) if space.M % p == 0 else ("T", p), f.ap(p)))
    for op, a in ops:
        if len(sub) <= 1:
            break
        mat = space.hecke_matrix(op)
        rows = []
        for v in sub:
            w = mat_vec(mat, v)
            rows.append([wi - a * vi for wi, vi in zip(w, v)])
        # kernel within the subspace
        ker = kernel_basis(
            [[rows[i][j] for i in range(len(sub))] for j in range(n)], len(sub)
        )
        sub = [
            [sum(kv[i] * sub[i][j] for i in range(len(sub))) for j in range(n)]
            for kv in ker
        ]
    if len(sub) != 1:
        raise ArithmeticError(
            f"eigensystem not isolated: dim {len(sub)} for {f.label or f.eigenvalues}"
        )
    coords = sub[0]
    values = [
        sum(coords[i] * space.basis[i][j] for i in range(n))
        for j in range(space.ncoords)
    ]
    values = _normalize_content(values)
    return Symbol(space, tuple(values), sign=sign, label=f.label)


def _normalize_content(values):
    from math import gcd as _gcd

    den = 1
    for v in values:
        den = den * v.denominator // _gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    if g == 0:
        raise ArithmeticError("zero symbol")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def hecke_eigenvalue(phi: Symbol, p: int) -> Fraction:
    """a_p read off by applying T_p (or U_p) to an eigensymbol."""
    sp = phi.space
    op = ("U", p) if sp.M % p == 0 else ("T", p)
    w = sp.apply_operator(phi.values, op)
    for i, v in enumerate(phi.values):
        if v != 0:
            return Fraction(w[i]) / v
    raise ArithmeticError("zero symbol")


def extend_eigenvalues(f: EigenformData, phi: Symbol, up_to: int) -> None:
    """Fill f.eigenvalues at all primes <= up_to from the eigensymbol."""
    from .arith import primes_up_to

    for p in primes_up_to(up_to):
        if p not in f.eigenvalues:
            f.eigenvalues[p] = hecke_eigenvalue(phi, p)


def rational_eigensystems(space: ModularSymbolSpace, sign: int, nprimes: int = 3):
    """Rational Hecke eigensystems on the sign subspace (search helper).

    Returns a list of dicts {p: a_p} for the first few primes, one entry per
    one-dimensional rational joint eigensystem found.
    """
    sub = sign_subspace(space, sign)
    n = len(space.basis)
    primes = []
    p = 2
    while len(primes) < nprimes:
        if space.M % p:
            primes.append(p)
        p += 1
    systems = [({}, sub)]
    for p in primes:
        mat = space.hecke_matrix(("T", p))
        new_systems = []
        for assign, vecs in systems:
            if not vecs:
                continue
            restricted = []
            for v in vecs:
                restricted.append(mat_vec(mat, v))
            # eigenvalues of the restriction
            coords = [solve_in_span(vecs, w) for w in restricted]
            A = [[coords[j][i] for j in range(len(vecs))] for i in range(len(vecs))]
            for lam in sorted(set(rational_roots(charpoly(A)))):
                rows = [
                    [A[i][j] - (lam if i == j else 0) for j in range(len(vecs))]
                    for i in range(len(vecs))
                ]
                ker = kernel_basis(
                    [[rows[i][j] for i in range(len(vecs))] for j in range(len(vecs))],
                    len(vecs),
                )
                newvecs = [
                    [
                        sum(kv[i] * vecs[i][j] for i in range(len(vecs)))
                        for j in range(n)
                    ]
                    for kv in ker
                ]
                new_systems.append(({**assign, p: lam}, newvecs))
        systems = new_systems
    return [assign for assign, vecs in systems if len(vecs) == 1]


# ---------------------------------------------------------------------------
# twisted algebraic L-values (Birch-type sums)
# ---------------------------------------------------------------------------


def twisted_lvalue_alg(phi: Symbol, psi: CharacterSpec, j: int) -> Fraction:
    """The algebraic twisted L-value attached to a normalized eigensymbol.

    Equals c^(j-1) (j-1)! g(psi) L(f, psi, j) / ((2 pi i)^j Omega^s) under
    the module's period normalization, where c is the conductor of the
    primitive quadratic psi, 1 <= j <= 2k-1, and s = psi(-1) (-1)^(j-1)
    must match the sign of phi (else a flagged zero is returned).
    """
    if psi.order > 2:
        raise NotImplementedError("characters of order > 2 are out of scope here")
    if not psi.is_primitive:
        raise ValueError("psi must be primitive")
    r = phi.space.r
    if not (1 <= j <= r + 1):
        raise ValueError("j outside the critical strip")
    needed = psi.parity * (-1) ** (j - 1)
    if phi.sign and phi.sign != needed:
        warnings.warn(
            f"sign mismatch: symbol sign {phi.sign}, twist needs {needed}; "
            "returning the flagged zero"
        )
        return Fraction(0)
    c = psi.conductor
    total = Fraction(0)
    for a in range(c):
        if gcd(a, c) != 1 and c > 1:
            continue
        chi_a = psi(a) if c > 1 else 1
        if chi_a == 0:
            continue
        D = Divisor.path((a, c), INF)  # {infinity} - {a/c}
        val = phi.evaluate(D)
        total += chi_a * pairing(val, dual_twist_poly(c, a, j, r))
    return (-1) ** j * total


# ---------------------------------------------------------------------------
# dimension oracle (classical formulas, used only to cross-check ranks)
# ---------------------------------------------------------------------------


def index_mu(M: int) -> int:
    out = M
    for p, _ in factor(M):
        out = out // p * (p + 1)
    return out if M > 1 else 1


def num_cusps(M: int) -> int:
    from .arith import divisors as _div
    from math import gcd as _gcd

    tot = 0
    for d in _div(M):
        tot += _euler_phi(_gcd(d, M // d))
    return tot


def _euler_phi(n: int) -> int:
    out = n
    for p, _ in factor(n):
        out = out // p * (p - 1)
    return out if n >= 1 else 0


def dim_cusp_forms(M: int, weight: int) -> int:
    """dim S_weight(Gamma0(M)) for even weight >= 2."""
    if weight % 2 or weight < 2:
        raise ValueError("even weight >= 2 only")
    mu = index_mu(M)
    eps_inf = num_cusps(M)
    eps2 = 0 if M % 4 == 0 else _prod(1 + kronecker(-4, p) for p, _ in factor(M))
    eps3 = 0 if M % 9 == 0 else _prod(1 + kronecker(-3, p) for p, _ in factor(M))
    if M == 1:
        eps2, eps3 = 1, 1
    g = 1 + Fraction(mu, 12) - Fraction(eps2, 4) - Fraction(eps3, 3) - Fraction(
        eps_inf, 2
    )
    if weight == 2:
        return int(g)
    k = weight
    d = (
        (k - 1) * (g - 1)
        + (Fraction(k, 2) - 1) * eps_inf
        + (k // 4) * eps2
        + (k // 3) * eps3
    )
    return int(d)


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


def expected_symbol_dimension(M: int, weight: int) -> int:
    """2 dim S + Eisenstein rank (cusps - 1 in weight 2, cusps otherwise)."""
    e = num_cusps(M) - 1 if weight == 2 else num_cusps(M)
    return 2 * dim_cusp_forms(M, weight) + e
