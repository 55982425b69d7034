"""Exact dense linear algebra over Fraction.

Deterministic pivoting (first nonzero in column order) so reduced echelon
forms, kernels and solved coordinates are reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1, 1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix (rows may be empty)."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def solve_in_span(basis: list[list[Fraction]], target: list[Fraction]):
    """Coordinates of target in the span of basis vectors, or None.

    basis vectors are rows; returns x with sum x_i basis_i = target.
    """
    if not basis:
        return None if any(t != 0 for t in target) else []
    ncols = len(basis[0])
    aug = [[basis[i][c] for i in range(len(basis))] + [target[c]] for c in range(ncols)]
    red, pivots = rref(aug)
    n = len(basis)
    if n in pivots:
        return None  # inconsistent
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = red[i][n]
    # verify (defensive: basis need not have full column rank)
    for c in range(ncols):
        s = sum(x[i] * basis[i][c] for i in range(n))
        if s != target[c]:
            return None
    return x


def mat_vec(rows, v):
    return [sum(a * b for a, b in zip(row, v)) for row in rows]


def mat_mat(A, B):
    ncols = len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(ncols)]
        for i in range(len(A))
    ]


def charpoly(A):
    """Characteristic polynomial by the Faddeev–LeVerrier recurrence.

    Returns coefficients [c_0, ..., c_n] with p(x) = sum c_i x^i, monic.
    """
    n = len(A)
    I = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    Mk = I
    acc = []
    for k in range(1, n + 1):
        AM = mat_mat(A, Mk)
        ck = -Fraction(sum(AM[i][i] for i in range(n)), k)
        acc.append(ck)
        Mk = [[AM[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return list(reversed(acc)) + [Fraction(1)]


def rational_roots(poly):
    """All rational roots (with multiplicity) of a Fraction-coefficient poly."""
    from math import gcd as _gcd

    from .arith import divisors

    coeffs = poly[:]
    roots: list[Fraction] = []
    while len(coeffs) > 1:
        while coeffs and coeffs[0] == 0:
            roots.append(Fraction(0))
            coeffs = coeffs[1:]
        if len(coeffs) <= 1:
            break
        den = 1
        for c in coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        ic = [int(c * den) for c in coeffs]
        found = None
        for p in divisors(abs(ic[0])):
            for q in divisors(abs(ic[-1])):
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    if sum(c * r**i for i, c in enumerate(coeffs)) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        # synthetic division by (x - found)
        new = [Fraction(0)] * (len(coeffs) - 1)
        carry = Fraction(0)
        for i in range(len(coeffs) - 1, 0, -1):
            new[i - 1] = coeffs[i] + carry
            carry = new[i - 1] * found
        coeffs = new
    return roots
