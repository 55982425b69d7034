"""Elementary integer arithmetic helpers: gcds, factorization, Kronecker symbol.

Everything here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod(a: int, m: int) -> int:
    g, x, _ = xgcd(a, m)
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x % m


def crt(pairs):
    """Chinese remainder: pairs of (residue, modulus) with coprime moduli."""
    x, m = 0, 1
    for r, n in pairs:
        g, s, _ = xgcd(m, n)
        if g != 1:
            raise ValueError("moduli not coprime")
        x = (x + (r - x) * s % n * m) % (m * n)
        m *= n
    return x % m


@lru_cache(maxsize=None)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ((p, e), ...). n may be negative."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factor(n)]


def moebius(t: int) -> int:
    """Moebius function of a positive integer."""
    if t < 1:
        raise ValueError("moebius defined for positive integers")
    if t == 1:
        return 1
    mu = 1
    for _, e in factor(t):
        if e > 1:
            return 0
        mu = -mu
    return mu


def divisors(n: int) -> list[int]:
    n = abs(n)
    out = [1]
    for p, e in factor(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extended to all integers n.

    Conventions: (a/0) = 1 if a = +-1 else 0; (a/-1) = 1 if a >= 0 else -1;
    (a/2) = 0 for even a, else +1 for a = +-1 mod 8 and -1 otherwise;
    multiplicative in n.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    res = 1
    if n < 0:
        n = -n
        if a < 0:
            res = -res
    # strip factors of two from n
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            res = -res
    a %= n
    # Jacobi symbol on odd n via reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


def is_discriminant(d: int) -> bool:
    return d % 4 in (0, 1) and d != 0


def is_fundamental_discriminant(d: int) -> bool:
    """1 counts as fundamental (trivial twist)."""
    if d == 1:
        return True
    if d == 0 or not is_discriminant(d):
        return False
    if d % 4 == 1:
        return _squarefree(d)
    m = d // 4
    return _squarefree(m) and m % 4 in (2, 3)


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor(n))


def prime_discriminant_parts(d: int) -> list[int]:
    """Factor a fundamental discriminant into prime discriminants.

    E.g. 12 -> [-4, -3], -120 -> [8, -3, 5] (order follows the odd primes,
    with the even part first when present).
    """
    if not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a fundamental discriminant")
    if d == 1:
        return []
    parts = []
    rest = d
    if d % 4 == 0:
        m = d // 4
        if m % 2 == 0:  # 8 | d
            two_part = 8 if (m // 2) % 4 == 1 else -8
        else:
            two_part = -4
        parts.append(two_part)
        rest = d // two_part
    for p, _ in factor(rest):
        if p == 2:
            continue
        pstar = p if p % 4 == 1 else -p
        parts.append(pstar)
    return parts


def chi_quadratic(d: int):
    """The quadratic character attached to a fundamental discriminant."""
    return lambda n: kronecker(d, n)


def squarefree_part(n: int) -> int:
    s = 1
    for p, e in factor(n):
        if e % 2:
            s *= p
    return s if n > 0 else -s


def square_divisors(n: int) -> list[int]:
    """Positive d with d^2 | n."""
    n = abs(n)
    out = [1]
    for p, e in factor(n):
        out = [d * p**i for d in out for i in range(e // 2 + 1)]
    return sorted(out)


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by a plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    p = 2
    while p * p <= n:
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        p += 1
    return [i for i in range(2, n + 1) if sieve[i]]


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
