"""The projective line P^1(Z/MZ) with canonical representatives and SL2 lifts."""

from __future__ import annotations

from math import gcd

from .arith import xgcd


class P1:
    """Representatives of P^1(Z/MZ), indexable both ways.

    The canonical representative of a class is the lexicographically least
    pair among its unit scalings; this is simple and fast enough for the
    moduli used here.
    """

    def __init__(self, M: int):
        if M < 1:
            raise ValueError("M >= 1")
        self.M = M
        self._units = [t for t in range(1, M + 1) if gcd(t, M) == 1] or [1]
        seen = set()
        for u in range(M):
            for v in range(M):
                if gcd(gcd(u, v), M) != 1:
                    continue
                seen.add(self.reduce((u, v)))
        self._list = sorted(seen)
        self._index = {p: i for i, p in enumerate(self._list)}
        self._lifts = [self._lift(p) for p in self._list]

    def __len__(self):
        return len(self._list)

    def __iter__(self):
        return iter(self._list)

    def __getitem__(self, i):
        return self._list[i]

    def reduce(self, pair) -> tuple[int, int]:
        M = self.M
        if M == 1:
            return (0, 0)
        u, v = pair[0] % M, pair[1] % M
        if gcd(gcd(u, v), M) != 1:
            raise ValueError("pair not primitive mod M")
        return min(((t * u) % M, (t * v) % M) for t in self._units)

    def index(self, pair) -> int:
        return self._index[self.reduce(pair)]

    def lift(self, i_or_pair):
        """An SL2(Z) matrix (a, b; c, d) whose bottom row is in the class."""
        if isinstance(i_or_pair, int):
            return self._lifts[i_or_pair]
        return self._lifts[self.index(i_or_pair)]

    def _lift(self, pair):
        M = self.M
        c, d = pair
        if M == 1:
            return (1, 0, 0, 1)
        if c == 0:
            return (1, 0, 0, 1)  # class of (0, 1)
        for k in range(M + 1):
            dd = d + k * M
            if gcd(c, dd) == 1:
                _, x, y = xgcd(dd, -c)
                # x * dd + y * (-c) = 1, so det (x, y; c, dd) = 1
                return (x, y, c, dd)
        raise AssertionError("no coprime lift found")  # pragma: no cover
