"""Dirichlet characters: quadratic ones via Kronecker symbols, general ones
from explicit value tables in cyclotomic scalars."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import is_fundamental_discriminant, kronecker
from .cyclotomic import CycScalar


@dataclass(frozen=True)
class CharacterSpec:
    """A Dirichlet character mod `modulus`.

    For order <= 2 the value table is integer-valued (+-1/0) via a
    fundamental discriminant; general characters carry an explicit table
    on (Z/modulus)^* with CycScalar entries.
    """

    modulus: int
    conductor: int
    disc: int | None = None  # fundamental discriminant when order <= 2
    table: tuple | None = None  # CycScalar values indexed by residues

    def __post_init__(self):
        if self.disc is None and self.table is None:
            raise ValueError("need a discriminant or a value table")
        if self.disc is not None and not is_fundamental_discriminant(self.disc):
            raise ValueError(f"{self.disc} is not a fundamental discriminant")

    # -- constructors -------------------------------------------------------
    @staticmethod
    def trivial(modulus: int = 1) -> "CharacterSpec":
        return CharacterSpec(modulus=modulus, conductor=1, disc=1)

    @staticmethod
    def quadratic(disc: int, modulus: int | None = None) -> "CharacterSpec":
        """Kronecker character of a fundamental discriminant, possibly
        viewed at a larger modulus."""
        cond = 1 if disc == 1 else abs(disc)
        modulus = modulus or cond
        if modulus % cond:
            raise ValueError("modulus must be a multiple of the conductor")
        return CharacterSpec(modulus=modulus, conductor=cond, disc=disc)

    # -- evaluation ----------------------------------------------------------
    def __call__(self, n: int):
        if gcd(n, self.modulus) != 1:
            return 0 if self.disc is not None else CycScalar.from_rational(0)
        if self.disc is not None:
            return kronecker(self.disc, n)
        return self.table[n % self.modulus]

    @property
    def order(self) -> int:
        if self.disc is not None:
            return 1 if self.disc == 1 else 2
        o = 1
        for n in range(2, self.modulus + 1):
            if gcd(n, self.modulus) == 1:
                v = self.table[n % self.modulus]
                k = 1
                acc = v
                while not acc == CycScalar.from_rational(1):
                    acc = acc * v
                    k += 1
                o = o * k // gcd(o, k)
        return o

    @property
    def parity(self) -> int:
        """chi(-1)."""
        v = self(-1 % self.modulus) if self.modulus > 1 else self(1)
        if isinstance(v, CycScalar):
            return 1 if v == CycScalar.from_rational(1) else -1
        return v if self.modulus > 1 else 1

    @property
    def is_primitive(self) -> bool:
        return self.modulus == self.conductor

    def primitive_part(self) -> "CharacterSpec":
        if self.disc is not None:
            return CharacterSpec.quadratic(self.disc)
        raise NotImplementedError("primitive part only for quadratic characters")

    def bar(self) -> "CharacterSpec":
        """Complex conjugate character."""
        if self.disc is not None:
            return self
        return CharacterSpec(
            modulus=self.modulus,
            conductor=self.conductor,
            table=tuple(
                v.conjugate() if isinstance(v, CycScalar) else v for v in self.table
            ),
        )


def quadratic_product_disc(d1: int, d2: int) -> int:
    """Fundamental discriminant of the product character chi_{d1} chi_{d2},
    defined when it is again quadratic (always, for coprime conductors)."""
    from .arith import squarefree_part

    prod = d1 * d2
    s = squarefree_part(prod)
    if s % 4 in (0, 1):
        return s
    return 4 * s
