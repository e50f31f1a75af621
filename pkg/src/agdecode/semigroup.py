"""Numerical semigroups given by generators, by direct enumeration."""

from __future__ import annotations

from functools import reduce
from math import gcd

__all__ = ["NumericalSemigroup"]


class NumericalSemigroup:
    """The additive monoid generated by positive integers with gcd 1.

    >>> S = NumericalSemigroup((3, 5, 7))
    >>> S.gaps
    (1, 2, 4)
    >>> S.apery(3)
    (0, 7, 5)
    """

    def __init__(self, generators):
        gens = tuple(int(a) for a in generators)
        if not gens or min(gens) <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise ValueError(f"generators {gens} have gcd > 1")
        self.generators = gens
        member = [True]
        run, x, a0 = 1, 0, min(gens)
        while run < a0:
            x += 1
            flag = any(x >= a and member[x - a] for a in gens)
            member.append(flag)
            run = run + 1 if flag else 0
        self._conductor = x - run + 1
        self.gaps = tuple(x for x in range(self._conductor) if not member[x])

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self._conductor

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (x >= self._conductor or x not in self.gaps)

    def elements_upto(self, N: int) -> list[int]:
        return [x for x in range(N + 1) if x in self]

    def count_upto(self, N: int) -> int:
        """#{h in S : h <= N}."""
        if N < 0:
            return 0
        return N + 1 - sum(1 for g in self.gaps if g <= N)

    def apery(self, a: int) -> tuple[int, ...]:
        """Smallest element in each residue class modulo a."""
        out = []
        for i in range(a):
            x = i
            while x not in self:
                x += a
            out.append(x)
        return tuple(out)
