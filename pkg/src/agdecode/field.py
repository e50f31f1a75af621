"""Exact arithmetic in GF(p^e) for small q.

Elements are plain integers ``0 <= code < q``.  A code is read as
little-endian base-p digits, the digits being the coefficients of a
polynomial over GF(p) reduced modulo the field's defining polynomial.
Code 0 is zero and code 1 is one.

Multiplication goes through log/antilog tables built once at construction;
addition goes through a precomputed table (XOR when p = 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

__all__ = ["GF", "CostCounter", "FieldError", "is_irreducible"]


class FieldError(ValueError):
    """Invalid field description."""


@dataclass
class CostCounter:
    """Tally of base-field multiplications; an inversion counts as one."""

    mults: int = 0

    def add(self, n: int = 1) -> None:
        self.mults += n


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(code % p)
        code //= p
    return out


def _undigits(digits, p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _poly_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic-at-top b over GF(p), little-endian lists."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db] if db else []


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    e = len(modulus) - 1
    if e < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod_p(modulus, divisor, p)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class GF:
    """The field GF(p^e) defined by ``modulus`` (little-endian base-p digits).

    >>> F = GF(2, 3, (1, 1, 0, 1))
    >>> F.mul(2, 4)  # x * x^2 = x^3 = x + 1
    3
    """

    p: int
    e: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        p, e = self.p, self.e
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be >= 1")
        mod = tuple(int(c) % p for c in self.modulus)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {e}: {self.modulus}")
        if not is_irreducible(list(mod), p):
            raise FieldError(f"modulus {list(mod)} is reducible over GF({p})")
        object.__setattr__(self, "modulus", mod)
        q = p**e
        object.__setattr__(self, "q", q)
        if q > 1 << 16:
            raise FieldError("fields larger than 2^16 are not supported")
        self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        digits = [_digits(c, p, e) for c in range(q)]
        if p == 2:
            add = [[a ^ b for b in range(q)] for a in range(q)]
        else:
            add = [
                [_undigits([(x + y) % p for x, y in zip(da, db)], p) for db in digits]
                for da in digits
            ]
        neg = [_undigits([(-x) % p for x in d], p) for d in digits]

        def polymul(a, b):
            prod = [0] * (2 * e)
            for i, x in enumerate(digits[a]):
                if x:
                    for j, y in enumerate(digits[b]):
                        prod[i + j] = (prod[i + j] + x * y) % p
            return _undigits(_poly_mod_p(prod, list(self.modulus), p) + [0] * e, p)

        # find a generator of the multiplicative group
        order = q - 1
        prime_factors = [d for d in range(2, order + 1) if order % d == 0
                         and all(d % k for k in range(2, int(d**0.5) + 1))]
        gen = None
        for g in range(2 if q > 2 else 1, q):
            ok = True
            for r in prime_factors:
                x = 1
                for _ in range(order // r):
                    x = polymul(x, g)
                if x == 1:
                    ok = False
                    break
            if ok:
                gen = g
                break
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = polymul(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "generator", gen)

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e, self.modulus) == (
            other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def check(self, a: int) -> int:
        if not (isinstance(a, int) and 0 <= a < self.q):
            raise FieldError(f"{a!r} is not an element code of {self}")
        return a

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError(f"negative power of zero in {self}")
            return 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    def counting(self, counter: CostCounter) -> "CountingField":
        return CountingField(self, counter)


class CountingField:
    """View of a field whose ``mul``/``inv`` tally into a CostCounter."""

    def __init__(self, base: GF, counter: CostCounter):
        self.base = base
        self.counter = counter
        self.q = base.q
        self.p = base.p
        self.add = base.add
        self.sub = base.sub
        self.neg = base.neg

    def mul(self, a: int, b: int) -> int:
        self.counter.mults += 1
        return self.base.mul(a, b)

    def inv(self, a: int) -> int:
        self.counter.mults += 1
        return self.base.inv(a)
