"""Dense univariate polynomials over a GF, as little-endian coefficient lists.

The zero polynomial is the empty list; every other polynomial has a
nonzero last coefficient.  Functions return fresh lists.
"""

from __future__ import annotations

__all__ = ["trim", "deg", "add", "sub", "mul", "scale", "shift", "evaluate", "axpy"]


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a) -> int:
    return len(a) - 1


def add(F, a, b) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    fadd = F.add
    for i, c in enumerate(b):
        out[i] = fadd(out[i], c)
    return trim(out)


def sub(F, a, b) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    fsub = F.sub
    for i, c in enumerate(b):
        out[i] = fsub(out[i], c)
    return trim(out)


def mul(F, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    fadd, fmul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = fadd(out[i + j], fmul(x, y))
    return trim(out)


def scale(F, c: int, a) -> list[int]:
    if c == 0:
        return []
    fmul = F.mul
    return [fmul(c, x) if x else 0 for x in a]


def shift(a, d: int) -> list[int]:
    return [0] * d + list(a) if a else []


def axpy(F, a, c: int, d: int, b) -> list[int]:
    """Return ``a - c * x^d * b``; one multiplication per nonzero term of b."""
    out = list(a) + [0] * max(0, len(b) + d - len(a))
    fsub, fmul = F.sub, F.mul
    for i, y in enumerate(b):
        if y:
            out[i + d] = fsub(out[i + d], fmul(c, y))
    return trim(out)


def evaluate(F, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc
