"""Interpolation polynomials in L(inf Q)[Z] via the module Groebner basis.

Z-degree bounded polynomials are identified with vectors in F_q[x_1]^s,
s = a_1(ell + 1): the term x_1^i y_j Z^k sits at 0-based position j + k*a_1
with x_1-degree i and weight i*a_1 + b_j + k*u.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import upoly
from .code import CodeSpec, compute_hr
from .curve import NEG_INF, FunElem
from .errors import InvariantError
from .field import CostCounter
from .groebner import OrderSpec, algorithm_g, ind, leading_term, minimal_element
from .local import AtLeast, Place, valuation_at

__all__ = [
    "ZPoly",
    "interp_order",
    "build_generators",
    "zpoly_to_modvec",
    "modvec_to_zpoly",
    "interpolation_basis",
    "interpolate",
    "verify_multiplicity",
    "check_params",
]


class ZPoly:
    """sum_k coeffs[k] Z^k with coefficients in L(inf Q); Z carries weight u."""

    __slots__ = ("curve", "coeffs", "u")

    def __init__(self, curve, coeffs, u: int):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.curve = curve
        self.coeffs = coeffs
        self.u = u

    @classmethod
    def Z(cls, curve, u):
        return cls(curve, [curve.zero(), curve.one()], u)

    @classmethod
    def const(cls, a: FunElem, u):
        return cls(a.curve, [a], u)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.curve.zero()
        a = self.coeffs + [z] * (n - len(self.coeffs))
        b = other.coeffs + [z] * (n - len(other.coeffs))
        return ZPoly(self.curve, [x + y for x, y in zip(a, b)], self.u)

    def __neg__(self):
        return ZPoly(self.curve, [-c for c in self.coeffs], self.u)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FunElem):
            return ZPoly(self.curve, [c * other for c in self.coeffs], self.u)
        if self.is_zero() or other.is_zero():
            return ZPoly(self.curve, [], self.u)
        out = [self.curve.zero() for _ in range(self.degree + other.degree + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ZPoly(self.curve, out, self.u)

    def shift_z(self, k: int) -> "ZPoly":
        return ZPoly(self.curve, [self.curve.zero()] * k + self.coeffs, self.u)

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def weight(self):
        """max over terms x_1^i y_j Z^k of i*a_1 + b_j + k*u; NEG_INF for zero."""
        best = NEG_INF
        for k, c in enumerate(self.coeffs):
            po = c.pole_order()
            if po != NEG_INF:
                best = max(best, po + k * self.u)
        return best

    def __call__(self, f: FunElem) -> FunElem:
        """Horner evaluation Q(f) in L(inf Q)."""
        acc = self.curve.zero()
        for c in reversed(self.coeffs):
            acc = acc * f + c
        return acc

    def taylor_shift(self, c: int) -> list[FunElem]:
        """Coefficients alpha_j of Q(Z + c) = sum_j alpha_j Z^j for a constant c."""
        F = self.curve.field
        out = []
        for j in range(len(self.coeffs)):
            acc = self.curve.zero()
            for k in range(j, len(self.coeffs)):
                binom = F.from_int(comb(k, j))
                if binom:
                    acc = acc + self.coeffs[k].scale(F.mul(binom, F.pow(c, k - j)))
            out.append(acc)
        return out

    def __repr__(self):
        return " + ".join(f"({c})*Z^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()) or "0"

    def lines(self) -> list[str]:
        return [f"Z^{k} : {c}" for k, c in enumerate(self.coeffs) if not c.is_zero()]


def check_params(m: int, ell: int):
    if m < 1:
        raise ValueError(f"multiplicity m must be >= 1, got {m}")
    if ell < m:
        raise ValueError(f"Z-degree bound ell = {ell} must be >= m = {m}")


def interp_order(code: CodeSpec, ell: int) -> OrderSpec:
    c = code.curve
    return OrderSpec(c.a1, tuple(b + k * code.u for k in range(ell + 1) for b in c.apery_b))


def zpoly_to_modvec(p: ZPoly, ell: int):
    a1 = p.curve.a1
    if p.degree > ell:
        raise ValueError(f"Z-degree {p.degree} exceeds ell = {ell}")
    vec = [[] for _ in range(a1 * (ell + 1))]
    for k, c in enumerate(p.coeffs):
        for j, comp in enumerate(c.comps):
            vec[j + k * a1] = list(comp)
    return vec


def modvec_to_zpoly(vec, curve, u: int) -> ZPoly:
    a1 = curve.a1
    if len(vec) % a1:
        raise ValueError("module vector length is not a multiple of a_1")
    coeffs = [curve.from_modvec(vec[k * a1:(k + 1) * a1]) for k in range(len(vec) // a1)]
    return ZPoly(curve, coeffs, u)


def build_generators(code: CodeSpec, h: FunElem, m: int, ell: int):
    """ZPoly generators of I_{r,m,ell}, ordered so that generator i has ind i.

    For i = 0..m:  (Z - h)^(m-i) f^i y_j; for k = 1..ell-m: Z^k (Z - h)^m y_j.
    """
    if m < 0 or ell < m:
        raise ValueError(f"need 0 <= m <= ell, got m={m}, ell={ell}")
    curve, u, a1 = code.curve, code.u, code.curve.a1
    base = ZPoly(curve, [-h, curve.one()], u)
    powers = [ZPoly.const(curve.one(), u)]
    for _ in range(m):
        powers.append(powers[-1] * base)
    f_pow = [curve.one()]
    for _ in range(m):
        f_pow.append(f_pow[-1] * code.f)
    gens = []
    for i in range(m + 1):
        for j in range(a1):
            gens.append(powers[m - i] * (f_pow[i] * curve.y(j)))
    for k in range(1, ell - m + 1):
        for j in range(a1):
            gens.append(powers[m].shift_z(k) * curve.y(j))
    s = a1 * (ell + 1)
    by_ind = [None] * s
    for g in gens:
        i = ind(zpoly_to_modvec(g, ell))
        if by_ind[i] is not None:
            raise InvariantError(f"two generators share ind {i}")
        by_ind[i] = g
    return by_ind


@dataclass
class InterpolationRun:
    generators: list
    basis: list
    order: OrderSpec
    h: FunElem
    counter: CostCounter


def interpolation_basis(code: CodeSpec, r, m: int, ell: int, counter=None) -> InterpolationRun:
    check_params(m, ell)
    counter = counter if counter is not None else CostCounter()
    h = compute_hr(code, r)
    gens = build_generators(code, h, m, ell)
    order = interp_order(code, ell)
    vecs = [zpoly_to_modvec(g, ell) for g in gens]
    basis = algorithm_g(vecs, order, code.field, counter)
    return InterpolationRun(gens, basis, order, h, counter)


def interpolate(code: CodeSpec, r, m: int, ell: int, counter=None) -> ZPoly:
    """Minimal-weight nonzero element of I_{r,m,ell}, monic in its leading term."""
    run = interpolation_basis(code, r, m, ell, counter)
    vec = minimal_element(run.basis, run.order, code.field)
    return modvec_to_zpoly(vec, code.curve, code.u)


def verify_multiplicity(Q: ZPoly, P: Place, r_i: int, m: int, precision: int | None = None) -> bool:
    """True iff Q(Z + r_i) = sum alpha_j Z^j has v_P(alpha_j) >= m - j for every j < m."""
    ell = max(Q.degree, m)
    N = precision or m + ell + 2
    limit = 4 * (m + ell)
    alphas = Q.taylor_shift(r_i)
    for j in range(m):
        if j >= len(alphas) or alphas[j].is_zero():
            continue
        need = m - j
        prec = N
        while True:
            v = valuation_at(alphas[j], P, prec)
            if not isinstance(v, AtLeast) or v >= need:
                break
            if prec >= limit:
                raise InvariantError(f"series precision {prec} insufficient at {P}")
            prec = min(2 * prec, limit)
        if v < need:
            return False
    return True
