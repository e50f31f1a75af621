"""The ring L(inf Q) = F_q[X_1..X_t]/I of a curve given in standard form.

A curve arrives with its weights a_1..a_t (pole orders of x_1..x_t at Q) and
the reduced Groebner basis of I under the weighted reverse-lex order.  Every
footprint monomial then has the shape x_1^i * y_j, where y_0..y_{a_1-1} are
the monomials realizing the Apery set of the semigroup modulo a_1.  Ring
elements are stored in that free F_q[x_1]-module form: a tuple of a_1
univariate polynomials, component j holding the coefficient of y_j.
"""

from __future__ import annotations

import math
from itertools import combinations
from math import gcd
from functools import reduce

from . import upoly
from .errors import CurveError, InvariantError, Issue
from .field import GF
from .semigroup import NumericalSemigroup

__all__ = [
    "Curve",
    "FunElem",
    "mono_weight",
    "mono_cmp",
    "NEG_INF",
]

NEG_INF = -math.inf


def mono_weight(exps, weights) -> int:
    return sum(a * e for a, e in zip(weights, exps))


def mono_key(exps, weights):
    """Sort key realizing the weighted reverse-lex order (larger key = larger monomial)."""
    return (mono_weight(exps, weights), tuple(-e for e in exps))


def mono_cmp(m1, m2, weights) -> int:
    """Compare two exponent tuples: -1, 0 or 1.

    Higher weight wins; on a weight tie the tuple with the smaller entry at
    the first differing coordinate is the larger monomial.
    """
    k1, k2 = mono_key(m1, weights), mono_key(m2, weights)
    return (k1 > k2) - (k1 < k2)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exps_of_weight(weights, w):
    """All exponent tuples of exactly weight w."""
    if len(weights) == 1:
        if w % weights[0] == 0:
            yield (w // weights[0],)
        return
    a = weights[0]
    for e in range(w // a + 1):
        for rest in _exps_of_weight(weights[1:], w - a * e):
            yield (e,) + rest


class Curve:
    """A curve in standard form (the CurveSpec of the design).

    Parameters
    ----------
    field : GF
    weights : sequence of int
        a_1..a_t; the first one is the x_1 weight and the module rank.
    ideal_basis : list of dict
        Each polynomial maps exponent tuples to field codes.
    genus : int
        Cross-checked against the gap count of the semigroup <weights>.
    """

    def __init__(self, field: GF, weights, ideal_basis, genus: int, name: str = ""):
        self.field = field
        self.name = name
        self.weights = tuple(int(a) for a in weights)
        self.t = len(self.weights)
        self.a1 = self.weights[0]
        self.genus = int(genus)
        self.ideal_basis = [
            {tuple(e): c for e, c in poly.items() if c} for poly in ideal_basis
        ]
        self._series_cache = {}
        issues = self._validate()
        if issues:
            raise CurveError(issues)
        self._build_products()

    # -- validation -------------------------------------------------------

    def _validate(self) -> list[Issue]:
        issues = []
        F, w = self.field, self.weights
        if min(w) <= 0 or reduce(gcd, w) != 1:
            issues.append(Issue("weights", "weights", f"{w} must be positive with gcd 1"))
            return issues
        self.semigroup = NumericalSemigroup(w)
        if self.semigroup.genus != self.genus:
            issues.append(Issue(
                "genus", "genus",
                f"supplied genus {self.genus} but <{', '.join(map(str, w))}> has "
                f"{self.semigroup.genus} gaps"))
        lms = []
        for k, poly in enumerate(self.ideal_basis):
            where = f"ideal_basis[{k}]"
            if not poly:
                issues.append(Issue("format", where, "zero polynomial"))
                lms.append(None)
                continue
            for e, c in poly.items():
                if len(e) != self.t:
                    issues.append(Issue("format", where, f"exponent {list(e)} has wrong length"))
                if not (0 <= c < F.q):
                    issues.append(Issue("format", where, f"coefficient {c} not in {F}"))
            if any(len(e) != self.t for e in poly):
                lms.append(None)
                continue
            lm = max(poly, key=lambda e: mono_key(e, w))
            lms.append(lm)
            if lm[0] != 0:
                issues.append(Issue(
                    "groebner-leading-x1", where,
                    f"leading monomial {list(lm)} involves X_1"))
        if any(lm is None for lm in lms) or issues:
            self.leading = lms
            return issues
        self.leading = lms
        for k, poly in enumerate(self.ideal_basis):
            for e in poly:
                for kk, lm in enumerate(lms):
                    if (kk != k or e != lms[k]) and _divides(lm, e):
                        issues.append(Issue(
                            "groebner-not-reduced", f"ideal_basis[{k}]",
                            f"monomial {list(e)} divisible by leading monomial "
                            f"{list(lm)} of ideal_basis[{kk}]"))
        if issues:
            return issues
        for i, j in combinations(range(len(lms)), 2):
            s = self._spoly(i, j)
            if self._reduce(s):
                issues.append(Issue(
                    "groebner-basis", f"ideal_basis[{i}],[{j}]",
                    "S-polynomial does not reduce to zero"))
        issues.extend(self._validate_footprint())
        return issues

    def _validate_footprint(self) -> list[Issue]:
        w, lms, a1 = self.weights, self.leading, self.a1
        bounds = []
        for r in range(1, self.t):
            pure = [lm[r] for lm in lms
                    if lm[r] > 0 and all(lm[s] == 0 for s in range(self.t) if s != r)]
            if not pure:
                return [Issue("footprint", "ideal_basis",
                              f"no pure power of X_{r + 1} among leading monomials; "
                              "footprint is not a finite union of X_1-rays")]
            bounds.append(min(pure))
        free = []

        def rec(prefix, r):
            if r == self.t:
                e = (0,) + tuple(prefix)
                if not any(_divides(lm, e) for lm in lms):
                    free.append(e)
                return
            for k in range(bounds[r - 1]):
                rec(prefix + [k], r + 1)

        rec([], 1)
        self.apery_b = self.semigroup.apery(a1)
        self.apery_L = []
        for b in self.apery_b:
            self.apery_L.append(min(_exps_of_weight(w, b), key=lambda e: mono_key(e, w)))
        if sorted(free) != sorted(self.apery_L):
            return [Issue(
                "footprint", "ideal_basis",
                f"X_1-free footprint {sorted(free)} differs from Apery monomials "
                f"{self.apery_L}; the semigroup of the input is not <weights>")]
        self._y_index = {L[1:]: j for j, L in enumerate(self.apery_L)}
        return []

    # -- raw multivariate polynomials ------------------------------------

    def _divisor(self, e):
        for k, lm in enumerate(self.leading):
            if _divides(lm, e):
                return k
        return None

    def _reduce(self, poly) -> dict:
        """Remainder of poly modulo the ideal basis.

        Always reduces the largest reducible monomial first, using the first
        basis element (in file order) whose leading monomial divides it.
        """
        F, w = self.field, self.weights
        p = {tuple(e): c for e, c in poly.items() if c}
        while True:
            reducible = [e for e in p if self._divisor(e) is not None]
            if not reducible:
                return p
            e = max(reducible, key=lambda m: mono_key(m, w))
            k = self._divisor(e)
            g, lm = self.ideal_basis[k], self.leading[k]
            c = F.div(p[e], g[lm])
            d = tuple(x - y for x, y in zip(e, lm))
            for ge, gc in g.items():
                key = tuple(x + y for x, y in zip(ge, d))
                v = F.sub(p.get(key, 0), F.mul(c, gc))
                if v:
                    p[key] = v
                else:
                    p.pop(key, None)

    def _spoly(self, i, j) -> dict:
        F = self.field
        gi, gj = self.ideal_basis[i], self.ideal_basis[j]
        li, lj = self.leading[i], self.leading[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        out = {}
        for g, lm, sign in ((gi, li, 1), (gj, lj, -1)):
            d = tuple(x - y for x, y in zip(lcm, lm))
            inv = F.inv(g[lm])
            for e, c in g.items():
                key = tuple(x + y for x, y in zip(e, d))
                term = F.mul(inv, c)
                if sign < 0:
                    term = F.neg(term)
                out[key] = F.add(out.get(key, 0), term)
        return {e: c for e, c in out.items() if c}

    def normal_form(self, poly) -> "FunElem":
        """Reduce a multivariate polynomial ({exps: code}) into a FunElem."""
        return self.from_terms(self._reduce(poly))

    def from_terms(self, terms) -> "FunElem":
        comps = [[] for _ in range(self.a1)]
        for e, c in terms.items():
            if not c:
                continue
            j = self._y_index.get(tuple(e[1:]))
            if j is None:
                raise InvariantError(f"monomial {list(e)} lies outside the footprint")
            comp = comps[j]
            if len(comp) <= e[0]:
                comp.extend([0] * (e[0] + 1 - len(comp)))
            comp[e[0]] = self.field.add(comp[e[0]], c)
        return FunElem(self, [upoly.trim(c) for c in comps])

    def _build_products(self):
        a1 = self.a1
        self._prod = [[None] * a1 for _ in range(a1)]
        for i in range(a1):
            for j in range(i, a1):
                e = tuple(x + y for x, y in zip(self.apery_L[i], self.apery_L[j]))
                vec = [tuple(c) for c in self.normal_form({e: 1}).comps]
                self._prod[i][j] = self._prod[j][i] = vec
        self._unit = [tuple([(1,) if k == i else () for k in range(a1)]) for i in range(a1)]

    # -- ring structure ---------------------------------------------------

    def zero(self) -> "FunElem":
        return FunElem(self, [[] for _ in range(self.a1)])

    def one(self) -> "FunElem":
        return self.const(1)

    def const(self, c: int) -> "FunElem":
        comps = [[] for _ in range(self.a1)]
        if c:
            comps[0] = [c]
        return FunElem(self, comps)

    def x(self, r: int) -> "FunElem":
        """The coordinate function x_r (1-based)."""
        e = tuple(1 if s == r - 1 else 0 for s in range(self.t))
        return self.normal_form({e: 1})

    def y(self, j: int) -> "FunElem":
        comps = [[] for _ in range(self.a1)]
        comps[j] = [1]
        return FunElem(self, comps)

    def x1_poly(self, coeffs) -> "FunElem":
        """The element c(x_1) for a little-endian coefficient list."""
        comps = [[] for _ in range(self.a1)]
        comps[0] = upoly.trim(list(coeffs))
        return FunElem(self, comps)

    def apery_data(self):
        """List of (b_j, L_j, y_j) for j = 0..a_1-1."""
        return [(b, L, self.y(j)) for j, (b, L) in enumerate(zip(self.apery_b, self.apery_L))]

    def semigroup_dim(self, N: int) -> int:
        """dim L(NQ): pairs (i, j) with i*a_1 + b_j <= N."""
        if N < 0:
            return 0
        return sum((N - b) // self.a1 + 1 for b in self.apery_b if b <= N)

    def footprint(self, max_weight: int):
        """Footprint monomials of weight <= max_weight as (weight, j, i) in increasing weight.

        The monomial is x_1^i * y_j.
        """
        out = []
        for j, b in enumerate(self.apery_b):
            i = 0
            while b + i * self.a1 <= max_weight:
                out.append((b + i * self.a1, j, i))
                i += 1
        out.sort()
        return out

    def footprint_exps(self, j: int, i: int) -> tuple[int, ...]:
        L = self.apery_L[j]
        return (L[0] + i,) + tuple(L[1:])

    def monomial(self, j: int, i: int) -> "FunElem":
        comps = [[] for _ in range(self.a1)]
        comps[j] = [0] * i + [1]
        return FunElem(self, comps)

    def from_modvec(self, vec) -> "FunElem":
        if len(vec) != self.a1:
            raise InvariantError(f"module vector of length {len(vec)}, expected {self.a1}")
        return FunElem(self, [upoly.trim(list(c)) for c in vec])

    def random_element(self, rng, max_weight: int, density: float = 1.0) -> "FunElem":
        comps = [[] for _ in range(self.a1)]
        for _, j, i in self.footprint(max_weight):
            if rng.random() < density:
                c = rng.randrange(self.field.q)
                comp = comps[j]
                comp.extend([0] * (i + 1 - len(comp)))
                comp[i] = c
        return FunElem(self, [upoly.trim(c) for c in comps])

    def evaluate_poly(self, poly, coords) -> int:
        """Evaluate a raw multivariate polynomial at a coordinate tuple."""
        F = self.field
        acc = 0
        for e, c in poly.items():
            term = c
            for x, k in zip(coords, e):
                term = F.mul(term, F.pow(x, k))
            acc = F.add(acc, term)
        return acc

    def _y_value(self, j, coords) -> int:
        F = self.field
        v = 1
        for x, k in zip(coords, self.apery_L[j]):
            if k:
                v = F.mul(v, F.pow(x, k))
        return v

    def __repr__(self):
        return f"Curve({self.name or 'unnamed'}, {self.field}, weights={self.weights}, g={self.genus})"


class FunElem:
    """An element of L(inf Q), stored as sum_j c_j(x_1) * y_j."""

    __slots__ = ("curve", "comps")

    def __init__(self, curve: Curve, comps):
        self.curve = curve
        self.comps = tuple(tuple(c) for c in comps)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FunElem):
            return other
        if isinstance(other, int):
            return self.curve.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.curve.field
        return FunElem(self.curve, [upoly.add(F, a, b) for a, b in zip(self.comps, other.comps)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.curve.field
        return FunElem(self.curve, [upoly.sub(F, a, b) for a, b in zip(self.comps, other.comps)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        F = self.curve.field
        return FunElem(self.curve, [[F.neg(c) for c in a] for a in self.comps])

    def scale(self, c: int) -> "FunElem":
        F = self.curve.field
        return FunElem(self.curve, [upoly.scale(F, c, a) for a in self.comps])

    def shift_x1(self, d: int) -> "FunElem":
        return FunElem(self.curve, [upoly.shift(a, d) for a in self.comps])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, FunElem):
            return NotImplemented
        curve = self.curve
        F = curve.field
        out = [[] for _ in range(curve.a1)]
        prod_table = curve._prod
        for i, ci in enumerate(self.comps):
            if not ci:
                continue
            for j, dj in enumerate(other.comps):
                if not dj:
                    continue
                p = upoly.mul(F, ci, dj)
                for k, tk in enumerate(prod_table[i][j]):
                    if not tk:
                        continue
                    term = p if tk == (1,) else upoly.mul(F, p, tk)
                    out[k] = upoly.add(F, out[k], term)
        return FunElem(curve, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not in L(inf Q)")
        result, base = self.curve.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.curve.const(other)
        if not isinstance(other, FunElem):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __bool__(self):
        return any(self.comps)

    def is_zero(self) -> bool:
        return not any(self.comps)

    def pole_order(self):
        """-v_Q of the element; NEG_INF for zero."""
        a1, b = self.curve.a1, self.curve.apery_b
        best = NEG_INF
        for j, c in enumerate(self.comps):
            if c:
                best = max(best, (len(c) - 1) * a1 + b[j])
        return best

    def leading(self):
        """(pole order, coefficient) of the leading footprint term."""
        po = self.pole_order()
        if po == NEG_INF:
            return po, 0
        a1, b = self.curve.a1, self.curve.apery_b
        j = next(j for j in range(a1) if (po - b[j]) % a1 == 0)
        return po, self.comps[j][(po - b[j]) // a1]

    def terms(self) -> dict:
        """Footprint term map {exponent tuple: code}."""
        out = {}
        for j, c in enumerate(self.comps):
            for i, v in enumerate(c):
                if v:
                    out[self.curve.footprint_exps(j, i)] = v
        return out

    def to_modvec(self) -> list[list[int]]:
        return [list(c) for c in self.comps]

    def in_x1(self) -> bool:
        """True iff the element lies in F_q[x_1]."""
        return not any(self.comps[1:])

    def evaluate(self, coords) -> int:
        F = self.curve.field
        x1 = coords[0]
        acc = 0
        for j, c in enumerate(self.comps):
            if c:
                yv = self.curve._y_value(j, coords)
                acc = F.add(acc, F.mul(upoly.evaluate(F, c, x1), yv))
        return acc

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        terms = self.terms()
        w = self.curve.weights
        for e in sorted(terms, key=lambda e: mono_key(e, w), reverse=True):
            c = terms[e]
            mono = "*".join(
                f"x{r + 1}" + (f"^{k}" if k > 1 else "") for r, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

