"""Rational places, truncated power series at a place, and valuations.

At an affine rational place P the designated coordinate x_s gives the local
parameter t = x_s - c_s.  The remaining coordinates are recovered as power
series in t by Newton iteration on the curve relations, starting from the
coordinates of P and doubling the precision at every step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import linalg
from .errors import InvariantError, Issue

__all__ = [
    "Place",
    "LocalSeries",
    "AtLeast",
    "SingularPlaceError",
    "expand_coordinates",
    "expand_function",
    "valuation_at",
    "enumerate_places",
    "check_place",
]


class SingularPlaceError(ValueError):
    """The chosen coordinate is not a local parameter at the place."""


@dataclass(frozen=True)
class Place:
    """An affine rational point; ``lp`` is the 1-based index of the local-parameter coordinate."""

    coords: tuple[int, ...]
    lp: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))


@dataclass(frozen=True)
class LocalSeries:
    """sum_k coeffs[k] t^k + O(t^N) with N = len(coeffs)."""

    coeffs: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]


class AtLeast(int):
    """A valuation lower bound: every computed coefficient vanished."""

    def __repr__(self):
        return f"AtLeast({int(self)})"


# -- truncated series helpers ----------------------------------------------

def _smul(F, a, b, N):
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j in range(min(len(b), N - i)):
                y = b[j]
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _sadd(F, a, b):
    return [F.add(x, y) for x, y in zip(a, b)]


def _ssub(F, a, b):
    return [F.sub(x, y) for x, y in zip(a, b)]


def _sinv(F, a, N):
    """Inverse of a unit power series by the recursive coefficient formula."""
    inv0 = F.inv(a[0])
    out = [0] * N
    out[0] = inv0
    for k in range(1, N):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            if a[i] and out[k - i]:
                acc = F.add(acc, F.mul(a[i], out[k - i]))
        out[k] = F.neg(F.mul(inv0, acc))
    return out


def _ssolve(F, A, b, N):
    """Solve A x = b over power series mod t^N; A[:, :] must be invertible mod t."""
    n = len(A)
    M = [list(map(list, row)) + [list(rhs)] for row, rhs in zip(A, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c][0]), None)
        if piv is None:
            raise SingularPlaceError("Jacobian is singular at the place")
        M[c], M[piv] = M[piv], M[c]
        inv = _sinv(F, M[c][c], N)
        M[c] = [_smul(F, inv, e, N) for e in M[c]]
        for r in range(n):
            if r != c and any(M[r][c]):
                f = M[r][c]
                M[r] = [_ssub(F, e, _smul(F, f, pe, N)) for e, pe in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def _derivative(F, poly, r):
    out = {}
    for e, c in poly.items():
        k = e[r]
        if k:
            coef = F.mul(c, F.from_int(k))
            if coef:
                d = list(e)
                d[r] -= 1
                out[tuple(d)] = coef
    return out


def _eval_series(F, poly, powers, N):
    acc = [0] * N
    for e, c in poly.items():
        term = [c] + [0] * (N - 1)
        for r, k in enumerate(e):
            if k:
                term = _smul(F, term, powers[r](k), N)
        acc = _sadd(F, acc, term)
    return acc


class _Powers:
    def __init__(self, F, series, N):
        self.F, self.s, self.N = F, series, N
        self.cache = {0: [1] + [0] * (N - 1), 1: list(series[:N])}

    def __call__(self, k):
        if k not in self.cache:
            self.cache[k] = _smul(self.F, self(k - 1), self.s, self.N)
        return self.cache[k]


def _eval_at(curve, poly, X, N):
    F = curve.field
    pw = [_Powers(F, x, N) for x in X]
    return _eval_series(F, poly, [p.__call__ for p in pw], N)


# -- places ----------------------------------------------------------------

def _derivs(curve):
    if not hasattr(curve, "_derivs"):
        curve._derivs = [
            [_derivative(curve.field, g, r) for r in range(curve.t)] for g in curve.ideal_basis
        ]
    return curve._derivs


def _jacobian(curve, coords, lp):
    others = [r for r in range(curve.t) if r != lp - 1]
    D = _derivs(curve)
    return [[curve.evaluate_poly(D[k][r], coords) for r in others]
            for k in range(len(curve.ideal_basis))], others


def _pick_relations(curve, coords, lp):
    J, others = _jacobian(curve, coords, lp)
    F, need = curve.field, len(others)
    if need == 0:
        return [], others
    for rows in combinations(range(len(J)), need):
        if linalg.rank(F, [J[k] for k in rows]) == need:
            return list(rows), others
    return None, others


def on_curve(curve, coords) -> bool:
    return all(curve.evaluate_poly(g, coords) == 0 for g in curve.ideal_basis)


def check_place(curve, P: Place, where: str = "place") -> list[Issue]:
    issues = []
    if len(P.coords) != curve.t or any(not (0 <= c < curve.field.q) for c in P.coords):
        return [Issue("format", where, f"coordinates {list(P.coords)} invalid")]
    if not on_curve(curve, P.coords):
        issues.append(Issue("place-on-curve", where,
                            f"{list(P.coords)} does not satisfy the curve relations"))
        return issues
    if not (1 <= P.lp <= curve.t):
        issues.append(Issue("place-lp", where, f"lp index {P.lp} out of range 1..{curve.t}"))
    elif _pick_relations(curve, P.coords, P.lp)[0] is None:
        issues.append(Issue("place-lp", where,
                            f"x_{P.lp} - {P.coords[P.lp - 1]} is not a local parameter "
                            "(Jacobian of the other coordinates is rank deficient)"))
    return issues


def enumerate_places(curve):
    """Scan F_q^t for affine points on the curve.

    Returns (places, singular) where each place carries the smallest valid
    lp index and ``singular`` lists coordinate tuples admitting none.
    """
    places, singular = [], []
    for coords in product(range(curve.field.q), repeat=curve.t):
        if not on_curve(curve, coords):
            continue
        for lp in range(1, curve.t + 1):
            if _pick_relations(curve, coords, lp)[0] is not None:
                places.append(Place(coords, lp))
                break
        else:
            singular.append(coords)
    return places, singular


# -- expansions ---------------------------------------------------------------

def expand_coordinates(curve, P: Place, N: int) -> list[LocalSeries]:
    """Power series of every coordinate function in t = x_lp - c_lp, mod t^N."""
    key = ("coords", P, N)
    if key in curve._series_cache:
        return curve._series_cache[key]
    F = curve.field
    rows, others = _pick_relations(curve, P.coords, P.lp)
    if rows is None:
        raise SingularPlaceError(f"x_{P.lp} is not a local parameter at {list(P.coords)}")
    s = P.lp - 1
    X = [[c] + [0] * (N - 1) for c in P.coords]
    if N > 1:
        X[s][1] = 1
    D = _derivs(curve)
    rels = [curve.ideal_basis[k] for k in rows]
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        Xp = [x[:prec] for x in X]
        Fv = [_eval_at(curve, g, Xp, prec) for g in rels]
        J = [[_eval_at(curve, D[k][r], Xp, prec) for r in others] for k in rows]
        delta = _ssolve(F, J, Fv, prec)
        for d, r in zip(delta, others):
            X[r] = _ssub(F, X[r][:prec], d) + [0] * (N - prec)
        for k, g in enumerate(curve.ideal_basis):
            if any(_eval_at(curve, g, [x[:prec] for x in X], prec)):
                raise InvariantError(
                    f"relation {k} not satisfied mod t^{prec} at place {list(P.coords)}")
    out = [LocalSeries(tuple(x)) for x in X]
    curve._series_cache[key] = out
    return out


def _y_series(curve, P, N):
    key = ("y", P, N)
    if key not in curve._series_cache:
        X = [list(s.coeffs) for s in expand_coordinates(curve, P, N)]
        pw = [_Powers(curve.field, x, N) for x in X]
        ys = []
        for L in curve.apery_L:
            term = [1] + [0] * (N - 1)
            for r, k in enumerate(L):
                if k:
                    term = _smul(curve.field, term, pw[r](k), N)
            ys.append(term)
        curve._series_cache[key] = (X[0], ys)
    return curve._series_cache[key]


def expand_function(a, P: Place, N: int) -> LocalSeries:
    """Series of a ring element at P, mod t^N."""
    curve = a.curve
    F = curve.field
    if N <= 0:
        return LocalSeries(())
    x1, ys = _y_series(curve, P, N)
    acc = [0] * N
    for c, ys_j in zip(a.comps, ys):
        if not c:
            continue
        h = [0] * N
        for coef in reversed(c):
            h = _smul(F, h, x1, N)
            h[0] = F.add(h[0], coef)
        acc = _sadd(F, acc, _smul(F, h, ys_j, N))
    return LocalSeries(tuple(acc))


def valuation_at(a, P: Place, N: int):
    """v_P(a) if it is below N, else AtLeast(N)."""
    if a.is_zero():
        raise ValueError("valuation of the zero function is infinite")
    s = expand_function(a, P, N)
    for k, c in enumerate(s.coeffs):
        if c:
            return k
    return AtLeast(N)
