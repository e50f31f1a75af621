"""Groebner bases of F_q[x]-submodules of F_q[x]^s under a weighted position order.

The term x^d e_i has weight d*u_x + u_pos[i]; heavier terms are larger and
on equal weight the larger position index wins.  Positions are 0-based here
(position i is the basis vector e_{i+1}).  Module vectors are lists of s
univariate polynomials in the upoly representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import upoly
from .errors import InvariantError, SearchSpaceTooLarge
from .field import CostCounter

__all__ = [
    "OrderSpec",
    "leading_term",
    "module_cmp",
    "ind",
    "algorithm_g",
    "minimal_element",
    "brute_force_minimal",
    "quotient_dim",
    "dump_basis",
    "triangular_coordinates",
]


@dataclass(frozen=True)
class OrderSpec:
    u_x: int
    u_pos: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u_pos", tuple(self.u_pos))
        if self.u_x <= 0 or any(w < 0 for w in self.u_pos):
            raise ValueError("x weight must be positive and position weights nonnegative")

    @property
    def s(self) -> int:
        return len(self.u_pos)

    def key(self, deg: int, pos: int):
        return (deg * self.u_x + self.u_pos[pos], pos)


def module_cmp(term1, term2, order: OrderSpec) -> int:
    """Compare module monomials given as (degree, position)."""
    k1, k2 = order.key(*term1), order.key(*term2)
    return (k1 > k2) - (k1 < k2)


def leading_term(v, order: OrderSpec):
    """(weight, position, degree) of the largest term, or None for zero."""
    best = None
    for i, c in enumerate(v):
        if c:
            k = order.key(len(c) - 1, i)
            if best is None or k > best[:2]:
                best = (k[0], k[1], len(c) - 1)
    return best


def weight(v, order: OrderSpec):
    lt = leading_term(v, order)
    return None if lt is None else lt[0]


def ind(v) -> int:
    """Largest position holding a nonzero component; -1 for zero."""
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            return i
    return -1


def algorithm_g(gens, order: OrderSpec, field, counter: CostCounter | None = None):
    """Groebner basis of the module spanned by gens, where ind(gens[i]) = i.

    Whenever two elements share a leading position the larger one is replaced
    by ``a - c x^delta b``, cancelling its leading term.  Elements are placed
    in increasing index order; a displaced element is reduced and re-placed
    before the next index is taken.  Every base-field multiplication and
    inversion performed is tallied in ``counter``.

    Returns the basis sorted by leading position.
    """
    s = order.s
    if len(gens) != s:
        raise ValueError(f"expected {s} generators, got {len(gens)}")
    for i, g in enumerate(gens):
        if len(g) != s:
            raise ValueError(f"generator {i} has {len(g)} components, expected {s}")
        if ind(g) != i:
            raise ValueError(f"generator {i} has ind {ind(g)}; Algorithm G needs ind(g_i) = i")
    F = field.counting(counter) if counter is not None else field
    basis = [[list(c) for c in g] for g in gens]
    lts = [leading_term(g, order) for g in basis]
    owner = [None] * s

    def reduce(a, b):
        """basis[a] -= c x^delta basis[b], with the leading terms at one position."""
        _, pos, da = lts[a]
        db = lts[b][2]
        va, vb = basis[a], basis[b]
        c = F.mul(va[pos][-1], F.inv(vb[pos][-1]))
        delta = da - db
        for i, comp in enumerate(vb):
            if comp:
                va[i] = upoly.axpy(F, va[i], c, delta, comp)
        lts[a] = leading_term(va, order)
        if lts[a] is None:
            raise InvariantError("a generator reduced to zero; generators are dependent")

    for start in range(s):
        a = start
        while True:
            pos = lts[a][1]
            b = owner[pos]
            if b is None:
                owner[pos] = a
                break
            if lts[a][2] >= lts[b][2]:
                reduce(a, b)
            else:
                reduce(b, a)
                owner[pos] = a
                a = b
    return [basis[owner[p]] for p in range(s)]


def minimal_element(basis, order: OrderSpec, field):
    """The basis element with the smallest leading term, scaled to be monic."""
    best = min(basis, key=lambda v: leading_term(v, order)[:2])
    _, pos, _ = leading_term(best, order)
    inv = field.inv(best[pos][-1])
    return [upoly.scale(field, inv, c) for c in best]


def quotient_dim(basis, order: OrderSpec) -> int:
    """Number of standard monomials: sum of leading degrees over the positions."""
    by_pos = {}
    for v in basis:
        _, pos, d = leading_term(v, order)
        by_pos[pos] = min(d, by_pos.get(pos, d))
    missing = [p for p in range(order.s) if p not in by_pos]
    if missing:
        raise ValueError(f"positions {missing} carry no leading term; quotient is infinite")
    return sum(by_pos.values())


def dump_basis(basis, order: OrderSpec) -> str:
    """Text rows ``pos:poly`` (1-based positions, little-endian coefficients)."""
    lines = []
    for v in basis:
        _, pos, d = leading_term(v, order)
        comps = " ".join(f"{i + 1}:{list(c)}" for i, c in enumerate(v) if c)
        lines.append(f"lead {pos + 1}^{d} | {comps}")
    return "\n".join(lines)


def _degree_bounds(gens, order: OrderSpec, W: int):
    """Degree caps on the coefficients p_i of any member sum p_i g_i of weight <= W.

    ind(g_i) = i makes the generators triangular, so the p_i are determined
    from the top position down and their degrees are bounded in turn.
    """
    s = order.s
    E = [(W - order.u_pos[i]) // order.u_x if W >= order.u_pos[i] else -1 for i in range(s)]
    D = [-1] * s
    for i in range(s - 1, -1, -1):
        top = E[i]
        for k in range(i + 1, s):
            if D[k] >= 0 and gens[k][i]:
                top = max(top, D[k] + len(gens[k][i]) - 1)
        D[i] = top - (len(gens[i][i]) - 1) if top >= 0 else -1
    return D


def brute_force_minimal(gens, order: OrderSpec, field, W: int, max_entries: int = 10**6):
    """Minimal nonzero module element by linear algebra over F_q (test oracle).

    Spans x^d g_i for all d allowed by the degree caps derived from W, puts
    the rows in echelon form against module monomials sorted from largest to
    smallest, and returns the monic row with the smallest pivot.  Finds the
    true minimum whenever that minimum has weight <= W; returns None if the
    span is empty.
    """
    s = order.s
    for i, g in enumerate(gens):
        if ind(g) != i:
            raise ValueError("brute_force_minimal needs ind(g_i) = i")
    D = _degree_bounds(gens, order, W)
    rows = []
    for i, g in enumerate(gens):
        for d in range(D[i] + 1):
            rows.append([upoly.shift(c, d) for c in g])
    if not rows:
        return None
    maxdeg = [max((len(r[p]) - 1 for r in rows), default=-1) for p in range(s)]
    cols = [(p, d) for p in range(s) for d in range(maxdeg[p] + 1)]
    if len(rows) * len(cols) > max_entries:
        raise SearchSpaceTooLarge(
            f"oracle matrix {len(rows)} x {len(cols)} exceeds {max_entries} entries")
    cols.sort(key=lambda pd: order.key(pd[1], pd[0]), reverse=True)
    col_of = {pd: k for k, pd in enumerate(cols)}
    F = field
    mat = []
    for r in rows:
        vec = [0] * len(cols)
        for p, c in enumerate(r):
            for d, x in enumerate(c):
                if x:
                    vec[col_of[(p, d)]] = x
        mat.append(vec)
    # forward elimination; last pivot row is the smallest leading term
    pivots = {}
    for vec in mat:
        v = vec
        while True:
            c = next((k for k, x in enumerate(v) if x), None)
            if c is None or c not in pivots:
                break
            pr = pivots[c]
            f = v[c]
            v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, pr)]
        if c is None:
            continue
        inv = F.inv(v[c])
        pivots[c] = [F.mul(inv, x) for x in v]
    if not pivots:
        return None
    best = pivots[max(pivots)]
    out = [[] for _ in range(s)]
    for k, x in enumerate(best):
        if x:
            p, d = cols[k]
            comp = out[p]
            comp.extend([0] * (d + 1 - len(comp)))
            comp[d] = x
    return [upoly.trim(c) for c in out]


def triangular_coordinates(v, gens, field):
    """Solve v = sum p_i gens[i] for generators with ind(gens[i]) = i.

    Returns the list of p_i, or None when v is not in the module (a division
    by a diagonal entry leaves a remainder).
    """
    F = field
    s = len(gens)
    rest = [list(c) for c in v]
    coeffs = [[] for _ in range(s)]
    for i in range(s - 1, -1, -1):
        diag = gens[i][i]
        num = rest[i]
        q, r = _divmod(F, num, diag)
        if r:
            return None
        coeffs[i] = q
        if q:
            for k, comp in enumerate(gens[i]):
                if comp:
                    rest[k] = upoly.sub(F, rest[k], upoly.mul(F, q, comp))
    if any(rest):
        return None
    return coeffs


def _divmod(F, a, b):
    a = list(a)
    if len(a) < len(b):
        return [], upoly.trim(a)
    inv = F.inv(b[-1])
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = F.mul(a[k + len(b) - 1], inv)
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = F.sub(a[k + j], F.mul(c, y))
    return upoly.trim(q), upoly.trim(a[: len(b) - 1])
