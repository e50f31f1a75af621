"""One-point codes C_u, the received-word interpolant h_r, and the f of (f)_0 = D."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .curve import Curve, FunElem
from .errors import CurveError, InvariantError, Issue

__all__ = [
    "AssumptionReport",
    "CodeSpec",
    "build_code",
    "check_assumption1",
    "encode",
    "compute_hr",
    "dim_LDQ",
]


@dataclass
class AssumptionReport:
    ok: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def check_assumption1(curve: Curve, places, f: FunElem) -> AssumptionReport:
    """Check that f lies in F_q[x_1] and has zero divisor exactly P_1 + ... + P_n.

    Vanishing at all n places together with pole order n forces every zero to
    be simple and leaves no room for zeros elsewhere.
    """
    reasons = []
    n = len(places)
    if f.is_zero():
        return AssumptionReport(False, ["f is zero"])
    if not f.in_x1():
        reasons.append("f is not in F_q[x_1]; choose x_1 so that f is a polynomial in it")
    missed = [i for i, P in enumerate(places) if f.evaluate(P.coords) != 0]
    if missed:
        reasons.append(f"f does not vanish at places {missed}")
    if f.pole_order() != n:
        reasons.append(f"pole order of f is {f.pole_order()}, expected n = {n}")
    if len(set(P.coords for P in places)) != n:
        reasons.append("places are not distinct")
    return AssumptionReport(not reasons, reasons)


@dataclass(eq=False)
class CodeSpec:
    curve: Curve
    places: list
    u: int
    f: FunElem
    basis: list            # (weight, j, i) footprint indices of weight <= u
    G: list                # k x n generator matrix
    psi: list              # (weight, j, i) of psi_1..psi_n
    psi_solve: list        # n x n matrix mapping r to the psi-coefficients of h_r

    @property
    def n(self) -> int:
        return len(self.places)

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def field(self):
        return self.curve.field

    def basis_function(self, s: int) -> FunElem:
        _, j, i = self.basis[s]
        return self.curve.monomial(j, i)

    def function_of(self, msg) -> FunElem:
        comps = [[] for _ in range(self.curve.a1)]
        for (_, j, i), c in zip(self.basis, msg):
            comp = comps[j]
            comp.extend([0] * (i + 1 - len(comp)))
            comp[i] = c
        return self.curve.from_modvec(comps)

    def message_of(self, f: FunElem) -> tuple[int, ...]:
        if f.pole_order() > self.u:
            raise ValueError(f"function of pole order {f.pole_order()} is not in L({self.u}Q)")
        out = []
        for _, j, i in self.basis:
            comp = f.comps[j]
            out.append(comp[i] if i < len(comp) else 0)
        return tuple(out)

    def eval_vector(self, f: FunElem) -> list[int]:
        return [f.evaluate(P.coords) for P in self.places]


def _monomial_values(curve, places, j, i):
    F = curve.field
    return [F.mul(F.pow(P.coords[0], i), curve._y_value(j, P.coords)) for P in places]


def build_code(curve: Curve, places, u: int, f: FunElem) -> CodeSpec:
    if u < 0:
        raise ValueError("u must be nonnegative")
    places = list(places)
    report = check_assumption1(curve, places, f)
    if not report:
        raise CurveError([Issue("assumption-1", "f", "; ".join(report.reasons)
                                + " (Assumption 1 fails)")])
    F = curve.field
    basis = curve.footprint(u)
    G = [_monomial_values(curve, places, j, i) for _, j, i in basis]
    n, g = len(places), curve.genus
    cap = n + 2 * g - 1
    tracker = linalg.IncrementalRank(F)
    psi, rows = [], []
    for w, j, i in curve.footprint(cap):
        vec = _monomial_values(curve, places, j, i)
        if tracker.add(vec):
            psi.append((w, j, i))
            rows.append(vec)
            if len(psi) == n:
                break
    if len(psi) < n:
        raise InvariantError(
            f"only {len(psi)} independent evaluation vectors below weight {cap}; "
            "places are not distinct rational points of the curve")
    # coefficients c with sum_j c_j psi_j(P_i) = r_i, i.e. rows^T c = r
    transposed = [list(col) for col in zip(*rows)]
    psi_solve = linalg.inverse(F, transposed)
    return CodeSpec(curve, places, u, f, basis, G, psi, psi_solve)


def encode(code: CodeSpec, msg) -> list[int]:
    msg = list(msg)
    if len(msg) != code.k:
        raise ValueError(f"message has length {len(msg)}, code dimension is {code.k}")
    F = code.field
    out = [0] * code.n
    for c, row in zip(msg, code.G):
        if c:
            for i, v in enumerate(row):
                out[i] = F.add(out[i], F.mul(c, v))
    return out


def compute_hr(code: CodeSpec, r) -> FunElem:
    """The element h_r of pole order <= n + 2g - 1 with h_r(P_i) = r_i."""
    r = list(r)
    if len(r) != code.n:
        raise ValueError(f"received word has length {len(r)}, expected {code.n}")
    coeffs = linalg.matvec(code.field, code.psi_solve, r)
    comps = [[] for _ in range(code.curve.a1)]
    for (_, j, i), c in zip(code.psi, coeffs):
        comp = comps[j]
        comp.extend([0] * (i + 1 - len(comp)))
        comp[i] = c
    return code.curve.from_modvec(comps)


def dim_LDQ(code: CodeSpec, j: int, b: int) -> int:
    """dim L(-jD + bQ) = dim L((b - jn)Q), since that space is f^j * L((b - jn)Q)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return code.curve.semigroup_dim(b - j * code.n)
