"""List decoding: parameter choice, interpolation, and root search over L(uQ)."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product

from .code import CodeSpec, encode
from .curve import FunElem
from .errors import SearchSpaceTooLarge
from .field import CostCounter
from .interpolation import ZPoly, interpolate

__all__ = [
    "Radius",
    "a_priori_radius",
    "monomial_count",
    "root_find",
    "verify_root",
    "list_decode",
    "DecodeResult",
    "Candidate",
]

DEFAULT_CAP = 2**20


@dataclass(frozen=True)
class Radius:
    tau: int
    ell: int
    W: int

    @property
    def guaranteed(self) -> bool:
        return self.tau >= 0


def monomial_count(code: CodeSpec, W: int) -> int:
    """#{(h, k): h in H(Q), k >= 0, h + k*u < W}."""
    total, k = 0, 0
    while W - 1 - k * code.u >= 0:
        total += code.curve.semigroup_dim(W - 1 - k * code.u)
        k += 1
    return total


def a_priori_radius(code: CodeSpec, m: int) -> Radius:
    """Smallest weight W leaving more monomials below W than multiplicity constraints.

    A nonzero Q of weight < W then exists, every Z-degree used below W is at
    most ell, and any f agreeing with r in A places with m*A >= W is a root.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if code.u < 1:
        raise ValueError("u must be >= 1 for a finite parameter search")
    n = code.n
    target = n * m * (m + 1) // 2
    W = 1
    while monomial_count(code, W) <= target:
        W += 1
    ell = (W - 1) // code.u
    tau = n - (W + m - 1) // m
    return Radius(tau, ell, W)


def verify_root(Q: ZPoly, f: FunElem) -> bool:
    return Q(f).is_zero()


def root_find(Q: ZPoly, code: CodeSpec, cap: int = DEFAULT_CAP) -> list[FunElem]:
    """All f in L(uQ) with Q(f) = 0, by exhaustive search over messages.

    Candidates are screened by the necessary condition Q(f)(P_i) = 0 at every
    place before the exact symbolic check.
    """
    F = code.field
    size = F.q**code.k
    if size > cap:
        raise SearchSpaceTooLarge(
            f"message space has {size} elements (cap {cap}); use verify-only mode")
    qvals = [[c.evaluate(P.coords) for P in code.places] for c in Q.coeffs]
    roots = []
    for msg in product(range(F.q), repeat=code.k):
        word = encode(code, msg)
        ok = True
        for i, c in enumerate(word):
            acc = 0
            for row in reversed(qvals):
                acc = F.add(F.mul(acc, c), row[i])
            if acc:
                ok = False
                break
        if ok:
            f = code.function_of(msg)
            if verify_root(Q, f):
                roots.append(f)
    return roots


@dataclass
class Candidate:
    message: tuple
    codeword: tuple
    distance: int


@dataclass
class DecodeResult:
    m: int
    ell: int
    tau: int                 # a priori radius from the monomial count
    radius: int              # radius guaranteed by the weight of the computed Q
    W: int
    q_weight: int
    mode: str
    candidates: list = field(default_factory=list)
    mults: int = 0
    Q: ZPoly | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("Q")
        d["candidates"] = [asdict(c) for c in self.candidates]
        d["Q"] = self.Q.lines() if self.Q is not None else None
        return d


def _hamming(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def _choose_m(code: CodeSpec, tau: int, max_m: int = 64) -> int:
    for m in range(1, max_m + 1):
        if a_priori_radius(code, m).tau >= tau:
            return m
    raise ValueError(f"no multiplicity m <= {max_m} guarantees radius {tau}")


def list_decode(code: CodeSpec, r, m: int | None = None, tau: int | None = None,
                cap: int = DEFAULT_CAP, verify_only: bool = False, candidates=None,
                ell: int | None = None) -> DecodeResult:
    """Decode r; give either the multiplicity m or a target radius tau.

    In verify-only mode (forced when the message space exceeds ``cap``) the
    optional ``candidates`` messages are checked with verify_root instead of
    enumerating L(uQ).
    """
    if (m is None) == (tau is None):
        raise ValueError("give exactly one of m and tau")
    if m is None:
        m = _choose_m(code, tau)
    rad = a_priori_radius(code, m)
    ell = max(rad.ell, m) if ell is None else ell
    counter = CostCounter()
    Q = interpolate(code, r, m, ell, counter)
    wq = Q.weight()
    # largest radius with m * (n - radius) > weight(Q)
    radius = code.n - wq // m - 1
    if not verify_only and code.field.q**code.k <= cap:
        mode = "exhaustive"
        roots = root_find(Q, code, cap)
    else:
        mode = "verify"
        roots = [code.function_of(msg) for msg in (candidates or [])]
        roots = [f for f in roots if verify_root(Q, f)]
    found = []
    for f in roots:
        msg = code.message_of(f)
        word = tuple(encode(code, msg))
        d = _hamming(word, r)
        if d <= radius:
            found.append(Candidate(tuple(msg), word, d))
    found.sort(key=lambda c: (c.distance, c.message))
    return DecodeResult(m, ell, rad.tau, radius, rad.W, wq, mode, found, counter.mults, Q)
