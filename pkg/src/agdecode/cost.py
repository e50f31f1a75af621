"""Operation counts for interpolation: GS linear system, Beelen-Hoeholdt system, and
the multiplication bound for the module Groebner basis route.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .code import CodeSpec, dim_LDQ

__all__ = [
    "GBBound",
    "CostReport",
    "bound_module_gb",
    "count_gs_equations",
    "count_bh_system",
    "compare_report",
    "format_table",
]


def _sum_squares(N: int) -> int:
    return N * (N + 1) * (2 * N + 1) // 6


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GBBound:
    bracket: int
    literal: int      # sum of i^2 up to a_1 (ell + 1)
    alternate: int    # sum of i^2 up to ell + 1


def bound_module_gb(code: CodeSpec, m: int, ell: int) -> GBBound:
    """[max_j b_j + m(n + 2g - 1) + u(ell - m)]^2 / a_1 * sum i^2, both summation limits.

    The division by a_1 is rounded up so the result stays an upper bound.
    """
    c = code.curve
    bracket = max(c.apery_b) + m * (code.n + 2 * c.genus - 1) + code.u * (ell - m)
    sq = bracket * bracket

    def value(limit):
        return _ceil_div(sq * _sum_squares(limit), c.a1)

    return GBBound(bracket, value(c.a1 * (ell + 1)), value(ell + 1))


def count_gs_equations(n: int, m: int) -> int:
    return n * m * (m + 1) // 2


def count_bh_system(code: CodeSpec, m: int, ell: int, A: int) -> tuple[int, int]:
    """(equations, unknowns) of the Beelen-Hoeholdt linear system for divisor A*Q."""
    n, u = code.n, code.u
    dim = code.curve.semigroup_dim
    eqs = sum((m - i) * n - dim(A - i * u) + dim_LDQ(code, m - i, A - i * u)
              for i in range(m + 1))
    unknowns = (sum(dim(A - i * u) for i in range(m + 1, ell + 1))
                + sum(dim_LDQ(code, m - i, A - i * u) for i in range(m + 1)))
    return eqs, unknowns


@dataclass
class CostReport:
    method: str
    equations: int | None
    unknowns: int | None
    estimate: float
    measured: int | None = None


def compare_report(code: CodeSpec, m: int, ell: int, tau: int, measured: int | None = None):
    """Rows for GS, BH and the Groebner-basis bound (both readings)."""
    A = m * (code.n - tau) - 1
    gs = count_gs_equations(code.n, m)
    eqs, unk = count_bh_system(code, m, ell, A)
    lo = bound_module_gb(code, m, ell)
    return [
        CostReport("GS", gs, gs, gs**3 / 3),
        CostReport("BH", eqs, unk, unk**3 / 3),
        CostReport("GB (a1(l+1) limit)", None, None, lo.literal, measured),
        CostReport("GB (l+1 limit)", None, None, lo.alternate, measured),
    ], {"A": A, "bound": asdict(lo)}


def format_table(rows) -> str:
    head = f"{'method':<20} {'equations':>10} {'unknowns':>10} {'multiplications':>20} {'measured':>10}"
    lines = [head, "-" * len(head)]
    for r in rows:
        est = f"{r.estimate:,}" if isinstance(r.estimate, int) else f"{r.estimate:.3e}"
        lines.append(
            f"{r.method:<20} {'' if r.equations is None else r.equations:>10} "
            f"{'' if r.unknowns is None else r.unknowns:>10} {est:>20} "
            f"{'' if r.measured is None else r.measured:>10}")
    return "\n".join(lines)


def report_json(rows, extra) -> str:
    return json.dumps({"rows": [asdict(r) for r in rows], **extra}, indent=2, sort_keys=True)
