"""Quick invariant checks on the bundled fixtures, used by ``agdecode selftest``."""

from __future__ import annotations

import random

from .code import build_code, encode
from .cost import bound_module_gb, count_bh_system, count_gs_equations
from .curvefile import load_curve
from .decoder import a_priori_radius, list_decode
from .field import CostCounter
from .groebner import brute_force_minimal, leading_term, quotient_dim
from .interpolation import (interpolation_basis, modvec_to_zpoly, verify_multiplicity,
                            zpoly_to_modvec)
from .local import enumerate_places, valuation_at


def _field_axioms(F, rng):
    for _ in range(200):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
            return False
        if a and F.mul(a, F.inv(a)) != 1:
            return False
    return True


def _interp_checks(code, m, rng):
    r = [rng.randrange(code.field.q) for _ in range(code.n)]
    run = interpolation_basis(code, r, m, m)
    if quotient_dim(run.basis, run.order) != code.n * m * (m + 1) // 2:
        return False
    best = min(run.basis, key=lambda v: leading_term(v, run.order)[:2])
    w = leading_term(best, run.order)[0]
    oracle = brute_force_minimal([zpoly_to_modvec(g, m) for g in run.generators],
                                 run.order, code.field, w)
    if leading_term(oracle, run.order)[0] != w:
        return False
    Q = modvec_to_zpoly(best, code.curve, code.u)
    return all(verify_multiplicity(Q, P, ri, m) for P, ri in zip(code.places, r))


def checks():
    """Yield (name, passed) pairs."""
    rng = random.Random(0)
    herm = load_curve("hermitian4.json")
    klein = load_curve("klein.json")
    yield "field axioms GF(4), GF(8)", all(_field_axioms(cd.curve.field, rng) for cd in (herm, klein))
    yield "Klein Apery basis 1, x3, x2", [str(y) for _, _, y in klein.curve.apery_data()] == ["1", "x3", "x2"]
    places, _ = enumerate_places(klein.curve)
    c = klein.curve
    roots = [P for P in places if (c.x1_poly([1] + [0] * 6 + [1])).evaluate(P.coords) == 0]
    yield "Klein zeros of x1^7+1", len(roots) == 21 and all(valuation_at(klein.f, P, 4) == 1 for P in roots)
    hcode = build_code(herm.curve, herm.places, 4, herm.f)
    yield "Hermitian code [8,4]", (hcode.n, hcode.k) == (8, 4)
    yield "Hermitian interpolation m=1,2", all(_interp_checks(hcode, m, rng) for m in (1, 2))
    msg = [rng.randrange(4) for _ in range(hcode.k)]
    word = encode(hcode, msg)
    bad = list(word)
    bad[3] = herm.curve.field.add(bad[3], 1)
    res = list_decode(hcode, bad, m=2)
    yield "Hermitian decode one error", any(list(cand.codeword) == word for cand in res.candidates)
    kcode = build_code(klein.curve, klein.places, 12, klein.f)
    rad = a_priori_radius(kcode, 40)
    yield "Klein m=40 radius 5", rad.tau == 5
    A = 40 * (kcode.n - 5) - 1
    yield "Klein BH system 2392 x 2399", count_bh_system(kcode, 40, 54, A) == (2392, 2399)
    yield "GS equations 17220", count_gs_equations(21, 40) == 17220
    yield "bound, (l+1) limit", bound_module_gb(kcode, 40, 54).alternate == 28_038_433_500
    counter = CostCounter()
    r = [rng.randrange(4) for _ in range(hcode.n)]
    interpolation_basis(hcode, r, 2, 2, counter)
    yield "measured mults <= bound", counter.mults <= bound_module_gb(hcode, 2, 2).literal


def run(out) -> int:
    failed = 0
    for name, ok in checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
        failed += not ok
    print(f"{failed} failed", file=out)
    return failed
