"""Acceptance criteria, one test each.

A summary line per criterion is printed at the end of the pytest run (see
conftest.py) and by running this file directly.
"""

import io
import itertools
import random
import time

from agdecode import (CostCounter, a_priori_radius, bound_module_gb, build_code, encode,
                      list_decode, load_curve, verify_root)
from agdecode.cli import main
from agdecode.groebner import (OrderSpec, algorithm_g, brute_force_minimal, leading_term,
                               minimal_element, quotient_dim)
from agdecode.interpolation import (interpolation_basis, modvec_to_zpoly, verify_multiplicity,
                                    zpoly_to_modvec)
from agdecode.local import enumerate_places, valuation_at

CRITERIA = {
    1: "bench example4 exact integers",
    2: "Klein m=40 parameter triple (tau=5, ell=54)",
    3: "quotient dimension n*m(m+1)/2",
    4: "multiplicity of generators and Q",
    5: "oracle minimality on >= 50 instances",
    6: "end-to-end decoding",
    7: "measured multiplications <= literal bound",
    8: "Klein fixture integrity",
}


def _codes():
    herm, klein = load_curve("hermitian4.json"), load_curve("klein.json")
    return (herm, build_code(herm.curve, herm.places, 4, herm.f),
            klein, build_code(klein.curve, klein.places, 12, klein.f))


HERM, HCODE, KLEIN, KCODE = _codes()


def _noisy(code, rng, t):
    F = code.field
    msg = [rng.randrange(F.q) for _ in range(code.k)]
    word = encode(code, msg)
    r = list(word)
    for i in rng.sample(range(code.n), t):
        r[i] = F.add(r[i], rng.randrange(1, F.q))
    return msg, word, r


def _instances():
    """(code, m, received word) for criteria 3, 4 and 7: 10 random words each."""
    rng = random.Random(31415)
    out = []
    for code, ms in ((HCODE, (1, 2, 3)), (KCODE, (1, 2))):
        for m in ms:
            for _ in range(10):
                out.append((code, m, [rng.randrange(code.field.q) for _ in range(code.n)]))
    return out


INSTANCES = _instances()
_RUNS = {}


def _run(idx):
    if idx not in _RUNS:
        code, m, r = INSTANCES[idx]
        counter = CostCounter()
        _RUNS[idx] = interpolation_basis(code, r, m, m, counter)
    return _RUNS[idx]


def test_criterion_1_example4_integers():
    start = time.perf_counter()
    out = io.StringIO()
    assert main(["bench", "example4", "--curve", "klein.json"], out) == 0
    elapsed = time.perf_counter() - start
    text = out.getvalue()
    table = text[:text.index("{")]
    row = {line.split()[0]: line.split() for line in table.splitlines()[3:5]}
    assert row["GS"][1:3] == ["17220", "17220"]
    assert row["BH"][1:3] == ["2392", "2399"]
    assert "28,038,433,500" in table
    # the literal reading is printed too; its value is recomputed here by direct summation
    literal = -(-1215**2 * sum(i * i for i in range(1, 3 * 55 + 1)) // 3)
    assert f"{literal:,}" in table
    assert elapsed < 1.0, elapsed


def test_criterion_2_parameter_triple():
    start = time.perf_counter()
    rad = a_priori_radius(KCODE, 40)
    assert time.perf_counter() - start < 5.0
    assert (rad.tau, rad.ell) == (5, 54), f"counting rule gives tau={rad.tau}, ell={rad.ell}"


def test_criterion_3_quotient_dimension():
    start = time.perf_counter()
    for idx, (code, m, _) in enumerate(INSTANCES):
        run = _run(idx)
        assert quotient_dim(run.basis, run.order) == code.n * m * (m + 1) // 2
    assert time.perf_counter() - start < 60.0


def test_criterion_4_multiplicity():
    for idx, (code, m, r) in enumerate(INSTANCES):
        run = _run(idx)
        Q = modvec_to_zpoly(minimal_element(run.basis, run.order, code.field), code.curve, code.u)
        for poly in list(run.generators) + [Q]:
            for P, ri in zip(code.places, r):
                assert verify_multiplicity(poly, P, ri, m)


def _synthetic(rng):
    from agdecode import upoly
    from agdecode.field import GF
    F = GF(2, 2, (1, 1, 1))
    s = rng.randint(2, 6)
    gens = []
    for i in range(s):
        v = []
        for p in range(s):
            if p > i:
                v.append([])
            else:
                c = [rng.randrange(4) for _ in range(rng.randint(0, 8) + 1)]
                if p == i:
                    c[-1] = rng.randrange(1, 4)
                v.append(upoly.trim(c))
        gens.append(v)
    return gens, OrderSpec(rng.randint(1, 5), tuple(rng.randint(0, 12) for _ in range(s))), F


def test_criterion_5_oracle_minimality():
    rng = random.Random(2718)
    count = 0
    for m in (1, 2):
        for _ in range(10):
            _, _, r = _noisy(HCODE, rng, rng.randrange(3))
            run = interpolation_basis(HCODE, r, m, m)
            best = minimal_element(run.basis, run.order, HCODE.field)
            gvecs = [zpoly_to_modvec(g, m) for g in run.generators]
            W = min(leading_term(v, run.order)[0] for v in gvecs)
            oracle = brute_force_minimal(gvecs, run.order, HCODE.field, W)
            assert leading_term(oracle, run.order)[0] == leading_term(best, run.order)[0]
            count += 1
    for _ in range(40):
        gens, order, F = _synthetic(rng)
        gb = algorithm_g(gens, order, F)
        best = minimal_element(gb, order, F)
        W = min(leading_term(g, order)[0] for g in gens)
        oracle = brute_force_minimal(gens, order, F, W)
        assert leading_term(oracle, order)[0] == leading_term(best, order)[0]
        count += 1
    assert count >= 50


def test_criterion_6_end_to_end():
    start = time.perf_counter()
    rng = random.Random(1618)
    F = HCODE.field
    taus = {m: a_priori_radius(HCODE, m).tau for m in range(1, 5)}
    m1 = min(m for m, t in taus.items() if t >= 1)
    plans = [(m1, 1)]
    m2 = [m for m, t in taus.items() if t >= 2]
    if m2:
        plans.append((min(m2), 2))
    for _ in range(10):
        msg, word, _ = _noisy(HCODE, rng, 0)
        for m, tmax in plans:
            for t in range(1, tmax + 1):
                for pos in itertools.combinations(range(HCODE.n), t):
                    for vals in itertools.product(range(1, F.q), repeat=t):
                        r = list(word)
                        for i, v in zip(pos, vals):
                            r[i] = F.add(r[i], v)
                        res = list_decode(HCODE, r, m=m)
                        assert tuple(word) in [c.codeword for c in res.candidates]
    ok = 0
    for trial in range(100):
        m = 1 + trial % 3
        tau = a_priori_radius(KCODE, m).tau
        msg, word, r = _noisy(KCODE, rng, rng.randint(0, tau))
        res = list_decode(KCODE, r, m=m, verify_only=True, candidates=[msg])
        ok += verify_root(res.Q, KCODE.function_of(msg))
    assert ok == 100
    assert time.perf_counter() - start < 300


def test_criterion_7_cost_bound():
    for idx, (code, m, _) in enumerate(INSTANCES):
        run = _run(idx)
        assert run.counter.mults <= bound_module_gb(code, m, m).literal
    rng = random.Random(99)
    for code, m, ell in ((HCODE, 2, 4), (KCODE, 2, 3), (KCODE, 3, 4)):
        counter = CostCounter()
        interpolation_basis(code, [rng.randrange(code.field.q) for _ in range(code.n)], m, ell,
                            counter)
        assert counter.mults <= bound_module_gb(code, m, ell).literal


def test_criterion_8_fixture_integrity():
    c = KLEIN.curve
    places, _ = enumerate_places(c)
    f7 = c.x(1)**7 + 1
    f8 = c.x(1)**8 + c.x(1)
    zeros7 = [P for P in places if f7.evaluate(P.coords) == 0]
    zeros8 = [P for P in places if f8.evaluate(P.coords) == 0]
    assert len(zeros7) == 21 and len(zeros8) == 23
    assert sorted(P.coords for P in zeros7) == sorted(P.coords for P in KLEIN.places)
    assert all(valuation_at(f7, P, 4) == 1 for P in zeros7)
    assert [y for _, _, y in c.apery_data()] == [c.one(), c.x(3), c.x(2)]
    x1, x2, x3 = c.x(1), c.x(2), c.x(3)
    assert x2 * x2 == x3 * x1
    assert x3 * x2 == x1**4 + x2
    assert x3 * x3 == x1**3 * x2 + x3


if __name__ == "__main__":
    tests = {n: globals()[name] for name in sorted(globals())
             if name.startswith("test_criterion_")
             for n in [int(name.split("_")[2])]}
    for n in sorted(tests):
        try:
            tests[n]()
            status, note = "PASS", ""
        except AssertionError as exc:
            status, note = "FAIL", f"  ({exc})" if str(exc) else ""
        print(f"criterion {n}: {status}  {CRITERIA[n]}{note}")
