import random

import pytest

from agdecode import CostCounter, bound_module_gb, compare_report, count_bh_system
from agdecode import count_gs_equations, interpolate
from agdecode.cost import format_table, report_json


def brute_bound(code, m, ell, limit):
    c = code.curve
    bracket = max(c.apery_b) + m * (code.n + 2 * c.genus - 1) + code.u * (ell - m)
    total = sum(i * i for i in range(1, limit + 1))
    return bracket, -(-bracket * bracket * total // c.a1)


def test_example4_integers(kcode):
    assert count_gs_equations(21, 40) == 17220 == 21 * 41 * 40 // 2
    A = 40 * (kcode.n - 5) - 1
    assert A == 639
    assert count_bh_system(kcode, 40, 54, A) == (2392, 2399)
    b = bound_module_gb(kcode, 40, 54)
    assert b.bracket == 1215
    assert b.alternate == 28_038_433_500
    assert (b.bracket, b.literal) == brute_bound(kcode, 40, 54, 3 * 55)
    assert (b.bracket, b.alternate) == brute_bound(kcode, 40, 54, 55)
    assert b.literal == 743_532_706_125


def test_gs_small():
    assert count_gs_equations(8, 1) == 8
    assert count_gs_equations(8, 2) == 24


def test_bracket_without_u_term(kcode):
    c = kcode.curve
    for m in (1, 3, 7):
        assert bound_module_gb(kcode, m, m).bracket == max(c.apery_b) + m * (kcode.n + 2 * c.genus - 1)


def test_bh_degenerate(kcode):
    eqs, _ = count_bh_system(kcode, 0, 0, 10)
    assert eqs == 0


def test_compare_report(kcode):
    rows, extra = compare_report(kcode, 40, 54, 5)
    by = {r.method: r for r in rows}
    assert f"{by['GS'].estimate:.1e}" == "1.7e+12"
    assert f"{by['BH'].estimate:.1e}" == "4.6e+09"
    assert by["BH"].estimate < by["GB (l+1 limit)"].estimate < by["GS"].estimate
    assert all(r.estimate >= 0 for r in rows)
    assert extra["A"] == 639
    text = format_table(rows)
    assert "2392" in text and "2399" in text and "28,038,433,500" in text
    assert '"alternate": 28038433500' in report_json(rows, extra)


@pytest.mark.parametrize("name,cases", [
    ("hcode", [(1, 1), (2, 2), (2, 3), (3, 3), (3, 5)]),
    ("kcode", [(1, 1), (2, 2), (2, 4), (3, 3)]),
])
def test_measured_within_literal_bound(name, cases, request):
    code = request.getfixturevalue(name)
    rng = random.Random(0)
    for m, ell in cases:
        for _ in range(2):
            r = [rng.randrange(code.field.q) for _ in range(code.n)]
            counter = CostCounter()
            interpolate(code, r, m, ell, counter)
            bound = bound_module_gb(code, m, ell)
            assert 0 < counter.mults <= bound.literal
            rows, _ = compare_report(code, m, ell, 0, counter.mults)
            assert rows[2].measured == counter.mults
