from itertools import product

import pytest
from hypothesis import given, strategies as st

from agdecode.field import GF, CostCounter, FieldError, is_irreducible

GF4 = GF(2, 2, (1, 1, 1))
GF8 = GF(2, 3, (1, 1, 0, 1))
GF9 = GF(3, 2, (1, 0, 1))      # x^2 + 1 over GF(3)
GF27 = GF(3, 3, (1, 2, 0, 1))  # x^3 + 2x + 1
SMALL = [GF4, GF8, GF9, GF(5, 1, (0, 1)), GF(2, 4, (1, 1, 0, 0, 1))]


def naive_mul(F, a, b):
    """Schoolbook product of digit vectors reduced by the modulus."""
    p, e = F.p, F.e
    da = [(a // p**i) % p for i in range(e)]
    db = [(b // p**i) % p for i in range(e)]
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    mod = F.modulus
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for i in range(e + 1):
                prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
    return sum(prod[i] * p**i for i in range(e))


@pytest.mark.parametrize("F", SMALL + [GF27], ids=repr)
def test_mul_matches_schoolbook(F):
    for a, b in product(F.elements(), repeat=2):
        assert F.mul(a, b) == naive_mul(F, a, b)


@pytest.mark.parametrize("F", SMALL, ids=repr)
def test_axioms_all_triples(F):
    els = list(F.elements())
    for a, b, c in product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a


@pytest.mark.parametrize("F", SMALL, ids=repr)
def test_frobenius(F):
    p = F.p
    for a, b in product(F.elements(), repeat=2):
        assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


def test_gf8_examples():
    for z in GF8.elements():
        assert GF8.mul(0, z) == 0
    for a in range(1, 8):
        assert GF8.mul(a, GF8.inv(a)) == 1
        assert GF8.pow(a, 7) == 1


def test_enumerate_and_sum():
    assert len(list(GF4.elements())) == 4
    assert sorted(GF8.elements()) == list(range(8))
    for F in (GF4, GF8, GF(2, 4, (1, 1, 0, 0, 1))):
        acc = 0
        for a in F.elements():
            acc = F.add(acc, a)
        assert acc == 0


def test_identities_and_generator():
    for F in SMALL:
        for a in F.elements():
            assert F.add(a, 0) == a and F.mul(a, 1) == a
        g, seen, x = F.generator, set(), 1
        for _ in range(F.q - 1):
            seen.add(x)
            x = F.mul(x, g)
        assert len(seen) == F.q - 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF8.inv(0)


@pytest.mark.parametrize("args", [(4, 1, (0, 1)), (2, 2, (1, 0, 1)), (2, 3, (1, 1, 0, 2)),
                                  (2, 2, (1, 1))])
def test_bad_fields(args):
    with pytest.raises(FieldError):
        GF(*args)


def test_irreducibility_check():
    assert is_irreducible([1, 1, 0, 1], 2)
    assert not is_irreducible([1, 0, 0, 1], 2)   # (x + 1)(x^2 + x + 1)
    assert not is_irreducible([1, 0, 1, 0, 1], 2)  # (x^2 + x + 1)^2


def test_counting_field():
    c = CostCounter()
    F = GF8.counting(c)
    F.mul(3, 5)
    F.inv(3)
    F.add(3, 5)
    assert c.mults == 2


@given(st.integers(0, 26), st.integers(0, 26), st.integers(-30, 30))
def test_pow_laws_gf27(a, b, n):
    F = GF27
    if a == 0 and n < 0:
        return
    if a and b:
        assert F.pow(F.mul(a, b), n) == F.mul(F.pow(a, n), F.pow(b, n))
    if a:
        assert F.mul(F.pow(a, n), F.pow(a, -n)) == 1
