from hypothesis import given, strategies as st

from agdecode.semigroup import NumericalSemigroup


def members_dp(gens, N):
    ok = [False] * (N + 1)
    ok[0] = True
    for x in range(1, N + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def test_klein_semigroup():
    H = NumericalSemigroup((3, 5, 7))
    assert H.gaps == (1, 2, 4)
    assert H.genus == 3
    assert H.apery(3) == (0, 7, 5)
    assert H.count_upto(6) == 4
    assert H.elements_upto(6) == [0, 3, 5, 6]


def test_hermitian_semigroup():
    H = NumericalSemigroup((2, 3))
    assert H.gaps == (1,)
    assert H.apery(2) == (0, 3)


@given(st.lists(st.integers(2, 13), min_size=1, max_size=4))
def test_against_dp(gens):
    from math import gcd
    from functools import reduce
    if reduce(gcd, gens) != 1:
        return
    H = NumericalSemigroup(gens)
    N = H.conductor + 3 * max(gens)
    ok = members_dp(gens, N)
    assert [x for x in range(N + 1) if not ok[x]] == list(H.gaps)
    for x in range(N + 1):
        assert (x in H) == ok[x]
    a = min(gens)
    for j, b in enumerate(H.apery(a)):
        assert b % a == j and ok[b]
        assert b < a or not ok[b - a]
    # genus-degree formula: count of members <= N equals N + 1 - g beyond the conductor
    assert H.count_upto(N) == N + 1 - H.genus
