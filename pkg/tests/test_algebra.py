import pytest
from hypothesis import given, settings, strategies as st

from pbdkit.algebra import (
    CapExceeded,
    NotPrimePower,
    PrimePower,
    gf_construct,
    is_prime,
    next_prime_at_least,
    next_prime_power_at_least,
    prime_power_decompose,
)

from oracles import prime_powers_upto, trial_division_is_prime


@pytest.mark.parametrize("x, expected", [(2, True), (1, False), (0, False), (101, True), (561, False)])
def test_is_prime_small(x, expected):
    assert is_prime(x) is expected


def test_is_prime_agrees_with_trial_division():
    assert [x for x in range(5000) if is_prime(x)] == [x for x in range(5000) if trial_division_is_prime(x)]


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**31 + 11))
    # strong pseudoprime to bases 2..37
    assert not is_prime(3825123056546413051)


@pytest.mark.parametrize("x, expected", [(10, 11), (7, 7), (90, 97), (2, 2)])
def test_next_prime(x, expected):
    assert next_prime_at_least(x) == expected


@pytest.mark.parametrize("q, p, e", [(9, 3, 2), (8, 2, 3), (2, 2, 1), (3**10, 3, 10), (49, 7, 2)])
def test_decompose(q, p, e):
    pp = prime_power_decompose(q)
    assert (pp.p, pp.e, pp.q) == (p, e, q)


@pytest.mark.parametrize("q", [1, 6, 12, 36, 100])
def test_decompose_rejects(q):
    with pytest.raises(NotPrimePower):
        prime_power_decompose(q)


def test_decompose_round_trip():
    for p in range(2, 51):
        if not trial_division_is_prime(p):
            continue
        for e in range(1, 6):
            assert prime_power_decompose(p**e) == PrimePower(p, e)


@pytest.mark.parametrize("x, expected", [(5, 5), (6, 7), (26, 27), (10, 11), (15, 16)])
def test_next_prime_power(x, expected):
    assert next_prime_power_at_least(x).q == expected


def test_next_prime_power_matches_enumeration_and_prime():
    pps = prime_powers_upto(11000)
    i = 0
    for x in range(2, 10001):
        while pps[i] < x:
            i += 1
        got = next_prime_power_at_least(x).q
        assert got == pps[i]
        assert got <= next_prime_at_least(x)


def test_gf4_modulus_is_x2_x_1():
    assert gf_construct(4).modulus == (1, 1, 1)


def test_prime_field_is_mod_p():
    F = gf_construct(5)
    assert F.modulus == (0, 1)
    assert all(F.mul(a, b) == a * b % 5 and F.add(a, b) == (a + b) % 5 for a in range(5) for b in range(5))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    F = gf_construct(q)
    els = list(F.elements())
    assert len(els) == q
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    # the multiplicative group is cyclic of order q - 1
    orders = [F.element_order(a) for a in els if a]
    assert all((q - 1) % o == 0 for o in orders)
    assert max(orders) == q - 1


def test_gf9_group_cyclic_of_order_8():
    F = gf_construct(9)
    assert sum(1 for a in range(1, 9) if F.element_order(a) == 8) == 4


def test_modulus_is_smallest_irreducible():
    # lexicographically smallest monic irreducible cubic over GF(2) is x^3 + x + 1
    assert gf_construct(8).modulus == (1, 1, 0, 1)
    assert gf_construct(9).modulus == (1, 0, 1)


def test_cap():
    with pytest.raises(CapExceeded):
        gf_construct(27, cap=25)
    with pytest.raises(NotPrimePower):
        gf_construct(6)


def test_large_field_without_tables():
    F = gf_construct(1024)
    a, b = 37, 901
    assert F.mul(a, F.inv(a)) == 1
    assert F.mul(a, b) == F.mul(b, a)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([25, 27, 32, 49, 64, 81, 121, 125]), st.data())
def test_field_laws_random(q, data):
    F = gf_construct(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    assert F.from_vector(F.to_vector(a)) == a
    if a:
        assert F.pow(a, q - 1) == 1
