import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from cubeperm.eisenstein import (
    SYMBOL_ONE,
    UNITS,
    CubicSymbolValue,
    EisensteinInt as E,
    choose_pi,
    cubic_symbol,
    divrem,
    gcd,
    omega_image,
    parse,
    primary_associate,
    prime_above,
)
from cubeperm.errors import EisensteinOverflow, NotCoprimeToThree, NotPrimitiveRoot, ZeroDivisor
from cubeperm.modular import cubic_residues_sorted, primitive_roots

# norms of products must stay below the 2^63 guard
coord = st.integers(min_value=-10**4, max_value=10**4)
eis = st.builds(E, coord, coord)
small = st.integers(min_value=-500, max_value=500)
eis_small = st.builds(E, small, small)
ONE_MOD_3 = [p for p in range(7, 400) if p % 3 == 1 and oracles.is_prime(p)]


def as_complex(z):
    w = complex(-0.5, 3**0.5 / 2)
    return z.a + z.b * w


def test_arith_examples():
    assert E(2, 3).norm() == 7
    assert E(2, -3).conj() == E(5, 3)
    assert E(2, 3) * E(-1, -3) == E(7, 0)


@given(eis, eis)
def test_mul_matches_complex_multiplication(u, v):
    got = as_complex(u * v)
    want = as_complex(u) * as_complex(v)
    assert abs(got - want) <= 1e-6 * max(1.0, abs(want))


@given(eis_small, eis_small, eis_small)
def test_ring_axioms(u, v, z):
    assert u * v == v * u
    assert (u * v) * z == u * (v * z)
    assert u * (v + z) == u * v + u * z
    assert u - u == E(0, 0)


@given(eis, eis)
def test_norm_multiplicative_and_conj(u, v):
    assert (u * v).norm() == u.norm() * v.norm()
    assert u * u.conj() == E(u.norm(), 0)
    assert u.conj().conj() == u
    assert u.norm() >= 0
    assert (u.norm() == 0) == u.is_zero()


def test_overflow_guard():
    with pytest.raises(EisensteinOverflow):
        E(2**32, 0) * E(2**32, 0)


def test_str_and_parse():
    assert str(E(2, 3)) == "2+3w"
    assert str(E(-1, -3)) == "-1-3w"
    assert str(E(7, 0)) == "7+0w"
    for z in (E(2, 3), E(-1, -3), E(0, 0), E(-12, 5)):
        assert parse(str(z)) == z


def test_divrem_examples():
    q, rem = divrem(E(7, 0), E(2, 3))
    assert rem == E(0, 0) and q * E(2, 3) == E(7, 0) and q == E(-1, -3)
    assert divrem(E(1, 0), E(1, 0)) == (E(1, 0), E(0, 0))
    q, rem = divrem(E(5, 1), E(2, 0))
    assert rem.norm() < 4 and q * E(2, 0) + rem == E(5, 1)


def test_divrem_exhaustive_box():
    box = range(-10, 11)
    divisors = [E(c, d) for c in range(-4, 5) for d in range(-4, 5) if (c, d) != (0, 0)]
    for a, b in itertools.product(box, box):
        u = E(a, b)
        for v in divisors:
            q, rem = divrem(u, v)
            assert q * v + rem == u
            assert rem.norm() < v.norm()


def test_divrem_zero():
    with pytest.raises(ZeroDivisor):
        divrem(E(1, 1), E(0, 0))


@given(eis, eis)
def test_gcd_divides_both(u, v):
    if u.is_zero() and v.is_zero():
        return
    d = gcd(u, v)
    assert divrem(u, d)[1].is_zero()
    assert divrem(v, d)[1].is_zero()


@pytest.mark.parametrize("z, expected", [(E(3, 1), E(2, 3)), (E(2, -3), E(2, -3)), (E(-1, 2), E(2, 3))])
def test_primary_associate_examples(z, expected):
    assert primary_associate(z) == expected


@given(eis)
def test_exactly_one_primary_associate(z):
    if z.norm() % 3 == 0:
        with pytest.raises(NotCoprimeToThree):
            primary_associate(z)
        return
    assert sum((u * z).is_primary() for u in UNITS) == 1
    assert primary_associate(z).is_primary()


def test_units_have_norm_one():
    assert len(set(UNITS)) == 6 and all(u.norm() == 1 for u in UNITS)


@pytest.mark.parametrize("p, expected, w0", [(7, E(2, 3), 4), (13, E(-1, 3), 9), (19, E(5, 3), 11)])
def test_prime_above_examples(p, expected, w0):
    assert prime_above(p) == expected
    assert omega_image(expected, p) == w0


@pytest.mark.parametrize("p", ONE_MOD_3)
def test_prime_above_is_one_of_the_primary_primes(p):
    pi = prime_above(p)
    assert pi.norm() == p and pi.is_primary()
    assert (pi.a, pi.b) in oracles.primary_primes_of_norm(p)


@pytest.mark.parametrize("pi, p, w", [(E(2, 3), 7, 4), (E(-1, -3), 7, 2), (E(5, 3), 19, 11)])
def test_omega_image_examples(pi, p, w):
    assert omega_image(pi, p) == w
    assert omega_image(pi) == w


@pytest.mark.parametrize("p", ONE_MOD_3)
def test_omega_images_of_conjugates_are_the_two_roots(p):
    pi = prime_above(p)
    w1, w2 = omega_image(pi), omega_image(pi.conj())
    roots = sorted(x for x in range(p) if (x * x + x + 1) % p == 0)
    assert sorted((w1, w2)) == roots


def test_cubic_symbol_examples():
    assert cubic_symbol(3, E(-1, -3), 7) == CubicSymbolValue(1)
    assert cubic_symbol(1, E(5, 3), 19) == SYMBOL_ONE
    assert cubic_symbol(7, E(2, -3), 19) == SYMBOL_ONE
    assert cubic_symbol(14, E(2, 3), 7).is_zero()


@pytest.mark.parametrize("p", ONE_MOD_3[:25])
def test_cubic_symbol_properties(p):
    pi = prime_above(p)
    bar = pi.conj()
    crs = set(cubic_residues_sorted(p))
    a, b = pi.a, pi.b
    for k in range(1, p):
        s = cubic_symbol(k, pi, p)
        assert s.exponent == oracles.symbol_by_search(k, a, b, p)
        assert cubic_symbol(k, bar, p) == s * s
        assert (s == SYMBOL_ONE) == (k in crs)
    for k1 in range(1, p, 3):
        for k2 in range(1, p, 5):
            assert cubic_symbol(k1 * k2, pi, p) == cubic_symbol(k1, pi, p) * cubic_symbol(k2, pi, p)


def test_symbol_value_algebra():
    w = CubicSymbolValue(1)
    assert w * w == CubicSymbolValue(2)
    assert w**3 == SYMBOL_ONE
    assert (CubicSymbolValue(None) * w).is_zero()
    assert [str(CubicSymbolValue(e)) for e in (None, 0, 1, 2)] == ["0", "1", "w", "w^2"]


@pytest.mark.parametrize("p, g, expected", [(7, 3, E(-1, -3)), (19, 2, E(2, -3)), (13, 2, E(-4, -3))])
def test_choose_pi_examples(p, g, expected):
    assert choose_pi(p, g) == expected


@pytest.mark.parametrize("p", ONE_MOD_3[:30])
def test_choose_pi_matches_search(p):
    for g in primitive_roots(p):
        pi = choose_pi(p, g)
        assert (pi.a, pi.b) == oracles.pi_for(p, g)
        assert cubic_symbol(g, pi, p).exponent == 1


def test_choose_pi_rejects_cube():
    with pytest.raises(NotPrimitiveRoot):
        choose_pi(13, 8)
