from fractions import Fraction
import cmath
from math import gcd

import pytest
from hypothesis import given, assume, settings
from hypothesis import strategies as st

from tqftrep.errors import ContextError, ParseError
from tqftrep.scalar import CycloScalar, cyclo_new, embed, euler_phi, galois_apply, is_root_of_unity

from tests.matrix_helper import units


def scalars(m):
    return st.lists(st.integers(min_value=-4, max_value=4), min_size=euler_phi(m),
                    max_size=euler_phi(m)).map(lambda c: CycloScalar(m, c))


def test_zeta_has_order_m():
    for m in (3, 5, 8, 12, 20):
        z = cyclo_new(m)
        assert(z ** m == 1)
        assert(is_root_of_unity(z) == m)


def test_root_of_unity_detection():
    assert(is_root_of_unity(CycloScalar.from_rational(20, -1)) == 2)
    assert(is_root_of_unity(CycloScalar.from_rational(20, 2)) is None)
    with pytest.raises(ZeroDivisionError):
        is_root_of_unity(CycloScalar.zero(20))


@pytest.mark.parametrize("k", range(20))
def test_root_of_unity_order_is_minimal(k):
    assert(is_root_of_unity(CycloScalar.zeta_power(20, k)) == 20 // gcd(k, 20))
    assert(is_root_of_unity(-CycloScalar.zeta_power(15, k)) == 30 // gcd(2 * k + 15, 30))


@settings(max_examples=40, deadline=None)
@given(scalars(20))
def test_inverse(x):
    assume(not x.is_zero())
    assert(x * x.inverse == 1)
    assert(x / x == 1)


@settings(max_examples=40, deadline=None)
@given(scalars(20), scalars(20))
def test_galois_is_a_ring_homomorphism(x, y):
    for t in units(20):
        assert(galois_apply(t, x * y) == galois_apply(t, x) * galois_apply(t, y))
        assert(galois_apply(t, x + y) == galois_apply(t, x) + galois_apply(t, y))


@settings(max_examples=40, deadline=None)
@given(scalars(20))
def test_galois_composition(x):
    for t in units(20):
        for u in units(20):
            assert(galois_apply(t, galois_apply(u, x)) == galois_apply((t * u) % 20, x))


@settings(max_examples=40, deadline=None)
@given(scalars(12), scalars(12))
def test_embed_is_a_ring_homomorphism(x, y):
    for k in units(12):
        assert(abs(embed(x * y, k) - embed(x, k) * embed(y, k)) < 1e-8)
        assert(abs(embed(x + y, k) - (embed(x, k) + embed(y, k))) < 1e-9)


@settings(max_examples=20, deadline=None)
@given(scalars(12))
def test_conj_matches_embedding(x):
    for k in units(12):
        assert(abs(x.conj().embed(k) - x.embed(k).conjugate()) < 1e-9)


def test_lift_between_conductors():
    assert(CycloScalar.zeta_power(5, 1).lift(20) == CycloScalar.zeta_power(20, 4))
    # mixed conductors are lifted to the lcm
    total = CycloScalar.zeta_power(4, 1) * CycloScalar.zeta_power(5, 1)
    assert(total.m == 20)
    assert(total == CycloScalar.zeta_power(20, 9))
    with pytest.raises(ContextError):
        CycloScalar.zeta_power(20, 1).lift(30)


def test_rational_arithmetic():
    x = CycloScalar.from_rational(20, Fraction(3, 4))
    assert(x.is_rational())
    assert(not x.is_integral())
    assert(x.to_fraction() == Fraction(3, 4))
    assert(x + Fraction(1, 4) == 1)
    assert(2 - x == Fraction(5, 4))
    assert(hash(x) == hash(Fraction(3, 4)))
    # equal values from different conductors hash alike
    i4, i12 = CycloScalar.zeta_power(4, 1), CycloScalar.zeta_power(12, 3)
    assert(i4 == i12)
    assert(hash(i4) == hash(i12))
    assert(len({i4, i12, CycloScalar.zeta_power(20, 5)}) == 1)
    assert(CycloScalar.zeta_power(20, 3).is_integral())


def test_norm_and_trace():
    z = cyclo_new(20)
    assert(CycloScalar.one(20).trace() == euler_phi(20))
    assert(z.norm() == 1)
    # Moebius value: 20 is not squarefree
    assert(z.trace() == 0)
    assert(cyclo_new(5).trace() == -1)


def test_embed():
    z = cyclo_new(20, 3)
    assert(abs(z.embed(1) - cmath.exp(2j * cmath.pi * 3 / 20)) < 1e-12)
    assert(abs(z.embed(7) - cmath.exp(2j * cmath.pi * 21 / 20)) < 1e-12)
    with pytest.raises(ContextError):
        z.embed(2)


def test_json():
    x = cyclo_new(20) * Fraction(2, 3) - 5
    assert(CycloScalar.from_json(x.to_json()) == x)
    assert(x.to_json()["m"] == 20)
    with pytest.raises(ParseError):
        CycloScalar.from_json({"m": 20})
    with pytest.raises(ParseError):
        CycloScalar.from_json({"m": 20, "coeffs": ["x"] * 8})


def test_errors():
    with pytest.raises(ContextError):
        cyclo_new(2)
    with pytest.raises(ContextError):
        cyclo_new(20, 4)
    with pytest.raises(ContextError):
        CycloScalar(20, [1, 2])
    with pytest.raises(ContextError):
        cyclo_new(20).galois(5)
    with pytest.raises(ZeroDivisionError):
        CycloScalar.zero(20).inverse
    with pytest.raises(ZeroDivisionError):
        cyclo_new(20) / 0


def test_str():
    assert(str(CycloScalar.zero(20)) == "0")
    assert(str(cyclo_new(20)) == "z^1")
