"""Smoke tests for the python bindings: a thin pass over the main surface."""

from fractions import Fraction

import pytest

import torbord as tb


@pytest.fixture
def e1():
    return tb.Complex(4, [[1, 2, 3], [4]])


def test_complex_basics(e1):
    assert e1.m == 4
    assert e1.f_vector() == [1, 4, 3, 1]
    assert e1.euler_characteristic() == 2
    assert e1.contains_face([1, 2])
    assert not e1.contains_face([1, 4])
    assert e1.minimal_nonfaces() == [[1, 4], [2, 4], [3, 4]]
    assert e1.dual().dual() == e1
    assert tb.parse_text("4: 1 2 3, 4") == e1


def test_parse_errors():
    with pytest.raises(tb.TorbordError):
        tb.Complex(3, [[1, 2, 3]])
    with pytest.raises(tb.TorbordError):
        tb.Complex(1, [[1]])


def test_vectors(e1):
    assert tb.alpha(e1) == [-1, 1, 0, 1]
    assert tb.mu(e1) == [1, -3, 3, 0]
    assert tb.h_bier(e1) == [1, 4, 4, 1]
    assert tb.chi_y(e1) == [1, 4, 4, 1]
    assert tb.signature(e1) == 0
    assert tb.todd_genus(e1) == 1


def test_gamma_and_chern(e1):
    assert tb.gamma(4, [1, 1, 1]) == [64, 56, 48, 48]
    assert tb.gamma_table(3)[(2,)] == [3, 4, 4]
    assert tb.product_chern(4, 1, [1, 1, 1]) == 54
    k1 = tb.Complex(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4]])
    assert tb.chern_number(k1, [1, 1, 1]) == 56
    assert tb.milnor_number(e1) == -2


def test_todd():
    taus = tb.todd_coefficients(2)
    assert taus[(1, 1)] == Fraction(1, 12)
    assert taus[(2,)] == Fraction(1, 12)
    assert tb.todd_check(e1 := tb.Complex(4, [[1, 2, 3], [4]]))


def test_real_side():
    void5 = tb.Complex(5, [])
    assert tb.pontryagin_number(void5, [1, 1]) == 25
    assert tb.sw_real(void5, [4]) == 1
    assert tb.immersion_bounds(void5) == (3, 7, 14)
    assert not tb.null_bordant_real(void5)
    assert tb.oriented_class(void5) == 1


def test_bordism():
    a = tb.Complex(5, [[1], [2, 3], [3, 4], [3, 5], [4, 5]])
    b = tb.Complex(5, [[1], [2, 3, 4], [3, 5], [4, 5]])
    assert tb.bordant(a, b)
    e1 = tb.Complex(4, [[1, 2, 3], [4]])
    raw, reduced = tb.decompose(e1)
    assert raw == [-1, 1, 0, 1]
    assert reduced == {1: -1, 3: 2}
    cert = tb.is_generator(tb.Complex(3, [[1, 2], [1, 3], [2, 3]]))
    assert cert["generator"] and cert["milnor"] == 3


def test_verify_and_fan(e1):
    assert tb.verify(e1) == []
    assert tb.fan_check(e1)
    assert "alpha" in tb.analyze_json(e1)
