import pytest
from hypothesis import given, settings

from gpsrb import (
    BadElement,
    IntLine,
    MonoidMismatch,
    NatLine,
    QQ,
    Series,
    VectorProduct,
    ZZ,
    indicator,
    one_series,
    series_eq,
    zero_series,
)

from conftest import int_series, naive_convolve, vec2_series

M = IntLine()


def test_normalization_drops_zeros_and_merges():
    f = Series(M, ZZ, [(1, ZZ.from_int(2)), (1, ZZ.from_int(-2)), (3, ZZ.from_int(5)), (4, ZZ.zero())])
    assert f.support() == [3]
    assert f.coeff(1) == ZZ.zero()
    assert f.coeff(3) == ZZ.from_int(5)


def test_element_and_coefficient_checks():
    with pytest.raises(BadElement):
        Series(M, ZZ, {"x": ZZ.one()})
    with pytest.raises(TypeError):
        Series(M, ZZ, {0: QQ.one()})
    with pytest.raises(BadElement):
        Series(NatLine(), ZZ, {-1: ZZ.one()})


def test_convolution_example():
    f = Series(M, ZZ, {-2: ZZ.from_int(1), 1: ZZ.from_int(2)})
    g = Series(M, ZZ, {-1: ZZ.from_int(3), 3: ZZ.from_int(1)})
    p = f * g
    assert p.coeff(-3) == ZZ.from_int(3)
    assert p.coeff(0) == ZZ.from_int(6)
    assert p.coeff(1) == ZZ.from_int(1)
    assert p.coeff(4) == ZZ.from_int(2)
    assert p.support() == [-3, 0, 1, 4]


def test_indicator_is_unit_at_neutral():
    one = one_series(M, QQ)
    f = Series(M, QQ, {-2: QQ.from_int(3), 5: QQ.from_int(7)})
    assert one * f == f
    assert f * one == f
    assert indicator(M, 2, QQ) * indicator(M, 3, QQ) == indicator(M, 5, QQ)


def test_mismatch_errors():
    f = Series(M, ZZ, {0: ZZ.one()})
    g = Series(NatLine(), ZZ, {0: ZZ.one()})
    with pytest.raises(MonoidMismatch):
        f + g
    with pytest.raises(MonoidMismatch):
        series_eq(f, g)
    h = Series(M, QQ, {0: QQ.one()})
    with pytest.raises(TypeError):
        f * h


def test_scale_and_neg():
    f = Series(M, QQ, {1: QQ.from_int(2), 2: QQ.from_int(-3)})
    assert f.scale(QQ.zero()).is_zero()
    assert f.scale(QQ.from_int(2)).coeff(2) == QQ.from_int(-6)
    assert (-f) + f == zero_series(M, QQ)
    assert QQ.from_int(2) * f == f * QQ.from_int(2)


def test_vector_monoid_series():
    V = VectorProduct(2)
    f = Series(V, ZZ, {(1, 0): ZZ.one(), (0, 1): ZZ.one()})
    p = f * f
    assert p.coeff((1, 1)) == ZZ.from_int(2)
    assert p.coeff((2, 0)) == ZZ.one()
    assert p.support() == [(0, 2), (1, 1), (2, 0)]


def test_str_and_json():
    f = Series(M, QQ, {-1: QQ.from_ratio(1, 2), 0: QQ.from_int(-3)})
    assert "1/2" in str(f)
    j = f.to_json()
    assert j["ring"] == "Q"
    assert j["terms"][0] == {"exp": "-1", "coeff": "1/2"}


@settings(max_examples=60)
@given(f=int_series(), g=int_series())
def test_convolution_matches_naive_oracle(f, g):
    assert f * g == naive_convolve(f, g)


@settings(max_examples=60)
@given(f=vec2_series(), g=vec2_series())
def test_vector_convolution_matches_naive_oracle(f, g):
    assert f * g == naive_convolve(f, g)


@settings(max_examples=40)
@given(f=int_series(), g=int_series(), h=int_series())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f  # the monoid is commutative
    assert f * (g + h) == f * g + f * h
    assert f + zero_series(M, QQ) == f
    assert f * one_series(M, QQ) == f


@given(f=int_series())
def test_no_stored_zero_coefficients(f):
    for s in f.support():
        assert not f.coeff(s).is_zero()


@given(f=int_series(), g=int_series())
def test_support_of_sum_bounded_by_union(f, g):
    union = set(f.support()) | set(g.support())
    assert set((f + g).support()) <= union
