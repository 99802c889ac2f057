import pytest
from hypothesis import given, settings

from skewcenter import polys
from skewcenter.center import (
    RationalSeries,
    center_generators,
    center_presentation,
    expand_series,
    hilbert_series,
    numerator_is_cyclotomic,
    same_rational_function,
)
from skewcenter.oracle import lattice_count_by_degree

from conftest import ell24, skew_params


def test_hypersurface_generators(hyper5):
    assert set(center_generators(hyper5)) == {(1, 1, 0), (0, 0, 5), (5, 0, 0), (0, 5, 0)}


def test_calabi_yau_generators(cy3):
    assert set(center_generators(cy3)) == {(1, 1, 1), (3, 0, 0), (0, 3, 0), (0, 0, 3)}


def test_plane_generators(plane4):
    assert set(center_generators(plane4)) == {(4, 0), (0, 4)}


def test_ell24_series():
    s = hilbert_series(ell24(9))
    assert sum(s.numerator) == 24 and s.denominator_exponents == (24, 24, 24)
    num = [0] * 32
    for k in (0, 13, 18, 31):
        num[k] = 1
    den = polys.product_one_minus([12, 24, 8])
    assert same_rational_function(s.reduced_numerator, s.reduced_denominator, num, den)
    assert not numerator_is_cyclotomic(s)


def test_hypersurface_series(hyper5):
    s = hilbert_series(hyper5)
    assert s.numerator == (1, 0, 1, 0, 1, 0, 1, 0, 1)
    assert same_rational_function(
        s.reduced_numerator, s.reduced_denominator, polys.one_minus_t_pow(10), polys.product_one_minus([2, 5, 5, 5])
    )
    assert numerator_is_cyclotomic(s)


def test_calabi_yau_series(cy3):
    s = hilbert_series(cy3)
    assert same_rational_function(
        s.reduced_numerator, s.reduced_denominator, polys.one_minus_t_pow(9), polys.product_one_minus([3] * 4)
    )


def test_expand_examples(hyper5):
    free = RationalSeries.from_raw([1], [1, 1])
    assert expand_series(free, 3) == [1, 2, 3, 4]
    # x^5, y^5, z^5 all sit in degree 5
    assert expand_series(hilbert_series(hyper5), 5) == [1, 0, 1, 0, 1, 3]
    assert expand_series(hilbert_series(hyper5), 0) == [1]
    with pytest.raises(ValueError):
        expand_series(free, -1)


def test_cyclotomic_flag_basics():
    assert numerator_is_cyclotomic(RationalSeries.from_raw([1], [2, 3]))
    assert numerator_is_cyclotomic(RationalSeries.from_raw([1, 0, 1, 0, 1, 0, 1, 0, 1], [5, 5, 5]))


@settings(max_examples=60)
@given(skew_params())
def test_series_matches_lattice_count(p):
    s = hilbert_series(p)
    bound = 2 * p.ell
    assert expand_series(s, bound) == lattice_count_by_degree(p, bound)
    assert same_rational_function(s.numerator, s.denominator(), s.reduced_numerator, s.reduced_denominator)


@settings(max_examples=60)
@given(skew_params())
def test_generators_minimal(p):
    gens = center_generators(p)
    for g in gens:
        assert all(x <= p.ell for x in g)
        others = [h for h in gens if h != g]
        assert not any(all(h[k] <= g[k] for k in range(p.n)) for h in others)


def test_presentation_dict(hyper5):
    d = center_presentation(hyper5).to_dict()
    assert set(d) == {"generators", "series", "numerator_cyclotomic"}
    assert set(d["series"]) == {"numerator", "denominator_exponents", "reduced"}
