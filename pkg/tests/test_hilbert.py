"""Hilbert series: standard monomials, closed formulas, kernel oracle."""

from math import factorial

import pytest

from quasicov.errors import ResourceLimitError
from quasicov.groebner import StandardMonomialSet, quasi_ideal_basis, standard_monomials
from quasicov.hilbert import (
    HilbertSeries,
    coinvariant_kernel_dim,
    dyck_series,
    kernel_dims_until_zero,
    quotient_series,
    series_from_monomials,
    single_prefactor_series,
)
from quasicov.paths import catalan, enumerate_dyck, quotient_basis


def _complete_set(vectors, nvars):
    bound = max((sum(nu) for nu in vectors), default=0) + 1
    return StandardMonomialSet(nvars, tuple(vectors), bound, complete=True)


def test_series_from_monomials_examples():
    s = series_from_monomials(_complete_set(quotient_basis(2, 2), 2))
    assert s.coefficients == (1, 2, 2, 2, 1)
    s = series_from_monomials(_complete_set(enumerate_dyck(3), 3))
    assert s.coefficients == (1, 2, 2)
    s = series_from_monomials(_complete_set([(0, 0)], 2))
    assert s.coefficients == (1,)


def test_series_from_monomials_requires_completeness():
    incomplete = StandardMonomialSet(1, ((0,), (1,)), 1, complete=False)
    with pytest.raises(ValueError):
        series_from_monomials(incomplete)


def test_series_rendering():
    assert str(quotient_series(2, 2)) == "1 + 2t + 2t^2 + 2t^3 + t^4"
    assert str(quotient_series(1, 3)) == "1 + t + t^2"
    assert str(HilbertSeries.from_coefficients([])) == "0"


def test_series_trims_trailing_zeros():
    s = HilbertSeries.from_coefficients([1, 2, 0, 0])
    assert s.coefficients == (1, 2)
    assert s.total() == 3
    assert s.coefficient(0) == 1 and s.coefficient(5) == 0


def test_dyck_series_values():
    assert dyck_series(1).coefficients == (1,)
    assert dyck_series(2).coefficients == (1, 1)
    assert dyck_series(3).coefficients == (1, 2, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_dyck_series_counts_dyck_vectors_by_degree(n):
    """Coefficient k counts the Dyck vectors of degree k."""
    histogram = [0] * n
    for nu in enumerate_dyck(n):
        histogram[sum(nu)] += 1
    while histogram and histogram[-1] == 0:
        histogram.pop()
    assert list(dyck_series(n).coefficients) == histogram
    assert dyck_series(n).total() == catalan(n)


def test_quotient_series_examples():
    assert quotient_series(2, 2).coefficients == (1, 2, 2, 2, 1)
    assert quotient_series(1, 3).coefficients == (1, 1, 1)
    for n in range(1, 5):
        assert quotient_series(n, 1) == dyck_series(n)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", range(1, 5))
def test_quotient_series_total(n, m):
    assert quotient_series(n, m).total() == m**n * catalan(n)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_quotient_series_matches_basis_histogram(n, m):
    histogram = series_from_monomials(_complete_set(quotient_basis(n, m), n))
    assert histogram == quotient_series(n, m)


def test_single_prefactor_series_is_wrong_for_general_n():
    """The prefactor-to-the-first-power variant totals m * catalan(n), so it
    disagrees with the quotient whenever n >= 2 and m >= 2."""
    for n in range(1, 5):
        for m in range(1, 4):
            literal = single_prefactor_series(n, m)
            assert literal.total() == m * catalan(n)
            if n == 1 or m == 1:
                assert literal == quotient_series(n, m)
            else:
                assert literal != quotient_series(n, m)


def test_kernel_dim_examples():
    assert coinvariant_kernel_dim(1, 2, 2, "quasi") == 0
    assert coinvariant_kernel_dim(3, 2, 0, "quasi") == 1
    assert coinvariant_kernel_dim(3, 2, 0, "classical") == 1
    assert coinvariant_kernel_dim(2, 1, 1, "quasi") == 1  # kernel of d1 + d2
    with pytest.raises(ValueError):
        coinvariant_kernel_dim(2, 1, 1, "other")


def test_kernel_dim_resource_cap():
    with pytest.raises(ResourceLimitError):
        coinvariant_kernel_dim(3, 3, 9, "quasi", max_entries=100)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_three_way_agreement(n, m):
    """Kernel oracle == standard-monomial histogram == closed formula, for
    every degree through one past the top."""
    closed = quotient_series(n, m)
    basis = quasi_ideal_basis(n, m)
    sms = standard_monomials(basis, basis.degree_bound)
    assert series_from_monomials(sms) == closed
    dims = kernel_dims_until_zero(n, m, "quasi")
    assert dims == list(closed.coefficients)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1)])
def test_chevalley_dimension_by_kernel(n, m):
    dims = kernel_dims_until_zero(n, m, "classical")
    assert sum(dims) == m**n * factorial(n)
