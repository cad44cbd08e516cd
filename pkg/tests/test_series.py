"""Truncated exact power series and the counting oracle."""

import math

import pytest

from alttamari.counting import closed_form
from alttamari.dyck import catalan
from alttamari.errors import OrderExceeded
from alttamari.series import (
    TruncatedSeries,
    marked_series,
    phi_coeff,
    phi_coeff_binomial,
    phi_coeff_series,
    s_coeff,
    s_series,
    solve_tree_series,
)


def test_arithmetic():
    t = TruncatedSeries.t(4)
    one = TruncatedSeries.constant(1, 4)
    s = (one + t) ** 2
    assert [s[i] for i in range(5)] == [1, 2, 1, 0, 0]
    assert ((one - t) * (one + t))[2] == -1
    assert t.shift(2)[3] == 1


def test_order_exceeded():
    with pytest.raises(OrderExceeded):
        TruncatedSeries.t(3)[4]


def test_derivative():
    t = TruncatedSeries.t(5)
    s = (TruncatedSeries.constant(1, 5) + t) ** 3
    ds = s.derivative()
    assert [ds[i] for i in range(3)] == [3, 6, 3]


def test_tree_series_is_catalan():
    a = solve_tree_series(30)
    for n in range(31):
        assert a[n] == catalan(n)


def test_marked_series():
    m = marked_series(10)
    # t A'(t) counts trees with a marked internal node: n * C_n at t^n
    for n in range(11):
        assert m[n] == n * catalan(n)


@pytest.mark.parametrize("k", range(7))
def test_phi_coeff_routes_agree(k):
    for n in range(15):
        assert phi_coeff_series(k, n) == phi_coeff_binomial(k, n) == phi_coeff(k, n)
        assert phi_coeff_binomial(k, n) == math.comb(k + 2 + 2 * n, n)


def test_s_coeff_matches_closed_form():
    for n in range(1, 20):
        for k in range(n):
            assert s_coeff(k, n) == closed_form(n, k)


def test_s_series_low_order():
    s2 = s_series(2, 8)
    assert s2[6] == 240
    s0 = s_series(0, 8)
    for n in range(1, 9):
        assert s0[n] == catalan(n)


def test_telescoping_identity():
    for n in range(3, 65):
        lhs = sum(math.comb(2 * n - k, n + 1) for k in range(2, n))
        assert lhs == math.comb(2 * n - 1, n + 2)
