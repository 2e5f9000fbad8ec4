from fractions import Fraction

import pytest

from satolab.chebyshev import lucas_w
from satolab.classnumber import hurwitz
from satolab.curves import trace_histogram
from satolab.ff import field_for_q
from satolab.modforms import trace_tk_mf
from satolab.traceformula import (
    curve_cheb_integer,
    curve_cheb_integers,
    curve_cheb_sum_bound,
    deuring_correction,
    hurwitz_cheb_sum,
    hurwitz_cheb_twelve,
    trace_tk_es,
    trace_tk_es_absorbed,
    verify_es,
)

PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_weight12_q5():
    b = trace_tk_es(12, 5)
    assert b.total == trace_tk_mf(12, 5) == 4830
    assert b.square_term == 0
    assert b.square_term + b.elliptic_term + b.divisor_term == b.total


@pytest.mark.parametrize("k", [4, 6, 8, 10, 14])
@pytest.mark.parametrize("q", [5, 7, 25, 49, 121])
def test_forced_zeros(k, q):
    assert trace_tk_es(k, q).total == 0


def test_square_q():
    b = trace_tk_es(12, 25)
    assert b.square_term == Fraction(11 * 25**5, 12)
    assert b.total == trace_tk_mf(12, 25)


@pytest.mark.parametrize("q", PRIMES + [25, 49, 121])
@pytest.mark.parametrize("k", [4, 12, 16, 22, 30])
def test_two_arrangements_agree(k, q):
    assert trace_tk_es(k, q).total == trace_tk_es_absorbed(k, q)


def test_verify_es_small():
    rows = verify_es(16, 13)
    assert rows and all(r.match for r in rows)
    assert {r.q for r in rows} == {5, 7, 11, 13}


@pytest.mark.parametrize("k, q", [(4, 4), (12, 9), (5, 7), (2, 7), (12, 6)])
def test_preconditions(k, q):
    with pytest.raises(ValueError):
        trace_tk_es(k, q)


def test_hurwitz_cheb_sum():
    value, ratio = hurwitz_cheb_sum(12, 5)
    assert ratio <= 3
    # 4: the sum is pinned by the trace formula: Tr T_4 = 0 = -1/2 * 5 * sum - 1
    value4, _ = hurwitz_cheb_sum(4, 5)
    b = trace_tk_es(4, 5)
    assert value4 == pytest.approx(float(-2 * b.elliptic_term / 5))
    assert value4 == pytest.approx(-2 / 5)


def test_hurwitz_cheb_symmetry():
    # even k: t and -t contribute equally, so folding onto t >= 0 doubles t > 0
    for q in [7, 11, 25]:
        for k in range(4, 20, 2):
            twelve = hurwitz_cheb_twelve(k, q)
            half = sum(
                2 * hurwitz(4 * q - t * t).twelve_H * lucas_w(k - 1, t, q) for t in range(1, 2 * q) if t * t < 4 * q
            ) + hurwitz(4 * q).twelve_H * lucas_w(k - 1, 0, q)
            assert twelve == half


@pytest.mark.parametrize("q", [5, 7, 11, 25, 49])
def test_curve_sum_odd_m_vanishes(q):
    hist = trace_histogram(field_for_q(q))
    for m in range(1, 16, 2):
        assert curve_cheb_integer(hist, m) == 0
        assert curve_cheb_sum_bound(hist, m)[0] == 0.0


def test_curve_sum_q5_m2_is_scaled_class_sum():
    hist = trace_histogram(field_for_q(5))
    value, _ = curve_cheb_sum_bound(hist, 2)
    class_value, _ = hurwitz_cheb_sum(4, 5)
    assert value == pytest.approx((5 - 1) * class_value / 2)
    assert deuring_correction(hist, 5, 2) == 0


@pytest.mark.parametrize("q", [5, 7, 13, 25, 49, 121])
def test_curve_class_identity_exact(q):
    F = field_for_q(q)
    hist = trace_histogram(F)
    for m in range(1, 14):
        lhs = 24 * curve_cheb_integer(hist, m)
        rhs = (q - 1) * hurwitz_cheb_twelve(m + 2, q) + deuring_correction(hist, F.p, m)
        assert lhs == rhs


def test_curve_sum_ratio_q25():
    hist = trace_histogram(field_for_q(25))
    assert curve_cheb_sum_bound(hist, 2)[1] <= 3


def test_batch_integers():
    hist = trace_histogram(field_for_q(11))
    assert curve_cheb_integers(hist, 9) == [curve_cheb_integer(hist, m) for m in range(10)]
    assert curve_cheb_integers(hist, 9)[0] == 110
