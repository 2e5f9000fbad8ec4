import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from satolab.beurling import IntervalJ, chi_hat, paired_coeff, paired_main, selberg


def simpson_chi_hat(J, m, n=20000):
    """Composite Simpson rule for int_J e(-m x) dx."""
    x = np.linspace(J.alpha, J.beta, n + 1)
    return integrate.simpson(np.exp(-2j * np.pi * m * x), x=x)


def grid_without_endpoints(J):
    x = np.arange(10_000) / 10_000
    return x[(np.abs(x - J.alpha) >= 1e-6) & (np.abs(x - J.beta) >= 1e-6)]


def test_chi_hat_examples():
    J = IntervalJ(0.0, 0.5)
    assert chi_hat(J, 0) == 0.5
    assert chi_hat(J, 1) == pytest.approx(1 / (math.pi * 1j))
    assert abs(chi_hat(J, 1)) == pytest.approx(1 / math.pi)


@pytest.mark.parametrize("m", [-7, -1, 1, 2, 5, 13])
@pytest.mark.parametrize("ab", [(0.1, 0.35), (0.0, 1.0), (0.42, 0.43), (0.6, 0.95)])
def test_chi_hat_vs_quadrature(ab, m):
    J = IntervalJ(*ab)
    assert abs(chi_hat(J, m) - simpson_chi_hat(J, m)) < 1e-10


def test_degenerate_interval():
    with pytest.raises(ValueError):
        IntervalJ(0.3, 0.3)
    with pytest.raises(ValueError):
        selberg(IntervalJ(0.1, 0.2), 0)


def test_selberg_example():
    J = IntervalJ(0.1, 0.35)
    Sp = selberg(J, 9, "majorant")
    assert Sp[0].real == pytest.approx(0.35, abs=1e-15)
    x = grid_without_endpoints(J)
    assert (J.indicator(x) - Sp.real(x)).max() <= 1e-9
    assert abs(Sp[3] - chi_hat(J, 3)) <= 0.1


def test_paired_examples():
    J = IntervalJ(0.0, 0.5)
    S = selberg(J, 9)
    assert abs(paired_coeff(S, 2)) <= 2 / 10
    assert paired_main(J, 2) == pytest.approx(0.0, abs=1e-15)
    J = IntervalJ(0.2, 0.7)
    S = selberg(J, 99, "minorant")
    assert abs(paired_coeff(S, 1) - (math.sin(2 * math.pi * 0.7) - math.sin(2 * math.pi * 0.2)) / math.pi) <= 0.02
    assert abs((S[1] + S[-1]).imag) < 1e-14
    with pytest.raises(ValueError):
        paired_coeff(S, 100)


def test_difference_of_means():
    for M in (1, 5, 40):
        J = IntervalJ(0.2, 0.45)
        assert selberg(J, M).mean() - selberg(J, M, "minorant").mean() == pytest.approx(2 / (M + 1), abs=1e-15)


intervals = st.tuples(st.floats(0, 1), st.floats(0, 1)).filter(lambda ab: abs(ab[0] - ab[1]) > 1e-3).map(
    lambda ab: IntervalJ(min(ab), max(ab)))


@settings(max_examples=60, deadline=None)
@given(intervals, st.integers(1, 64), st.sampled_from(["majorant", "minorant"]))
def test_contract(J, M, sign):
    S = selberg(J, M, sign)
    s = 1 if sign == "majorant" else -1
    assert abs(S[0] - (J.length + s / (M + 1))) < 1e-14
    for m in range(1, M + 1):
        assert abs(S[m] - chi_hat(J, m)) <= 1 / (M + 1) + 1e-12
        assert abs(S[-m] - np.conj(S[m])) < 1e-14
        assert abs(paired_coeff(S, m) - paired_main(J, m)) <= 2 / (M + 1) + 1e-12
        assert abs(paired_coeff(S, m)) <= 2 / m + 2 / (M + 1)
    x = grid_without_endpoints(J)
    vals = S(x)
    assert np.abs(vals.imag).max() < 1e-12
    if sign == "majorant":
        assert (J.indicator(x) - vals.real).max() <= 1e-9
    else:
        assert (vals.real - J.indicator(x)).max() <= 1e-9
