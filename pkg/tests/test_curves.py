import itertools

import numpy as np
import pytest

from satolab.classnumber import hurwitz
from satolab.curves import (
    SingularCurveError,
    aut_size,
    curve,
    hasse_bound,
    orbit,
    orbit_representatives,
    point_count,
    trace_histogram,
    verify_deuring,
)
from satolab.ff import field_for_q, make_field

from conftest import naive_histogram, naive_point_count


@pytest.mark.parametrize("a, b", [(1, 1), (1, 0), (2, 1), (4, 1)])
def test_point_count_matches_naive(f5, a, b):
    count, t = point_count(f5, a, b)
    assert count == naive_point_count(5, a, b)
    assert t == 6 - count


def test_point_count_examples(f5):
    assert point_count(f5, 1, 1) == (9, -3)
    assert point_count(f5, 1, 0) == (4, 2)
    with pytest.raises(SingularCurveError):
        point_count(f5, 0, 0)


def test_curve_params_angle(f5):
    c = curve(f5, 1, 1)
    assert c.discriminant_nonzero and c.trace == -3
    assert 2 * np.sqrt(5) * np.cos(c.angle) == pytest.approx(-3)
    assert not curve(f5, 0, 0).discriminant_nonzero


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_brute_histogram_matches_naive(p):
    hist = trace_histogram(make_field(p), "brute")
    assert hist.counts == {t: naive_histogram(p).get(t, 0) for t in hist.traces}


def test_histogram_q5(f5):
    hist = trace_histogram(f5, "brute")
    assert hist.total() == 20
    assert hist[4] == 1  # naive enumeration; (q-1) H(4) / 2 = 4 * (1/2) / 2
    assert all(hist[t] == hist[-t] for t in hist.traces)
    assert hist.moment(1) == 0


QS = [5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47, 49]


@pytest.mark.parametrize("q", QS)
def test_histogram_invariants(q):
    hist = trace_histogram(field_for_q(q), "brute")
    assert hist.total() == q * q - q
    assert np.array_equal(hist.array, hist.array[::-1])
    assert hist.moment(1) == 0
    assert hist.bound == int(np.floor(2 * np.sqrt(q)))


@pytest.mark.parametrize("q", QS + [121, 125, 169])
def test_orbit_mode_matches_brute(q):
    F = field_for_q(q)
    assert trace_histogram(F, "brute") == trace_histogram(F, "orbit")


@pytest.mark.parametrize("q", [5, 7, 13, 25, 49, 121])
def test_orbit_representatives_cover_every_pair(q):
    reps = orbit_representatives(field_for_q(q))
    assert sum(r.size for r in reps) == q * q
    assert len({(r.a, r.b) for r in reps}) == len(reps)


def test_orbit_representatives_are_inequivalent():
    F = make_field(13)
    seen = set()
    for rep in orbit_representatives(F):
        a, b = F.from_index(rep.a), F.from_index(rep.b)
        if not curve(F, a, b).discriminant_nonzero:
            continue
        members = {(F.index(c.a), F.index(c.b)) for c in orbit(F, a, b)}
        assert len(members) == rep.size
        assert not members & seen
        seen |= members


def test_aut_examples():
    assert aut_size(make_field(7), 1, 1) == 2
    assert aut_size(make_field(5), 1, 0) == 4
    assert aut_size(make_field(7), 0, 1) == 6
    with pytest.raises(SingularCurveError):
        aut_size(make_field(7), 0, 0)


def test_orbit_examples():
    F5, F7 = make_field(5), make_field(7)
    o = orbit(F5, 1, 0)
    assert {(c.a, c.b) for c in o} == {(F5.element(1), F5.element(0))}
    assert len(orbit(F7, 1, 1)) == 3


@pytest.mark.parametrize("q", [7, 11, 25, 49])
def test_orbits_share_trace_and_have_expected_size(q):
    F = field_for_q(q)
    rng = np.random.default_rng(q)
    for _ in range(8):
        a, b = (F.from_index(int(i)) for i in rng.integers(0, q, 2))
        try:
            members = orbit(F, a, b)
        except SingularCurveError:
            continue
        assert len(members) == (q - 1) // aut_size(F, a, b)
        assert {point_count(F, c.a, c.b)[1] for c in members} == {point_count(F, a, b)[1]}


@pytest.mark.parametrize("q", [5, 7, 11, 13, 25, 49])
def test_quadratic_twist_negates_trace(q):
    F = field_for_q(q)
    g = next(x for x in F.elements() if F.quad_char(x) == -1)
    g2, g3 = F.pow(g, 2), F.pow(g, 3)
    for a, b in itertools.product(F.elements(), repeat=2):
        if not curve(F, a, b).discriminant_nonzero:
            continue
        t = point_count(F, a, b)[1]
        assert point_count(F, F.mul(g2, a), F.mul(g3, b))[1] == -t
        if q > 13:
            break


def test_hasse_bound_exhaustive():
    for q in [101, 211, 503, 997]:
        hist = trace_histogram(field_for_q(q), "orbit")
        assert hist.total() == q * q - q
        assert len(hist.array) == 2 * hasse_bound(q) + 1


def test_deuring_q5_rows(f5):
    report = verify_deuring(f5)
    rows = {row.t: row for row in report.rows}
    assert rows[1].count == 2 and hurwitz(19).twelve_H == 12
    assert rows[1].status("aut") == "PASS"
    assert rows[4].status("aut") == "PASS"
    # t = 0 is reported only; the count is 4 while (q-1) H(20) = 8
    assert rows[0].status() == "INFO" and rows[0].count == 4 and rows[0].expected("literal") == 8
    assert report.ok


def test_deuring_literal_convention_is_refuted(f5):
    report = verify_deuring(f5, convention="literal")
    assert not report.ok
    assert all(2 * row.count == row.expected("literal") for row in report.rows)


@pytest.mark.parametrize("q", [25, 49, 121])
def test_deuring_prime_power_gcd_clean(q):
    F = field_for_q(q)
    report = verify_deuring(F, trace_histogram(F, "orbit"))
    assert report.ok
    assert {row.t for row in report.informational} == {t for t in range(-hasse_bound(q), hasse_bound(q) + 1)
                                                       if t % F.p == 0 and t * t < 4 * q}


def test_threads_do_not_change_histogram():
    F = make_field(53)
    assert trace_histogram(F, "brute", threads=1) == trace_histogram(F, "brute", threads=3)
    assert trace_histogram(F, "orbit", threads=1) == trace_histogram(F, "orbit", threads=4)
