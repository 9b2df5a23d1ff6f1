"""Dash operation: single steps, iterates, closed form, orbits."""

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from supercong import (
    DashParams,
    NonInvertibleError,
    PadicDenominatorError,
    Rational,
    dash,
    dash_closed_form,
    dash_iter,
    dash_orbit,
    dash_period,
    least_residue,
)

PRIMES = [3, 5, 7, 11, 13, 17, 19]

rationals = st.fractions(min_value=-500, max_value=500, max_denominator=48)
primes = st.sampled_from(PRIMES)


def valid_params():
    from math import gcd

    triples = [
        (c, d, s)
        for d in range(2, 13)
        for c in range(1, d + 1)
        for s in range(1, d + 1)
        if gcd(c * s, d) == 1
    ]
    return st.sampled_from(triples)


def test_least_residue_reference_values():
    assert least_residue(Rational(-1, 4), 7, 1) == 5
    assert least_residue(Rational(-1, 4), 13, 1) == 3
    assert least_residue(Rational(0), 11, 2) == 0


def test_dash_reference_values():
    assert dash(Rational(1, 4), 7) == Rational(3, 4)
    assert dash(Rational(1, 4), 13) == Rational(1, 4)
    assert dash(Rational(0), 7) == 0
    assert dash(Rational(1), 7) == 1
    assert dash(Rational(1, 2), 5) == Rational(1, 2)


def test_dash_rejects_non_p_adic_input():
    with pytest.raises(PadicDenominatorError):
        dash(Rational(1, 7), 7)


def test_dash_iter_reference_values():
    assert dash_iter(Rational(1, 4), 7, 2) == Rational(1, 4)
    assert dash_iter(Rational(22, 7), 5, 0) == Rational(22, 7)
    assert dash_iter(Rational(5, 6), 7, 1) == Rational(5, 6)
    with pytest.raises(ValueError):
        dash_iter(Rational(1, 4), 7, -1)


def test_dash_closed_form_reference_values():
    assert dash_closed_form(DashParams(1, 4, 3), 1) == Rational(3, 4)
    assert dash_closed_form(DashParams(1, 3, 2), 1) == Rational(2, 3)
    for n in range(7):
        assert dash_closed_form(DashParams(3, 8, 1), n) == Rational(3, 8)


def test_dash_period_reference_values():
    assert dash_period(4, 3) == 2
    assert dash_period(9, 1) == 1
    assert dash_period(7, 3) == 6
    with pytest.raises(NonInvertibleError):
        dash_period(9, 3)


def test_params_validation():
    with pytest.raises(ValueError):
        DashParams(5, 4, 3)  # c > d
    with pytest.raises(ValueError):
        DashParams(2, 4, 1)  # gcd(c, d) > 1
    with pytest.raises(ValueError):
        DashParams(1, 4, 2)  # gcd(s, d) > 1
    with pytest.raises(ValueError):
        DashParams(1, 1, 1)  # d too small


def test_orbit_closes_with_minimal_period():
    orbit = dash_orbit(Rational(1, 4), 7)
    assert orbit.iterates == (Rational(1, 4), Rational(3, 4), Rational(1, 4))
    assert orbit.period == 2
    assert orbit.period == dash_period(4, 3)


def test_orbit_rejects_eventually_periodic_points():
    # 7/6 falls onto the cycle of 1/6 without ever returning to 7/6
    with pytest.raises(ValueError):
        dash_orbit(Rational(7, 6), 5)


@given(rationals, primes)
def test_dash_step_subtracts_a_least_residue(x, p):
    assume(x.denominator % p != 0)
    shift = p * dash(x, p) - x
    assert shift == least_residue(-x, p, 1)
    assert 0 <= shift < p


@given(valid_params(), st.integers(min_value=0, max_value=6))
def test_closed_form_matches_iteration_for_every_matching_prime(triple, n):
    c, d, s = triple
    params = DashParams(c, d, s)
    expected = dash_closed_form(params, n)
    matching = [p for p in PRIMES if p % d == s % d and d % p != 0]
    for p in matching:
        assert dash_iter(params.alpha, p, n) == expected


@given(valid_params(), st.sampled_from([5, 7, 11, 13]), st.integers(min_value=1, max_value=3))
def test_iterate_equals_base_plus_residue_over_prime_power(triple, p, r):
    # x^(*r) = (x + <-x> mod p^r) / p^r, with no class restriction on p
    c, d, s = triple
    alpha = DashParams(c, d, s).alpha
    assume(d % p != 0)
    a = least_residue(-alpha, p, r)
    assert dash_iter(alpha, p, r) == (alpha + a) / p**r


@given(valid_params(), st.integers(min_value=0, max_value=4))
def test_iteration_is_periodic_with_the_group_order(triple, n):
    c, d, s = triple
    params = DashParams(c, d, s)
    period = dash_period(d, s)
    assert dash_closed_form(params, n + period) == dash_closed_form(params, n)
    matching = [p for p in PRIMES if p % d == s % d and d % p != 0]
    if matching:
        p = matching[0]
        assert dash_iter(params.alpha, p, n + period) == dash_iter(params.alpha, p, n)


@given(st.integers(min_value=0, max_value=200), st.sampled_from([5, 7, 11]))
def test_integers_are_eventually_fixed(n, p):
    # every nonnegative integer dashes into {0, 1} and stays there
    y = Rational(n)
    for _ in range(10):
        y = dash(y, p)
    assert y in (Rational(0), Rational(1))
    assert dash(y, p) == y
