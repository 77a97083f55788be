from fractions import Fraction

from hypothesis import given, settings, strategies as st

from mbdef.critical import universal_critical
from mbdef.oracle import bisection_root, numeric_cross_check, oracle_phi_c, oracle_t_c

small = st.fractions(min_value=Fraction(-1, 20), max_value=Fraction(1, 20), max_denominator=200)


def test_series_agree_through_w10():
    d = universal_critical(3, 10)
    ctx = d.phi_c.ctx
    assert d.phi_c == oracle_phi_c(ctx, 10)
    assert d.t_c["t"] == oracle_t_c(ctx, 10)


@settings(max_examples=30)
@given(small, small, small)
def test_bisection_solves_quadratic(p1, p2, p3):
    t = bisection_root(p1, p2, p3, bits=120)
    assert abs(t + p1 + 2 * p2 * t + 3 * p3 * t * t) < Fraction(1, 10 ** 30)


def test_cross_check_fields():
    phi_c = universal_critical(3, 8).phi_c
    r = numeric_cross_check(phi_c, {"phi1": Fraction(1, 100), "phi2": Fraction(1, 50), "phi3": Fraction(3, 100)})
    assert r.series_match
    assert r.within_tail
    assert r.leading == Fraction(-1, 2) * Fraction(1, 100) ** 2
    j = r.to_json()
    assert set(j) >= {"discrepancy", "weight_tail", "relative_to_leading"}


def test_cross_check_tiny_values():
    # far inside the radius of convergence the truncation error is negligible
    phi_c = universal_critical(3, 8).phi_c
    vals = {"phi1": Fraction(1, 10 ** 4), "phi2": Fraction(1, 10 ** 4), "phi3": Fraction(1, 10 ** 4)}
    r = numeric_cross_check(phi_c, vals)
    assert r.within_tail and r.within_relative()
