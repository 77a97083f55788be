from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mbdef.algebra import Generator, embed, set_zero
from mbdef.critical import (DeformationPath, dimension_truncate, first_appearance, ideal_closure_check,
                            mc_residual_of_phi_c, scaling_family, solve_critical, universal_critical,
                            universal_phi_c)
from mbdef.errors import MCError, NonNilpotentError, ParityError
from mbdef.gerstenhaber import dolbeault_model, universal_model
from mbdef.oracle import oracle_phi_c, oracle_t_c
from mbdef.parse import parse
from strategies import rationals


def test_universal_t_c():
    d = universal_critical(3, 6)
    assert d.t_c["t"] == parse("-phi1 + 2*phi1*phi2 - 4*phi1*phi2^2 - 3*phi1^2*phi3", d.phi_c.ctx)
    assert d.residual_zero


def test_universal_phi_c_matches_oracle():
    phi_c = universal_phi_c(3, 8)
    ctx = phi_c.ctx
    assert phi_c == oracle_phi_c(ctx, 8)
    assert phi_c.coefficient_of("phi1^2") == Fraction(-1, 2)
    assert phi_c.coefficient_of("phi1^2*phi2") == 1
    assert phi_c.coefficient_of("phi1^2*phi2^2") == -2
    assert phi_c.coefficient_of("phi1^3*phi3") == -1


def test_t_c_matches_oracle_at_w10():
    d = universal_critical(3, 10)
    assert d.t_c["t"] == oracle_t_c(d.phi_c.ctx, 10)


def test_split_case():
    # phi1 = 0: t = 0 is already critical, so Phi_c vanishes
    phi_c = universal_phi_c(4, 10)
    assert set_zero(phi_c, ["phi1"]) == 0


def test_dimension_truncate():
    phi_c = universal_phi_c(3, 8)
    assert dimension_truncate(phi_c, 1) == 0
    assert dimension_truncate(phi_c, 2) == parse("-1/2*phi1^2", phi_c.ctx)


def test_first_appearance_small():
    phi_c = universal_phi_c(4, 10)
    assert first_appearance(phi_c, 4) == {1: 2, 2: 3, 3: 4, 4: 5}


def test_path_validation():
    m = universal_model(2)
    ctx = m.context
    with pytest.raises(NonNilpotentError):
        DeformationPath(ctx["t"] ** 3)
    with pytest.raises(ParityError):
        DeformationPath(ctx["tht"] * ctx["phi1"])


@st.composite
def random_paths(draw):
    N = draw(st.integers(1, 4))
    ctx = universal_model(N).context
    phis = [ctx[f"phi{n}"] for n in range(1, N + 1)]
    coeffs = []
    for _ in range(draw(st.integers(1, 4))):
        c = ctx.zero()
        for p in phis:
            c = c + draw(rationals) * p
        if draw(st.booleans()):
            c = c + draw(rationals) * phis[0] * phis[-1]
        coeffs.append(c)
    return DeformationPath.from_coefficients(coeffs), draw(st.integers(2, 10))


@settings(max_examples=40)
@given(random_paths())
def test_residual_vanishes(arg):
    path, cutoff = arg
    d = solve_critical(path, cutoff)
    assert d.residual_zero
    # Phi_c is the total potential at t_c, and t_c has positive weight
    assert d.t_c["t"].min_weight() is None or d.t_c["t"].min_weight() > 0


def test_multi_fiber_consistency():
    # two decoupled fibers give the sum of two single-fiber critical values
    m = universal_model(2, fibers=("t1", "t2"))
    ctx = m.context
    p1, p2, t1, t2 = ctx.gens("phi1 phi2 t1 t2")
    path = DeformationPath(p1 * t1 + p2 * t1 ** 2 + p1 * t2, ("t1", "t2"))
    d = solve_critical(path, 8)
    assert d.residual_zero
    single = universal_phi_c(2, 8)
    expect = embed(single, ctx) - Fraction(1, 2) * p1 ** 2
    assert d.phi_c == expect


def _curve_path(model):
    ctx = model.context
    z, th, y, e1, e2 = ctx.gens("z1 th1 y1 e1 e2")
    # every y-dependent coefficient carries z1, so brackets against z1*th1 vanish
    return DeformationPath.from_coefficients([z * th + e1 * e2, z * e1 * y, z * th * y * e1 * e2])


def test_mc_residual_curve_model():
    model = dolbeault_model(1, params=[Generator("e1", 1, 1), Generator("e2", 1, 1)])
    path = _curve_path(model)
    assert mc_residual_of_phi_c(model, path, 8) == 0


def test_mc_residual_two_coordinates():
    model = dolbeault_model(2, params=[Generator("e1", 1, 1), Generator("e2", 1, 1)])
    ctx = model.context
    z1, z2, th1, th2, y1, y2, e1, e2 = ctx.gens("z1 z2 th1 th2 y1 y2 e1 e2")
    path = DeformationPath.from_coefficients([z1 * th2 + e1 * e2 * y1, z2 * th2 * y1, e1 * e2 * y1 * y1])
    assert mc_residual_of_phi_c(model, path, 10) == 0


def test_mc_residual_rejects_non_mc_path():
    model = dolbeault_model(1, params=[Generator("e1", 1, 1), Generator("e2", 1, 1)])
    ctx = model.context
    path = DeformationPath.from_coefficients([ctx["ybar1"] * ctx["th1"] * ctx["e1"]])
    with pytest.raises(MCError):
        mc_residual_of_phi_c(model, path, 8)


def test_ideal_check_universal_and_control():
    path = DeformationPath.universal(2)
    assert ideal_closure_check(path, 8).passed
    wrong = solve_critical(path, 8).t_c["t"] + path.context["phi1"] * path.context["phi2"]
    r = ideal_closure_check(path, 8, t_c=wrong)
    assert not r.passed
    assert not r.critical_ok


def test_ideal_check_dolbeault():
    model = dolbeault_model(1, params=[Generator("e1", 1, 1), Generator("e2", 1, 1)])
    path = _curve_path(model)
    assert ideal_closure_check(path, 8, model=model).passed
    wrong = solve_critical(path, 8).t_c["t"] + model.context["z1"] * model.context["th1"]
    assert not ideal_closure_check(path, 8, model=model, t_c=wrong).passed


def test_scaling_family():
    r = scaling_family(DeformationPath.universal(3), 8)
    assert r.derivative_identity_ok and r.specialization_ok and r.substitution_ok
