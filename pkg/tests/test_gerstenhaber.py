from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mbdef.algebra import Context, Generator
from mbdef.errors import MCError, ParityError
from mbdef.gerstenhaber import (GerstenhaberModel, MCElement, dolbeault_model, gauge_from_zero,
                                koszul_critical_resolution, mc_check, twisted_differential,
                                universal_model)
from strategies import elements

MODEL = dolbeault_model(1, params=[Generator("e1", 1, 1), Generator("e2", 1, 1)])
CTX = MODEL.context

hom = st.integers(0, 1).flatmap(lambda p: elements(CTX, p, 4))


def sh(a):
    return (a.parity() + 1) % 2


def test_bracket_normalisation():
    th, t = CTX["tht"], CTX["t"]
    assert MODEL.bracket(th, t) == 1
    assert MODEL.bracket(t, th) == -1
    assert MODEL.bracket(t * t * Fraction(1, 2), th) == -t


def test_dolbeault_D():
    assert MODEL.D(CTX["ybar1"]) == CTX["z1"]
    assert MODEL.D(CTX["z1"]) == 0
    assert MODEL.D(CTX["ybar1"] ** 2) == 2 * CTX["ybar1"] * CTX["z1"]


def test_rejects_nonsquare_zero_D():
    ctx = Context([Generator("x", 0), Generator("u", 1, 1), Generator("v", 2, 1)])
    with pytest.raises(ValueError):
        GerstenhaberModel(ctx, (), {"x": ctx["u"], "u": ctx["v"]})


def test_rejects_bad_pair():
    ctx = Context([Generator("x", 0), Generator("y", 0)])
    with pytest.raises(ParityError):
        GerstenhaberModel(ctx, (("x", "y"),))


def test_rejects_non_derivation():
    # D(y) = y*th squares to zero but {th, D(y)} = th spoils the derivation rule
    ctx = Context([Generator("y", 0), Generator("th", 1, 1)])
    with pytest.raises(ValueError, match="derivation"):
        GerstenhaberModel(ctx, (("th", "y"),), {"y": ctx["y"] * ctx["th"]})


@given(hom, hom)
def test_antisymmetry(a, b):
    sign = -1 if (sh(a) and sh(b)) else 1
    assert MODEL.bracket(a, b) == -sign * MODEL.bracket(b, a)


@given(hom, hom, hom)
def test_jacobi(a, b, c):
    # {a,{b,c}} = {{a,b},c} + (-1)^{(|a|-1)(|b|-1)} {b,{a,c}}
    br = MODEL.bracket
    sign = -1 if (sh(a) and sh(b)) else 1
    assert br(a, br(b, c)) == br(br(a, b), c) + sign * br(b, br(a, c))


@given(hom, hom, hom)
def test_poisson_leibniz(a, b, c):
    # {a, bc} = {a,b}c + (-1)^{(|a|-1)|b|} b{a,c}
    br = MODEL.bracket
    sign = -1 if (sh(a) and b.parity()) else 1
    assert br(a, b * c) == br(a, b) * c + sign * (b * br(a, c))


@given(hom, hom)
def test_D_derivation(a, b):
    D = MODEL.D
    sign = -1 if a.parity() else 1
    assert D(a * b) == D(a) * b + sign * (a * D(b))
    assert D(MODEL.bracket(a, b)) == MODEL.bracket(D(a), b) + (-sign) * MODEL.bracket(a, D(b))


@given(hom)
def test_D_squared(a):
    assert MODEL.D(MODEL.D(a)) == 0


def test_mc_and_twisted_differential():
    e1, e2, t, tht = CTX.gens("e1 e2 t tht")
    phi = e1 * e2 * t
    assert mc_check(phi, MODEL) == 0
    Phi = MCElement.verify(phi, MODEL)
    d = twisted_differential(Phi)
    for x in [t, tht, t * tht, CTX["ybar1"] * tht, tht * e1]:
        assert d(d(x)) == 0
    with pytest.raises(MCError):
        MCElement.verify(CTX["ybar1"] * tht * CTX["z1"] + t * t, MODEL)
    with pytest.raises(MCError):
        twisted_differential(MCElement(phi, MODEL))


def test_gauge_from_zero_is_mc():
    e1, e2, ybar = CTX.gens("e1 e2 ybar1")
    h = e1 * ybar
    phi = gauge_from_zero(MODEL, h, 6)
    assert phi
    assert mc_check(phi, MODEL) == 0


def test_universal_model_shape():
    m = universal_model(3)
    assert m.context.names[:3] == ("phi1", "phi2", "phi3")
    assert m.bracket(m.context["tht"], m.context["t"]) == 1


@pytest.mark.parametrize("m", [0, 1, 2])
def test_koszul_skyscraper(m):
    r = koszul_critical_resolution(m, 4)
    assert r.notes["skyscraper"]
    assert r.total == 1
