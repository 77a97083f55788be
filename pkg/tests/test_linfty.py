import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from mbdef.algebra import Context, Generator, derivative
from mbdef.commands import default_chi_model
from mbdef.errors import ParityError, ShapeError
from mbdef.linfty import (TruncatedA1, chi, chi_chain_check, curved_skyscraper_check, dchi, decompose,
                          domain_structure, hh_ua1, random_point, structure_field_value, target_structure)

MODEL = default_chi_model()
CTX = MODEL.context
seeds = st.integers(0, 10 ** 6)


def point(seed, cutoff=8):
    return random_point(MODEL, random.Random(seed), cutoff)


def seven_terms(eta):
    d = decompose(eta, MODEL)
    phi, psi = d.phi, d.psi["tht"]
    th, t = CTX["tht"], CTX["t"]
    dt = lambda x: derivative(x, "t")
    bb = MODEL.base_bracket
    return (MODEL.D(phi) + MODEL.D(psi) * th + t * psi + bb(phi, phi) * Fraction(1, 2)
            + psi * dt(psi) * th + dt(phi) * psi + bb(phi, psi) * th)


@given(seeds)
def test_structure_field_seven_terms(seed):
    eta = point(seed)
    assert structure_field_value(domain_structure(MODEL), eta) == seven_terms(eta)


@settings(max_examples=25)
@given(seeds)
def test_square_zero(seed):
    # exact polynomial point: the base bracket lowers weight by one, so a
    # truncated point can lose terms that feed back below the cutoff
    eta = point(seed, 6).with_cutoff(None)
    assert domain_structure(MODEL).square_zero_at(eta)
    assert target_structure(MODEL).square_zero_at(chi(eta, MODEL, 12).with_cutoff(None))


@given(seeds)
def test_chain_condition(seed):
    r = chi_chain_check(point(seed), MODEL, 8)
    assert r.lhs == r.rhs
    assert r.psi_variation_killed


@given(seeds, seeds)
def test_dchi_linear(s1, s2):
    eta = point(s1)
    a, b = point(s2), point(s2 + 1)
    c = Fraction(3, 7)
    assert dchi(eta, a + b * c, None, MODEL, 8) == dchi(eta, a, None, MODEL, 8) + dchi(eta, b, None, MODEL, 8) * c


def test_chi_simple():
    e1, e2, t = CTX.gens("e1 e2 t")
    # phi = e1 e2 t: t_c = -e1 e2 and Phi_c = -1/2 (e1 e2)^2 = 0
    assert chi(e1 * e2 * t, MODEL, 8) == 0
    assert chi(CTX.zero(), MODEL, 8) == 0


def test_decompose_guards():
    with pytest.raises(ParityError):
        decompose(CTX["e1"], MODEL)


def test_truncated_a1_square_zero():
    A = TruncatedA1(3)
    L = A.structure([Generator("a", 0, 1), Generator("b", 1, 1)])
    x = L.context["a"] * L.context["E"] + L.context["b"] * L.context["H"]
    assert L.square_zero_at(x.with_cutoff(6))


def test_chevalley_cohomology():
    rep = TruncatedA1(2).chevalley_cohomology(6)
    deg0 = [k for k, v in rep.dims.items() if k[0] == 0 and v]
    assert sorted(w for _, w in deg0) == [0, 1]


def _hh_oracle(n, max_weight):
    """Dimensions by brute force with sympy ranks over monomials eps^a eta^b t^c u^e."""
    wt = lambda a, b, c, e: n * a + b + c + n * e
    deg = lambda a, b, c, e: a + 2 * b - e
    monos = [(a, b, c, e) for a in (0, 1) for e in (0, 1) for b in range(max_weight + 1)
             for c in range(max_weight + 1) if wt(a, b, c, e) <= max_weight]

    def d(m):
        a, b, c, e = m
        out = {}
        if e:
            out[(a, b, c + n, 0)] = (-1) ** a
        if a:
            k = (0, b + 1, c + n - 1, e)
            out[k] = out.get(k, 0) + n
        return out

    strata = {}
    for m in monos:
        strata.setdefault((deg(*m), wt(*m)), []).append(m)

    def rk(src, dst):
        if not src or not dst:
            return 0
        idx = {m: i for i, m in enumerate(dst)}
        M = sp.zeros(len(dst), len(src))
        for j, m in enumerate(src):
            for k, v in d(m).items():
                M[idx[k], j] += v
        return M.rank()

    return {key: len(ms) - rk(ms, strata.get((key[0] + 1, key[1]), []))
            - rk(strata.get((key[0] - 1, key[1]), []), ms) for key, ms in strata.items()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hh_table_matches_oracle(n):
    assert hh_ua1(n, 6).table == _hh_oracle(n, 6)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hh_degree0(n):
    r = hh_ua1(n, 8)
    assert [str(e) for e in r.degree0_basis] == (["1", "t"] + [f"t^{k}" for k in range(2, n)])[:n]


def test_curved_skyscraper():
    assert curved_skyscraper_check(5).rank == 0
    assert curved_skyscraper_check(0).rank == 2
    ctx = Context([Generator("a", 0, 1, max_exp=1)])
    assert curved_skyscraper_check(ctx["a"]).rank == 2
    with pytest.raises(ValueError):
        curved_skyscraper_check(Context([Generator("a", 0, 1)])["a"])
