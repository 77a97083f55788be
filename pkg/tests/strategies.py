"""Hypothesis strategies for random exact elements."""

from fractions import Fraction

from hypothesis import strategies as st

from mbdef.algebra import AlgebraElement, Context, Generator

CTX = Context([
    Generator("a", 0, 1),
    Generator("b", 2, 2),
    Generator("z1", 1, 1),
    Generator("z2", 1, 1),
    Generator("z3", 1, 2),
    Generator("u", -1, 1),
    Generator("w", 0, 1, max_exp=2),
])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero = rationals.filter(bool)


@st.composite
def monomials(draw, ctx=CTX, max_exp=2):
    exps = []
    for g in ctx.generators:
        cap = 1 if g.parity else (g.max_exp if g.max_exp is not None else max_exp)
        exps.append(draw(st.integers(0, min(cap, max_exp))))
    return tuple(exps)


@st.composite
def elements(draw, ctx=CTX, parity=None, max_terms=4, cutoff=None):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(monomials(ctx))
        if parity is not None and ctx.mono_parity(m) != parity:
            continue
        terms[m] = draw(nonzero)
    return AlgebraElement(ctx, terms, cutoff)


def homogeneous(ctx=CTX, max_terms=4):
    return st.integers(0, 1).flatmap(lambda p: elements(ctx, p, max_terms))
