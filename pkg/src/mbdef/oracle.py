"""Independent checks of the universal critical value.

Nothing here uses the fixed-point solver. For ``phi(t) = p1 t + p2 t^2 + p3 t^3``
the critical equation ``t + p1 + 2 p2 t + 3 p3 t^2 = 0`` is a quadratic, so the
critical point has a closed form; :func:`closed_form_series` expands it with sympy
in a bookkeeping parameter ``s`` (each ``p_n`` scaled by ``s``, so the power of s
is the factor count). :func:`bisection_root` finds the same root numerically in
exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .algebra import AlgebraElement, Context, evaluate


def _symbols():
    return sp.symbols("p1 p2 p3 s")


def closed_form_critical_point():
    """Root of ``t + s p1 + 2 s p2 t + 3 s p3 t^2`` that tends to 0 with s."""
    p1, p2, p3, s = _symbols()
    a, b, c = 3 * s * p3, 1 + 2 * s * p2, s * p1
    # (-b + sqrt(b^2 - 4ac)) / 2a rewritten as 2c / (-b - sqrt(...)) to stay regular at a = 0
    return 2 * c / (-b - sp.sqrt(b ** 2 - 4 * a * c))


def closed_form_series(max_factors: int):
    """``(t_c, Phi_c)`` as sympy polynomials through ``s^max_factors`` (s set to 1)."""
    p1, p2, p3, s = _symbols()
    tc = closed_form_critical_point()
    tser = sp.series(tc, s, 0, max_factors + 1).removeO()
    t = sp.expand(tser)
    Phi = t ** 2 / 2 + s * (p1 * t + p2 * t ** 2 + p3 * t ** 3)
    Phi = sp.series(sp.expand(Phi), s, 0, max_factors + 1).removeO()
    tcut = sum(t.coeff(s, k) for k in range(max_factors + 1))
    return sp.expand(tcut), sp.expand(Phi.subs(s, 1))


def to_element(expr, ctx: Context, names=("phi1", "phi2", "phi3")) -> AlgebraElement:
    """Convert a sympy polynomial in p1, p2, p3 to an element over ``names``."""
    p = sp.symbols("p1 p2 p3")
    poly = sp.Poly(expr, *p)
    out = ctx.zero()
    for exps, c in poly.terms():
        c = sp.Rational(c)
        out = out + ctx.monomial([(n, e) for n, e in zip(names, exps) if e], Fraction(int(c.p), int(c.q)))
    return out


def oracle_phi_c(ctx: Context, cutoff: int) -> AlgebraElement:
    """Universal N=3 critical value through weight ``cutoff`` (each phi_n has weight 2)."""
    _, Phi = closed_form_series(cutoff // 2)
    return to_element(Phi, ctx)


def oracle_t_c(ctx: Context, cutoff: int) -> AlgebraElement:
    t, _ = closed_form_series(cutoff // 2)
    return to_element(t, ctx)


def bisection_root(p1: Fraction, p2: Fraction, p3: Fraction, bits: int = 200) -> Fraction:
    """Root of ``t + p1 + 2 p2 t + 3 p3 t^2`` nearest 0, by exact bisection.

    The bracket ``[-2|p1|/(1+2p2) - eps, 2|p1|/(1+2p2) + eps]`` is assumed to hold
    exactly one sign change, which is checked.
    """
    f = lambda t: t + p1 + 2 * p2 * t + 3 * p3 * t * t
    r = 2 * abs(p1) / (1 + 2 * p2) + Fraction(1, 10 ** 6)
    lo, hi = -r, r
    if (f(lo) > 0) == (f(hi) > 0):
        raise ValueError("no sign change in the search bracket")
    for _ in range(bits):
        mid = (lo + hi) / 2
        if (f(lo) > 0) == (f(mid) > 0):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass
class NumericCrossCheck:
    values: dict
    truncated: Fraction
    exact: Fraction
    tail: Fraction
    leading: Fraction
    series_match: bool

    @property
    def discrepancy(self) -> Fraction:
        return abs(self.truncated - self.exact)

    @property
    def within_tail(self) -> bool:
        return self.discrepancy <= abs(self.tail)

    @property
    def relative(self) -> Fraction:
        return self.discrepancy / abs(self.leading)

    def within_relative(self, bound=Fraction(1, 10 ** 6)) -> bool:
        return self.relative <= bound

    def to_json(self):
        return {
            "values": {k: str(v) for k, v in self.values.items()},
            "truncated": float(self.truncated),
            "exact": float(self.exact),
            "discrepancy": float(self.discrepancy),
            "weight_tail": float(self.tail),
            "relative_to_leading": float(self.relative),
            "series_match": self.series_match,
            "within_tail": self.within_tail,
            "within_relative_1e-6": self.within_relative(),
        }


def numeric_cross_check(phi_c: AlgebraElement, values: dict, cutoff: int = 8) -> NumericCrossCheck:
    """Compare the weight-``cutoff`` series, evaluated at rational values, with the exact root.

    ``tail`` is the next weight level (cutoff + 2) of the closed-form series.
    """
    ctx = phi_c.ctx
    series_match = phi_c.with_cutoff(cutoff) == oracle_phi_c(ctx, cutoff)
    truncated = Fraction(evaluate(phi_c.with_cutoff(cutoff), values))
    p1, p2, p3 = (Fraction(values.get(n, 0)) for n in ("phi1", "phi2", "phi3"))
    t = bisection_root(p1, p2, p3)
    exact = t * t / 2 + p1 * t + p2 * t * t + p3 * t ** 3
    nxt = oracle_phi_c(ctx, cutoff + 2).homogeneous_part(cutoff + 2)
    tail = Fraction(evaluate(nxt, values))
    leading = Fraction(evaluate(phi_c.homogeneous_part(phi_c.min_weight() or 0), values))
    return NumericCrossCheck(dict(values), truncated, exact, tail, leading, series_match)
