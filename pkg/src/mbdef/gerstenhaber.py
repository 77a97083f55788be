"""Finitely generated models of functions on shifted cotangent bundles.

A model is a graded-commutative algebra whose generators are split into even
coordinates (base ``y_i``, fiber ``t_i``, auxiliary ``ybar_i`` and parameters) and
odd generators (forms ``z_i`` and polyvector directions ``th_i``), together with

* a pairing ``(theta, coordinate)`` defining the odd Poisson (Schouten) bracket
  of degree -1, normalised by ``{theta, x} = +1``;
* an odd derivation ``D`` (the Dolbeault differential) fixed by its values on
  generators.

Bracket convention (frozen here, used everywhere)::

    {a, b} = sum over pairs (th, x) of
             (a d_R/d th)(d_L/d x b) - (a d_R/d x)(d_L/d th b)

With it ``{th_t, t} = 1``, ``{t, th_t} = -1`` and ``{t^2/2, th_t} = -t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, combinations
from typing import Callable, Mapping

from .algebra import AlgebraElement, Context, Generator, derivative, embed
from .errors import BoundsError, ContextError, DivergenceError, MCError, ParityError
from .linalg import stratum_homology


@dataclass(frozen=True, eq=False)
class GerstenhaberModel:
    context: Context
    pairs: tuple[tuple[str, str], ...]
    differential: Mapping[str, AlgebraElement] = field(default_factory=dict)
    fiber: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        ctx = self.context
        pairs = tuple(tuple(p) for p in self.pairs)
        fiber = tuple(tuple(p) for p in self.fiber)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "fiber", fiber)
        seen = set()
        for th, x in pairs:
            gt, gx = ctx.generator(th), ctx.generator(x)
            if gt.parity != 1 or gx.parity != 0:
                raise ParityError(f"pair ({th}, {x}) must be (odd, even)")
            if gt.degree + gx.degree != 1:
                raise ValueError(f"pair ({th}, {x}) must have degrees summing to 1")
            if th in seen or x in seen:
                raise ValueError(f"generator paired twice in ({th}, {x})")
            seen.update((th, x))
        for p in fiber:
            if p not in pairs:
                raise ValueError(f"fiber pair {p} is not a declared pair")
        diff = {}
        for name, v in dict(self.differential).items():
            g = ctx.generator(name)
            if not isinstance(v, AlgebraElement):
                v = ctx.scalar(v)
            if v.ctx != ctx:
                raise ContextError(f"differential value for {name} lives in another context")
            if v:
                d = v.degree()
                if d != g.degree + 1:
                    raise ValueError(f"D({name}) must be homogeneous of degree {g.degree + 1}")
                diff[name] = v
        object.__setattr__(self, "differential", diff)
        self._validate_differential()

    # -- structure --------------------------------------------------------

    @property
    def base_pairs(self):
        return tuple(p for p in self.pairs if p not in self.fiber)

    def D(self, a: AlgebraElement) -> AlgebraElement:
        """The odd derivation ``sum_x D(x) d_L/dx``."""
        self._check(a)
        out = self.context.zero(a.cutoff)
        for name, v in self.differential.items():
            da = derivative(a, name, "left")
            if da:
                out = out + v.with_cutoff(a.cutoff) * da
        return out

    def bracket(self, a: AlgebraElement, b: AlgebraElement, pairs=None) -> AlgebraElement:
        """Schouten bracket over ``pairs`` (default: all declared pairs)."""
        self._check(a)
        self._check(b)
        cut = _mincut(a.cutoff, b.cutoff)
        out = self.context.zero(cut)
        for th, x in self.pairs if pairs is None else pairs:
            a_th = derivative(a, th, "right")
            if a_th:
                bx = derivative(b, x, "left")
                if bx:
                    out = out + a_th * bx
            a_x = derivative(a, x, "right")
            if a_x:
                b_th = derivative(b, th, "left")
                if b_th:
                    out = out - a_x * b_th
        return out.with_cutoff(cut)

    def extend(self, extra) -> "GerstenhaberModel":
        """Same model over a context with ``extra`` generators adjoined (D = 0 on them)."""
        ctx = self.context.extend(extra)
        diff = {k: embed(v, ctx) for k, v in self.differential.items()}
        return GerstenhaberModel(ctx, self.pairs, diff, self.fiber)

    def base_bracket(self, a, b):
        return self.bracket(a, b, self.base_pairs)

    def _check(self, a):
        if not isinstance(a, AlgebraElement) or a.ctx != self.context:
            raise ContextError("element does not belong to this model")

    def _validate_differential(self):
        ctx = self.context
        for name in ctx.names:
            g = ctx.gen(name)
            dd = self.D(self.D(g))
            if dd:
                raise ValueError(f"D^2({name}) = {dd} != 0; model rejected")
        names = ctx.names
        for i, a in enumerate(names):
            ga = ctx.gen(a)
            for b in names[i:]:
                gb = ctx.gen(b)
                lhs = self.D(self.bracket(ga, gb))
                sign = -1 if ctx.generator(a).degree % 2 == 0 else 1
                rhs = self.bracket(self.D(ga), gb) + self.bracket(ga, self.D(gb)) * sign
                if lhs != rhs:
                    raise ValueError(f"D is not a derivation of the bracket on ({a}, {b})")

    # -- Maurer-Cartan ------------------------------------------------------

    def mc_residual(self, phi: AlgebraElement) -> AlgebraElement:
        return mc_check(phi, self)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        from .algebra import element_to_json

        return {
            "generators": self.context.to_json(),
            "pairing": [list(p) for p in self.pairs],
            "fiber": [list(p) for p in self.fiber],
            "differential": {k: element_to_json(v) for k, v in sorted(self.differential.items())},
        }


def _mincut(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def schouten(a: AlgebraElement, b: AlgebraElement, model: GerstenhaberModel) -> AlgebraElement:
    return model.bracket(a, b)


def mc_check(phi: AlgebraElement, model: GerstenhaberModel) -> AlgebraElement:
    """Return ``D(phi) + 1/2 {phi, phi}``; zero exactly when phi is Maurer-Cartan."""
    if phi.parity() != 0:
        raise ParityError("Maurer-Cartan check needs an even element")
    return model.D(phi) + model.bracket(phi, phi) * Fraction(1, 2)


@dataclass(frozen=True)
class MCElement:
    value: AlgebraElement
    model: GerstenhaberModel
    verified: bool = False

    @classmethod
    def verify(cls, value: AlgebraElement, model: GerstenhaberModel) -> "MCElement":
        r = mc_check(value, model)
        if r:
            raise MCError("element does not satisfy the Maurer-Cartan equation", r)
        return cls(value, model, True)


def twisted_differential(Phi: MCElement) -> Callable[[AlgebraElement], AlgebraElement]:
    """``x -> D(x) + {Phi, x}``; refuses unverified input."""
    if not isinstance(Phi, MCElement) or not Phi.verified:
        raise MCError("twisted differential needs a verified Maurer-Cartan element")
    model, val = Phi.model, Phi.value

    def d_phi(x: AlgebraElement) -> AlgebraElement:
        return model.D(x) + model.bracket(val, x)

    return d_phi


def gauge_from_zero(model: GerstenhaberModel, h: AlgebraElement, cutoff: int, max_steps: int = 64):
    """Maurer-Cartan element gauge-equivalent to 0 via an odd generator ``h``.

    Returns ``-sum_k ad_h^k(D h) / (k+1)!`` with ``ad_h = {h, -}``; ``h`` must raise
    weight under the bracket so the series stops within ``cutoff``.
    """
    if h.parity() != 1:
        raise ParityError("gauge generator must be odd")
    h = h.with_cutoff(cutoff)
    term = model.D(h)
    out = model.context.zero(cutoff)
    k = 0
    while term:
        out = out - term * Fraction(1, math.factorial(k + 1))
        term = model.bracket(h, term)
        k += 1
        if k > max_steps:
            raise DivergenceError("gauge series did not terminate; h does not raise weight")
    return out


# -- stock models -------------------------------------------------------------------


def dolbeault_model(base: int, fibers: int = 1, params: list[Generator] | None = None,
                    fiber_names=None) -> GerstenhaberModel:
    """Local Dolbeault model of T*N[1] over a ``base``-dimensional chart.

    Generators: holomorphic ``y_i`` and antiholomorphic ``ybar_i`` (degree 0,
    weight 0), forms ``z_i`` and polyvectors ``th_i`` (degree 1, weight 1), fiber
    coordinates ``t`` / ``t1..`` (weight 0) with dual ``tht`` / ``tht1..`` (weight 1),
    and optional parameters. ``D(ybar_i) = z_i``, zero on all other generators.
    """
    if fiber_names is None:
        fiber_names = ["t"] if fibers == 1 else [f"t{i}" for i in range(1, fibers + 1)]
    g = []
    for i in range(1, base + 1):
        g.append(Generator(f"y{i}", 0, 0))
    for i in range(1, base + 1):
        g.append(Generator(f"ybar{i}", 0, 0))
    for i in range(1, base + 1):
        g.append(Generator(f"z{i}", 1, 1))
    for i in range(1, base + 1):
        g.append(Generator(f"th{i}", 1, 1))
    for t in fiber_names:
        g.append(Generator(t, 0, 0))
    for t in fiber_names:
        g.append(Generator(f"th{t}", 1, 1))
    g.extend(params or [])
    ctx = Context(g)
    pairs = [(f"th{i}", f"y{i}") for i in range(1, base + 1)]
    fib = [(f"th{t}", t) for t in fiber_names]
    diff = {f"ybar{i}": ctx.gen(f"z{i}") for i in range(1, base + 1)}
    return GerstenhaberModel(ctx, tuple(pairs + fib), diff, tuple(fib))


def universal_model(N: int, fibers=("t",), extra: list[Generator] | None = None) -> GerstenhaberModel:
    """Free commuting ``phi1..phiN`` (degree 2, weight 2), fiber ``t``; D = 0."""
    g = [Generator(f"phi{n}", 2, 2) for n in range(1, N + 1)]
    g += [Generator(t, 0, 0) for t in fibers]
    g += [Generator(f"th{t}", 1, 0) for t in fibers]
    g += list(extra or [])
    ctx = Context(g)
    fib = tuple((f"th{t}", t) for t in fibers)
    return GerstenhaberModel(ctx, fib, {}, fib)


# -- local critical resolution --------------------------------------------------------


@dataclass
class HomologyReport:
    dims: dict
    basis: dict
    total: int
    notes: dict = field(default_factory=dict)

    def to_json(self):
        from .algebra import to_string

        return {
            "dims": {_key(k): v for k, v in sorted(self.dims.items())},
            "basis": {_key(k): [to_string(e) for e in v] for k, v in sorted(self.basis.items()) if v},
            "total": self.total,
            "notes": self.notes,
        }


def _key(k):
    return ",".join(str(x) for x in k) if isinstance(k, tuple) else str(k)


def _poly_monos(n: int, p: int):
    """Exponent vectors of degree ``p`` in ``n`` variables."""
    out = []
    for combo in combinations_with_replacement(range(n), p):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def koszul_critical_resolution(m: int, d: int) -> HomologyReport:
    """Homology of ``(Q[t_1..t_m] (x) Lambda[th_1..th_m], {W, -})`` for ``W = sum t_i^2/2``.

    Strata are indexed by (polyvector degree k, polynomial degree p), p <= d.
    """
    if m < 0 or d < 0 or m > 3 or d > 6:
        raise BoundsError("koszul_critical_resolution is limited to m <= 3, d <= 6")
    tn = [f"t{i}" for i in range(1, m + 1)]
    model = universal_model(0, fibers=tuple(tn))
    ctx = model.context
    W = ctx.zero()
    for t in tn:
        W = W + ctx.gen(t) ** 2 * Fraction(1, 2)

    def op(x):
        return model.bracket(W, x)

    t_idx = [ctx.idx(t) for t in tn]
    th_idx = [ctx.idx("th" + t) for t in tn]

    def stratum(k, p):
        if k < 0 or p < 0 or k > m:
            return []
        monos = []
        for ths in combinations(th_idx, k):
            for e in _poly_monos(m, p):
                v = [0] * ctx.n
                for i, x in zip(t_idx, e):
                    v[i] = x
                for i in ths:
                    v[i] = 1
                monos.append(tuple(v))
        return monos

    dims, basis = {}, {}
    for k in range(m + 1):
        for p in range(d + 1):
            h = stratum_homology((k, p), stratum(k, p), stratum(k + 1, p - 1), op, ctx)
            dims[(k, p)] = h.dim
            basis[(k, p)] = h.basis
    total = sum(dims.values())
    skyscraper = total == 1 and dims.get((0, 0)) == 1 and basis[(0, 0)][0] == ctx.one()
    return HomologyReport(dims, basis, total, {"skyscraper": skyscraper, "rank": m, "max_degree": d})
