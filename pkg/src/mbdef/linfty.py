"""L-infinity structures as degree-one vector fields, the critical-value map chi,
and the small Chevalley/Hochschild computations for truncated a^1 algebras.

For a Gerstenhaber model the relevant vector field at a point ``x`` is
``B(x) = l1(x) + 1/2 l2(x, x)``. On the source side (functions on T*N[1]) the
linear part is ``D + {W, -}`` and the bracket is the full Schouten bracket; on the
target side (functions on T*Y[1]) it is ``D`` and the bracket over base pairs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import AlgebraElement, Context, Generator, derivative, embed, set_zero, substitute
from .critical import DeformationPath, solve_critical
from .errors import DivergenceError, ParityError, ShapeError
from .gerstenhaber import GerstenhaberModel, HomologyReport
from .linalg import rank, stratum_homology


@dataclass(frozen=True, eq=False)
class LinftyStructure:
    """Vector field ``B(x) = sum_k l_k(x, ..., x) / k!`` given by its Taylor components.

    ``lift`` rebuilds the same structure over a context with extra generators
    adjoined; it is needed only for :meth:`differential`.
    """

    context: Context
    components: Mapping[int, Callable[..., AlgebraElement]]
    name: str = ""
    max_arity: int = 3
    lift: Callable[[list], "LinftyStructure"] | None = None

    def __post_init__(self):
        for k in self.components:
            if k < 1 or k > self.max_arity:
                raise ValueError(f"arity {k} outside the configured range 1..{self.max_arity}")

    def value(self, x: AlgebraElement) -> AlgebraElement:
        out = self.context.zero(x.cutoff)
        for k in sorted(self.components):
            out = out + self.components[k](*([x] * k)) * Fraction(1, math.factorial(k))
        return out

    def differential(self, x: AlgebraElement) -> AlgebraElement:
        """``dB_x(B(x))``, computed by moving x along ``e B(x)`` for an odd parameter e.

        ``B(x + e B(x)) = B(x) + e dB_x(B(x))`` up to sign; square-zero means it vanishes.
        """
        if self.lift is None:
            raise ValueError("structure has no lift; cannot linearize")
        big = self.lift([Generator("_e", -1, 0)])
        ex = embed(x, big.context)
        bx = big.value(ex)
        moved = big.value(ex + big.context.gen("_e") * bx)
        return derivative(moved, "_e", "left")

    def square_zero_at(self, x: AlgebraElement) -> bool:
        return not self.differential(x)


def fiber_potential(model: GerstenhaberModel) -> AlgebraElement:
    ctx = model.context
    W = ctx.zero()
    for _, t in model.fiber:
        W = W + ctx.gen(t) ** 2 * Fraction(1, 2)
    return W


def domain_structure(model: GerstenhaberModel) -> LinftyStructure:
    """Source structure: linear part ``D + {W, -}``, quadratic part the Schouten bracket."""
    W = fiber_potential(model)
    return LinftyStructure(
        model.context,
        {1: lambda x: model.D(x) + model.bracket(W.with_cutoff(x.cutoff), x),
         2: lambda x, y: model.bracket(x, y)},
        "domain",
        lift=lambda extra: domain_structure(model.extend(extra)),
    )


def target_structure(model: GerstenhaberModel) -> LinftyStructure:
    return LinftyStructure(model.context, {1: model.D, 2: model.base_bracket}, "target",
                           lift=lambda extra: target_structure(model.extend(extra)))


def structure_field_value(L: LinftyStructure, point: AlgebraElement) -> AlgebraElement:
    if point.parity() != 0:
        raise ParityError("the structure field is evaluated at even points")
    if point.cutoff is None and point and point.min_weight() < 1:
        raise DivergenceError("point is not nilpotent and no cutoff is set")
    return L.value(point)


# -- chi ------------------------------------------------------------------------


@dataclass
class Decomposition:
    phi: AlgebraElement
    psi: dict[str, AlgebraElement]


def decompose(eta: AlgebraElement, model: GerstenhaberModel, even: bool = True) -> Decomposition:
    """Split ``eta = phi(t) + sum_i psi_i(t) th_{t_i}``; more than one fiber polyvector is refused.

    ``even=False`` allows odd inputs such as tangent vectors ``B(eta)``.
    """
    if even and eta.parity() != 0:
        raise ParityError("chi is defined on even points")
    ctx = eta.ctx
    ths = [ctx.idx(th) for th, _ in model.fiber]
    for m in eta.terms:
        if sum(m[i] for i in ths) > 1:
            raise ShapeError("point has higher fiber polyvector components; only (phi, psi) shape is supported")
    phi = set_zero(eta, [th for th, _ in model.fiber])
    psi = {th: derivative(eta, th, "right") for th, _ in model.fiber}
    return Decomposition(phi, psi)


def _fibers(model):
    return tuple(t for _, t in model.fiber)


def critical_of(eta: AlgebraElement, model: GerstenhaberModel, cutoff: int | None = None):
    cutoff = eta.cutoff if cutoff is None else cutoff
    if cutoff is None:
        raise ValueError("chi needs a cutoff")
    dec = decompose(eta.with_cutoff(cutoff), model)
    return solve_critical(DeformationPath(dec.phi, _fibers(model)), cutoff)


def chi(eta: AlgebraElement, model: GerstenhaberModel, cutoff: int | None = None) -> AlgebraElement:
    """Critical value of ``W + eta`` restricted to L(nu) (the psi part is dropped)."""
    if not eta:
        return model.context.zero(cutoff if cutoff is not None else eta.cutoff)
    return critical_of(eta, model, cutoff).phi_c


def dchi(eta: AlgebraElement, delta_phi: AlgebraElement, delta_psi=None, model: GerstenhaberModel = None,
         cutoff: int | None = None) -> AlgebraElement:
    """Linearization of chi at eta: ``(delta_phi, delta_psi) -> delta_phi(t_c)``.

    ``delta_psi`` never enters the result (criticality kills the t_c variation).
    ``delta_phi`` may be passed as a full tangent vector; its fiber-polyvector part
    is then treated as ``delta_psi``.
    """
    cutoff = cutoff if cutoff is not None else eta.cutoff
    data = critical_of(eta, model, cutoff) if eta else None
    dphi = set_zero(delta_phi, [th for th, _ in model.fiber]).with_cutoff(cutoff)
    if data is None:
        return substitute(dphi, {t: model.context.zero(cutoff) for t in _fibers(model)})
    return substitute(dphi, data.t_c)


@dataclass
class ChainReport:
    lhs: AlgebraElement
    rhs: AlgebraElement
    structure_value: AlgebraElement
    phi_c: AlgebraElement
    psi_variation_killed: bool

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and self.psi_variation_killed

    def to_json(self):
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.lhs == self.rhs,
                "psi_variation_killed": self.psi_variation_killed, "passed": self.passed,
                "phi_c": str(self.phi_c)}


def chi_chain_check(eta: AlgebraElement, model: GerstenhaberModel, cutoff: int | None = None) -> ChainReport:
    """L-infinity morphism condition at a point: ``dchi_eta(B(eta)) == B'(chi(eta))``."""
    cutoff = cutoff if cutoff is not None else eta.cutoff
    eta = eta.with_cutoff(cutoff)
    B = structure_field_value(domain_structure(model), eta)
    dec = decompose(B, model, even=False) if B else Decomposition(B, {})
    lhs = dchi(eta, B, None, model, cutoff)
    phi_c = chi(eta, model, cutoff)
    rhs = target_structure(model).value(phi_c)
    psi_only = model.context.zero(cutoff)
    for th, part in dec.psi.items():
        psi_only = psi_only + part * model.context.gen(th)
    killed = not dchi(eta, psi_only, None, model, cutoff)
    return ChainReport(lhs, rhs, B, phi_c, killed)


def random_point(model: GerstenhaberModel, rng: random.Random, cutoff: int, n_phi: int = 3, n_psi: int = 2,
                 params=("e1", "e2")) -> AlgebraElement:
    """Random even point ``phi + psi th_t`` with positive-weight coefficients.

    Monomials are random words in the model's generators; the odd parameters
    ``params`` make ``psi`` nonzero even when the model has few odd generators.
    """
    ctx = model.context
    fiber_th = {th for th, _ in model.fiber}
    even = [g for g in ctx.generators if g.parity == 0]
    odd = [g for g in ctx.generators if g.parity == 1 and g.name not in fiber_th]

    def word(parity):
        for _ in range(200):
            m = ctx.one(cutoff)
            for g in rng.sample(even, k=min(len(even), rng.randint(0, 2))):
                m = m * ctx.gen(g.name) ** rng.randint(1, 2)
            k = rng.choice([1, 2]) if parity == 0 else rng.choice([1, 3])
            if parity == 0 and rng.random() < 0.2:
                k = 0
            chosen = rng.sample(odd, k=min(k, len(odd)))
            for g in chosen:
                m = m * ctx.gen(g.name)
            if not m:
                continue
            if m.parity() == parity and m.min_weight() >= 1:
                return m * Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))
        raise RuntimeError("could not draw a random monomial")

    eta = ctx.zero(cutoff)
    for _ in range(n_phi):
        eta = eta + word(0)
    for th in sorted(fiber_th):
        for _ in range(n_psi):
            eta = eta + word(1) * ctx.gen(th)
    return eta


# -- truncated a^1 ------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedA1:
    """Generators eps (degree 1), eta (degree 2) with the single bracket [eps,...,eps] = eta (n-ary)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("arity must be at least 1")

    def structure(self, extra=()) -> LinftyStructure:
        """Vector field on V[1]; points are ``a*E + b*H`` with E (even) and H (odd) the shifted basis.

        ``extra`` adjoins parameter generators (coefficients of points).
        """
        ctx = Context([Generator("E", 0, 1), Generator("H", 1, 1), *extra])
        n = self.n

        def ln(*xs):
            out = ctx.one(xs[0].cutoff)
            for x in xs:
                out = out * derivative(x, "E")
            return out * ctx.gen("H")

        return LinftyStructure(ctx, {n: ln}, f"a1_<{n}", max_arity=max(3, n),
                               lift=lambda more: self.structure(tuple(extra) + tuple(more)))

    def chevalley_context(self) -> Context:
        return Context([Generator("t", 0, 1), Generator("u", -1, self.n, None)])

    def chevalley_differential(self, x: AlgebraElement) -> AlgebraElement:
        """``du = t^n / n!``, ``dt = 0``: the Lie derivative along the structure field."""
        ctx = x.ctx
        du = ctx.gen("t") ** self.n * Fraction(1, math.factorial(self.n))
        return du * derivative(x, "u", "left")

    def chevalley_cohomology(self, max_weight: int) -> HomologyReport:
        ctx = self.chevalley_context()
        return graded_cohomology(ctx, self.chevalley_differential, max_weight)


def _monomials_by_weight(ctx: Context, max_weight: int):
    if any(w <= 0 for w in ctx.weights):
        raise ValueError("enumeration needs positive weights on every generator")
    out = []

    def rec(i, cur, w):
        if i == ctx.n:
            out.append(tuple(cur))
            return
        cap = 1 if ctx.is_odd[i] else ctx.generators[i].max_exp
        e = 0
        while w + e * ctx.weights[i] <= max_weight and (cap is None or e <= cap):
            cur.append(e)
            rec(i + 1, cur, w + e * ctx.weights[i])
            cur.pop()
            e += 1

    rec(0, [], 0)
    return out


def graded_cohomology(ctx: Context, d: Callable, max_weight: int) -> HomologyReport:
    """Cohomology of a weight-preserving degree +1 derivation, per (degree, weight)."""
    strata: dict[tuple[int, int], list] = {}
    for m in _monomials_by_weight(ctx, max_weight):
        strata.setdefault((ctx.mono_degree(m), ctx.mono_weight(m)), []).append(m)
    dims, basis = {}, {}
    for key in sorted(strata):
        deg, w = key
        h = stratum_homology(key, strata[key], strata.get((deg - 1, w), []), d, ctx)
        dims[key] = h.dim
        basis[key] = h.basis
    return HomologyReport(dims, basis, sum(dims.values()), {"max_weight": max_weight})


def hh_ua1_context(n: int) -> Context:
    return Context([
        Generator("eps", 1, n),
        Generator("eta", 2, 1),
        Generator("t", 0, 1),
        Generator("u", -1, n),
    ])


def hh_ua1_differential(n: int, ctx: Context) -> Callable:
    du = ctx.gen("t") ** n
    deps = ctx.gen("eta") * ctx.gen("t") ** (n - 1) * n

    def d(x: AlgebraElement) -> AlgebraElement:
        return du * derivative(x, "u", "left") + deps * derivative(x, "eps", "left")

    return d


@dataclass
class HHReport:
    n: int
    max_weight: int
    table: dict
    degree0_basis: list[AlgebraElement] = field(default_factory=list)
    homology: HomologyReport | None = None

    def to_json(self):
        from .algebra import to_string

        by_degree: dict[int, int] = {}
        for (deg, _), v in self.table.items():
            by_degree[deg] = by_degree.get(deg, 0) + v
        return {
            "n": self.n,
            "max_weight": self.max_weight,
            "table": {f"{d},{w}": v for (d, w), v in sorted(self.table.items())},
            "by_degree": {str(k): v for k, v in sorted(by_degree.items())},
            "degree0_basis": [to_string(e) for e in self.degree0_basis],
        }


def hh_ua1(n: int, max_weight: int) -> HHReport:
    """Cohomology of ``C[eps, eta, t, u]`` with ``du = t^n``, ``d eps = n eta t^(n-1)``.

    Weights t, eta = 1 and eps, u = n make d weight-homogeneous.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if max_weight < 0 or max_weight > 16:
        raise ValueError("max_weight must lie in 0..16")
    ctx = hh_ua1_context(n)
    d = hh_ua1_differential(n, ctx)
    rep = graded_cohomology(ctx, d, max_weight)
    deg0 = []
    for (deg, w), b in sorted(rep.basis.items(), key=lambda kv: kv[0][1]):
        if deg == 0:
            deg0.extend(b)
    return HHReport(n, max_weight, rep.dims, deg0, rep)


# -- curved skyscraper ----------------------------------------------------------------


@dataclass
class CurvedReport:
    even: int
    odd: int

    @property
    def rank(self) -> int:
        return self.even + self.odd

    def to_json(self):
        return {"even": self.even, "odd": self.odd, "rank": self.rank}


def curved_skyscraper_check(w) -> CurvedReport:
    """2-periodic complex ``R <-> R eps`` with ``d(eps) = w`` over the finite ring R of ``w``.

    ``w`` is a scalar (R = Q) or an element whose generators are all even with
    ``max_exp`` set (so R is finite-dimensional). Ranks are over Q.
    """
    if not isinstance(w, AlgebraElement):
        ctx = Context([])
        w = ctx.scalar(w)
    ctx = w.ctx
    for g in ctx.generators:
        if g.parity or g.max_exp is None:
            raise ValueError("coefficient ring must be generated by nilpotent even parameters")
    ring = [()]
    for g in ctx.generators:
        ring = [r + (e,) for r in ring for e in range(g.max_exp + 1)]
    index = {m: i for i, m in enumerate(ring)}
    cols = []
    for m in ring:
        img = AlgebraElement(ctx, {m: Fraction(1)}) * w
        v = [Fraction(0)] * len(ring)
        for mm, c in img.terms.items():
            v[index[mm]] = c
        cols.append(v)
    r = rank([list(row) for row in zip(*cols)]) if cols else 0
    dim = len(ring)
    # even: R / wR ; odd: ker(w)
    return CurvedReport(dim - r, dim - r)
