"""Fiberwise critical points and critical values of ``W + phi``.

``W = 1/2 sum t_i^2`` is the Morse normal form on the fiber coordinates and
``phi`` a deformation whose coefficients (as a polynomial in the fibers) all have
positive weight. The critical point ``t_c`` is found by the fixed-point iteration
``t <- -grad phi(t)`` starting from 0; each round fixes at least one more weight
level, so it stabilizes after at most ``cutoff + 1`` rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (AlgebraElement, Context, Generator, derivative, embed, factor_count,
                      set_zero, substitute)
from .errors import ContextError, DivergenceError, MCError, NonNilpotentError, ParityError, ShapeError
from .gerstenhaber import GerstenhaberModel, mc_check, universal_model


@dataclass(frozen=True)
class DeformationPath:
    """``phi(t)`` together with its fiber variables.

    ``coefficients`` names free generators ``phi_n`` (universal mode); position k
    holds ``phi_{k+1}``, the coefficient of ``t^(k+1)``.
    """

    phi: AlgebraElement
    fibers: tuple[str, ...] = ("t",)
    coefficients: tuple[str, ...] = ()

    def __post_init__(self):
        ctx = self.phi.ctx
        object.__setattr__(self, "fibers", tuple(self.fibers))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        for t in self.fibers:
            g = ctx.generator(t)
            if g.degree != 0 or g.weight != 0 or g.max_exp is not None:
                raise ValueError(f"fiber variable {t} must be even of degree 0, weight 0, uncapped")
        if self.phi.parity() != 0:
            raise ParityError("deformation phi must be even")
        w = self.phi.min_weight()
        if w is not None and w < 1:
            raise NonNilpotentError("every coefficient of phi needs positive weight")

    @property
    def context(self) -> Context:
        return self.phi.ctx

    @classmethod
    def from_coefficients(cls, coeffs: list[AlgebraElement], fiber: str = "t") -> "DeformationPath":
        """``phi(t) = sum_n coeffs[n-1] t^n`` for a single fiber variable."""
        if not coeffs:
            raise ValueError("need at least one coefficient")
        ctx = coeffs[0].ctx
        t = ctx.gen(fiber)
        phi = ctx.zero()
        tp = ctx.one()
        for c in coeffs:
            tp = tp * t
            phi = phi + c * tp
        return cls(phi, (fiber,))

    @classmethod
    def universal(cls, N: int, extra: list[Generator] | None = None) -> "DeformationPath":
        model = universal_model(N, extra=extra)
        ctx = model.context
        names = tuple(f"phi{n}" for n in range(1, N + 1))
        path = cls.from_coefficients([ctx.gen(n) for n in names])
        return cls(path.phi, ("t",), names)

    def potential(self) -> AlgebraElement:
        ctx = self.context
        W = ctx.zero()
        for t in self.fibers:
            W = W + ctx.gen(t) ** 2 * Fraction(1, 2)
        return W

    def total(self) -> AlgebraElement:
        """``Phi(t) = W + phi(t)``."""
        return self.potential() + self.phi

    def coefficient(self, n: int, fiber: str | None = None) -> AlgebraElement:
        """Coefficient of ``t^n`` (single fiber)."""
        t = fiber or self.fibers[0]
        i = self.context.idx(t)
        picked = self.phi.filter(lambda m: m[i] == n)
        return AlgebraElement(self.context, {m[:i] + (0,) + m[i + 1:]: c for m, c in picked.terms.items()})


@dataclass
class CriticalData:
    t_c: dict[str, AlgebraElement]
    phi_c: AlgebraElement
    residual: dict[str, AlgebraElement]
    cutoff: int
    iterations: int = 0

    @property
    def residual_zero(self) -> bool:
        return not any(self.residual.values())


def solve_critical(path: DeformationPath, cutoff: int, max_iter: int | None = None) -> CriticalData:
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    ctx = path.context
    phi = path.phi.with_cutoff(cutoff)
    grads = {t: derivative(phi, t) for t in path.fibers}
    tc = {t: ctx.zero(cutoff) for t in path.fibers}
    limit = cutoff + 2 if max_iter is None else max_iter
    for it in range(1, limit + 1):
        new = {t: -substitute(g, tc) for t, g in grads.items()}
        if new == tc:
            break
        tc = new
    else:
        raise DivergenceError(f"critical iteration did not stabilize in {limit} rounds")
    Phi = path.total().with_cutoff(cutoff)
    phi_c = substitute(Phi, tc)
    residual = {t: tc[t] + substitute(g, tc) for t, g in grads.items()}
    return CriticalData(tc, phi_c, residual, cutoff, it)


def universal_critical(N: int, cutoff: int) -> CriticalData:
    if N < 1:
        raise ValueError("N must be at least 1")
    return solve_critical(DeformationPath.universal(N), cutoff)


def universal_phi_c(N: int, cutoff: int) -> AlgebraElement:
    return universal_critical(N, cutoff).phi_c


def dimension_truncate(phi_c: AlgebraElement, dimY: int, names=None) -> AlgebraElement:
    """Keep monomials with at most ``dimY`` deformation factors (form degree <= dim Y).

    ``names`` defaults to the ``phi*`` generators of the context, or every
    positive-weight generator when there are none.
    """
    if names is None:
        names = [n for n in phi_c.ctx.names if n.startswith("phi")] or None
    return phi_c.filter(lambda m: factor_count(phi_c, m, names) <= dimY)


def first_appearance(phi_c: AlgebraElement, N: int) -> dict[int, int | None]:
    """Minimal factor count of monomials containing ``phi_n``, for n = 1..N."""
    names = [f"phi{n}" for n in range(1, N + 1)]
    out = {}
    for n, name in enumerate(names, 1):
        i = phi_c.ctx.idx(name)
        counts = [factor_count(phi_c, m, names) for m in phi_c.terms if m[i]]
        out[n] = min(counts) if counts else None
    return out


def _check_horizontal(model: GerstenhaberModel, phi: AlgebraElement):
    for th, _ in model.fiber:
        if phi.involves(th):
            raise ShapeError(f"deformation must not involve the fiber polyvector {th}")


def mc_residual_of_phi_c(model: GerstenhaberModel, path: DeformationPath, cutoff: int) -> AlgebraElement:
    """``D Phi_c + 1/2 {Phi_c, Phi_c}`` after checking that ``phi(t)`` is Maurer-Cartan."""
    if path.context != model.context:
        raise ContextError("path and model use different contexts")
    _check_horizontal(model, path.phi)
    r = mc_check(path.total().with_cutoff(cutoff), model)
    if r:
        raise MCError("phi(t) is not a Maurer-Cartan path", r)
    data = solve_critical(path, cutoff)
    return mc_check(data.phi_c, model)


@dataclass
class IdealReport:
    critical_ok: bool
    ideal_ok: bool
    hessian_invertible: bool
    gradient_at_tc: AlgebraElement
    remainder: AlgebraElement
    quotient: AlgebraElement
    hessian_at_tc: AlgebraElement

    @property
    def passed(self) -> bool:
        return self.critical_ok and self.ideal_ok and self.hessian_invertible

    def to_json(self):
        return {
            "critical_ok": self.critical_ok,
            "ideal_ok": self.ideal_ok,
            "hessian_invertible": self.hessian_invertible,
            "passed": self.passed,
            "gradient_at_tc": str(self.gradient_at_tc),
            "remainder": str(self.remainder),
            "hessian_at_tc": str(self.hessian_at_tc),
        }


def ideal_closure_check(path: DeformationPath, cutoff: int, model: GerstenhaberModel | None = None,
                        t_c: AlgebraElement | None = None) -> IdealReport:
    """Verify the two ideal memberships behind the critical-locus argument.

    (i)  ``{th_t, Phi(t)}`` vanishes at ``t = t_c``;
    (ii) ``(D(t - t_c) + {Phi(t), t - t_c}) * Phi''(t_c)`` lies in the ideal ``(t - t_c)``,
         decided by dividing by ``s = t - t_c`` after the shift ``t -> s + t_c``.

    ``t_c`` may be supplied to test a wrong critical point.
    """
    if len(path.fibers) != 1:
        raise ValueError("ideal closure check works with a single fiber variable")
    tname = path.fibers[0]
    ctx = path.context
    if model is None:
        model = _trivial_model(ctx, tname)
    if model.context != ctx:
        raise ContextError("path and model use different contexts")
    thname = next((th for th, x in model.fiber if x == tname), None)
    if thname is None:
        raise ValueError(f"model has no fiber pair for {tname}")
    if t_c is None:
        t_c = solve_critical(path, cutoff).t_c[tname]
    t_c = t_c.with_cutoff(cutoff)
    if t_c.involves(tname):
        raise ValueError("critical point must not depend on the fiber variable")
    t = ctx.gen(tname, cutoff)
    Phi = path.total().with_cutoff(cutoff)

    grad = substitute(model.bracket(ctx.gen(thname, cutoff), Phi), {tname: t_c})

    hess = substitute(derivative(derivative(Phi, tname), tname), {tname: t_c})
    const = hess.filter(lambda m: ctx.mono_weight(m) == 0)
    invertible = bool(const) and all(ctx.mono_degree(m) == 0 for m in const.terms) and len(const) == 1

    s = t - t_c
    P = (model.D(s) + model.bracket(Phi, s)) * hess
    shifted = substitute(P, {tname: t + t_c})
    i = ctx.idx(tname)
    remainder = shifted.filter(lambda m: m[i] == 0)
    rest = shifted.filter(lambda m: m[i] > 0)
    quotient = AlgebraElement(ctx, {m[:i] + (m[i] - 1,) + m[i + 1:]: c for m, c in rest.terms.items()}, cutoff)
    return IdealReport(not grad, not remainder, invertible, grad, remainder, quotient, hess)


def _trivial_model(ctx: Context, tname: str) -> GerstenhaberModel:
    th = f"th{tname}"
    if th not in ctx:
        raise ContextError(f"context lacks {th}; build the path with DeformationPath.universal or a model")
    return GerstenhaberModel(ctx, ((th, tname),), {}, ((th, tname),))


@dataclass
class ScalingReport:
    derivative_identity_ok: bool
    substitution_ok: bool | None
    specialization_ok: bool
    phi_c: AlgebraElement
    phi_c_xi: AlgebraElement
    c_xi: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.derivative_identity_ok and self.specialization_ok and self.substitution_ok is not False

    def to_json(self):
        return {
            "derivative_identity_ok": self.derivative_identity_ok,
            "substitution_ok": self.substitution_ok,
            "specialization_ok": self.specialization_ok,
            "passed": self.passed,
            "phi_c_xi": str(self.phi_c_xi),
        }


def scaling_family(path: DeformationPath, cutoff: int, xi: str = "xi", xi_cap: int | None = None) -> ScalingReport:
    """Degeneration to the normal cone: ``Phi_xi = xi^-2 W(xi t) + phi(xi t) = W(t) + phi(xi t)``.

    Checks ``d/dxi Phi_{c,xi} = (dPhi_xi/dxi)(c_xi)``, the specialization xi = 1, and
    for universal paths ``Phi_{c,xi} = Phi_c[phi_n -> xi^n phi_n]``.
    """
    ctx = path.context
    ectx = ctx.extend([Generator(xi, 0, 0, xi_cap)])
    phi = embed(path.phi, ectx)
    x = ectx.gen(xi)
    phi_xi = substitute(phi, {t: x * ectx.gen(t) for t in path.fibers})
    path_xi = DeformationPath(phi_xi, path.fibers, path.coefficients)
    base = solve_critical(DeformationPath(phi, path.fibers, path.coefficients), cutoff)
    fam = solve_critical(path_xi, cutoff)

    lhs = derivative(fam.phi_c, xi)
    rhs = substitute(derivative(path_xi.total().with_cutoff(cutoff), xi), fam.t_c)
    derivative_identity_ok = lhs == rhs

    special = substitute(fam.phi_c, {xi: 1})
    specialization_ok = special == base.phi_c

    substitution_ok = None
    if path.coefficients:
        subs = {name: x ** n * ectx.gen(name) for n, name in enumerate(path.coefficients, 1)}
        substitution_ok = substitute(base.phi_c, subs) == fam.phi_c
    return ScalingReport(derivative_identity_ok, substitution_ok, specialization_ok, base.phi_c, fam.phi_c, fam.t_c)
