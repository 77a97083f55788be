"""Clifford algebras, spinor modules and matrix factorizations of ``W = 1/2 sum t_i^2``.

Convention: ``e_i e_j + e_j e_i = H_ij`` with the Hessian of W on the right, so for
the Morse normal form ``e_i^2 = 1/2``. Basis blades are increasing index tuples.

Spinors for rank 2k live on the exterior algebra of ``x_1..x_k``. With ``eps_j``
(wedge with x_j) and ``iota_j`` (contraction), the generators act by

    e_{2j-1} = 1/2 eps_j + iota_j,    e_{2j} = -i/2 (eps_j - 2 iota_j),

which is the isotropic basis ``e_{2j-1} + i e_{2j} = eps_j`` rescaled to avoid
square roots. Odd rank uses ``S (x) Cliff(1)`` with the last generator acting as
``Gamma (x) f``, ``f = [[0, 1/2], [1, 0]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import coeffs
from .algebra import AlgebraElement, Context, Generator, derivative
from .errors import BoundsError, ContextError
from .linalg import identity, label_homology, mat_add, mat_mul, mat_scale, nullspace, rank

HALF = Fraction(1, 2)


# -- the algebra --------------------------------------------------------------------


class CliffordAlgebra:
    def __init__(self, n: int, hessian=None):
        if n < 0:
            raise ValueError("rank must be non-negative")
        if hessian is None:
            hessian = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        H = tuple(tuple(coeffs.to_coeff(x) for x in row) for row in hessian)
        if len(H) != n or any(len(r) != n for r in H):
            raise ValueError("hessian must be n x n")
        if any(H[i][j] != H[j][i] for i in range(n) for j in range(n)):
            raise ValueError("hessian must be symmetric")
        self.n = n
        self.H = H
        self.basis = [b for k in range(n + 1) for b in combinations(range(n), k)]
        self._normal = lru_cache(maxsize=None)(self._normal_uncached)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, CliffordAlgebra) and (self.n, self.H) == (other.n, other.H)

    def __hash__(self):
        return hash((self.n, self.H))

    def _normal_uncached(self, word: tuple) -> tuple:
        """Rewrite a word in the generators to a combination of blades."""
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a == b:
                rest = word[:k] + word[k + 2:]
                return tuple((w, c * self.H[a][a] * HALF) for w, c in self._normal(rest))
            if a > b:
                out: dict = {}
                swapped = word[:k] + (b, a) + word[k + 2:]
                for w, c in self._normal(swapped):
                    out[w] = out.get(w, 0) - c
                if self.H[a][b]:
                    rest = word[:k] + word[k + 2:]
                    for w, c in self._normal(rest):
                        out[w] = out.get(w, 0) + c * self.H[a][b]
                return tuple((w, c) for w, c in out.items() if c)
        return ((word, Fraction(1)),)

    def element(self, terms=None) -> "CliffordElement":
        return CliffordElement(self, dict(terms or {}))

    def one(self) -> "CliffordElement":
        return self.element({(): Fraction(1)})

    def scalar(self, c) -> "CliffordElement":
        c = coeffs.to_coeff(c)
        return self.element({(): c} if c else {})

    def gen(self, i: int) -> "CliffordElement":
        """Generator ``e_i`` with 1-based index i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        return self.element({(i - 1,): Fraction(1)})

    def blade(self, b: tuple) -> "CliffordElement":
        return self.element({tuple(b): Fraction(1)})


@dataclass(eq=False)
class CliffordElement:
    algebra: CliffordAlgebra
    terms: dict

    def __post_init__(self):
        self.terms = {tuple(k): v for k, v in self.terms.items() if v}

    def _same(self, other):
        if not isinstance(other, CliffordElement):
            return self.algebra.scalar(other)
        if other.algebra != self.algebra:
            raise ContextError("Clifford elements from different algebras")
        return other

    def __add__(self, other):
        other = self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CliffordElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same(other))

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            c = coeffs.to_coeff(other)
            return CliffordElement(self.algebra, {k: v * c for k, v in self.terms.items()})
        return clifford_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        try:
            other = self._same(other)
        except (ContextError, TypeError):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def parity(self) -> int:
        ps = {len(b) % 2 for b in self.terms}
        if len(ps) > 1:
            raise ValueError("inhomogeneous Clifford element")
        return ps.pop() if ps else 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for b in sorted(self.terms, key=lambda b: (len(b), b)):
            c = coeffs.format_coeff(self.terms[b])
            name = "*".join(f"e{i + 1}" for i in b)
            parts.append(c if not b else (name if c == "1" else f"-{name}" if c == "-1" else f"{c}*{name}"))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    if a.algebra != b.algebra:
        raise ContextError("Clifford elements from different algebras")
    alg = a.algebra
    out: dict = {}
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            for w, c in alg._normal(ba + bb):
                out[w] = out.get(w, 0) + ca * cb * c
    return CliffordElement(alg, out)


def supercommutator(x: CliffordElement, c: CliffordElement) -> CliffordElement:
    """``[x, c] = xc - (-1)^{|x||c|} cx`` for homogeneous x, c."""
    s = -1 if x.parity() and c.parity() else 1
    return x * c - (c * x) * s


# -- spinors --------------------------------------------------------------------------


def _exterior_ops(k: int):
    """Matrices of ``eps_j`` and ``iota_j`` on the exterior algebra of ``x_1..x_k``."""
    basis = [b for r in range(k + 1) for b in combinations(range(k), r)]
    index = {b: i for i, b in enumerate(basis)}
    N = len(basis)
    eps, iota = [], []
    for j in range(k):
        E = [[Fraction(0)] * N for _ in range(N)]
        C = [[Fraction(0)] * N for _ in range(N)]
        for b in basis:
            pos = sum(1 for x in b if x < j)
            sign = -1 if pos % 2 else 1
            if j not in b:
                nb = tuple(sorted(b + (j,)))
                E[index[nb]][index[b]] = Fraction(sign)
            else:
                nb = tuple(x for x in b if x != j)
                C[index[nb]][index[b]] = Fraction(sign)
        eps.append(E)
        iota.append(C)
    return basis, eps, iota


@dataclass
class SpinorModule:
    """Super-module over Cliff(n); ``parities[i]`` is the parity of basis vector i."""

    rank: int
    labels: list
    parities: list[int]
    action: list[list[list]]

    @property
    def dims(self) -> tuple[int, int]:
        return (self.parities.count(0), self.parities.count(1))

    @property
    def size(self) -> int:
        return len(self.labels)

    def act(self, element: CliffordElement):
        """Matrix of a Clifford element."""
        N = self.size
        M = [[Fraction(0)] * N for _ in range(N)]
        for b, c in element.terms.items():
            P = identity(N, Fraction(1), Fraction(0))
            for i in b:
                P = mat_mul(P, self.action[i], Fraction(0))
            M = mat_add(M, mat_scale(P, c))
        return M

    def relations_hold(self, algebra: CliffordAlgebra | None = None) -> bool:
        alg = algebra or CliffordAlgebra(self.rank)
        N = self.size
        for i in range(self.rank):
            for j in range(self.rank):
                A = mat_add(mat_mul(self.action[i], self.action[j], 0), mat_mul(self.action[j], self.action[i], 0))
                if A != mat_scale(identity(N, Fraction(1), Fraction(0)), alg.H[i][j]):
                    return False
        return True

    def odd_action(self) -> bool:
        return all(
            not M[r][c] or self.parities[r] != self.parities[c]
            for M in self.action for r in range(self.size) for c in range(self.size)
        )

    def action_rank(self) -> int:
        """Rank of the linear map Cliff(n) -> End(S)."""
        alg = CliffordAlgebra(self.rank)
        vecs = [[x for row in self.act(alg.blade(b)) for x in row] for b in alg.basis]
        return rank(vecs)

    def supercentralizer_dims(self) -> tuple[int, int]:
        """Dimensions (even|odd) of the super-centralizer of the Clifford action."""
        N = self.size
        out = []
        for par in (0, 1):
            slots = [(r, c) for r in range(N) for c in range(N) if (self.parities[r] + self.parities[c]) % 2 == par]
            sign = -1 if par else 1
            # columns: image of each unknown under M -> [rho(e_i) M - sign M rho(e_i)]_i
            cols = []
            for r, c in slots:
                img = []
                for A in self.action:
                    for i in range(N):
                        for j in range(N):
                            v = (A[i][r] if j == c else 0) - (sign * A[c][j] if i == r else 0)
                            img.append(v)
                cols.append(img)
            out.append(len(nullspace(cols, len(slots))) if slots else 0)
        return out[0], out[1]


def spinor_module(n: int) -> SpinorModule:
    if n < 0:
        raise ValueError("rank must be non-negative")
    k = n // 2
    basis, eps, iota = _exterior_ops(k)
    half_i = coeffs.make(0, Fraction(-1, 2))
    act = []
    for j in range(k):
        act.append(mat_add(mat_scale(eps[j], HALF), iota[j]))
        act.append(mat_scale(mat_add(eps[j], mat_scale(iota[j], -2)), half_i))
    labels = list(basis)
    parities = [len(b) % 2 for b in basis]
    if n % 2:
        N = len(basis)
        gamma = [[Fraction(0)] * N for _ in range(N)]
        for i, p in enumerate(parities):
            gamma[i][i] = Fraction(-1 if p else 1)
        f = [[Fraction(0), HALF], [Fraction(1), Fraction(0)]]
        one2 = identity(2, Fraction(1), Fraction(0))
        act = [_kron(A, one2) for A in act] + [_kron(gamma, f)]
        labels = [(b, s) for b in basis for s in (0, 1)]
        parities = [(p + s) % 2 for p in parities for s in (0, 1)]
    return SpinorModule(n, labels, parities, act)


def _kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


# -- matrix factorizations ---------------------------------------------------------------


def fiber_context(n: int) -> Context:
    names = ["t"] if n == 1 else [f"t{i}" for i in range(1, n + 1)]
    return Context([Generator(t, 0, 1) for t in names])


def potential(ctx: Context) -> AlgebraElement:
    W = ctx.zero()
    for t in ctx.names:
        W = W + ctx.gen(t) ** 2 * HALF
    return W


@dataclass(frozen=True)
class BrauerTwist:
    """Inert label carried by constructions; no cohomology is computed."""

    codim_parity: str
    w1_label: str = ""
    w2_label: str = ""

    def __post_init__(self):
        if self.codim_parity not in ("even", "odd"):
            raise ValueError("codim_parity must be 'even' or 'odd'")

    @classmethod
    def for_rank(cls, n: int, w1_label: str = "", w2_label: str = "") -> "BrauerTwist":
        return cls("odd" if n % 2 else "even", w1_label, w2_label)

    def to_json(self):
        return {"codim_parity": self.codim_parity, "w1": self.w1_label, "w2": self.w2_label}


@dataclass
class MatrixFactorization:
    """``d0: E0 -> E1`` and ``d1: E1 -> E0`` over a polynomial ring, with potential W."""

    ring: Context
    d0: list[list[AlgebraElement]]
    d1: list[list[AlgebraElement]]
    W: AlgebraElement
    twist: BrauerTwist | None = None

    @property
    def ranks(self) -> tuple[int, int]:
        r0 = len(self.d1) if self.d1 else (len(self.d0[0]) if self.d0 else 0)
        r1 = len(self.d0) if self.d0 else (len(self.d1[0]) if self.d1 else 0)
        return r0, r1

    def composites(self):
        """``(d1 d0, d0 d1)``; empty blocks are handled explicitly."""
        r0, r1 = self.ranks
        z = self.ring.zero()

        def prod(A, B, n, m, k):
            return [[sum((A[i][l] * B[l][j] for l in range(k)), z) for j in range(m)] for i in range(n)]

        return prod(self.d1, self.d0, r0, r0, r1), prod(self.d0, self.d1, r1, r1, r0)

    def curvature_ok(self) -> bool:
        a, b = self.composites()
        r0, r1 = self.ranks
        return a == _scalar_matrix(self.W, r0, self.ring) and b == _scalar_matrix(self.W, r1, self.ring)

    def specialize(self, values) -> "MatrixFactorization":
        from .algebra import substitute

        sub = {k: self.ring.scalar(v) if not isinstance(v, AlgebraElement) else v for k, v in values.items()}
        f = lambda M: [[substitute(x, sub) for x in row] for row in M]
        return MatrixFactorization(self.ring, f(self.d0), f(self.d1), substitute(self.W, sub), self.twist)


def _scalar_matrix(x, n, ring):
    return [[x if i == j else ring.zero() for j in range(n)] for i in range(n)]


def thom_mf(n: int) -> MatrixFactorization:
    """``d = sum t_i rho(e_i)`` on the spinor module, split into its S+ -> S- and S- -> S+ blocks."""
    S = spinor_module(n)
    ring = fiber_context(n) if n else Context([])
    ts = [ring.gen(t) for t in ring.names]
    N = S.size
    d = [[ring.zero() for _ in range(N)] for _ in range(N)]
    for i in range(n):
        A = S.action[i]
        for r in range(N):
            for c in range(N):
                if A[r][c]:
                    d[r][c] = d[r][c] + ts[i] * A[r][c]
    ev = [i for i, p in enumerate(S.parities) if p == 0]
    od = [i for i, p in enumerate(S.parities) if p == 1]
    d0 = [[d[r][c] for c in ev] for r in od]
    d1 = [[d[r][c] for c in od] for r in ev]
    mf = MatrixFactorization(ring, d0, d1, potential(ring), BrauerTwist.for_rank(n))
    if not mf.curvature_ok():
        raise AssertionError("Thom factorization fails d^2 = W")
    return mf


# -- homology computations -----------------------------------------------------------------


def _bounds(n, d, max_n=2, max_d=6):
    if n < 0 or d < 0:
        raise ValueError("rank and degree must be non-negative")
    if n > max_n or d > max_d:
        raise BoundsError(f"desk-scale bounds exceeded: rank <= {max_n}, degree <= {max_d}")


def _poly_monos(n: int, p: int):
    return [m for m in product(range(p + 1), repeat=n) if sum(m) == p]


@dataclass
class ResolutionReport:
    rank: int
    max_degree: int
    table: dict
    basis: dict
    fiber_homology: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.table.values())

    @property
    def skyscraper(self) -> bool:
        nz = {k: v for k, v in self.table.items() if v}
        return nz == {(0, 0): 1}

    @property
    def acyclic_off_zero(self) -> bool:
        return all(v == 0 for v in self.fiber_homology.values())

    def to_json(self):
        return {
            "rank": self.rank,
            "max_degree": self.max_degree,
            "table": {f"{p},{s}": v for (p, s), v in sorted(self.table.items())},
            "basis": {f"{p},{s}": [_fmt_poly_clifford(r, self.rank) for r in b] for (p, s), b in sorted(self.basis.items())},
            "fiber_homology": {k: v for k, v in sorted(self.fiber_homology.items())},
            "skyscraper": self.skyscraper,
            "acyclic_off_zero": self.acyclic_off_zero,
        }


def _fmt_poly_clifford(rep: dict, n: int) -> str:
    names = ["t"] if n == 1 else [f"t{i}" for i in range(1, n + 1)]
    parts = []
    for (m, b), c in sorted(rep.items()):
        word = [f"{nm}^{e}" if e > 1 else nm for nm, e in zip(names, m) if e] + [f"e{i + 1}" for i in b]
        cs = coeffs.format_coeff(c)
        if not word:
            parts.append(cs)
        else:
            parts.append("*".join(word) if cs == "1" else f"{cs}*{'*'.join(word)}")
    return " + ".join(parts)


def _resolution_op(alg: CliffordAlgebra):
    gens = [alg.gen(i + 1) for i in range(alg.n)]

    def op(label):
        m, b = label
        c = alg.blade(b)
        out = {}
        for i, g in enumerate(gens):
            br = supercommutator(g, c)
            mm = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            for bb, v in br.terms.items():
                out[(mm, bb)] = out.get((mm, bb), 0) + v
        return out

    return op


def fiber_resolution_homology(point) -> dict:
    """Homology of Cliff(n) under ``c -> [sum a_i e_i, c]`` at a rational point a, per parity."""
    n = len(point)
    alg = CliffordAlgebra(n)
    x = alg.scalar(0)
    for i, a in enumerate(point):
        x = x + alg.gen(i + 1) * a
    strata = {s: [b for b in alg.basis if len(b) % 2 == s] for s in (0, 1)}

    def op(b):
        return supercommutator(x, alg.blade(b)).terms if x else {}

    return {s: label_homology(strata[s], strata[1 - s], op)[0] for s in (0, 1)}


def cliff_resolution_homology(n: int, max_degree: int = 4, fiber_points=None) -> ResolutionReport:
    """Homology of ``Cliff(n) (x) Q[t]`` with ``c -> [sum t_i e_i, c]``, per (poly degree, parity).

    Strata are (p, s); the differential maps (p, s) to (p + 1, 1 - s). Fiber
    checks specialize t to the given nonzero points (default: all ones).
    """
    _bounds(n, max_degree)
    alg = CliffordAlgebra(n)
    op = _resolution_op(alg)

    def stratum(p, s):
        if p < 0:
            return []
        return [(m, b) for m in _poly_monos(n, p) for b in alg.basis if len(b) % 2 == s]

    table, basis = {}, {}
    for p in range(max_degree + 1):
        for s in (0, 1):
            dim, _, _, reps = label_homology(stratum(p, s), stratum(p - 1, 1 - s), op)
            table[(p, s)] = dim
            basis[(p, s)] = reps
    if fiber_points is None:
        fiber_points = [tuple([1] * n)] if n else []
    fib = {}
    for pt in fiber_points:
        if not any(pt):
            raise ValueError("fiber points must be nonzero")
        h = fiber_resolution_homology(pt)
        fib[",".join(str(Fraction(v)) for v in pt)] = h[0] + h[1]
    return ResolutionReport(n, max_degree, table, basis, fib)


@dataclass
class KoszulReport:
    rank: int
    scale: Fraction
    square_ok: bool
    table: dict = field(default_factory=dict)
    basis: dict = field(default_factory=dict)
    diagonal_basis: list = field(default_factory=list)

    def to_json(self):
        from .algebra import to_string

        return {
            "rank": self.rank,
            "scale": str(self.scale),
            "square_ok": self.square_ok,
            "table": {f"{k},{p}": v for (k, p), v in sorted(self.table.items())},
            "basis": {f"{k},{p}": [to_string(e) for e in b] for (k, p), b in sorted(self.basis.items())},
            "diagonal_basis": [to_string(e) for e in self.diagonal_basis],
        }


def koszul_context(n: int) -> Context:
    g = [Generator(f"x{i}", 1, 0) for i in range(1, n + 1)]
    g += [Generator(f"p{i}", 0, 1) for i in range(1, n + 1)]
    g += [Generator(f"q{i}", 0, 1) for i in range(1, n + 1)]
    return Context(g)


def koszul_operator(n: int, s, ctx: Context | None = None):
    """``s iota(p) + eps(q)`` on ``Lambda[x] (x) Q[p, q]``: p pairs with x by contraction."""
    ctx = ctx or koszul_context(n)
    s = coeffs.to_coeff(s)
    ps = [ctx.gen(f"p{i}") for i in range(1, n + 1)]
    qx = ctx.zero()
    for i in range(1, n + 1):
        qx = qx + ctx.gen(f"q{i}") * ctx.gen(f"x{i}")

    def K(a: AlgebraElement) -> AlgebraElement:
        out = qx * a
        if s:
            for i in range(n):
                out = out + ps[i] * derivative(a, f"x{i + 1}", "left") * s
        return out

    return K


def koszul_kernel(n: int, s=1, max_degree: int = 4) -> KoszulReport:
    """Checks ``K^2 = s <p, q> Id`` and, for s = 0, computes homology per (form degree, poly degree)."""
    _bounds(n, max_degree)
    ctx = koszul_context(n)
    s = coeffs.to_coeff(s)
    K = koszul_operator(n, s, ctx)
    pairing = ctx.zero()
    for i in range(1, n + 1):
        pairing = pairing + ctx.gen(f"p{i}") * ctx.gen(f"q{i}")
    square_ok = True
    for k in range(n + 1):
        for b in combinations(range(1, n + 1), k):
            x = ctx.one()
            for i in b:
                x = x * ctx.gen(f"x{i}")
            if K(K(x)) != pairing * x * s:
                square_ok = False
    rep = KoszulReport(n, s, square_ok)
    if s:
        return rep
    xi = [ctx.idx(f"x{i}") for i in range(1, n + 1)]

    def stratum(k, p):
        if k < 0 or p < 0:
            return []
        out = []
        for b in combinations(range(n), k):
            for pm in _poly_monos(2 * n, p):
                m = [0] * ctx.n
                for i in b:
                    m[xi[i]] = 1
                for j, e in enumerate(pm):
                    m[n + j] = e
                out.append(tuple(m))
        return out

    from .linalg import stratum_homology

    for k in range(n + 1):
        for p in range(max_degree + 1):
            h = stratum_homology((k, p), stratum(k, p), stratum(k - 1, p - 1), K, ctx)
            rep.table[(k, p)] = h.dim
            rep.basis[(k, p)] = h.basis
    for (k, p), b in sorted(rep.basis.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        for e in b:
            rep.diagonal_basis.append(_strip_top(e, n))
    return rep


def _strip_top(e: AlgebraElement, n: int) -> AlgebraElement:
    """Coefficient of ``x_1...x_n`` (right derivatives in reverse order)."""
    out = e
    for i in range(n, 0, -1):
        out = derivative(out, f"x{i}", "right")
    return out


def diagonal_ring_basis(n: int, max_degree: int) -> list[AlgebraElement]:
    """Monomials in p only, up to the given degree: the expected s = 0 homology."""
    ctx = koszul_context(n)
    out = []
    for p in range(max_degree + 1):
        for pm in sorted(_poly_monos(n, p), reverse=True):
            x = ctx.one()
            for i, e in enumerate(pm):
                x = x * ctx.gen(f"p{i + 1}") ** e
            out.append(x)
    return out


# -- Knorrer ----------------------------------------------------------------------------------


@dataclass
class KnorrerReport:
    mf_dims: tuple[int, int]
    cliff_dims: tuple[int, int]
    table: dict
    identity_closed: bool
    identity_nonzero: bool
    odd_class_closed: bool

    @property
    def passed(self) -> bool:
        return self.mf_dims == self.cliff_dims and self.identity_closed and self.identity_nonzero and self.odd_class_closed

    def to_json(self):
        return {
            "mf_dims": list(self.mf_dims),
            "cliff_dims": list(self.cliff_dims),
            "table": {f"{p},{s}": v for (p, s), v in sorted(self.table.items())},
            "identity_closed": self.identity_closed,
            "identity_nonzero": self.identity_nonzero,
            "odd_class_closed": self.odd_class_closed,
            "passed": self.passed,
        }


def knorrer_check(max_degree: int = 4) -> KnorrerReport:
    """Endomorphism complex of ``thom_mf(1)`` against the super-centralizer of Cliff(1) on itself.

    Endomorphisms are 2x2 matrices over Q[t] on ``E0 + E1``; the differential is
    ``M -> dM - (-1)^|M| M d``. Strata are (poly degree, parity).
    """
    _bounds(1, max_degree)
    mf = thom_mf(1)
    ring = mf.ring
    t = ring.gen("t")
    z = ring.zero()
    d = [[z, mf.d1[0][0]], [mf.d0[0][0], z]]

    def delta(M, par):
        sign = -1 if par else 1
        A = mat_mul(d, M, z)
        B = mat_mul(M, d, z)
        return [[A[i][j] - B[i][j] * sign for j in range(2)] for i in range(2)]

    slots = {0: [(0, 0), (1, 1)], 1: [(0, 1), (1, 0)]}

    def matrix(label):
        p, par, slot = label
        M = [[z, z], [z, z]]
        M[slot[0]][slot[1]] = t ** p
        return M, par

    def op(label):
        M, par = matrix(label)
        D = delta(M, par)
        out = {}
        for i in range(2):
            for j in range(2):
                for m, c in D[i][j].terms.items():
                    out[(m[0], 1 - par, (i, j))] = c
        return out

    def stratum(p, par):
        return [(p, par, sl) for sl in slots[par]] if p >= 0 else []

    table = {}
    for p in range(max_degree + 1):
        for par in (0, 1):
            table[(p, par)] = label_homology(stratum(p, par), stratum(p - 1, 1 - par), op)[0]
    mf_dims = (sum(v for (p, s), v in table.items() if s == 0), sum(v for (p, s), v in table.items() if s == 1))
    one = ring.one()
    Id = [[one, z], [z, one]]
    identity_closed = delta(Id, 0) == [[z, z], [z, z]]
    # Id is not a boundary: boundaries into (0, even) come from degree -1, i.e. none
    identity_nonzero = table[(0, 0)] >= 1
    odd = [[z, one], [one * -2, z]]
    odd_class_closed = delta(odd, 1) == [[z, z], [z, z]]
    # Cliff(1) acting on itself by left multiplication (same as the rank-1 spinor module)
    cliff_dims = spinor_module(1).supercentralizer_dims()
    return KnorrerReport(mf_dims, cliff_dims, table, identity_closed, identity_nonzero, odd_class_closed)
