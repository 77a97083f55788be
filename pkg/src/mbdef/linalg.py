"""Dense exact linear algebra over Q(i) and homology of graded strata.

Vectors are lists of exact coefficients. Everything is small (desk scale), so
plain Gauss-Jordan elimination is used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .algebra import AlgebraElement


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``; zero rows dropped."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            inv = Fraction(1) / piv
            M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [a - f * b for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(columns: Sequence[Sequence], dim: int) -> list[list]:
    """Kernel of the map whose images of the ``dim`` basis vectors are ``columns``.

    ``columns[j]`` is the image of basis vector j (a vector in the target).
    Returns a basis of the kernel as coordinate vectors of length ``dim``.
    """
    if dim == 0:
        return []
    tdim = len(columns[0]) if columns else 0
    if tdim == 0:
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    rows = [[columns[j][i] for j in range(dim)] for i in range(tdim)]
    R, piv = rref(rows, dim)
    free = [j for j in range(dim) if j not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def reduce_against(v: list, echelon: list, pivots: list) -> list:
    v = list(v)
    for row, pc in zip(echelon, pivots):
        if v[pc]:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def quotient_basis(cycles: list[list], boundaries: list[list], dim: int) -> list[list]:
    """Canonical representatives of span(cycles) / span(boundaries).

    Representatives are normal forms modulo the boundaries, brought to reduced
    echelon form, so early coordinates get eliminated first.
    """
    B, bp = rref(boundaries, dim) if boundaries else ([], [])
    reduced = [reduce_against(z, B, bp) for z in cycles]
    reduced = [r for r in reduced if any(r)]
    if not reduced:
        return []
    Q, _ = rref(reduced, dim)
    return [reduce_against(q, B, bp) for q in Q]


@dataclass
class StratumHomology:
    key: Hashable
    dim: int
    cycles: int
    boundaries: int
    basis: list[AlgebraElement] = field(default_factory=list)


def _coords(elem: AlgebraElement, index: dict, where: str) -> list:
    v = [Fraction(0)] * len(index)
    for m, c in elem.terms.items():
        j = index.get(m)
        if j is None:
            raise ValueError(f"operator leaves the declared stratum ({where}): {elem.ctx.mono_str(m)}")
        v[j] = c
    return v


def stratum_homology(
    key: Hashable,
    basis: list[tuple],
    below: list[tuple],
    op: Callable[[AlgebraElement], AlgebraElement],
    ctx,
    order_key=None,
) -> StratumHomology:
    """Homology at one stratum of a complex of monomial-spanned spaces.

    ``basis`` spans the stratum, ``below`` spans the stratum mapping into it, and
    ``op`` is the differential. Cycles are computed against the full image (the
    target is collected from the images), so truncation never creates spurious
    cycles. ``order_key`` orders coordinates; monomials sorted first are the ones
    eliminated when picking representatives.
    """
    if order_key is None:
        order_key = lambda m: tuple(-x for x in ctx.sort_key(m)[:2]) + ctx.sort_key(m)[2:]
    basis = sorted(basis, key=order_key)
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)
    images = [op(AlgebraElement(ctx, {m: Fraction(1)})) for m in basis]
    tmonos = sorted({m for im in images for m in im.terms}, key=order_key)
    tindex = {m: i for i, m in enumerate(tmonos)}
    cols = [_coords(im, tindex, "image") for im in images]
    Z = nullspace(cols, n) if tmonos else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    Bv = [_coords(op(AlgebraElement(ctx, {m: Fraction(1)})), index, "boundary") for m in below]
    Bv = [b for b in Bv if any(b)]
    reps = quotient_basis(Z, Bv, n)
    brank = rank(Bv) if Bv else 0
    elems = [AlgebraElement(ctx, {basis[j]: c for j, c in enumerate(r) if c}) for r in reps]
    return StratumHomology(key, len(reps), len(Z), brank, elems)


def matrix_homology(d_out: list[list], d_in: list[list], dim: int) -> int:
    """dim ker(d_out) - rank(d_in) for a finite complex given by column lists."""
    z = len(nullspace(d_out, dim)) if d_out and d_out[0] else dim
    b = rank(d_in) if d_in else 0
    return z - b


def mat_mul(A, B, zero=0):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = zero
            for l in range(k):
                a = A[i][l]
                if a:
                    b = B[l][j]
                    if b:
                        s = s + a * b
            row.append(s)
        out.append(row)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in r] for r in A]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def label_homology(basis: list, below: list, op: Callable[[Hashable], dict]):
    """Homology at a stratum whose basis vectors are arbitrary hashable labels.

    ``op(label)`` returns the image as ``{label: coeff}``. Returns
    ``(dim, cycles, boundary_rank, representatives)`` with representatives as dicts.
    """
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    images = [op(b) for b in basis]
    targets = sorted({k for im in images for k, c in im.items() if c}, key=repr)
    tindex = {k: i for i, k in enumerate(targets)}
    cols = []
    for im in images:
        v = [Fraction(0)] * len(targets)
        for k, c in im.items():
            if c:
                v[tindex[k]] = v[tindex[k]] + c
        cols.append(v)
    Z = nullspace(cols, n) if targets else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    Bv = []
    for b in below:
        v = [Fraction(0)] * n
        for k, c in op(b).items():
            if c:
                if k not in index:
                    raise ValueError(f"operator leaves the declared stratum: {k!r}")
                v[index[k]] = v[index[k]] + c
        if any(v):
            Bv.append(v)
    reps = quotient_basis(Z, Bv, n)
    return len(reps), len(Z), (rank(Bv) if Bv else 0), [{basis[j]: c for j, c in enumerate(r) if c} for r in reps]
