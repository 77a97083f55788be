"""Free graded-commutative algebra over Q(i) with a weight filtration.

A :class:`Context` is an ordered generator table. Monomials are exponent tuples
aligned with that table; the canonical form of a product is the ordered product
``x_0^e_0 x_1^e_1 ...``. Reordering two odd generators costs a sign and an odd
generator squares to zero. An even generator may carry ``max_exp``; higher powers
are discarded, which models nilpotent even parameters (``a^2 = 0``) or
polynomial-degree caps.

Sign convention (used by every other module): when a product is brought to
canonical order, each transposition of two odd generators contributes a factor -1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import coeffs
from .errors import ContextError, DivergenceError, ParityError


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    weight: int = 0
    max_exp: int | None = None

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError(f"generator {self.name}: weight must be non-negative")
        if self.max_exp is not None and self.max_exp < 0:
            raise ValueError(f"generator {self.name}: max_exp must be non-negative")

    @property
    def parity(self) -> int:
        return self.degree % 2

    def to_json(self) -> dict:
        d = {"name": self.name, "degree": self.degree, "weight": self.weight}
        if self.max_exp is not None:
            d["max_exp"] = self.max_exp
        return d

    @classmethod
    def from_json(cls, d) -> "Generator":
        return cls(d["name"], int(d["degree"]), int(d.get("weight", 0)), d.get("max_exp"))


def gens(names: str, degree: int, weight: int = 0, max_exp: int | None = None) -> list[Generator]:
    """``gens("z1 z2", 1, 1)`` -> two odd generators of weight 1."""
    return [Generator(n, degree, weight, max_exp) for n in names.split()]


class Context:
    """Immutable ordered generator table."""

    def __init__(self, generators: Iterable[Generator]):
        self.generators = tuple(generators)
        self.index = {}
        for i, g in enumerate(self.generators):
            if g.name in self.index:
                raise ContextError(f"duplicate generator name {g.name!r}")
            self.index[g.name] = i
        n = len(self.generators)
        self.n = n
        self.names = tuple(g.name for g in self.generators)
        self.weights = tuple(g.weight for g in self.generators)
        self.degrees = tuple(g.degree for g in self.generators)
        self.odd = tuple(i for i, g in enumerate(self.generators) if g.parity)
        self._odd_rev = tuple(reversed(self.odd))
        self.is_odd = tuple(bool(g.parity) for g in self.generators)
        caps = []
        for i, g in enumerate(self.generators):
            if g.parity:
                caps.append((i, 1))
            elif g.max_exp is not None:
                caps.append((i, g.max_exp))
        self._even_caps = tuple((i, c) for i, c in caps if not self.is_odd[i])
        self.unit = (0,) * n
        self._hash = hash(self.generators)
        self._wcache: dict[tuple, int] = {}

    def __eq__(self, other):
        return self is other or (isinstance(other, Context) and self.generators == other.generators)

    def __hash__(self):
        return self._hash

    def __len__(self):
        return self.n

    def __contains__(self, name):
        return name in self.index

    def __repr__(self):
        return "Context(" + ", ".join(f"{g.name}:{g.degree}/{g.weight}" for g in self.generators) + ")"

    def generator(self, name: str) -> Generator:
        try:
            return self.generators[self.index[name]]
        except KeyError:
            raise ContextError(f"unknown generator {name!r}") from None

    def idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise ContextError(f"unknown generator {name!r}") from None

    def extend(self, extra: Iterable[Generator]) -> "Context":
        return Context(self.generators + tuple(extra))

    # -- monomial kernels -------------------------------------------------

    def mono_weight(self, m: tuple) -> int:
        w = self._wcache.get(m)
        if w is None:
            w = sum(e * w_ for e, w_ in zip(m, self.weights) if e)
            self._wcache[m] = w
        return w

    def mono_degree(self, m: tuple) -> int:
        return sum(e * d for e, d in zip(m, self.degrees) if e)

    def mono_parity(self, m: tuple) -> int:
        return sum(m[i] for i in self.odd) & 1

    def mono_mul(self, a: tuple, b: tuple):
        """Return ``(sign_bit, product)`` or ``None`` if the product vanishes."""
        cnt = 0
        above = 0
        for i in self._odd_rev:
            if b[i]:
                if a[i]:
                    return None
                cnt += above
            if a[i]:
                above += 1
        m = tuple([x + y for x, y in zip(a, b)])
        for i, cap in self._even_caps:
            if m[i] > cap:
                return None
        return cnt & 1, m

    def mono_admissible(self, m: tuple) -> bool:
        for i in self.odd:
            if m[i] > 1:
                return False
        for i, cap in self._even_caps:
            if m[i] > cap:
                return False
        return True

    def mono_str(self, m: tuple) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def mono_json(self, m: tuple) -> list:
        return [[name, e] for name, e in zip(self.names, m) if e]

    def mono_from_pairs(self, pairs) -> tuple[int, tuple] | None:
        """Canonicalize an arbitrary ordered word of ``(name, exp)`` pairs.

        Returns ``(sign_bit, exps)`` or ``None`` when the word is zero.
        """
        sign = 0
        cur = self.unit
        for name, e in pairs:
            i = self.idx(name)
            e = int(e)
            if e < 0:
                raise ValueError("negative exponent")
            if e == 0:
                continue
            g = [0] * self.n
            g[i] = e
            g = tuple(g)
            if not self.mono_admissible(g):
                return None
            r = self.mono_mul(cur, g)
            if r is None:
                return None
            sign ^= r[0]
            cur = r[1]
        return sign, cur

    def sort_key(self, m: tuple):
        return (self.mono_weight(m), sum(m), tuple(-e for e in m))

    # -- element constructors --------------------------------------------

    def zero(self, cutoff: int | None = None) -> "AlgebraElement":
        return AlgebraElement(self, {}, cutoff)

    def one(self, cutoff: int | None = None) -> "AlgebraElement":
        return self.scalar(1, cutoff)

    def scalar(self, c, cutoff: int | None = None) -> "AlgebraElement":
        c = coeffs.to_coeff(c)
        return AlgebraElement(self, {self.unit: c} if c else {}, cutoff)

    def gen(self, name: str, cutoff: int | None = None) -> "AlgebraElement":
        i = self.idx(name)
        m = [0] * self.n
        m[i] = 1
        m = tuple(m)
        if not self.mono_admissible(m):
            return self.zero(cutoff)
        return AlgebraElement(self, {m: Fraction(1)}, cutoff)._cut()

    def monomial(self, pairs, coeff=1, cutoff: int | None = None) -> "AlgebraElement":
        r = self.mono_from_pairs(pairs)
        if r is None:
            return self.zero(cutoff)
        c = coeffs.to_coeff(coeff)
        if r[0]:
            c = -c
        return AlgebraElement(self, {r[1]: c} if c else {}, cutoff)._cut()

    def __getitem__(self, name: str) -> "AlgebraElement":
        return self.gen(name)

    def gens(self, names: str) -> list["AlgebraElement"]:
        return [self.gen(n) for n in names.split()]

    def to_json(self) -> list[dict]:
        return [g.to_json() for g in self.generators]

    @classmethod
    def from_json(cls, data) -> "Context":
        return cls(Generator.from_json(d) for d in data)


def _lift(ctx: Context, x, cutoff=None) -> "AlgebraElement":
    if isinstance(x, AlgebraElement):
        if x.ctx != ctx:
            raise ContextError("operands live in different generator contexts")
        return x
    return ctx.scalar(x, cutoff)


def _mincut(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class AlgebraElement:
    """Finite Q(i)-combination of canonical monomials, optionally truncated.

    ``cutoff`` is a weight bound: monomials of larger weight are never stored and
    products discard them. Equality compares terms and context, not cutoffs.
    """

    __slots__ = ("ctx", "terms", "cutoff")

    def __init__(self, ctx: Context, terms: Mapping[tuple, object], cutoff: int | None = None):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c}
        self.cutoff = cutoff

    def _cut(self):
        if self.cutoff is not None:
            w = self.ctx.mono_weight
            cut = self.cutoff
            if any(w(m) > cut for m in self.terms):
                self.terms = {m: c for m, c in self.terms.items() if w(m) <= cut}
        return self

    # -- basic protocol ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx == other.ctx and self.terms == other.terms
        try:
            c = coeffs.to_coeff(other)
        except TypeError:
            return NotImplemented
        if not c:
            return not self.terms
        return self.terms == {self.ctx.unit: c}

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        return to_string(self)

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        key = self.ctx.sort_key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]))

    def with_cutoff(self, cutoff: int | None) -> "AlgebraElement":
        return AlgebraElement(self.ctx, self.terms, cutoff)._cut()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _lift(self.ctx, other)
        cut = _mincut(self.cutoff, o.cutoff)
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            out[m] = c if v is None else v + c
        return AlgebraElement(self.ctx, out, cut)._cut()

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, {m: -c for m, c in self.terms.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-_lift(self.ctx, other))

    def __rsub__(self, other):
        return _lift(self.ctx, other) + (-self)

    def scale(self, c) -> "AlgebraElement":
        c = coeffs.to_coeff(c)
        if not c:
            return self.ctx.zero(self.cutoff)
        return AlgebraElement(self.ctx, {m: v * c for m, v in self.terms.items()}, self.cutoff)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if other.ctx != self.ctx:
            raise ContextError("operands live in different generator contexts")
        cut = _mincut(self.cutoff, other.cutoff)
        return AlgebraElement(self.ctx, _mul_terms(self.ctx, self.terms, other.terms, cut), cut)

    def __rmul__(self, other):
        # scalars commute with everything
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        c = coeffs.to_coeff(other)
        return self.scale(Fraction(1) / c if not isinstance(c, coeffs.QI) else coeffs.make(1) / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.ctx.one(self.cutoff)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- gradings -----------------------------------------------------------

    def parity(self) -> int:
        """Common parity of all terms (0 for the zero element)."""
        ps = {self.ctx.mono_parity(m) for m in self.terms}
        if len(ps) > 1:
            raise ParityError(f"element {self} is not parity-homogeneous")
        return ps.pop() if ps else 0

    def is_homogeneous_parity(self) -> bool:
        return len({self.ctx.mono_parity(m) for m in self.terms}) <= 1

    def degree(self) -> int | None:
        ds = {self.ctx.mono_degree(m) for m in self.terms}
        return ds.pop() if len(ds) == 1 else None

    def min_weight(self) -> int | None:
        if not self.terms:
            return None
        return min(self.ctx.mono_weight(m) for m in self.terms)

    def max_weight(self) -> int | None:
        if not self.terms:
            return None
        return max(self.ctx.mono_weight(m) for m in self.terms)

    def coefficient(self, pairs=()) -> object:
        """Coefficient of the canonical monomial given as ``[(name, exp), ...]``."""
        m = [0] * self.ctx.n
        for name, e in pairs:
            m[self.ctx.idx(name)] += int(e)
        return self.terms.get(tuple(m), Fraction(0))

    def coefficient_of(self, word: str):
        if not word.strip() or word.strip() == "1":
            return self.coefficient(())
        pairs = []
        for f in word.split("*"):
            name, _, e = f.partition("^")
            pairs.append((name.strip(), int(e) if e else 1))
        return self.coefficient(pairs)

    def involves(self, name: str) -> bool:
        i = self.ctx.idx(name)
        return any(m[i] for m in self.terms)

    def filter(self, pred) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {m: c for m, c in self.terms.items() if pred(m)}, self.cutoff)

    def homogeneous_part(self, weight: int) -> "AlgebraElement":
        w = self.ctx.mono_weight
        return self.filter(lambda m: w(m) == weight)


def _mul_terms(ctx: Context, A: Mapping, B: Mapping, cutoff):
    if not A or not B:
        return {}
    w = ctx.mono_weight
    bl = sorted(((w(m), m, c) for m, c in B.items()), key=lambda x: x[0])
    out: dict = {}
    mm = ctx.mono_mul
    for ma, ca in A.items():
        wa = w(ma)
        for wb, mb, cb in bl:
            if cutoff is not None and wa + wb > cutoff:
                break
            r = mm(ma, mb)
            if r is None:
                continue
            s, m = r
            c = ca * cb
            if s:
                c = -c
            v = out.get(m)
            out[m] = c if v is None else v + c
    return {m: c for m, c in out.items() if c}


# -- module-level operations ---------------------------------------------------


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def truncate(a: AlgebraElement, w: int) -> AlgebraElement:
    """Drop every monomial of weight > ``w``; the result carries cutoff ``w``."""
    if w < 0:
        raise ValueError("truncation weight must be non-negative")
    return AlgebraElement(a.ctx, a.terms, w if a.cutoff is None else min(w, a.cutoff))._cut()


def factor_count(a: AlgebraElement, m: tuple, names: Iterable[str] | None = None) -> int:
    """Number of factors from ``names`` (default: all positive-weight generators)."""
    ctx = a.ctx
    if names is None:
        idx = [i for i, wt in enumerate(ctx.weights) if wt > 0]
    else:
        idx = [ctx.idx(n) for n in names]
    return sum(m[i] for i in idx)


def derivative(a: AlgebraElement, name: str, side: str = "left") -> AlgebraElement:
    """Partial derivative in one generator.

    For an odd generator the left derivative first moves it to the front of the
    monomial and the right derivative moves it to the back, picking up the Koszul
    sign of the odd generators it passes.
    """
    ctx = a.ctx
    k = ctx.idx(name)
    out = {}
    odd = ctx.is_odd[k]
    for m, c in a.terms.items():
        e = m[k]
        if not e:
            continue
        if odd:
            if side == "left":
                passed = sum(m[i] for i in ctx.odd if i < k)
            else:
                passed = sum(m[i] for i in ctx.odd if i > k)
            if passed & 1:
                c = -c
        else:
            c = c * e
        nm = list(m)
        nm[k] = e - 1
        nm = tuple(nm)
        v = out.get(nm)
        out[nm] = c if v is None else v + c
    return AlgebraElement(ctx, out, a.cutoff)


def set_zero(a: AlgebraElement, names: Iterable[str]) -> AlgebraElement:
    idx = [a.ctx.idx(n) for n in names]
    return a.filter(lambda m: not any(m[i] for i in idx))


def _value_weight(v: AlgebraElement) -> int | None:
    return v.min_weight()


def substitute(a: AlgebraElement, assignments: Mapping[str, object]) -> AlgebraElement:
    """Graded homomorphism sending each named generator to the given value.

    Values must have the generator's parity. On a truncated element (cutoff set),
    a value of smaller weight than its generator would need the discarded
    higher-weight terms, so it raises :class:`DivergenceError`; use
    :func:`evaluate` for numeric evaluation of a polynomial.
    """
    ctx = a.ctx
    vals: dict[int, AlgebraElement] = {}
    for name, v in assignments.items():
        i = ctx.idx(name)
        v = _lift(ctx, v)
        if v and v.parity() != ctx.generators[i].parity:
            raise ParityError(f"value for {name} has the wrong parity")
        if a.cutoff is not None and v:
            vw = _value_weight(v)
            if vw < ctx.weights[i] and any(m[i] for m in a.terms):
                raise DivergenceError(
                    f"substituting {name} (weight {ctx.weights[i]}) by a value of weight {vw} "
                    "in a truncated series does not terminate")
        vals[i] = v
    cut = a.cutoff
    for v in vals.values():
        cut = _mincut(cut, v.cutoff)
    if not vals:
        return AlgebraElement(ctx, a.terms, cut)._cut()
    powers: dict[tuple[int, int], AlgebraElement] = {}

    def power(i, e):
        key = (i, e)
        p = powers.get(key)
        if p is None:
            if i in vals:
                p = vals[i].with_cutoff(cut) ** e
            else:
                m = [0] * ctx.n
                m[i] = e
                p = AlgebraElement(ctx, {tuple(m): Fraction(1)}, cut)._cut()
            powers[key] = p
        return p

    out = ctx.zero(cut)
    acc: dict = {}
    for m, c in a.terms.items():
        if not any(m[i] for i in vals):
            v = acc.get(m)
            acc[m] = c if v is None else v + c
            continue
        prod = ctx.scalar(c, cut)
        for i, e in enumerate(m):
            if e:
                prod = prod * power(i, e)
                if not prod:
                    break
        out = out + prod
    return out + AlgebraElement(ctx, acc, cut)._cut()


def evaluate(a: AlgebraElement, values: Mapping[str, object]):
    """Evaluate a polynomial exactly; every generator present must be assigned.

    Odd generators may only be assigned 0. Returns a coefficient.
    """
    ctx = a.ctx
    vals = {}
    for name, v in values.items():
        i = ctx.idx(name)
        v = coeffs.to_coeff(v)
        if ctx.is_odd[i] and v:
            raise ParityError(f"odd generator {name} can only be evaluated at 0")
        vals[i] = v
    total = Fraction(0)
    for m, c in a.terms.items():
        term = c
        for i, e in enumerate(m):
            if e:
                if i not in vals:
                    raise ContextError(f"generator {ctx.names[i]} not assigned")
                term = term * vals[i] ** e
        total = total + term
    return total


def embed(a: AlgebraElement, target: Context) -> AlgebraElement:
    """Map an element into a context containing its generators (same degrees)."""
    src = a.ctx
    if src == target:
        return a
    pos = []
    for g in src.generators:
        if g.name not in target.index:
            if any(m[src.index[g.name]] for m in a.terms):
                raise ContextError(f"target context lacks generator {g.name!r}")
            pos.append(None)
            continue
        tg = target.generator(g.name)
        if tg.parity != g.parity:
            raise ParityError(f"generator {g.name!r} changes parity under embedding")
        pos.append(target.index[g.name])
    present = [p for p in pos if p is not None]
    order_kept = all(x < y for x, y in zip(present, present[1:]))
    out: dict = {}
    if order_kept:
        for m, c in a.terms.items():
            nm = [0] * target.n
            for i, e in enumerate(m):
                if e:
                    nm[pos[i]] = e
            nm = tuple(nm)
            if target.mono_admissible(nm):
                out[nm] = out.get(nm, 0) + c
        return AlgebraElement(target, out, a.cutoff)._cut()
    res = target.zero(a.cutoff)
    for m, c in a.terms.items():
        res = res + target.monomial([(src.names[i], e) for i, e in enumerate(m) if e], c, a.cutoff)
    return res


# -- text and JSON -------------------------------------------------------------


def to_string(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    out = []
    for m, c in a.sorted_terms():
        mono = a.ctx.mono_str(m)
        re, im = coeffs.re_im(c)
        if im == 0:
            neg = re < 0
            mag = -re if neg else re
            if mono:
                body = mono if mag == 1 else f"{coeffs.format_rational(mag)}*{mono}"
            else:
                body = coeffs.format_rational(mag)
        else:
            neg = re == 0 and im < 0
            cs = coeffs.format_coeff(-c if neg else c)
            body = f"{cs}*{mono}" if mono else cs
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def element_to_json(a: AlgebraElement) -> list[dict]:
    return [{"coeff": coeffs.encode(c), "mono": a.ctx.mono_json(m)} for m, c in a.sorted_terms()]


def element_from_json(data, ctx: Context, cutoff: int | None = None) -> AlgebraElement:
    out = ctx.zero(cutoff)
    for rec in data:
        out = out + ctx.monomial([(n, e) for n, e in rec["mono"]], coeffs.decode(rec["coeff"]), cutoff)
    return out


def document(a: AlgebraElement) -> dict:
    """Self-describing JSON document: generator table, cutoff and terms."""
    return {"context": a.ctx.to_json(), "cutoff": a.cutoff, "terms": element_to_json(a)}


def from_document(doc) -> AlgebraElement:
    ctx = Context.from_json(doc["context"])
    return element_from_json(doc["terms"], ctx, doc.get("cutoff"))


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"
