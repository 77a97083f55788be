"""Exact coefficients: rationals, optionally extended by i (the field Q(i)).

Plain ``int`` and ``fractions.Fraction`` are used for rational values. A value with
nonzero imaginary part is a :class:`QI`; arithmetic that cancels the imaginary part
falls back to ``Fraction`` so rational computations never carry complex baggage.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QI:
    """Gaussian rational ``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _parts(x):
        if isinstance(x, QI):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return make((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QI(*p) / self

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Fraction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return make(self.re, -self.im)

    def __repr__(self):
        return f"QI({self.re}, {self.im})"

    def __str__(self):
        return format_coeff(self)


I = QI(0, 1)


def make(re, im=0):
    """Return the canonical representative: Fraction when the imaginary part vanishes."""
    if im == 0:
        return Fraction(re)
    return QI(re, im)


def to_coeff(x):
    """Coerce int/Fraction/QI/str to an exact coefficient; floats are refused."""
    if isinstance(x, QI):
        return make(x.re, x.im)
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"inexact or unsupported coefficient {x!r}")


def re_im(c):
    if isinstance(c, QI):
        return c.re, c.im
    c = Fraction(c)
    return c, Fraction(0)


def is_real(c) -> bool:
    return not isinstance(c, QI) or c.im == 0


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_coeff(c) -> str:
    re, im = re_im(c)
    if im == 0:
        return format_rational(re)
    if re == 0:
        return _imag(im)
    sign = "-" if im < 0 else "+"
    return f"({format_rational(re)} {sign} {_imag(abs(im))})"


def _imag(im) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{format_rational(im)}*i"


def encode(c) -> list[int]:
    """Four-integer JSON encoding ``[num_re, den_re, num_im, den_im]``."""
    re, im = re_im(c)
    return [re.numerator, re.denominator, im.numerator, im.denominator]


def decode(v) -> Fraction | QI:
    if len(v) != 4 or not all(isinstance(x, int) for x in v):
        raise ValueError(f"bad coefficient encoding {v!r}")
    return make(Fraction(v[0], v[1]), Fraction(v[2], v[3]))
