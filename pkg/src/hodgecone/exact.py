"""Exact arithmetic for numbers of the form ``t + c*sqrt(f)``.

Indicial roots are values ``sign * (sqrt(r) + shift)`` with ``r`` rational, so
every root lives in some quadratic field Q(sqrt(f)).  `QuadraticSurd` keeps the
rational part, the coefficient and the squarefree radicand, which makes
equality exact and ordering decidable by repeated squaring.

When a radicand is not rational (float input) or too large to factor quickly,
`make_root_value` returns a plain float and callers fall back to a tolerance.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational
from typing import Union

FLOAT_TOL = 1e-9
# p*q above this is not factored; the value degrades to a float.
_FACTOR_LIMIT = 10**12

Number = Union[int, Fraction, float]


@functools.lru_cache(maxsize=65536)
def _squarefree_split(m: int) -> tuple[int, int]:
    """Return (s, f) with m = s*s*f and f squarefree, or raise OverflowError."""
    if m < 0:
        raise ValueError("negative radicand")
    if m == 0:
        return 0, 1
    r = math.isqrt(m)
    if r * r == m:
        return r, 1
    if m > _FACTOR_LIMIT:
        raise OverflowError("radicand too large to factor")
    s, f = 1, 1
    p = 2
    while p * p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    # the cofactor has at most two prime factors, each above the cube root
    r = math.isqrt(m)
    if r * r == m:
        s *= r
    else:
        f *= m
    return s, f


def _sign_lin(a: Fraction, b: Fraction, f: int) -> int:
    """Exact sign of a + b*sqrt(f)."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or f == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 f
    d = a * a - b * b * f
    return sa * ((d > 0) - (d < 0))


def _sign_three(a: Fraction, b: Fraction, f: int, c: Fraction, g: int) -> int:
    """Exact sign of a + b*sqrt(f) + c*sqrt(g)."""
    x = _sign_lin(a, b, f)
    y = (c > 0) - (c < 0)
    if y == 0:
        return x
    if x == 0 or x == y:
        return y
    # sign(|X|^2 - |Y|^2) with X = a + b sqrt f, Y = c sqrt g
    cmp = _sign_lin(a * a + b * b * f - c * c * g, 2 * a * b, f)
    if cmp == 0:
        return 0
    return x if cmp > 0 else y


class QuadraticSurd:
    """The real number ``rational + coeff * sqrt(radicand)``.

    ``radicand`` is a squarefree positive integer; ``radicand == 1`` only when
    ``coeff == 0``, so the representation is canonical.
    """

    __slots__ = ("rational", "coeff", "radicand")

    def __init__(self, rational: Number = 0, coeff: Number = 0, radicand: int = 1):
        rational = Fraction(rational)
        coeff = Fraction(coeff)
        if radicand < 1:
            raise ValueError("radicand must be a positive integer")
        s, f = _squarefree_split(int(radicand))
        coeff *= s
        if f == 1:
            rational, coeff = rational + coeff, Fraction(0)
        if coeff == 0:
            f = 1
        self.rational = rational
        self.coeff = coeff
        self.radicand = f

    @classmethod
    def _raw(cls, rational: Fraction, coeff: Fraction, radicand: int) -> "QuadraticSurd":
        """Trusted constructor for already-canonical parts."""
        obj = object.__new__(cls)
        obj.rational, obj.coeff, obj.radicand = rational, coeff, radicand
        return obj

    @classmethod
    def sqrt(cls, r: Number) -> "QuadraticSurd":
        """Exact square root of a nonnegative rational."""
        r = Fraction(r)
        if r < 0:
            raise ValueError("square root of a negative number")
        p, q = r.numerator, r.denominator
        s, f = _squarefree_split(p * q)
        return cls(0, Fraction(s, q), f)

    def is_rational(self) -> bool:
        return self.coeff == 0

    def as_fraction(self) -> Fraction:
        if self.coeff != 0:
            raise ValueError(f"{self} is irrational")
        return self.rational

    def __float__(self) -> float:
        return float(self.rational) + float(self.coeff) * math.sqrt(self.radicand)

    def _sign(self) -> int:
        return _sign_lin(self.rational, self.coeff, self.radicand)

    def _minus(self, other) -> int:
        """Sign of self - other for exact operands; None if other is a float."""
        if isinstance(other, QuadraticSurd):
            if other.radicand == self.radicand:
                return _sign_lin(self.rational - other.rational,
                                 self.coeff - other.coeff, self.radicand)
            return _sign_three(self.rational - other.rational, self.coeff,
                               self.radicand, -other.coeff, other.radicand)
        if isinstance(other, (int, Rational)):
            return _sign_lin(self.rational - Fraction(other), self.coeff, self.radicand)
        return None

    def _cmp(self, other) -> int:
        if isinstance(other, (QuadraticSurd, int, Rational)):
            # floats decide unless the gap is within their rounding error
            a, b = float(self), float(other)
            if abs(a - b) > 1e-12 * max(1.0, abs(a), abs(b)):
                return 1 if a > b else -1
        s = self._minus(other)
        if s is not None:
            return s
        if isinstance(other, float):
            if math.isinf(other):
                return -1 if other > 0 else 1
            d = float(self) - other
            return (d > 0) - (d < 0)
        return NotImplemented

    def __eq__(self, other):
        c = self._cmp(other)
        if c is NotImplemented:
            return NotImplemented
        return c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.coeff == 0:
            return hash(self.rational)
        return hash((self.rational, self.coeff, self.radicand))

    def __neg__(self):
        return QuadraticSurd._raw(-self.rational, -self.coeff, self.radicand)

    def __abs__(self):
        return -self if self._sign() < 0 else self

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            return QuadraticSurd(self.rational + Fraction(other), self.coeff, self.radicand)
        if isinstance(other, QuadraticSurd):
            if other.radicand == self.radicand or other.coeff == 0 or self.coeff == 0:
                f = self.radicand if self.coeff != 0 else other.radicand
                return QuadraticSurd(self.rational + other.rational,
                                     self.coeff + other.coeff, f)
            raise ValueError("sum of surds from different quadratic fields")
        if isinstance(other, float):
            return float(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational, QuadraticSurd)):
            return self + (-other)
        if isinstance(other, float):
            return float(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            k = Fraction(other)
            return QuadraticSurd(self.rational * k, self.coeff * k, self.radicand)
        if isinstance(other, float):
            return float(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"QuadraticSurd({self.rational!s}, {self.coeff!s}, {self.radicand})"

    def __str__(self):
        if self.coeff == 0:
            return str(self.rational)
        root = f"sqrt({self.radicand})"
        c = self.coeff
        term = root if c == 1 else f"-{root}" if c == -1 else f"{c}*{root}"
        if self.rational == 0:
            return term
        if term.startswith("-"):
            return f"{self.rational} - {term[1:]}"
        return f"{self.rational} + {term}"


RootValue = Union[QuadraticSurd, float]


def make_root_value(sign: int, radicand: Number, shift: Number) -> RootValue:
    """``sign * (sqrt(radicand) + shift)`` exactly when possible, else as float."""
    if isinstance(radicand, float) or isinstance(shift, float):
        return sign * (math.sqrt(radicand) + float(shift))
    try:
        r = Fraction(radicand)
        if r < 0:
            raise ValueError("square root of a negative number")
        s, f = _squarefree_split(r.numerator * r.denominator)
        root = Fraction(s, r.denominator)
        if f == 1:
            return QuadraticSurd._raw(sign * (root + shift), Fraction(0), 1)
        return QuadraticSurd._raw(Fraction(sign * shift), sign * root, f)
    except OverflowError:
        return sign * (math.sqrt(float(radicand)) + float(shift))


def is_exact(x) -> bool:
    return isinstance(x, (int, Rational, QuadraticSurd))


def values_equal(a, b, tol: float = FLOAT_TOL) -> bool:
    """Exact equality when both operands are exact, absolute tolerance otherwise."""
    if is_exact(a) and is_exact(b):
        if isinstance(a, QuadraticSurd):
            return a == b
        if isinstance(b, QuadraticSurd):
            return b == a
        return Fraction(a) == Fraction(b)
    fa, fb = float(a), float(b)
    if math.isinf(fa) or math.isinf(fb):
        return fa == fb
    return abs(fa - fb) <= tol


def simplify(x):
    """Collapse a rational surd to a Fraction, keep everything else."""
    if isinstance(x, QuadraticSurd) and x.is_rational():
        return x.rational
    return x


def positive_part(x):
    """(x)_+ = max(x, 0) preserving exactness."""
    if is_exact(x):
        return x if x > 0 else Fraction(0)
    return max(float(x), 0.0)


def divide_or_inf(n: int, x):
    """n / x with n / 0 = +inf; exact when x is rational."""
    if x == 0:
        return math.inf
    if isinstance(x, (int, Rational)):
        return Fraction(n) / Fraction(x)
    if isinstance(x, QuadraticSurd) and x.is_rational():
        return Fraction(n) / x.rational
    return n / float(x)
