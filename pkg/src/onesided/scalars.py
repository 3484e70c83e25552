"""Exact ground fields.

Two backends: the rationals (``QQ``, backed by :class:`fractions.Fraction`)
and prime fields ``GF(p)``.  The active field lives in a context variable so
that every constructor in the package coerces its coefficients the same way.
"""

from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from numbers import Rational


class Fp:
    """Element of the prime field GF(p), stored as the least nonnegative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing GF(%d) and GF(%d)" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp(self.v + other.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp(self.v - other.v, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp(other.v - self.v, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fp(self.v * other.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(other.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Fp(pow(pow(self.v, -1, self.p), -n, self.p), self.p)
        return Fp(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return self.v == o.v
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return "Fp(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class RationalField:
    name = "rational"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, Fp):
            raise TypeError("cannot coerce a GF(p) element into QQ")
        raise TypeError("not an exact scalar: %r" % (x,))

    @property
    def characteristic(self):
        return 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("GF(p) needs an odd prime, got %d" % p)
        self.p = p
        self.name = "fp:%d" % p

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError("element of GF(%d) in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("%s is not defined in GF(%d)" % (x, self.p))
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        raise TypeError("not an exact scalar: %r" % (x,))

    @property
    def characteristic(self):
        return self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_field: contextvars.ContextVar = contextvars.ContextVar("onesided_field", default=QQ)


def get_field():
    return _field.get()


@contextlib.contextmanager
def use_field(field):
    """Run a block with ``field`` as the ground field."""
    token = _field.set(field)
    try:
        yield field
    finally:
        _field.reset(token)


def parse_field(text: str):
    """Parse ``rational`` or ``fp:<p>``."""
    if text in ("rational", "QQ", "qq"):
        return QQ
    if text.startswith("fp:"):
        return GF(int(text[3:]))
    raise ValueError("unknown field %r (expected 'rational' or 'fp:<p>')" % text)


def K(x):
    """Coerce ``x`` into the active field."""
    return _field.get()(x)


def fmt_scalar(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def is_negative(c) -> bool:
    return isinstance(c, Fraction) and c < 0
