"""Normal-form arithmetic in S_1 = K<x, y | yx = 1> and S_2 = S_1 (x) S_1.

Elements are sparse maps from monomials to scalars.  A monomial of S_1 is a
pair ``(i, j)`` standing for ``x^i y^j``; a monomial of S_2 is a 4-tuple
``(a1, a2, b1, b2)`` standing for ``x1^a1 x2^a2 y1^b1 y2^b2``.  Products are
computed factor-wise with the closed rule

    (x^a y^b)(x^c y^d) = x^(a+c-t) y^(b+d-t),   t = min(b, c),

which is what ``yx = 1`` forces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .errors import AlgebraError
from .scalars import K, fmt_scalar, is_negative

Monomial1 = Tuple[int, int]
Monomial2 = Tuple[int, int, int, int]

IDEALS = ("F2", "p1", "p2", "a2")


def _mul1(p, q):
    a, b = p
    c, d = q
    t = b if b < c else c
    return (a + c - t, b + d - t)


def _mul2(p, q):
    a1, a2, b1, b2 = p
    c1, c2, d1, d2 = q
    t1 = b1 if b1 < c1 else c1
    t2 = b2 if b2 < c2 else c2
    return (a1 + c1 - t1, a2 + c2 - t2, b1 + d1 - t1, b2 + d2 - t2)


class _Element:
    """Shared implementation; see :class:`Element1` and :class:`Element2`."""

    __slots__ = ("_terms", "_hash")
    nfactors = 0
    _mono_mul = None

    def __init__(self, terms: Mapping | None = None, _canonical=False):
        if _canonical:
            self._terms = terms
        else:
            d = {}
            if terms:
                width = 2 * self.nfactors
                for m, c in terms.items():
                    m = tuple(int(e) for e in m)
                    if len(m) != width or min(m) < 0:
                        raise ValueError("bad monomial %r" % (m,))
                    c = K(c)
                    if c:
                        s = d.get(m)
                        s = c if s is None else s + c
                        if s:
                            d[m] = s
                        else:
                            d.pop(m, None)
            self._terms = d
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls):
        return cls({}, _canonical=True)

    @classmethod
    def one(cls):
        return cls.scalar(1)

    @classmethod
    def scalar(cls, c):
        c = K(c)
        if not c:
            return cls.zero()
        return cls({(0,) * (2 * cls.nfactors): c}, _canonical=True)

    @classmethod
    def monomial(cls, m, c=1):
        return cls({tuple(m): c})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _Element):
            return NotImplemented
        try:
            return type(self).scalar(other)
        except TypeError:
            return NotImplemented

    # mapping protocol

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m):
        return self._terms.get(tuple(m), K(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def scalar_part(self):
        return self.coefficient((0,) * (2 * self.nfactors))

    def is_scalar(self):
        return all(not any(m) for m in self._terms)

    def max_exponent(self):
        return max((max(m) for m in self._terms), default=0)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m)
            if s is None:
                d[m] = c
            else:
                s = s + c
                if s:
                    d[m] = s
                else:
                    del d[m]
        return type(self)(d, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({m: -c for m, c in self._terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        c = K(c)
        if not c:
            return type(self).zero()
        return type(self)({m: v * c for m, v in self._terms.items()}, _canonical=True)

    def __truediv__(self, c):
        if isinstance(c, _Element):
            return NotImplemented
        return self.scale(1 / K(c))

    def __mul__(self, other):
        if not isinstance(other, _Element):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if type(other) is not type(self):
            return NotImplemented
        mm = type(self)._mono_mul
        d: Dict = {}
        for p, c in self._terms.items():
            for q, e in other._terms.items():
                r = mm(p, q)
                v = c * e
                s = d.get(r)
                if s is None:
                    d[r] = v
                else:
                    s = s + v
                    if s:
                        d[r] = s
                    else:
                        del d[r]
        return type(self)(d, _canonical=True)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, _Element):
            return type(other) is type(self) and self._terms == other._terms
        try:
            return self._terms == type(self).scalar(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __str__(self):
        return format_terms(self.sorted_terms(), self._mono_text)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, str(self))


def format_terms(items, mono_text) -> str:
    """Join ``(monomial, coeff)`` pairs as ``a + b - c``."""
    if not items:
        return "0"
    parts = []
    for m, c in items:
        neg = is_negative(c)
        a = -c if neg else c
        mt = mono_text(m)
        if not mt:
            body = fmt_scalar(a)
        elif a == 1:
            body = mt
        else:
            body = fmt_scalar(a) + "*" + mt
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _pow_text(name, e):
    if e == 0:
        return None
    return name if e == 1 else "%s^%d" % (name, e)


class Element1(_Element):
    """An element of S_1 in the basis x^i y^j."""

    __slots__ = ()
    nfactors = 1
    _mono_mul = staticmethod(_mul1)

    @staticmethod
    def _mono_text(m):
        return "*".join(p for p in (_pow_text("x", m[0]), _pow_text("y", m[1])) if p)

    @classmethod
    def x(cls, n=1):
        return cls({(n, 0): 1})

    @classmethod
    def y(cls, n=1):
        return cls({(0, n): 1})

    @classmethod
    def xy(cls, i, j, c=1):
        return cls({(i, j): c})


class Element2(_Element):
    """An element of S_2 in the basis x1^a1 x2^a2 y1^b1 y2^b2."""

    __slots__ = ()
    nfactors = 2
    _mono_mul = staticmethod(_mul2)

    @staticmethod
    def _mono_text(m):
        names = ("x1", "x2", "y1", "y2")
        return "*".join(p for p in (_pow_text(n, e) for n, e in zip(names, m)) if p)

    @classmethod
    def gen(cls, name: str):
        idx = {"x1": 0, "x2": 1, "y1": 2, "y2": 3}[name]
        m = [0, 0, 0, 0]
        m[idx] = 1
        return cls({tuple(m): 1})

    @classmethod
    def tensor(cls, a: Element1, b: Element1):
        """The element a(1) * b(2)."""
        d = {}
        for (i1, j1), c in a.items():
            for (i2, j2), e in b.items():
                d[(i1, i2, j1, j2)] = c * e
        return cls(d, _canonical=True)

    @classmethod
    def embed(cls, a: Element1, factor: int):
        """``a`` as an element of the tensor factor S_1(factor)."""
        if factor == 1:
            return cls({(i, 0, j, 0): c for (i, j), c in a.items()}, _canonical=True)
        if factor == 2:
            return cls({(0, i, 0, j): c for (i, j), c in a.items()}, _canonical=True)
        raise ValueError("factor must be 1 or 2")

    def factors_used(self):
        """Set of tensor factors whose generators occur in the element."""
        used = set()
        for a1, a2, b1, b2 in self._terms:
            if a1 or b1:
                used.add(1)
            if a2 or b2:
                used.add(2)
        return used

    def restrict(self, factor: int) -> Element1:
        """Inverse of :meth:`embed`; raises if the other factor occurs."""
        other = 3 - factor
        if other in self.factors_used():
            raise AlgebraError("element involves factor %d" % other)
        if factor == 1:
            return Element1({(a1, b1): c for (a1, _, b1, _), c in self.items()}, _canonical=True)
        return Element1({(a2, b2): c for (_, a2, _, b2), c in self.items()}, _canonical=True)


# named elements of S_1 and S_2

def matrix_unit1(i: int, j: int) -> Element1:
    """E_ij = x^i y^j - x^(i+1) y^(j+1)."""
    return Element1({(i, j): 1, (i + 1, j + 1): -1})


def matrix_unit_factor(factor: int, i: int, j: int) -> Element2:
    """E_ij(factor) inside S_2."""
    return Element2.embed(matrix_unit1(i, j), factor)


def matrix_unit2(alpha, beta) -> Element2:
    """E_{alpha beta} = E_{alpha1 beta1}(1) E_{alpha2 beta2}(2)."""
    return Element2.tensor(matrix_unit1(alpha[0], beta[0]), matrix_unit1(alpha[1], beta[1]))


def x1():
    return Element2.gen("x1")


def x2():
    return Element2.gen("x2")


def y1():
    return Element2.gen("y1")


def y2():
    return Element2.gen("y2")


def theta() -> Element2:
    """(1 + (y1 - 1) E_00(2)) (1 + E_00(1) (x2 - 1))."""
    one = Element2.one()
    left = one + (y1() - 1) * matrix_unit_factor(2, 0, 0)
    right = one + matrix_unit_factor(1, 0, 0) * (x2() - 1)
    return left * right


def theta_inverse() -> Element2:
    """(1 + E_00(1) (y2 - 1)) (1 + (x1 - 1) E_00(2))."""
    one = Element2.one()
    left = one + matrix_unit_factor(1, 0, 0) * (y2() - 1)
    right = one + (x1() - 1) * matrix_unit_factor(2, 0, 0)
    return left * right


def theta_power(n: int) -> Element2:
    if n >= 0:
        return theta() ** n
    return theta_inverse() ** (-n)


# the decomposition S_1 = K + xK[x] + yK[y] + F

@dataclass(frozen=True)
class Decomp1:
    c: object = 0
    xpart: Mapping[int, object] = field(default_factory=dict)
    ypart: Mapping[int, object] = field(default_factory=dict)
    fpart: Mapping[Tuple[int, int], object] = field(default_factory=dict)

    def reassemble(self) -> Element1:
        a = Element1.scalar(self.c)
        a = a + Element1({(i, 0): c for i, c in self.xpart.items()})
        a = a + Element1({(0, j): c for j, c in self.ypart.items()})
        for (i, j), c in self.fpart.items():
            a = a + matrix_unit1(i, j).scale(c)
        return a


# Keys of the "mixed" basis {1, x^i, y^j, E_ij} of S_1.
ONE = (0,)


def is_f_key(key) -> bool:
    return key[0] == 3


@lru_cache(maxsize=None)
def mixed_monomial(i: int, j: int):
    """x^i y^j in the basis 1, x^i (i>0), y^j (j>0), E_ij, as ((key, coeff), ...)."""
    if i == 0 and j == 0:
        return ((ONE, 1),)
    if j == 0:
        return (((1, i), 1),)
    if i == 0:
        return (((2, j), 1),)
    if i >= j:
        head = ONE if i == j else (1, i - j)
        return ((head, 1),) + tuple(((3, i - j + k, k), -1) for k in range(j))
    return (((2, j - i), 1),) + tuple(((3, k, j - i + k), -1) for k in range(i))


def mixed_key_element(key) -> Element1:
    tag = key[0]
    if tag == 0:
        return Element1.one()
    if tag == 1:
        return Element1.x(key[1])
    if tag == 2:
        return Element1.y(key[1])
    return matrix_unit1(key[1], key[2])


def _accumulate(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def mixed1(a: Element1) -> dict:
    d: dict = {}
    for (i, j), c in a.items():
        for key, e in mixed_monomial(i, j):
            _accumulate(d, key, c * e)
    return d


def mixed2(a: Element2) -> dict:
    """``a`` in the tensor basis of mixed keys: {(key1, key2): coeff}."""
    d: dict = {}
    for (a1, a2, b1, b2), c in a.items():
        m1 = mixed_monomial(a1, b1)
        m2 = mixed_monomial(a2, b2)
        for k1, e1 in m1:
            for k2, e2 in m2:
                _accumulate(d, (k1, k2), c * (e1 * e2))
    return d


def from_mixed2(d: Mapping) -> Element2:
    out = Element2.zero()
    for (k1, k2), c in d.items():
        out = out + Element2.tensor(mixed_key_element(k1), mixed_key_element(k2)).scale(c)
    return out


def decompose1(a: Element1) -> Decomp1:
    c = K(0)
    xs, ys, fs = {}, {}, {}
    for key, v in mixed1(a).items():
        tag = key[0]
        if tag == 0:
            c = v
        elif tag == 1:
            xs[key[1]] = v
        elif tag == 2:
            ys[key[1]] = v
        else:
            fs[(key[1], key[2])] = v
    return Decomp1(c, xs, ys, fs)


def in_F(a: Element1) -> bool:
    return all(is_f_key(k) for k in mixed1(a))


def membership(a: Element2, ideal: str) -> bool:
    """Membership of ``a`` in one of the ideals F2, p1, p2, a2 of S_2."""
    if ideal not in IDEALS:
        raise ValueError("ideal must be one of %s" % (IDEALS,))
    d = mixed2(a)
    if ideal == "p1":
        return all(is_f_key(k1) for k1, _ in d)
    if ideal == "p2":
        return all(is_f_key(k2) for _, k2 in d)
    if ideal == "F2":
        return all(is_f_key(k1) and is_f_key(k2) for k1, k2 in d)
    return all(is_f_key(k1) or is_f_key(k2) for k1, k2 in d)


def k_component(a):
    """The K-summand of ``a`` in the decomposition K + (x, y parts) + F, factor-wise."""
    if isinstance(a, Element1):
        return mixed1(a).get(ONE, K(0))
    return mixed2(a).get((ONE, ONE), K(0))


def in_scalar_plus(a: Element2, ideal: str) -> bool:
    return membership(a - k_component(a), ideal)


def f2_coefficients(a: Element2) -> dict:
    """The coefficients c_{alpha beta} of an element of F_2 = sum K E_{alpha beta}."""
    out = {}
    for (k1, k2), c in mixed2(a).items():
        if not (is_f_key(k1) and is_f_key(k2)):
            raise AlgebraError("element is not in F_2")
        out[((k1[1], k2[1]), (k1[2], k2[2]))] = c
    return out


def from_f2_coefficients(coeffs: Mapping) -> Element2:
    out = Element2.zero()
    for (alpha, beta), c in coeffs.items():
        out = out + matrix_unit2(alpha, beta).scale(c)
    return out


def eta(a):
    """The involution x_i <-> y_i; an anti-automorphism of S_1 and S_2."""
    if isinstance(a, Element1):
        return Element1({(j, i): c for (i, j), c in a.items()}, _canonical=True)
    return Element2({(b1, b2, a1, a2): c for (a1, a2, b1, b2), c in a.items()}, _canonical=True)


def swap_factors(a: Element2) -> Element2:
    return Element2({(a2, a1, b2, b1): c for (a1, a2, b1, b2), c in a.items()}, _canonical=True)

