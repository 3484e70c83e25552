"""Quotients of S_1 and S_2 by their finite-rank ideals.

``psi1`` is the map S_1 -> S_1/F = K[x, x^-1].  Elements of K + p_i are viewed
as a scalar plus a finite matrix over S_1 (:class:`BlockOverS1`), and their
images modulo F_2 as matrices over the Laurent ring (:class:`LaurentMatrix`).
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

from .algebra import (
    Element1,
    Element2,
    is_f_key,
    matrix_unit1,
    mixed2,
    mixed_key_element,
    mixed_monomial,
)
from .errors import NotInScalarPlusIdeal
from .scalars import K, fmt_scalar, is_negative


class Laurent:
    """A Laurent polynomial in K[x, x^-1], stored as {exponent: coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None, _canonical=False):
        if _canonical:
            self._c = coeffs
            return
        d = {}
        for k, v in (coeffs or {}).items():
            v = K(v)
            if v:
                d[int(k)] = d.get(int(k), 0) + v
                if not d[int(k)]:
                    del d[int(k)]
        self._c = d

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls({k: c})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @property
    def coeffs(self):
        return MappingProxyType(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def topdeg(self) -> int:
        if not self._c:
            raise ValueError("topdeg of the zero Laurent polynomial")
        return max(self._c)

    def botdeg(self) -> int:
        if not self._c:
            raise ValueError("botdeg of the zero Laurent polynomial")
        return min(self._c)

    def size(self) -> int:
        """Euclidean size: width of the support."""
        return self.topdeg() - self.botdeg()

    def is_unit(self) -> bool:
        return len(self._c) == 1

    def lead(self):
        return self._c[self.topdeg()]

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        return Laurent.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self._c)
        for k, v in other._c.items():
            s = d.get(k)
            s = v if s is None else s + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return Laurent(d, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -v for k, v in self._c.items()}, _canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d: Dict[int, object] = {}
        for k, v in self._c.items():
            for l, w in other._c.items():
                s = d.get(k + l)
                s = v * w if s is None else s + v * w
                if s:
                    d[k + l] = s
                else:
                    d.pop(k + l, None)
        return Laurent(d, _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = Laurent.const(1)
        for _ in range(n):
            r = r * self
        return r

    def inverse(self) -> "Laurent":
        if not self.is_unit():
            raise ZeroDivisionError("%s is not a unit of K[x, x^-1]" % self)
        (k, v), = self._c.items()
        return Laurent({-k: 1 / v}, _canonical=True)

    def divmod(self, other: "Laurent"):
        """Euclidean division: self = q*other + r with r = 0 or size(r) < size(other)."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return Laurent(), Laurent()
        s = other.botdeg()
        b = {k - s: v for k, v in other._c.items()}  # polynomial, b[0] != 0
        db = max(b)
        r0 = self.botdeg()
        a = {k - r0: v for k, v in self._c.items()}
        q: Dict[int, object] = {}
        lead = b[db]
        while a and max(a) >= db:
            da = max(a)
            c = a[da] / lead
            q[da - db] = c
            for k, v in b.items():
                key = k + da - db
                val = a.get(key, 0) - c * v
                if val:
                    a[key] = val
                else:
                    a.pop(key, None)
        quot = Laurent({k + r0 - s: v for k, v in q.items()}, _canonical=True)
        rem = Laurent({k + r0: v for k, v in a.items()}, _canonical=True)
        return quot, rem

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._c == other._c
        try:
            return self._c == Laurent.const(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            neg = is_negative(v)
            a = -v if neg else v
            if k == 0:
                body = fmt_scalar(a)
            else:
                mono = "x" if k == 1 else "x^%d" % k
                body = mono if a == 1 else fmt_scalar(a) + "*" + mono
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Laurent(%s)" % self


def psi1(a: Element1) -> Laurent:
    """The quotient map S_1 -> K[x, x^-1]: x -> x, y -> x^-1."""
    d: Dict[int, object] = {}
    for (i, j), c in a.items():
        s = d.get(i - j)
        s = c if s is None else s + c
        if s:
            d[i - j] = s
        else:
            d.pop(i - j, None)
    return Laurent(d, _canonical=True)


def lift_laurent(p: Laurent) -> Element1:
    """Termwise lift K[x, x^-1] -> S_1 with x^m -> x^m, x^-m -> y^m."""
    return Element1({((k, 0) if k >= 0 else (0, -k)): v for k, v in p.coeffs.items()})


class LaurentMatrix:
    """A square matrix over K[x, x^-1], extended by the identity beyond its block."""

    def __init__(self, rows: List[List[Laurent]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("LaurentMatrix must be square")
        self.rows = [[e if isinstance(e, Laurent) else Laurent.const(e) for e in r] for r in rows]

    @property
    def size(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls([[Laurent.const(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        m = cls.identity(n)
        for i, e in enumerate(entries):
            m.rows[i][i] = e if isinstance(e, Laurent) else Laurent.const(e)
        return m

    def padded(self, n) -> "LaurentMatrix":
        if n < self.size:
            raise ValueError("cannot shrink")
        m = LaurentMatrix.identity(n)
        for i, r in enumerate(self.rows):
            for j, e in enumerate(r):
                m.rows[i][j] = e
        return m

    def entry(self, i, j) -> Laurent:
        if i < self.size and j < self.size:
            return self.rows[i][j]
        return Laurent.const(1 if i == j else 0)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = max(self.size, other.size)
        a, b = self.padded(n), other.padded(n)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = Laurent()
                for k in range(n):
                    if a.rows[i][k] and b.rows[k][j]:
                        s = s + a.rows[i][k] * b.rows[k][j]
                row.append(s)
            out.append(row)
        return LaurentMatrix(out)

    def trimmed(self) -> "LaurentMatrix":
        n = self.size
        while n > 0:
            last = n - 1
            if all(self.entry(last, j) == (1 if j == last else 0) for j in range(n)) and \
                    all(self.entry(i, last) == (1 if i == last else 0) for i in range(n)):
                n -= 1
            else:
                break
        return LaurentMatrix([r[:n] for r in self.rows[:n]])

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        n = max(self.size, other.size)
        return all(self.entry(i, j) == other.entry(i, j) for i in range(n) for j in range(n))

    def __str__(self):
        return "[" + "; ".join(", ".join(str(e) for e in r) for r in self.rows) + "]"

    def __repr__(self):
        return "LaurentMatrix(%s)" % self


def triangularize(rows: List[List[Laurent]], record=None):
    """Reduce a square Laurent matrix in place to upper triangular form.

    Uses only row additions ``row_r += q * row_p`` (reported to ``record`` as
    ``(r, p, q)``) plus, when a column has no usable entry on the diagonal, a
    move of the pivot row by two additions.  Returns False if a column is zero.
    """
    n = len(rows)
    for j in range(n):
        while True:
            live = [r for r in range(j, n) if rows[r][j]]
            if not live:
                return False
            # Euclidean pivot: smallest size, first row on ties
            p = min(live, key=lambda r: (rows[r][j].size(), r))
            others = [r for r in live if r != p]
            if not others:
                break
            for r in others:
                q, _ = rows[r][j].divmod(rows[p][j])
                _row_add(rows, r, p, -q, record)
        if p != j:
            # rows[j][j] is zero here: row_j += row_p, then row_p -= row_j
            _row_add(rows, j, p, Laurent.const(1), record)
            _row_add(rows, p, j, Laurent.const(-1), record)
    return True


def _row_add(rows, r, p, q, record):
    if not q:
        return
    rows[r] = [a + q * b if b else a for a, b in zip(rows[r], rows[p])]
    if record is not None:
        record.append((r, p, q))


def laurent_det(m: LaurentMatrix) -> Laurent:
    """Determinant of the explicit block by fraction-free Euclidean elimination."""
    if m.size == 0:
        return Laurent.const(1)
    rows = [list(r) for r in m.rows]
    if not triangularize(rows):
        return Laurent()
    d = Laurent.const(1)
    for i in range(len(rows)):
        d = d * rows[i][i]
    return d


@dataclass(frozen=True)
class BlockOverS1:
    """c*1 + sum_{k,l<N} E_kl(factor) * entries[k][l], entries in the other factor."""

    factor: int
    c: object
    entries: Tuple[Tuple[Element1, ...], ...]

    @property
    def size(self):
        return len(self.entries)

    @classmethod
    def make(cls, factor, c, entries) -> "BlockOverS1":
        n = len(entries)
        rows = tuple(tuple(entries[i][j] if isinstance(entries[i][j], Element1)
                           else Element1.scalar(entries[i][j]) for j in range(n)) for i in range(n))
        return cls(factor, K(c), rows).canonical()

    def canonical(self) -> "BlockOverS1":
        rows = [list(r) for r in self.entries]
        n = len(rows)
        while n > 0 and all(not rows[n - 1][j] for j in range(n)) and \
                all(not rows[i][n - 1] for i in range(n)):
            n -= 1
        rows = tuple(tuple(r[:n]) for r in rows[:n])
        return BlockOverS1(self.factor, self.c, rows)

    def entry(self, i, j) -> Element1:
        if i < self.size and j < self.size:
            return self.entries[i][j]
        return Element1.zero()

    def padded_rows(self, n):
        """Full matrix c*I + entries, padded to size n."""
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                e = self.entry(i, j)
                if i == j:
                    e = e + self.c
                row.append(e)
            out.append(row)
        return out

    def __matmul__(self, other: "BlockOverS1") -> "BlockOverS1":
        if other.factor != self.factor:
            raise ValueError("blocks over different factors")
        n = max(self.size, other.size)
        a, b = self.padded_rows(n), other.padded_rows(n)
        c = self.c * other.c
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = Element1.zero()
                for k in range(n):
                    if a[i][k] and b[k][j]:
                        s = s + a[i][k] * b[k][j]
                if i == j:
                    s = s - c
                row.append(s)
            rows.append(row)
        return BlockOverS1.make(self.factor, c, rows)

    def to_element(self) -> Element2:
        return from_block(self)

    def __str__(self):
        rows = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return "BlockOverS1(factor=%d, c=%s, [%s])" % (self.factor, fmt_scalar(self.c), rows)


def to_block(factor: int, a: Element2) -> BlockOverS1:
    """View an element of K + p_factor as scalar + finite matrix over S_1."""
    if factor not in (1, 2):
        raise ValueError("factor must be 1 or 2")
    c = K(0)
    cells: Dict[Tuple[int, int], Element1] = {}
    for (k1, k2), v in mixed2(a).items():
        key, other = (k1, k2) if factor == 1 else (k2, k1)
        if is_f_key(key):
            cell = (key[1], key[2])
            cells[cell] = cells.get(cell, Element1.zero()) + mixed_key_element(other).scale(v)
        elif key[0] == 0 and other[0] == 0:
            c = v
        else:
            raise NotInScalarPlusIdeal("element is not in K + p%d" % factor)
    n = 1 + max((max(cell) for cell in cells), default=-1)
    rows = [[cells.get((i, j), Element1.zero()) for j in range(n)] for i in range(n)]
    return BlockOverS1.make(factor, c, rows)


def from_block(b: BlockOverS1) -> Element2:
    out = Element2.scalar(b.c)
    for i, row in enumerate(b.entries):
        for j, e in enumerate(row):
            if e:
                eu = matrix_unit1(i, j)
                if b.factor == 1:
                    out = out + Element2.tensor(eu, e)
                else:
                    out = out + Element2.tensor(e, eu)
    return out


def symbol_matrix(b: BlockOverS1) -> LaurentMatrix:
    """psi applied entrywise, plus c on the diagonal.

    The identity-beyond-block convention needs c = 1, so the block is first
    normalized to c^-1 * b (which has the same index).
    """
    if not b.c:
        raise ZeroDivisionError("block has zero scalar part; its symbol is not identity-extended")
    inv = 1 / b.c
    rows = []
    for i, row in enumerate(b.entries):
        out = []
        for j, e in enumerate(row):
            s = psi1(e) * inv
            if i == j:
                s = s + 1
            out.append(s)
        rows.append(out)
    return LaurentMatrix(rows)


def psi_pair(a: Element2) -> Dict[Tuple[int, int], object]:
    """Image in S_2/a_2 = K[x1^+-1] (x) K[x2^+-1], as {(m1, m2): coeff}."""
    d: Dict[Tuple[int, int], object] = {}
    for (a1, a2, b1, b2), c in a.items():
        key = (a1 - b1, a2 - b2)
        s = d.get(key)
        s = c if s is None else s + c
        if s:
            d[key] = s
        else:
            d.pop(key, None)
    return d


__all__ = [
    "Laurent", "LaurentMatrix", "BlockOverS1", "psi1", "lift_laurent", "to_block",
    "from_block", "symbol_matrix", "laurent_det", "triangularize", "psi_pair",
    "mixed_monomial",
]
