"""Units of S_2: invertibility, determinants and constructive factorizations.

Every factorization returns a word of explicit group letters that multiplies
back to its input exactly; the tests check that round trip everywhere.

Letters (``i`` is the tensor factor carrying the matrix units, the
coefficients live in the other factor ``i + 1``):

* ``Elementary(i, k, l, a)`` = 1 + E_kl(i) a,  k != l
* ``MuU(i, lam)``            = lam E_00(i) + 1 - E_00(i)
* ``MuUprime(lam)``          = lam E_{00,00} + 1 - E_{00,00}
* ``ThetaPow(n)``            = theta^n
* ``BlockF2(e)``             = an explicit unit of 1 + F_2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    Element1,
    Element2,
    f2_coefficients,
    from_f2_coefficients,
    matrix_unit1,
    matrix_unit2,
    membership,
    theta_power,
)
from .errors import (
    IndexNotZero,
    LambdaMinusOne,
    NonzeroDegree,
    NotInOnePlusA2,
    NotInOnePlusF2,
    NotInOnePlusP,
    NotInvertibleOverL,
    NotUnit,
    SymbolNotUnit,
)
from .action import Window, act, make_iso_correction
from .index import index_of_part, split_parts
from .linalg import determinant, solve_dense
from .quotient import (
    BlockOverS1,
    Laurent,
    LaurentMatrix,
    laurent_det,
    lift_laurent,
    psi_pair,
    symbol_matrix,
    to_block,
    triangularize,
)
from .scalars import K, fmt_scalar


# letters

def _other(i):
    return 3 - i


def _placed(eu: Element1, coeff: Element1, factor: int) -> Element2:
    """eu in tensor factor ``factor``, coeff in the other one."""
    if factor == 1:
        return Element2.tensor(eu, coeff)
    return Element2.tensor(coeff, eu)


@dataclass(frozen=True)
class Elementary:
    factor: int
    row: int
    col: int
    coeff: Element1

    def __post_init__(self):
        if self.row == self.col:
            raise ValueError("elementary letters need row != col")

    def element(self) -> Element2:
        return 1 + _placed(matrix_unit1(self.row, self.col), self.coeff, self.factor)

    def inverse(self):
        return Elementary(self.factor, self.row, self.col, -self.coeff)

    def text(self):
        return "E %d %d %d %s" % (self.factor, self.row, self.col,
                                  Element2.embed(self.coeff, _other(self.factor)))


@dataclass(frozen=True)
class MuU:
    factor: int
    lam: object

    def element(self) -> Element2:
        e = Element2.embed(matrix_unit1(0, 0), self.factor)
        return e.scale(self.lam) + 1 - e

    def inverse(self):
        return MuU(self.factor, 1 / K(self.lam))

    def text(self):
        return "MU %d %s" % (self.factor, fmt_scalar(self.lam))


@dataclass(frozen=True)
class MuUprime:
    lam: object

    def element(self) -> Element2:
        e = matrix_unit2((0, 0), (0, 0))
        return e.scale(self.lam) + 1 - e

    def inverse(self):
        return MuUprime(1 / K(self.lam))

    def text(self):
        return "MUP %s" % fmt_scalar(self.lam)


@dataclass(frozen=True)
class ThetaPow:
    n: int

    def element(self) -> Element2:
        return theta_power(self.n)

    def inverse(self):
        return ThetaPow(-self.n)

    def text(self):
        return "THETA %d" % self.n


@dataclass(frozen=True)
class BlockF2:
    e: Element2

    def element(self) -> Element2:
        return self.e

    def inverse(self):
        return BlockF2(invert_1F2(self.e))

    def text(self):
        return "F2 %s" % self.e


@dataclass(frozen=True)
class GroupWord:
    letters: Tuple = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(tuple(self.letters) + tuple(other.letters))

    def multiply_out(self) -> Element2:
        out = Element2.one()
        for letter in self.letters:
            out = out * letter.element()
        return out

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(l.inverse() for l in reversed(self.letters)))

    def expanded(self, target_factor: int) -> "GroupWord":
        """Replace every BlockF2 letter by elementary letters over S_1(target_factor)."""
        out = []
        for letter in self.letters:
            if isinstance(letter, BlockF2):
                out.extend(factor_1F2_into_elementaries(letter.e, target_factor).letters)
            else:
                out.append(letter)
        return GroupWord(tuple(out))

    def text(self) -> str:
        return "\n".join(l.text() for l in self.letters)

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        from .parser import parse_letter

        return cls(tuple(parse_letter(line) for line in text.splitlines()
                         if line.strip() and not line.lstrip().startswith("#")))


def word(*letters) -> GroupWord:
    return GroupWord(tuple(letters))


# 1 + F_2

def _f2_block(e: Element2):
    if not membership(e - 1, "F2"):
        raise NotInOnePlusF2("e - 1 is not in F_2")
    coeffs = f2_coefficients(e - 1)
    idx = sorted({a for a, _ in coeffs} | {b for _, b in coeffs})
    return idx, coeffs


def _dense(idx, coeffs):
    pos = {a: n for n, a in enumerate(idx)}
    m = [[K(1) if r == c else K(0) for c in range(len(idx))] for r in range(len(idx))]
    for (a, b), v in coeffs.items():
        m[pos[a]][pos[b]] += v
    return m


def is_unit_1F2(e: Element2) -> bool:
    idx, coeffs = _f2_block(e)
    m = _dense(idx, coeffs)
    return bool(determinant({r: dict(enumerate(row)) for r, row in enumerate(m)}, range(len(m))))


def invert_1F2(e: Element2) -> Element2:
    idx, coeffs = _f2_block(e)
    m = _dense(idx, coeffs)
    try:
        inv = solve_dense(m)
    except ZeroDivisionError:
        raise NotUnit("the finite block of %s is singular" % e) from None
    out = {}
    for r, a in enumerate(idx):
        for c, b in enumerate(idx):
            v = inv[r][c] - (1 if r == c else 0)
            if v:
                out[(a, b)] = v
    return 1 + from_f2_coefficients(out)


def det_block(e: Element2):
    """Determinant of a unit of 1 + F_2 (that of its finite affected block)."""
    idx, coeffs = _f2_block(e)
    m = _dense(idx, coeffs)
    d = determinant({r: dict(enumerate(row)) for r, row in enumerate(m)}, range(len(m)))
    if not d:
        raise NotUnit("block determinant is 0")
    return d


def in_SL(e: Element2) -> bool:
    return det_block(e) == 1


def cubic_filtration(offset: int = 0, step: int = 1, count: int = 64):
    """The cubic filtration C_offset, C_(offset+step), ... of P_2."""
    return [Window("cube", offset + n * step) for n in range(count)]


def det_filtration(e: Element2, filtration: Iterable[Window], agree: int = 3):
    """Determinant of e restricted to the filtration pieces, once it stabilizes."""
    _f2_block(e)
    last = []
    for w in filtration:
        mons = w.monomials()
        rows = {}
        preserved = True
        for beta in mons:
            img = act(e, beta)
            if any(g not in w for g in img):
                preserved = False
                break
            for g, v in img.items():
                rows.setdefault(g, {})[beta] = v
        if not preserved:
            last = []
            continue
        last.append(determinant(rows, mons))
        if len(last) >= agree and len(set(last[-agree:])) == 1:
            if not last[-1]:
                raise NotUnit("restricted determinant is 0")
            return last[-1]
    raise NotUnit("filtration determinant did not stabilize")


# det-bar on (1 + p_i)^*

def _as_block(u, factor: Optional[int]) -> BlockOverS1:
    if isinstance(u, BlockOverS1):
        return u
    if factor is None:
        raise ValueError("factor is required for an Element2 argument")
    if not membership(u - 1, "p%d" % factor):
        raise NotInOnePlusP("u - 1 is not in p_%d" % factor)
    return to_block(factor, u)


def detbar(u, factor: Optional[int] = None):
    """det(psi(u)) for u in 1 + p_i; it must be a degree-0 unit lam of L."""
    b = _as_block(u, factor)
    if b.c != 1:
        raise NotInOnePlusP("block scalar part is %s, not 1" % fmt_scalar(b.c))
    d = laurent_det(symbol_matrix(b))
    if not d or not d.is_unit():
        raise SymbolNotUnit("symbol determinant %s is not a unit of K[x, x^-1]" % d)
    k = d.topdeg()
    if k:
        raise NonzeroDegree(k)
    return d.coeffs[0]


# elimination over L = K[x, x^-1]

def _whitehead(a: int, b: int, u):
    """diag(u at a, u^-1 at b) as four elementary letters (a, b, coeff)."""
    inv = 1 / u if not isinstance(u, Laurent) else u.inverse()
    return [(b, a, inv - 1), (a, b, 1 + 0 * u), (b, a, u - 1), (a, b, -inv)]


def _conj_by_mu(letters, delta):
    """Rewrite X * mu(delta) as mu(delta) * X' for a list of (r, c, q) letters."""
    inv = 1 / delta if not isinstance(delta, Laurent) else delta.inverse()
    out = []
    for r, c, q in letters:
        if r == 0:
            q = q * inv
        elif c == 0:
            q = q * delta
        out.append((r, c, q))
    return out


def factor_gl_laurent(m: LaurentMatrix):
    """m = mu(lam x^k) * (product of 1 + q E_rc); returns (lam, k, [(r, c, q), ...])."""
    n = m.size
    rows = [list(r) for r in m.rows]
    record: List = []
    if n and not triangularize(rows, record):
        raise NotInvertibleOverL("matrix is singular")
    for j in range(n):
        if not rows[j][j].is_unit():
            raise NotInvertibleOverL("determinant is not a unit of K[x, x^-1]")
    for j in reversed(range(n)):
        dinv = rows[j][j].inverse()
        for r in range(j):
            if rows[r][j]:
                q = -(rows[r][j] * dinv)
                rows[r] = [a + q * b if b else a for a, b in zip(rows[r], rows[j])]
                record.append((r, j, q))
    diag = [rows[j][j] for j in range(n)]
    delta = Laurent.const(1)
    for d in diag:
        delta = delta * d
    undo = [(r, p, -q) for r, p, q in record]
    tail = []
    for k in range(1, n):
        if diag[k] != 1:
            tail.extend(_whitehead(0, k, diag[k].inverse()))
    letters = [(r, c, q) for r, c, q in _conj_by_mu(undo, delta) + tail if q]
    (k, lam), = delta.coeffs.items()
    return lam, k, letters


def laurent_word_matrix(lam, k, letters, n=None) -> LaurentMatrix:
    size = max([n or 0, 1] + [max(r, c) + 1 for r, c, _ in letters])
    out = LaurentMatrix.identity(size)
    out.rows[0][0] = Laurent.monomial(k, lam)
    for r, c, q in letters:
        e = LaurentMatrix.identity(size)
        e.rows[r][c] = q
        out = out @ e
    return out.trimmed()


# (1 + p_i)^* = U_i(K) x| E_oo(S_1(i+1))

def factor_unit_1p(i: int, u: Element2, expand: bool = False):
    """u = mu(lam) * word; returns (lam, word)."""
    if not membership(u - 1, "p%d" % i):
        raise NotInOnePlusP("u - 1 is not in p_%d" % i)
    b = to_block(i, u)
    try:
        lam = detbar(b)
    except NonzeroDegree as exc:
        raise NotUnit("u has index %d" % exc.index, index=exc.index) from None
    except SymbolNotUnit as exc:
        d = laurent_det(symbol_matrix(b))
        raise NotUnit(str(exc), index=(-d.topdeg() if d else None)) from None
    lam_, k, lw = factor_gl_laurent(symbol_matrix(b))
    assert k == 0 and lam_ == lam
    letters = [Elementary(i, r, c, lift_laurent(q)) for r, c, q in lw]
    lifted = GroupWord(tuple(letters))
    v_inv = lifted.inverse().multiply_out() * MuU(i, 1 / lam).element()
    w = v_inv * u
    if w != 1:
        if not is_unit_1F2(w):
            raise NotUnit("residual block in 1 + F_2 is singular", index=0)
        tail = factor_1F2_into_elementaries(w, _other(i)) if expand else word(BlockF2(w))
        lifted = lifted + tail
    return lam, lifted


# (1 + F_2)^* inside E_oo(S_1(j))

def commutator_word(g, h) -> GroupWord:
    return word(g, h, g.inverse(), h.inverse())


def comEi_word(i_idx: int, k: int, l: int, lam, aux: Optional[int] = None,
               matrix_factor: int = 1) -> GroupWord:
    """[1 + E_{i,aux} E_kk, 1 + lam E_{aux,i} E_kl] = 1 + lam E_ii E_kl, with k != l."""
    if k == l:
        raise ValueError("need k != l")
    if aux is None:
        aux = i_idx + 1
    if aux == i_idx:
        raise ValueError("auxiliary index must differ from i")
    g = Elementary(matrix_factor, i_idx, aux, matrix_unit1(k, k))
    h = Elementary(matrix_factor, aux, i_idx, matrix_unit1(k, l).scale(lam))
    return commutator_word(g, h)


def comEi1_letters(lam, matrix_factor: int = 1) -> GroupWord:
    """The five elementary factors on the left-hand side of the 2x2 identity

        e21(-y/(1+lam)) e12(lam x) e21(y) e12(-lam x) e12(lam^2 x/(1+lam))
          = diag(1+lam, 1/(1+lam)) * diag(1 - lam E_00/(1+lam), 1)

    with entries in the coefficient factor (x, y its generators).
    """
    lam = K(lam)
    if lam == -1:
        raise LambdaMinusOne("the identity needs lam != -1")
    x, y = Element1.x(), Element1.y()
    s = 1 / (1 + lam)
    f = matrix_factor
    return word(
        Elementary(f, 1, 0, y.scale(-s)),
        Elementary(f, 0, 1, x.scale(lam)),
        Elementary(f, 1, 0, y),
        Elementary(f, 0, 1, x.scale(-lam)),
        Elementary(f, 0, 1, x.scale(lam * lam * s)),
    )


def comEi1_rhs(lam, matrix_factor: int = 1) -> Element2:
    """diag(1+lam, 1/(1+lam)) * diag(1 - lam E_00/(1+lam), 1) as an element."""
    lam = K(lam)
    s = 1 / (1 + lam)
    e00 = matrix_unit1(0, 0)
    d = 1 + _placed(e00, Element1.scalar(lam), matrix_factor) \
        + _placed(matrix_unit1(1, 1), Element1.scalar(s - 1), matrix_factor)
    c = 1 + _placed(e00, e00.scale(-lam * s), matrix_factor)
    return d * c


def _scalar_whitehead_letters(f: int, u) -> List[Elementary]:
    return [Elementary(f, r, c, Element1.scalar(q)) for r, c, q in _whitehead(0, 1, u)]


def mu_prime_word(nu, matrix_factor: int = 1) -> GroupWord:
    """mu'(nu) as elementary letters over the coefficient factor."""
    nu = K(nu)
    if not nu:
        raise NotUnit("mu'(0) is not a unit")
    if nu == 1:
        return GroupWord()
    lam = (1 - nu) / nu              # 1/(1+lam) = nu
    # mu'(nu) = diag(nu, 1/nu) * (five-letter product)
    return GroupWord(tuple(_scalar_whitehead_letters(matrix_factor, nu))) + \
        comEi1_letters(lam, matrix_factor)


def _transvection_word(alpha, beta, q, target_factor: int) -> GroupWord:
    """1 + q E_{alpha beta} (alpha != beta) over E_oo(S_1(target_factor))."""
    f = _other(target_factor)
    ai, bi = alpha[f - 1], beta[f - 1]
    aj, bj = alpha[target_factor - 1], beta[target_factor - 1]
    if ai != bi:
        return word(Elementary(f, ai, bi, matrix_unit1(aj, bj).scale(q)))
    return comEi_word(ai, aj, bj, q, matrix_factor=f)


def factor_1F2_into_elementaries(e: Element2, target_factor: int) -> GroupWord:
    """Write a unit of 1 + F_2 as elementary letters 1 + a E_kl(i) with a in S_1(target)."""
    idx, coeffs = _f2_block(e)
    if (0, 0) not in idx:
        idx = sorted(idx + [(0, 0)])
    a = _dense(idx, coeffs)
    n = len(idx)
    record = []

    def add(r, p, q):
        a[r] = [x + q * y for x, y in zip(a[r], a[p])]
        record.append((r, p, q))

    for c in range(n):
        if not a[c][c]:
            p = next((r for r in range(c + 1, n) if a[r][c]), None)
            if p is None:
                raise NotUnit("finite block is singular")
            add(c, p, K(1))
        for r in range(n):
            if r != c and a[r][c]:
                add(r, c, -a[r][c] / a[c][c])
    diag = [a[r][r] for r in range(n)]
    z = idx.index((0, 0))
    delta = K(1)
    for d in diag:
        delta = delta * d
    undo = [(r, p, -q) for r, p, q in record]
    # diag = mu'(delta) * prod_{k != z} diag(d_k^-1 at z, d_k at k)
    tail = []
    for k in range(n):
        if k != z and diag[k] != 1:
            tail.extend(_whitehead(z, k, 1 / diag[k]))
    conj = []
    inv = 1 / delta
    for r, p, q in undo:
        if r == z:
            q = q * inv
        elif p == z:
            q = q * delta
        conj.append((r, p, q))
    out = mu_prime_word(delta, _other(target_factor))
    for r, p, q in conj + tail:
        if q:
            out = out + _transvection_word(idx[r], idx[p], q, target_factor)
    return out


# (1 + a_2)^* = Theta x| K,  K = (1 + p_1)^* [x] (1 + p_2)^*

def split_theta(u: Element2):
    """u = theta^n * k with n = ind_2(u) and ind_1(k) = ind_2(k) = 0."""
    a1, a2 = split_parts(u)
    i1, i2 = index_of_part(1, a1), index_of_part(2, a2)
    if i1 + i2:
        raise NotUnit("ind_1 + ind_2 = %d != 0" % (i1 + i2), index=i1 + i2)
    k = theta_power(-i2) * u
    return i2, k


@dataclass
class BoxtimesSplit:
    u1: Element2
    u2: Element2
    lam1: object
    word1: GroupWord
    lam2: object
    word2: GroupWord


def _split_boxtimes(k: Element2, expand: bool = False) -> BoxtimesSplit:
    a1, a2 = split_parts(k)
    i1, i2 = index_of_part(1, a1), index_of_part(2, a2)
    if i1 or i2:
        raise IndexNotZero("ind_1 = %d, ind_2 = %d" % (i1, i2))
    part = 1 + a1
    f1 = make_iso_correction(part)
    u1 = part + f1
    lam1, w1 = factor_unit_1p(1, u1, expand=expand)
    u1_inv = w1.inverse().multiply_out() * MuU(1, 1 / lam1).element()
    u2 = u1_inv * k
    if not membership(u2 - 1, "p2"):
        raise NotUnit("u1^-1 k is not in 1 + p_2")
    lam2, w2 = factor_unit_1p(2, u2, expand=expand)
    if u1 * u2 != k:
        raise AssertionError("boxtimes split does not multiply back")
    return BoxtimesSplit(u1, u2, lam1, w1, lam2, w2)


def split_boxtimes(k: Element2):
    """k = u1 * u2 with u_i in (1 + p_i)^*, unique up to a (1 + F_2)^* factor."""
    s = _split_boxtimes(k)
    return s.u1, s.u2


@dataclass
class FactorizationCertificate:
    scalar: object
    theta_power: int
    word1: GroupWord
    word2: GroupWord
    detbars: Tuple[object, object] = field(default=(1, 1))

    def multiply_out(self) -> Element2:
        return (theta_power(self.theta_power) * self.word1.multiply_out()
                * self.word2.multiply_out()).scale(self.scalar)

    def inverse_element(self) -> Element2:
        return (self.word2.inverse().multiply_out() * self.word1.inverse().multiply_out()
                * theta_power(-self.theta_power)).scale(1 / self.scalar)

    def text(self) -> str:
        lines = ["scalar %s" % fmt_scalar(self.scalar), "theta %d" % self.theta_power,
                 "detbars %s %s" % tuple(fmt_scalar(d) for d in self.detbars), "word1"]
        lines += ["  " + l.text() for l in self.word1]
        lines.append("word2")
        lines += ["  " + l.text() for l in self.word2]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "scalar": fmt_scalar(self.scalar),
            "thetaPower": self.theta_power,
            "detbars": [fmt_scalar(d) for d in self.detbars],
            "word1": [l.text() for l in self.word1],
            "word2": [l.text() for l in self.word2],
        }


def full_factor_unit(u: Element2, expand: bool = False) -> FactorizationCertificate:
    """u = c * theta^n * mu(l1) w1 * mu(l2) w2, or NotUnit."""
    img = psi_pair(u)
    if set(img) != {(0, 0)}:
        raise NotUnit("image in S_2/a_2 is not a nonzero constant")
    c = img[(0, 0)]
    u0 = u / c
    try:
        n, k = split_theta(u0)
        s = _split_boxtimes(k, expand=expand)
    except (IndexNotZero, NotInOnePlusA2) as exc:
        raise NotUnit(str(exc)) from None
    w1 = (word(MuU(1, s.lam1)) if s.lam1 != 1 else GroupWord()) + s.word1
    w2 = (word(MuU(2, s.lam2)) if s.lam2 != 1 else GroupWord()) + s.word2
    cert = FactorizationCertificate(c, n, w1, w2, (s.lam1, s.lam2))
    if cert.multiply_out() != u:
        raise AssertionError("factorization certificate does not multiply back")
    return cert


def is_unit(u: Element2) -> bool:
    try:
        full_factor_unit(u)
    except NotUnit:
        return False
    return True


def unit_inverse(u: Element2) -> Element2:
    inv = full_factor_unit(u).inverse_element()
    if u * inv != 1 or inv * u != 1:
        raise AssertionError("inverse check failed")
    return inv


def multiply_letters(letters: Sequence) -> Element2:
    return GroupWord(tuple(letters)).multiply_out()
