"""Symbolic Fredholm indices and the homomorphisms ind_1, ind_2 on (1 + a_2)^*.

For a in S_1 the index on P_1 is -topdeg(psi(a)): write a = y^m q(x) + f with
f in F, so psi(a) = x^-m q(x); y^m has index m, q(x) has index -deg q, and
finite-rank f does not change the index.  For scalar-plus-block operators the
same holds with psi(a) replaced by the determinant of the symbol matrix.
Both rules are cross-checked against :func:`onesided.action.oracle_index`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .action import oracle_index
from .algebra import Element1, Element2, from_mixed2, is_f_key, membership, mixed2
from .errors import NotFredholm, NotInOnePlusA2
from .quotient import BlockOverS1, Laurent, laurent_det, psi1, symbol_matrix, to_block


@dataclass(frozen=True)
class IndexCertificate:
    value: int
    symbol: Laurent
    method: str = "symbolic"
    oracle: Optional[int] = None

    def agrees(self) -> bool:
        return self.oracle is None or self.oracle == self.value


def index1(a: Element1, check: bool = False) -> IndexCertificate:
    """Index of a on P_1; NotFredholm when a lies in F."""
    s = psi1(a)
    if not s:
        raise NotFredholm("%s lies in F (zero symbol)" % a)
    value = -s.topdeg()
    if check:
        return IndexCertificate(value, s, "symbolic+oracle", oracle_index(a))
    return IndexCertificate(value, s)


def index_block(b: BlockOverS1, check: bool = False) -> IndexCertificate:
    """Index on P_2 of c + sum E_kl(i) b_kl, read off the symbol determinant."""
    if not b.c:
        raise NotFredholm("block has zero scalar part")
    d = laurent_det(symbol_matrix(b))
    if not d:
        raise NotFredholm("symbol determinant is zero")
    value = -d.topdeg()
    if check:
        return IndexCertificate(value, d, "symbolic+oracle", oracle_index(b.to_element()))
    return IndexCertificate(value, d)


def split_parts(u: Element2) -> Tuple[Element2, Element2]:
    """u = 1 + a1 + a2 with a1 in p_1, a2 in p_2; the F_2 overlap goes to a1."""
    if not membership(u - 1, "a2"):
        raise NotInOnePlusA2("u - 1 is not in a_2")
    part1, part2 = {}, {}
    for (k1, k2), c in mixed2(u - 1).items():
        (part1 if is_f_key(k1) else part2)[(k1, k2)] = c
    return from_mixed2(part1), from_mixed2(part2)


def index_of_part(i: int, a_i: Element2) -> int:
    """ind(1 + a_i) for a_i in p_i."""
    return index_block(to_block(i, 1 + a_i)).value


def ind_component(i: int, u: Element2) -> int:
    """ind_i(u) = ind(1 + a_i) where u = 1 + a1 + a2."""
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    a1, a2 = split_parts(u)
    return index_of_part(i, a1 if i == 1 else a2)
