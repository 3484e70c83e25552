"""Seeded random generators for tests, the verify suites and the CLI."""

from __future__ import annotations

import random
from typing import Optional

from .algebra import Element1, Element2, matrix_unit1, matrix_unit2, theta_power
from .quotient import BlockOverS1, Laurent
from .scalars import K
from .units import Elementary, GroupWord, MuU, MuUprime


def rng_for(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _coeff(rng, lo=-3, hi=3, nonzero=True):
    while True:
        c = rng.randint(lo, hi)
        if c or not nonzero:
            return K(c)


def element1(rng, max_exp=3, terms=3) -> Element1:
    return Element1({(rng.randint(0, max_exp), rng.randint(0, max_exp)): _coeff(rng)
                     for _ in range(terms)})


def element2(rng, max_exp=2, terms=3) -> Element2:
    return Element2({tuple(rng.randint(0, max_exp) for _ in range(4)): _coeff(rng)
                     for _ in range(terms)})


def laurent(rng, span=2, terms=2) -> Laurent:
    return Laurent({rng.randint(-span, span): _coeff(rng) for _ in range(terms)})


def f_element(rng, size=3, terms=2) -> Element1:
    out = Element1.zero()
    for _ in range(terms):
        out = out + matrix_unit1(rng.randrange(size), rng.randrange(size)).scale(_coeff(rng))
    return out


def f2_element(rng, size=2, terms=2) -> Element2:
    out = Element2.zero()
    for _ in range(terms):
        a = (rng.randrange(size), rng.randrange(size))
        b = (rng.randrange(size), rng.randrange(size))
        out = out + matrix_unit2(a, b).scale(_coeff(rng))
    return out


def fredholm1(rng) -> Element1:
    """A random non-F element of S_1 (nonzero symbol)."""
    while True:
        a = element1(rng) + f_element(rng)
        if _has_symbol(a):
            return a


def _has_symbol(a: Element1) -> bool:
    from .quotient import psi1

    return bool(psi1(a))


def block(rng, factor: int, size: Optional[int] = None, c=1, max_exp=2) -> BlockOverS1:
    """c + sum E_kl(factor) b_kl with random b_kl in S_1 of the other factor."""
    n = size if size is not None else rng.randint(1, 2)
    rows = [[element1(rng, max_exp, rng.randint(0, 2)) for _ in range(n)] for _ in range(n)]
    return BlockOverS1.make(factor, c, rows)


def elementary(rng, factor: int, size=3, max_exp=2) -> Elementary:
    r = rng.randrange(size)
    c = rng.choice([k for k in range(size) if k != r])
    return Elementary(factor, r, c, element1(rng, max_exp, rng.randint(1, 2)))


def unit_1p_word(rng, factor: int, length=3) -> GroupWord:
    letters = [MuU(factor, _coeff(rng, 1, 4))]
    letters += [elementary(rng, factor) for _ in range(length)]
    return GroupWord(tuple(letters))


def unit_1F2(rng, size=2, terms=2) -> Element2:
    """A random unit of 1 + F_2 (unipotent triangular times a scalar mu')."""
    out = MuUprime(_coeff(rng, 1, 4)).element()
    for _ in range(terms):
        a = (rng.randrange(size), rng.randrange(size))
        b = (rng.randrange(size), rng.randrange(size))
        if a != b:
            out = out * (1 + matrix_unit2(a, b).scale(_coeff(rng)))
    return out


def unit(rng, theta_range=2, length=2) -> Element2:
    """A random unit c * theta^n * u1 * u2 of S_2 with u_i in (1 + p_i)^*."""
    n = rng.randint(-theta_range, theta_range)
    w = unit_1p_word(rng, 1, length) + unit_1p_word(rng, 2, length)
    return theta_power(n) * w.multiply_out().scale(_coeff(rng, 1, 3))


def unit_a2(rng, theta_range=2, length=2) -> Element2:
    """A random unit theta^n * u1 * u2 of 1 + a_2."""
    n = rng.randint(-theta_range, theta_range)
    w = unit_1p_word(rng, 1, length) + unit_1p_word(rng, 2, length)
    return theta_power(n) * w.multiply_out()


def elementary_word(rng, factor: Optional[int] = None, length=3) -> GroupWord:
    """A random word of Elementary letters (a random factor per letter if None)."""
    return GroupWord(tuple(elementary(rng, factor or rng.choice((1, 2))) for _ in range(length)))


def gl_word(rng, length=3) -> GroupWord:
    """A random word over GL_oo(S_1): Elementary letters in factor 1 plus a mu."""
    letters = list(elementary_word(rng, 1, length).letters)
    letters.insert(rng.randrange(len(letters) + 1), MuU(1, _coeff(rng, 1, 4)))
    return GroupWord(tuple(letters))


def transvection_unit_1F2(rng, size=3, length=3) -> Element2:
    """mu'(lam) times random transvections 1 + c E_ab, a != b, indices below ``size``."""
    out = MuUprime(_coeff(rng, 1, 5)).element()
    for _ in range(length):
        a = (rng.randrange(size), rng.randrange(size))
        b = (rng.randrange(size), rng.randrange(size))
        if a != b:
            t = 1 + matrix_unit2(a, b).scale(_coeff(rng))
            out = t * out if rng.random() < 0.5 else out * t
    return out
