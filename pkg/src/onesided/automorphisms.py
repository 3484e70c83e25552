"""Automorphisms of S_2 as words in swap, torus and inner letters.

A word acts as the composition of its letters in written order, so the
rightmost letter is applied first: ``Automorphism((s, t)).apply(a) == s(t(a))``.
With this reading ``compose`` is concatenation and conjugation identities such
as t w_u t^-1 = w_t(u) hold literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebra import (
    Element1,
    Element2,
    matrix_unit1,
    matrix_unit2,
    matrix_unit_factor,
    theta,
    theta_inverse,
    x1,
    x2,
    y1,
    y2,
)
from .errors import NotUnit, PreconditionViolated
from .scalars import K, fmt_scalar


def relations_hold(images: Sequence[Element2]) -> bool:
    """Images (X1, X2, Y1, Y2) satisfy Y_i X_i = 1 and cross-commutation."""
    X1, X2, Y1, Y2 = images
    if Y1 * X1 != 1 or Y2 * X2 != 1:
        return False
    for a in (X1, Y1):
        for b in (X2, Y2):
            if a * b != b * a:
                return False
    return True


def generator_images(f) -> Tuple[Element2, ...]:
    return tuple(f(g) for g in (x1(), x2(), y1(), y2()))


@dataclass(frozen=True)
class Swap:
    def apply(self, a: Element2) -> Element2:
        return Element2({(a2, a1, b2, b1): c for (a1, a2, b1, b2), c in a.items()})

    def inverse(self):
        return self

    def text(self):
        return "S"


@dataclass(frozen=True)
class Torus:
    lam1: object
    lam2: object = 1

    def __post_init__(self):
        if not K(self.lam1) or not K(self.lam2):
            raise PreconditionViolated("torus parameters must be nonzero")

    def apply(self, a: Element2) -> Element2:
        l1, l2 = K(self.lam1), K(self.lam2)
        return Element2({m: c * l1 ** (m[0] - m[2]) * l2 ** (m[1] - m[3])
                         for m, c in a.items()})

    def inverse(self):
        return Torus(1 / K(self.lam1), 1 / K(self.lam2))

    def text(self):
        return "T %s %s" % (fmt_scalar(K(self.lam1)), fmt_scalar(K(self.lam2)))


@dataclass(frozen=True)
class Inner:
    u: Element2
    u_inv: Element2

    @classmethod
    def of(cls, u: Element2, u_inv: Optional[Element2] = None) -> "Inner":
        if u_inv is None:
            from .units import unit_inverse

            u_inv = unit_inverse(u)
        if u * u_inv != 1 or u_inv * u != 1:
            raise NotUnit("supplied inverse does not invert u")
        letter = cls(u, u_inv)
        if not relations_hold(generator_images(letter.apply)):
            raise AssertionError("inner letter breaks the defining relations")
        return letter

    def apply(self, a: Element2) -> Element2:
        return self.u * a * self.u_inv

    def inverse(self):
        return Inner(self.u_inv, self.u)

    def text(self):
        return "W %s" % self.u


@dataclass(frozen=True)
class Automorphism:
    letters: Tuple = ()

    def apply(self, a) -> Element2:
        if not isinstance(a, Element2):
            a = Element2.scalar(a)
        for letter in reversed(self.letters):
            a = letter.apply(a)
        return a

    __call__ = apply

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self o other."""
        return Automorphism(tuple(self.letters) + tuple(other.letters))

    __mul__ = compose

    def inverse(self) -> "Automorphism":
        return Automorphism(tuple(l.inverse() for l in reversed(self.letters)))

    def images(self) -> Tuple[Element2, ...]:
        return generator_images(self.apply)

    def preserves_relations(self) -> bool:
        return relations_hold(self.images())

    def text(self) -> str:
        return "\n".join(l.text() for l in self.letters)

    @classmethod
    def parse(cls, text: str) -> "Automorphism":
        from .parser import parse_auto_letter

        return cls(tuple(parse_auto_letter(line) for line in text.splitlines()
                         if line.strip() and not line.lstrip().startswith("#")))


def compose(sigma: Automorphism, tau: Automorphism) -> Automorphism:
    return sigma.compose(tau)


def invert(sigma: Automorphism) -> Automorphism:
    return sigma.inverse()


def identity() -> Automorphism:
    return Automorphism()


def _auto(letter) -> Automorphism:
    return Automorphism((letter,))


# generator families, each with its own parameter domain

def swap() -> Automorphism:
    return _auto(Swap())


def torus(lam1, lam2=1) -> Automorphism:
    return _auto(Torus(K(lam1), K(lam2)))


def torus1(lam) -> Automorphism:
    """t_(lam, 1), lam != 0."""
    return torus(lam, 1)


def inner(u: Element2, u_inv: Optional[Element2] = None) -> Automorphism:
    return _auto(Inner.of(u, u_inv))


def inner_theta() -> Automorphism:
    return inner(theta(), theta_inverse())


def _mu_like(e: Element2, lam):
    lam = K(lam)
    if not lam:
        raise PreconditionViolated("lam must be nonzero")
    return e.scale(lam) + 1 - e, e.scale(1 / lam) + 1 - e


def inner_mu(lam) -> Automorphism:
    """w_u for u = lam E_00(1) + 1 - E_00(1), lam != 0."""
    return inner(*_mu_like(matrix_unit_factor(1, 0, 0), lam))


def inner_muE(lam, i, j, k, l) -> Automorphism:
    """w_u for u = lam E_ij(1)E_kl(2) + 1 - E_ij(1)E_kl(2).

    For (i, k) == (j, l) the element E is idempotent and lam != 0 is needed;
    otherwise E^2 = 0 and u = 1 + (lam - 1) E is a unit for every lam.
    """
    e = matrix_unit2((i, k), (j, l))
    if (i, k) == (j, l):
        return inner(*_mu_like(e, lam))
    n = e.scale(K(lam) - 1)
    return inner(1 + n, 1 - n)


def inner_F2(lam, alpha, beta) -> Automorphism:
    """w_u for u = 1 + lam E_alpha,beta with alpha != beta."""
    if tuple(alpha) == tuple(beta):
        raise PreconditionViolated("alpha must differ from beta")
    n = matrix_unit2(alpha, beta).scale(K(lam))
    return inner(1 + n, 1 - n)


def _nilpotent_inner(coeff: Element1, i, j, factor=1) -> Automorphism:
    if i == j:
        raise PreconditionViolated("need i != j")
    eu = matrix_unit1(i, j)
    n = Element2.tensor(eu, coeff) if factor == 1 else Element2.tensor(coeff, eu)
    return inner(1 + n, 1 - n)


def inner_x(mu, m, i, j, factor=1) -> Automorphism:
    """w_u for u = 1 + mu x^m E_ij(factor), x in the other factor; m >= 1, i != j."""
    if m < 1:
        raise PreconditionViolated("need m >= 1")
    return _nilpotent_inner(Element1.x(m).scale(K(mu)), i, j, factor)


def inner_y(mu, m, i, j, factor=1) -> Automorphism:
    """w_u for u = 1 + mu y^m E_ij(factor), y in the other factor; m >= 1, i != j."""
    if m < 1:
        raise PreconditionViolated("need m >= 1")
    return _nilpotent_inner(Element1.y(m).scale(K(mu)), i, j, factor)


def inner_E(mu, i, j, factor=1) -> Automorphism:
    """w_u for u = 1 + mu E_ij(factor), i != j."""
    return _nilpotent_inner(Element1.scalar(K(mu)), i, j, factor)


def g2_generator_set(lam=2, mu=3, m=1) -> List[Tuple[str, Automorphism]]:
    """One representative of every generator family of Aut(S_2), labelled."""
    return [
        ("s", swap()),
        ("t(lam,1)", torus1(lam)),
        ("w_theta", inner_theta()),
        ("w_mu(lam)", inner_mu(lam)),
        ("w_muE(lam;0,0,0,0)", inner_muE(lam, 0, 0, 0, 0)),
        ("w_muE(lam;0,1,1,0)", inner_muE(lam, 0, 1, 1, 0)),
        ("w_(1+lam E_(0,0),(1,0))", inner_F2(lam, (0, 0), (1, 0))),
        ("w_(1+mu x2^m E_01(1))", inner_x(mu, m, 0, 1)),
        ("w_(1+mu y2^m E_10(1))", inner_y(mu, m, 1, 0)),
        ("w_(1+mu E_01(1))", inner_E(mu, 0, 1)),
    ]
