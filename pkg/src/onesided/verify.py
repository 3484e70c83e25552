"""Named verification suites, one per acceptance criterion.

Each suite is seeded and deterministic.  It returns a :class:`SuiteResult`
holding one line per check; a failing check keeps the first counterexample.
The same suites back ``onesided verify <name>`` and the acceptance tests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import randoms
from .action import act, act_poly, oracle_index
from .algebra import (
    Element1,
    Element2,
    eta,
    matrix_unit1,
    matrix_unit2,
    matrix_unit_factor,
    theta,
    theta_inverse,
    theta_power,
    x1,
    x2,
)
from .automorphisms import (
    g2_generator_set,
    inner,
    inner_x,
    swap,
    torus,
)
from .errors import AlgebraError, NonzeroDegree, NotUnit
from .index import index1, index_block, index_of_part, ind_component, split_parts
from .quotient import BlockOverS1, laurent_det, symbol_matrix
from .scalars import K
from .units import (
    MuU,
    MuUprime,
    comEi1_letters,
    comEi1_rhs,
    comEi_word,
    cubic_filtration,
    det_block,
    det_filtration,
    detbar,
    factor_1F2_into_elementaries,
    factor_unit_1p,
    full_factor_unit,
    split_boxtimes,
    split_theta,
)


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return ("ok    " if self.ok else "FAIL  ") + self.label + \
            ("" if self.ok or not self.detail else "  [counterexample: %s]" % self.detail)


@dataclass
class SuiteResult:
    name: str
    criterion: int
    title: str
    checks: List[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        n = sum(c.ok for c in self.checks)
        return "%s %2d %-14s %d/%d checks  %s" % (
            "PASS" if self.passed else "FAIL", self.criterion, self.name, n, len(self.checks), self.title)

    def text(self, timing=False) -> str:
        lines = [c.line() for c in self.checks]
        head = self.summary() + (" (%.1fs)" % self.seconds if timing else "")
        return "\n".join(lines + [head])


class _Recorder:
    def __init__(self, result: SuiteResult):
        self.result = result

    def check(self, label: str, ok: bool, detail: str = ""):
        self.result.checks.append(Check(label, bool(ok), detail))

    def trial(self, label: str, n: int, body: Callable[[int], Optional[str]]):
        """Run ``body(k)`` for k < n; a non-None return (or an exception) is a failure."""
        good = 0
        first = ""
        for k in range(n):
            try:
                bad = body(k)
            except AlgebraError as exc:
                bad = "%s: %s" % (exc.name, exc)
            if bad is None:
                good += 1
            elif not first:
                first = "trial %d: %s" % (k, bad)
        self.check("%s (%d/%d)" % (label, good, n), good == n, first)

    def raises(self, label: str, fn, exc_type, predicate=None):
        try:
            fn()
        except exc_type as exc:
            ok = predicate(exc) if predicate else True
            self.check(label, ok, "" if ok else "raised %s: %s" % (type(exc).__name__, exc))
            return
        except AlgebraError as exc:
            self.check(label, False, "raised %s: %s" % (exc.name, exc))
            return
        self.check(label, False, "no error raised")


def _neq(a, b) -> Optional[str]:
    return None if a == b else "%s != %s" % (a, b)


# 1

def suite_relations(rng, rec: _Recorder):
    x, y = Element1.x(), Element1.y()
    rec.check("y*x = 1", y * x == 1)
    rec.check("x*y = 1 - E_00", x * y == 1 - matrix_unit1(0, 0))
    bad = [(i, j, k, l) for i in range(6) for j in range(6) for k in range(6) for l in range(6)
           if matrix_unit1(i, j) * matrix_unit1(k, l)
           != (matrix_unit1(i, l) if j == k else Element1.zero())]
    rec.check("E_ij E_kl = delta_jk E_il, indices <= 5", not bad, str(bad[:1]))
    pairs = [(a, b) for a in range(4) for b in range(4)]
    units = {(a, b): matrix_unit2(a, b) for a in pairs for b in pairs}
    bad = []
    for (al, be), e1 in units.items():
        for (ga, de), e2 in units.items():
            if e1 * e2 != (units[(al, de)] if be == ga else 0):
                bad.append((al, be, ga, de))
                break
        if bad:
            break
    rec.check("E_ab E_cd = delta_bc E_ad, entries <= 3", not bad, str(bad[:1]))

    def assoc(k):
        a, b, c = (randoms.element2(rng) for _ in range(3))
        return _neq((a * b) * c, a * (b * c))

    rec.trial("associativity on random triples", 500, assoc)

    def hom(k):
        if k % 2:
            a, b = randoms.element1(rng), randoms.element1(rng)
            mons = [(i,) for i in range(9)]
        else:
            a, b = randoms.element2(rng), randoms.element2(rng)
            mons = [(i, j) for i in range(5) for j in range(5)]
        ab = a * b
        for m in mons:
            if act(ab, m) != act_poly(a, act(b, m)):
                return "a=%s b=%s at x^%s" % (a, b, m)
        return None

    rec.trial("operator matrices multiply: M(ab) = M(a)M(b)", 300, hom)


# 2

def _random_fredholm1(rng, bandwidth=6) -> Element1:
    while True:
        terms = {}
        for _ in range(rng.randint(1, 3)):
            i = rng.randint(0, bandwidth)
            j = rng.randint(0, bandwidth)
            terms[(i, j)] = K(rng.choice([-3, -2, -1, 1, 2, 3]))
        a = Element1(terms) + randoms.f_element(rng, 4, rng.randint(0, 2))
        try:
            index1(a)
            return a
        except AlgebraError:
            continue


def suite_index_scalar(rng, rec: _Recorder):
    for i in range(1, 7):
        xi, yi = Element1.x(i), Element1.y(i)
        rec.check("ind(x^%d) = %d, symbolic and oracle" % (i, -i),
                  index1(xi).value == -i and oracle_index(xi) == -i)
        rec.check("ind(y^%d) = %d, symbolic and oracle" % (i, i),
                  index1(yi).value == i and oracle_index(yi) == i)

    def agree(k):
        a = _random_fredholm1(rng)
        c = index1(a, check=True)
        return None if c.agrees() else "%s: symbolic %d, oracle %d" % (a, c.value, c.oracle)

    rec.trial("symbolic = oracle on random Fredholm elements of S_1", 200, agree)


# 3

def u_m(m: int) -> Element2:
    """u(m) = E_00(1) x_2^m + 1 - E_00(1)."""
    e = matrix_unit_factor(1, 0, 0)
    return e * x2() ** m + 1 - e


def _random_block(rng) -> BlockOverS1:
    while True:
        b = randoms.block(rng, rng.choice((1, 2)), c=rng.choice((1, 1, 2, -1)))
        if b.c and laurent_det(symbol_matrix(b)):
            return b


def suite_index_block(rng, rec: _Recorder):
    from .algebra import y1

    e2 = matrix_unit_factor(2, 0, 0)
    e1 = matrix_unit_factor(1, 0, 0)
    a = 1 + (y1() - 1) * e2
    b = 1 + e1 * (x2() - 1)
    rec.check("ind(1 + (y1 - 1)E_00(2)) = 1, symbolic and oracle",
              _block_index(2, a) == 1 and oracle_index(a) == 1)
    rec.check("ind(1 + E_00(1)(x2 - 1)) = -1, symbolic and oracle",
              _block_index(1, b) == -1 and oracle_index(b) == -1)
    for m in range(1, 5):
        u = u_m(m)
        rec.check("ind(u(%d)) = %d, symbolic and oracle" % (m, -m),
                  _block_index(1, u) == -m and oracle_index(u) == -m)

    def agree(k):
        blk = _random_block(rng)
        c = index_block(blk, check=True)
        return None if c.agrees() else "%s: symbolic %d, oracle %d" % (blk, c.value, c.oracle)

    rec.trial("symbolic = oracle on random scalar-plus-block operators", 100, agree)


def _block_index(i, a: Element2) -> int:
    from .quotient import to_block

    return index_block(to_block(i, a)).value


# 4

def suite_finite_rank(rng, rec: _Recorder):
    def s1(k):
        a = _random_fredholm1(rng, 4)
        f = randoms.f_element(rng, 5, rng.randint(1, 3))
        before, after = index1(a).value, oracle_index(a + f)
        return None if before == after else "a=%s f=%s: %d -> %d" % (a, f, before, after)

    def s2(k):
        blk = _random_block(rng)
        a = blk.to_element()
        f = randoms.f2_element(rng, 3, rng.randint(1, 3))
        before, after = index_block(blk).value, oracle_index(a + f)
        return None if before == after else "a=%s f=%s: %d -> %d" % (a, f, before, after)

    rec.trial("ind(a + f) = ind(a), a in S_1, f in F", 100, s1)
    rec.trial("ind(a + f) = ind(a), a in K + p_i, f in F_2", 100, s2)


# 5

def suite_ind_laws(rng, rec: _Recorder):
    th = theta()
    rec.check("ind_1(theta) = -1", ind_component(1, th) == -1)
    rec.check("ind_2(theta) = 1", ind_component(2, th) == 1)

    def hom(k):
        u, v = randoms.unit_a2(rng, length=1), randoms.unit_a2(rng, length=1)
        uv = u * v
        for i in (1, 2):
            if ind_component(i, uv) != ind_component(i, u) + ind_component(i, v):
                return "ind_%d fails for u=%s v=%s" % (i, u, v)
        return None

    def zero_sum(k):
        u = randoms.unit_a2(rng)
        s = ind_component(1, u) + ind_component(2, u)
        return None if s == 0 else "%s: ind_1 + ind_2 = %d" % (u, s)

    def reassign(k):
        u = randoms.unit_a2(rng, length=1)
        a1, a2 = split_parts(u)
        f = randoms.f2_element(rng, 3, 2)
        if index_of_part(1, a1 - f) != index_of_part(1, a1) or \
                index_of_part(2, a2 + f) != index_of_part(2, a2):
            return "u=%s f=%s" % (u, f)
        return None

    rec.trial("ind_i(uv) = ind_i(u) + ind_i(v) on unit pairs", 100, hom)
    rec.trial("ind_1(u) + ind_2(u) = 0 on units", 100, zero_sum)
    rec.trial("indices unchanged when an F_2 part moves between summands", 50, reassign)


# 6

def theta_table(alpha):
    a1, a2 = alpha
    if a1 > 0 and a2 > 0:
        return {alpha: 1}
    if a1 > 0:
        return {(a1 - 1, 0): 1}
    return {(0, a2 + 1): 1}


def theta_inverse_table(alpha):
    a1, a2 = alpha
    if a1 > 0 and a2 > 0:
        return {alpha: 1}
    if a2 == 0:
        return {(a1 + 1, 0): 1}
    return {(0, a2 - 1): 1}


def suite_theta(rng, rec: _Recorder):
    th, ti = theta(), theta_inverse()
    rec.check("theta * theta^-1 = 1", th * ti == 1)
    rec.check("theta^-1 * theta = 1", ti * th == 1)
    mons = [(a, b) for a in range(5) for b in range(5)]
    bad = [m for m in mons if act(th, m) != theta_table(m)]
    rec.check("theta action table on exponents <= 4", not bad, str(bad[:1]))
    bad = [m for m in mons if act(ti, m) != theta_inverse_table(m)]
    rec.check("theta^-1 action table on exponents <= 4", not bad, str(bad[:1]))
    for i in range(0, 6):
        rec.check("theta^%d * 1 = x2^%d" % (i, i), act(theta_power(i), (0, 0)) == {(0, i): 1})


# 7

def suite_k1(rng, rec: _Recorder):
    def elem(k):
        i = rng.choice((1, 2))
        w = randoms.elementary_word(rng, i, rng.randint(1, 4))
        d = detbar(w.multiply_out(), i)
        return None if d == 1 else "%s: detbar %s" % (w.text(), d)

    def mu(k):
        i = rng.choice((1, 2))
        lam = K(Fraction(rng.randint(1, 7), rng.randint(1, 3))) * rng.choice((1, -1))
        w = randoms.elementary_word(rng, i, rng.randint(1, 3))
        d = detbar(MuU(i, lam).element() * w.multiply_out(), i)
        return None if d == lam else "lam=%s got %s" % (lam, d)

    def round_trip(k):
        w = randoms.unit_1p_word(rng, 1, rng.randint(1, 4))
        u = w.multiply_out()
        lam, word = factor_unit_1p(1, u)
        if MuU(1, lam).element() * word.multiply_out() != u:
            return "re-multiplication differs for %s" % w.text()
        return _neq(lam, w.letters[0].lam)

    rec.trial("detbar = 1 on random elementary words", 100, elem)
    rec.trial("detbar(mu(lam) * word) = lam", 100, mu)
    rec.trial("factor_unit_1p round trip on random units of 1 + p_1", 50, round_trip)
    rec.raises("u(1) rejected as NotUnit with index -1",
               lambda: factor_unit_1p(1, u_m(1)), NotUnit, lambda e: e.index == -1)
    rec.raises("detbar(u(1)) reports NonzeroDegree(1)",
               lambda: detbar(u_m(1), 1), NonzeroDegree, lambda e: e.degree == 1)


# 8

def suite_f2_elementary(rng, rec: _Recorder):
    idx = [(a, b) for a in range(3) for b in range(3)]
    bad = []
    for al in idx:
        for be in idx:
            if al == be:
                continue
            for lam in (1, -2):
                e = 1 + matrix_unit2(al, be).scale(K(lam))
                if factor_1F2_into_elementaries(e, 2).multiply_out() != e:
                    bad.append((al, be, lam))
    rec.check("1 + lam E_ab (a != b, entries <= 2) factors over E(S_1(2))", not bad, str(bad[:1]))
    for lam in (K(1), K(2), K(Fraction(-1, 2))):
        e = MuUprime(1 + lam).element()
        w = factor_1F2_into_elementaries(e, 2)
        rec.check("1 + %s E_00,00 factors over E(S_1(2))" % lam,
                  w.multiply_out() == e and all(l.factor == 1 for l in w))
    bad = [lam for lam in (1, 2, 3, Fraction(1, 2), Fraction(-1, 3), -2, 5)
           if comEi1_letters(lam).multiply_out() != comEi1_rhs(lam)]
    rec.check("corrected 2x2 five-factor identity by direct multiplication", not bad, str(bad[:1]))
    bad = []
    for i in range(4):
        for k in range(4):
            for l in range(4):
                if l == i or k == l:
                    continue
                for lam in (1, -3):
                    target = 1 + matrix_unit2((i, k), (i, l)).scale(K(lam))
                    if comEi_word(i, k, l, lam, aux=l).multiply_out() != target:
                        bad.append((i, k, l, lam))
    rec.check("[1 + E_il(1)E_kk(2), 1 + lam E_li(1)E_kl(2)] = 1 + lam E_ii(1)E_kl(2), "
              "entries <= 3", not bad, str(bad[:1]))

    def rand(k):
        e = randoms.transvection_unit_1F2(rng)
        j = rng.choice((1, 2))
        return _neq(factor_1F2_into_elementaries(e, j).multiply_out(), e)

    rec.trial("random units of 1 + F_2 factor exactly", 30, rand)


# 9

def suite_group_splits(rng, rec: _Recorder):
    def splits(k):
        u = randoms.unit_a2(rng, length=rng.randint(1, 2))
        n, kk = split_theta(u)
        if theta_power(n) * kk != u:
            return "split_theta round trip fails for %s" % u
        u1, u2 = split_boxtimes(kk)
        if u1 * u2 != kk:
            return "split_boxtimes round trip fails for %s" % kk
        from .algebra import membership

        if not (membership(u1 - 1, "p1") and membership(u2 - 1, "p2")):
            return "split_boxtimes factors outside 1 + p_i"
        return None

    def full(k):
        u = randoms.unit(rng, length=rng.randint(1, 2))
        cert = full_factor_unit(u)
        if cert.multiply_out() != u:
            return "certificate does not multiply back for %s" % u
        return _neq(cert.inverse_element() * u, Element2.one())

    rec.trial("split_theta and split_boxtimes round trip", 50, splits)
    rec.trial("full_factor_unit certificate multiplies back", 30, full)
    rec.raises("x1 rejected as NotUnit", lambda: full_factor_unit(x1()), NotUnit)
    rec.raises("1 - E_00,00 rejected as NotUnit",
               lambda: full_factor_unit(1 - matrix_unit2((0, 0), (0, 0))), NotUnit)


# 10

def suite_determinants(rng, rec: _Recorder):
    f1 = cubic_filtration(0, 1)
    f2 = cubic_filtration(1, 2)

    def filt(k):
        e = randoms.transvection_unit_1F2(rng)
        d = det_block(e)
        a, b = det_filtration(e, f1), det_filtration(e, f2)
        return None if d == a == b else "%s: block %s, filtrations %s %s" % (e, d, a, b)

    def conj(k):
        w = randoms.gl_word(rng, rng.randint(1, 3))
        a, a_inv = w.multiply_out(), w.inverse().multiply_out()
        b = randoms.transvection_unit_1F2(rng)
        return _neq(det_block(a * b * a_inv), det_block(b))

    def eta_det(k):
        e = randoms.transvection_unit_1F2(rng)
        return _neq(det_block(eta(e)), det_block(e))

    def centre(k):
        lam = K(rng.randint(2, 6))
        m, m_inv = MuUprime(lam).element(), MuUprime(1 / lam).element()
        w = randoms.gl_word(rng, rng.randint(1, 3))
        c = m * w.multiply_out() * m_inv * w.inverse().multiply_out()
        return _neq(det_block(c), 1)

    rec.trial("det_block = det_filtration for two cubic filtrations", 100, filt)
    rec.trial("det(a b a^-1) = det(b), a in GL(S_1)", 50, conj)
    rec.trial("det(eta(e)) = det(e)", 50, eta_det)
    rec.trial("[mu'(lam), g] lies in SL", 50, centre)


# 11

def suite_automorphisms(rng, rec: _Recorder):
    for name, g in g2_generator_set():
        rec.check("generator %s preserves the defining relations" % name, g.preserves_relations())
    s = swap()

    def swap_conj(k):
        mu, m = K(rng.randint(1, 3)), rng.randint(1, 3)
        i, j = rng.sample(range(3), 2)
        left = s * inner_x(mu, m, i, j, factor=2) * s.inverse()
        right = inner_x(mu, m, i, j, factor=1)
        a = randoms.element2(rng)
        return _neq(left(a), right(a))

    units = [g.letters[0].u for name, g in g2_generator_set() if name.startswith("w_")]

    def torus_conj(k):
        t = torus(K(rng.randint(1, 4)), K(rng.randint(1, 4)) * rng.choice((1, -1)))
        u = units[k % len(units)]
        a = randoms.element2(rng)
        return _neq((t * inner(u) * t.inverse())(a), inner(t(u))(a))

    def multiplicative(k):
        u = units[k % len(units)]
        v = units[(k * 7 + 3) % len(units)]
        a = randoms.element2(rng)
        return _neq((inner(u) * inner(v))(a), inner(u * v)(a))

    rec.trial("s w_(1 + mu x1^m E_ij(2)) s^-1 = w_(1 + mu x2^m E_ij(1))", 30, swap_conj)
    rec.trial("t w_u t^-1 = w_t(u)", 30, torus_conj)
    rec.trial("w_u w_v = w_uv", 30, multiplicative)

    def hom(k):
        g = g2_generator_set()[k % 10][1]
        a, b = randoms.element2(rng), randoms.element2(rng)
        return _neq(g(a * b), g(a) * g(b))

    rec.trial("generators are multiplicative", 30, hom)


# 12

def suite_cli(rng, rec: _Recorder):
    from .cli import golden_check, exit_code_checks

    ok, detail = golden_check()
    rec.check("golden transcript is byte-identical", ok, detail)
    for label, ok, detail in exit_code_checks():
        rec.check(label, ok, detail)


SUITES: Dict[str, tuple] = {
    "relations": (1, "relations and faithfulness", suite_relations),
    "index-scalar": (2, "index of S_1 elements", suite_index_scalar),
    "index-block": (3, "index of scalar-plus-block operators", suite_index_block),
    "finite-rank": (4, "index invariance under finite-rank perturbation", suite_finite_rank),
    "ind-laws": (5, "ind_1, ind_2 laws", suite_ind_laws),
    "theta": (6, "theta calculus", suite_theta),
    "k1": (7, "K_1(S_1) = K^*", suite_k1),
    "f2-elementary": (8, "(1 + F_2)^* inside E(S_1(2))", suite_f2_elementary),
    "group-splits": (9, "group splits and factorization", suite_group_splits),
    "determinants": (10, "determinant theory", suite_determinants),
    "automorphisms": (11, "automorphisms", suite_automorphisms),
    "cli": (12, "command line", suite_cli),
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError("unknown suite %r; choose from %s" % (name, ", ".join(SUITES)))
    criterion, title, fn = SUITES[name]
    result = SuiteResult(name, criterion, title)
    start = time.perf_counter()
    fn(randoms.rng_for(seed), _Recorder(result))
    result.seconds = time.perf_counter() - start
    return result


def run_all(seed: int = 0) -> List[SuiteResult]:
    return [run_suite(name, seed) for name in SUITES]
