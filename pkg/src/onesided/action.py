"""The faithful action of S_1 on P_1 = K[x] and of S_2 on P_2 = K[x1, x2].

Truncated operator matrices give a brute-force index oracle that is
independent of the symbolic index rules, and the constructive finite-rank
corrections used to turn Fredholm maps into injections, surjections or
isomorphisms.

Truncation scheme.  Fix a target window U_K and a larger domain window V_M.
Then ``dim ker`` is the nullity of ``a`` on V_M, and the cokernel is measured
as ``dim U_K - dim(a(V_M) cap U_K)``.  Once M exceeds K by the reach of ``a``
no preimage of U_K is clipped, and both numbers settle as K grows.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .algebra import Element1, Element2, in_scalar_plus, k_component, matrix_unit1, matrix_unit2
from .errors import IndexNotZero, NoStabilization, PreconditionViolated
from .linalg import EchelonBasis, echelonize, nullspace, rank
from .scalars import fmt_scalar

DEFAULT_CAP = 48
_cap: ContextVar[int] = ContextVar("window_cap", default=DEFAULT_CAP)


def window_cap() -> int:
    return _cap.get()


@contextmanager
def use_window_cap(cap: int):
    """Temporarily change the largest target window tried by the oracle."""
    token = _cap.set(int(cap))
    try:
        yield cap
    finally:
        _cap.reset(token)

KINDS = ("S1-on-P1", "scalar-plus-p_i-on-P2")


@dataclass(frozen=True)
class Window:
    """Monomials x^alpha of P_1 (kind 'degree') or P_2 (kind 'cube') up to ``size``.

    Kind 'strip' is the part of the cube where the exponent of x_factor is
    below ``width``; the other exponent runs up to ``size``.
    """

    kind: str
    size: int
    width: int = 0
    factor: int = 1

    def __post_init__(self):
        if self.kind not in ("degree", "cube", "strip"):
            raise ValueError("window kind must be 'degree', 'cube' or 'strip'")

    def monomials(self) -> List[Tuple[int, ...]]:
        r = range(self.size + 1)
        if self.kind == "degree":
            return [(i,) for i in r]
        if self.kind == "cube":
            return [(a, b) for a in r for b in r]
        if self.factor == 1:
            return [(a, b) for a in range(self.width) for b in r]
        return [(a, b) for a in r for b in range(self.width)]

    def __contains__(self, alpha) -> bool:
        if self.kind == "strip":
            f = self.factor - 1
            return 0 <= alpha[f] < self.width and 0 <= alpha[1 - f] <= self.size
        return all(0 <= e <= self.size for e in alpha)

    def __len__(self):
        n = self.size + 1
        if self.kind == "degree":
            return n
        return n * n if self.kind == "cube" else n * self.width

    def resized(self, size: int) -> "Window":
        return Window(self.kind, size, self.width, self.factor)


def window_for(a) -> str:
    return "degree" if isinstance(a, Element1) else "cube"


def act(a, alpha) -> Dict[Tuple[int, ...], object]:
    """a * x^alpha as a sparse polynomial {exponent tuple: coeff}."""
    if isinstance(alpha, int):
        alpha = (alpha,)
    alpha = tuple(alpha)
    out: Dict[Tuple[int, ...], object] = {}
    if isinstance(a, Element1):
        (g,) = alpha
        for (i, j), c in a.items():
            if g >= j:
                key = (g - j + i,)
                s = out.get(key)
                if s is None:
                    out[key] = c
                elif s + c:
                    out[key] = s + c
                else:
                    del out[key]
        return out
    g1, g2 = alpha
    for (a1, a2, b1, b2), c in a.items():
        if g1 >= b1 and g2 >= b2:
            key = (g1 - b1 + a1, g2 - b2 + a2)
            s = out.get(key)
            if s is None:
                out[key] = c
            else:
                s = s + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def act_poly(a, poly: Dict) -> Dict:
    out: Dict = {}
    for alpha, c in poly.items():
        for beta, v in act(a, alpha).items():
            s = out.get(beta, 0) + c * v
            if s:
                out[beta] = s
            else:
                out.pop(beta, None)
    return out


def reach(a) -> Tuple[int, int, int]:
    """(up, down, depth): largest upward shift, downward shift, and y-exponent."""
    up = down = depth = 0
    n = a.nfactors
    for m in a.terms:
        for f in range(n):
            up = max(up, m[f] - m[n + f])
            down = max(down, m[n + f] - m[f])
            depth = max(depth, m[n + f])
    return up, down, depth


@dataclass
class OperatorMatrix:
    domain: Window
    codomain: Window
    columns: List[Dict[Tuple[int, ...], object]]

    def dense(self) -> List[list]:
        rows = self.codomain.monomials()
        cols = self.columns
        return [[col.get(r, 0) for col in cols] for r in rows]

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.codomain.size > self.domain.size or other.codomain.kind != self.domain.kind:
            raise ValueError("windows are not aligned")
        index = {m: i for i, m in enumerate(self.domain.monomials())}
        cols = []
        for col in other.columns:
            out: Dict = {}
            for alpha, c in col.items():
                for beta, v in self.columns[index[alpha]].items():
                    s = out.get(beta, 0) + c * v
                    if s:
                        out[beta] = s
                    else:
                        out.pop(beta, None)
            cols.append(out)
        return OperatorMatrix(other.domain, self.codomain, cols)

    def same_map(self, other: "OperatorMatrix") -> bool:
        return self.domain == other.domain and self.columns == other.columns

    def is_zero(self) -> bool:
        return not any(self.columns)

    def text(self) -> str:
        return "\n".join(" ".join(fmt_scalar(v) for v in row) for row in self.dense())


def operator_matrix(a, w: Window) -> OperatorMatrix:
    """Exact matrix of ``a`` on the window ``w``; the codomain grows to hold every image."""
    if window_for(a) != w.kind or w.kind == "strip":
        raise ValueError("window kind does not match the element")
    cols = [act(a, m) for m in w.monomials()]
    top = max((max(beta) for col in cols for beta in col), default=0)
    return OperatorMatrix(w, Window(w.kind, max(w.size, top)), cols)


@dataclass(frozen=True)
class WindowCounts:
    target: int
    domain: int
    kernel: int
    cokernel: int

    @property
    def index(self):
        return self.kernel - self.cokernel


def base_window(a) -> Window:
    """Smallest window family carrying the whole index of ``a``.

    An element c + sum E_kl(i) b_kl with block size N acts as the scalar c on
    every monomial whose x_i-exponent is at least N, so for c != 0 kernel and
    cokernel live in the strip x_i-exponent < N.
    """
    if isinstance(a, Element1):
        return Window("degree", 0)
    if k_component(a):
        for i in (1, 2):
            if in_scalar_plus(a, "p%d" % i):
                from .quotient import to_block

                return Window("strip", 0, max(1, to_block(i, a).size), i)
    return Window("cube", 0)


def default_margin(a, base: Optional[Window] = None) -> int:
    up, down, depth = reach(a)
    base = base or base_window(a)
    if base.kind == "degree":
        blocks = 1
    elif base.kind == "strip":
        blocks = base.width
    else:
        blocks = max(2, a.max_exponent() + 1)
    return blocks * (up + down) + depth + up + 2


class _Columns:
    """Memoized images a * x^alpha."""

    def __init__(self, a):
        self.a = a
        self.cache: Dict = {}

    def __call__(self, mons):
        out = []
        for m in mons:
            col = self.cache.get(m)
            if col is None:
                col = self.cache[m] = act(self.a, m)
            out.append(col)
        return out


def truncated_counts(a, target: int, domain: Optional[int] = None,
                     base: Optional[Window] = None, columns=None) -> WindowCounts:
    """Kernel and cokernel dimensions of ``a`` measured on one pair of windows."""
    base = base or base_window(a)
    if domain is None:
        domain = target + default_margin(a, base)
    dom = base.resized(domain).monomials()
    tgt = base.resized(target)
    cols = (columns or _Columns(a))(dom)
    ker = len(dom) - rank(cols)
    outside = [{b: v for b, v in col.items() if b not in tgt} for col in cols]
    ker_out = len(dom) - rank(outside)
    coker = len(tgt) - (ker_out - ker)
    return WindowCounts(target, domain, ker, coker)


def _check_kind(a, kind):
    if kind is None:
        kind = KINDS[0] if isinstance(a, Element1) else KINDS[1]
    if kind not in KINDS:
        raise ValueError("kind must be one of %s" % (KINDS,))
    if kind == KINDS[0]:
        if not isinstance(a, Element1):
            raise PreconditionViolated("S1-on-P1 needs an element of S_1")
    else:
        if not isinstance(a, Element2):
            raise PreconditionViolated("scalar-plus-p_i-on-P2 needs an element of S_2")
        if not k_component(a) or not (in_scalar_plus(a, "p1") or in_scalar_plus(a, "p2")):
            raise PreconditionViolated("element is not c + p_i with c != 0")
    return kind


def stabilized_counts(a, kind=None, cap: Optional[int] = None, start: Optional[int] = None,
                      step: int = 4) -> WindowCounts:
    """Grow the target window until three consecutive sizes agree."""
    _check_kind(a, kind)
    cap = cap or window_cap()
    if start is None:
        start = max(2, a.max_exponent() + 2)
    base = base_window(a)
    columns = _Columns(a)
    history: List[WindowCounts] = []
    size = start
    while size <= cap:
        counts = truncated_counts(a, size, base=base, columns=columns)
        history.append(counts)
        last = history[-3:]
        if len(last) == 3 and len({(c.kernel, c.cokernel) for c in last}) == 1:
            return counts
        size += step
    raise NoStabilization(
        "no stabilization up to window %d: %s"
        % (cap, ", ".join("%d:(%d,%d)" % (c.target, c.kernel, c.cokernel) for c in history))
    )


def oracle_index(a, kind=None, cap: Optional[int] = None) -> int:
    """dim ker - dim coker from stabilized truncations."""
    return stabilized_counts(a, kind, cap).index


# finite-rank corrections

@dataclass
class KernelData:
    kernel: List[Dict]          # echelon basis of ker(a), pivot = smallest monomial
    pivots: List[Tuple[int, ...]]
    complement: List[Tuple[int, ...]]   # monomials spanning a complement of im(a)


def kernel_data(a, kind=None, cap: Optional[int] = None) -> KernelData:
    counts = stabilized_counts(a, kind, cap)
    base = base_window(a)
    dom = base.resized(counts.domain).monomials()
    tgt = base.resized(counts.target)
    cols = _Columns(a)(dom)
    kern = [{dom[j]: c for j, c in v.items()} for v in nullspace(cols)]
    kern = echelonize(kern)
    pivots = [min(v) for v in kern]
    # image of a inside the target window
    outside = [{b: v for b, v in col.items() if b not in tgt} for col in cols]
    img = EchelonBasis()
    for comb in nullspace(outside):
        vec: Dict = {}
        for j, c in comb.items():
            for b, v in cols[j].items():
                s = vec.get(b, 0) + c * v
                if s:
                    vec[b] = s
                else:
                    vec.pop(b, None)
        if vec:
            img.add(vec)
    complement = []
    order = sorted(tgt.monomials(), key=lambda m: (max(m), m))
    for m in order:
        if len(complement) == counts.cokernel:
            break
        ok, _, _ = img.add({m: 1})
        if ok:
            complement.append(m)
    if len(kern) != counts.kernel or len(complement) != counts.cokernel:
        raise NoStabilization("inconsistent kernel/cokernel data")
    return KernelData(kern, pivots, complement)


def _unit(a, target, source):
    if isinstance(a, Element1):
        return matrix_unit1(target[0], source[0])
    return matrix_unit2(target, source)


def _pairing(a, kd: KernelData, count: int):
    f = type(a).zero()
    for r in range(count):
        f = f + _unit(a, kd.complement[r], kd.pivots[r])
    return f


def make_iso_correction(a, kind=None, cap: Optional[int] = None):
    """A finite-rank f (in F or F_2) pairing ker(a) with a monomial complement of im(a).

    Requires index 0; then a + f is bijective on the polynomial module.
    """
    kd = kernel_data(a, kind, cap)
    if len(kd.kernel) != len(kd.complement):
        raise IndexNotZero("index is %d" % (len(kd.kernel) - len(kd.complement)))
    return _pairing(a, kd, len(kd.kernel))


def make_injective_correction(a, kind=None, cap: Optional[int] = None):
    kd = kernel_data(a, kind, cap)
    if len(kd.kernel) > len(kd.complement):
        raise PreconditionViolated("dim ker > dim coker; no injective correction")
    return _pairing(a, kd, len(kd.kernel))


def make_surjective_correction(a, kind=None, cap: Optional[int] = None):
    kd = kernel_data(a, kind, cap)
    if len(kd.kernel) < len(kd.complement):
        raise PreconditionViolated("dim ker < dim coker; no surjective correction")
    return _pairing(a, kd, len(kd.complement))


def poly_text(poly: Dict) -> str:
    """Text of a polynomial in P_1 (variable x) or P_2 (variables x1, x2)."""
    from .algebra import format_terms

    if not poly:
        return "0"

    def mono(m):
        if len(m) == 1:
            names = ("x",)
        else:
            names = ("x1", "x2")
        return "*".join(n if e == 1 else "%s^%d" % (n, e) for n, e in zip(names, m) if e)

    return format_terms(sorted(poly.items()), mono)


