"""Sparse exact linear algebra over the active field.

Vectors are dicts ``{key: coeff}`` with comparable keys.  The workhorse is
:class:`EchelonBasis`: each stored row is normalized to 1 at its smallest key,
so reducing a vector only ever introduces larger keys.
"""

from __future__ import annotations

import heapq
from typing import Dict, Hashable, List, Sequence

from .scalars import K


class EchelonBasis:
    def __init__(self, track=False):
        self.rows: Dict[Hashable, dict] = {}
        self.track = track
        self.combos: Dict[Hashable, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        v = dict(vec)
        combo = dict(combo) if combo is not None else None
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen or k not in v:
                continue
            seen.add(k)
            row = self.rows.get(k)
            if row is None:
                continue
            c = v[k]
            for kk, rv in row.items():
                nv = v.get(kk, 0) - c * rv
                if nv:
                    if kk not in v and kk not in seen:
                        heapq.heappush(heap, kk)
                    v[kk] = nv
                else:
                    v.pop(kk, None)
            if combo is not None:
                for kk, cv in self.combos[k].items():
                    nv = combo.get(kk, 0) - c * cv
                    if nv:
                        combo[kk] = nv
                    else:
                        combo.pop(kk, None)
        return v, combo

    def add(self, vec, combo=None):
        """Insert ``vec``; returns (independent?, residual, residual combination)."""
        v, combo = self.reduce(vec, combo if self.track else None)
        if not v:
            return False, v, combo
        k = min(v)
        inv = 1 / K(v[k])
        self.rows[k] = {kk: c * inv for kk, c in v.items()}
        if self.track:
            self.combos[k] = {kk: c * inv for kk, c in combo.items()}
        return True, v, combo

    def contains(self, vec) -> bool:
        v, _ = self.reduce(vec)
        return not v


def rank(vectors: Sequence[dict]) -> int:
    b = EchelonBasis()
    r = 0
    for v in vectors:
        if v and b.add(v)[0]:
            r += 1
    return r


def nullspace(vectors: Sequence[dict]) -> List[dict]:
    """Basis of {c : sum_j c_j vectors[j] = 0}, as dicts {j: c_j}."""
    b = EchelonBasis(track=True)
    out = []
    for j, v in enumerate(vectors):
        ok, _, combo = b.add(v, {j: K(1)})
        if not ok:
            out.append(combo)
    return out


def echelonize(vectors: Sequence[dict]) -> List[dict]:
    """Fully reduced row echelon basis of span(vectors); pivot = smallest key."""
    b = EchelonBasis()
    for v in vectors:
        b.add(v)
    keys = sorted(b.rows)
    rows = {k: dict(b.rows[k]) for k in keys}
    # back-substitute so no row contains another row's pivot
    for k in reversed(keys):
        for k2 in keys:
            if k2 == k:
                continue
            r = rows[k2]
            c = r.get(k)
            if c:
                for kk, v in rows[k].items():
                    nv = r.get(kk, 0) - c * v
                    if nv:
                        r[kk] = nv
                    else:
                        r.pop(kk, None)
    return [rows[k] for k in keys]


def determinant(matrix: Dict[Hashable, dict], keys: Sequence[Hashable]):
    """Determinant of a square sparse matrix given as {row: {col: value}} over ``keys``."""
    index = {k: i for i, k in enumerate(keys)}
    rows = {index[r]: {index[c]: v for c, v in row.items() if v} for r, row in matrix.items()}
    n = len(keys)
    for i in range(n):
        rows.setdefault(i, {})
    det = K(1)
    # column-by-column elimination choosing the sparsest pivot row
    for col in range(n):
        cands = [r for r in range(col, n) if rows[r].get(col)]
        if not cands:
            return K(0)
        p = min(cands, key=lambda r: (len(rows[r]), r))
        if p != col:
            rows[p], rows[col] = rows[col], rows[p]
            det = -det
        prow = rows[col]
        pv = prow[col]
        det = det * pv
        for r in range(col + 1, n):
            c = rows[r].get(col)
            if not c:
                continue
            f = c / K(pv)
            row = rows[r]
            for kk, v in prow.items():
                nv = row.get(kk, 0) - f * v
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
    return det


def solve_dense(a: List[list]):
    """Inverse of a dense square matrix; raises ZeroDivisionError if singular."""
    n = len(a)
    m = [list(r) + [K(1) if i == j else K(0) for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        p = next((r for r in range(col, n) if m[r][col]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[p] = m[p], m[col]
        inv = 1 / K(m[col][col])
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [r[n:] for r in m]
