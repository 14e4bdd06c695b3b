"""Graded free resolutions via Schreyer's algorithm, and their minimization.

The reduced Groebner basis of I is resolved level by level: the syzygies
produced by reducing S-pairs to zero form a Groebner basis of the syzygy
module for the induced (Schreyer) order, so the next level needs no further
Buchberger run. Elements at each level are sorted so that leading terms in a
common component decrease lexicographically, which bounds the length by the
number of variables. ``minimize`` then cancels unit entries.
"""

from __future__ import annotations

import heapq
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from . import monomial as mono
from .betti import BettiTable
from .groebner import PolyIdeal, _neg
from .monomial import DomainError, MonomialIdeal
from .poly import Polynomial, RingSpec

log = logging.getLogger(__name__)

Column = dict  # row index -> Polynomial


@dataclass
class Resolution:
    """F_L -> ... -> F_0 -> S with ``maps[k][c]`` the image of basis vector c of F_k.

    ``degrees[k]`` lists the degrees of the basis of F_k. Rows of ``maps[0]``
    index the single basis vector of S (degree 0).
    """

    ring: RingSpec
    degrees: list[list[int]]
    maps: list[list[Column]]
    minimal: bool = False
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def length(self) -> int:
        return len(self.degrees) - 1

    def ranks(self) -> list[int]:
        return [len(d) for d in self.degrees]

    def row_degrees(self, k: int) -> list[int]:
        return [0] if k == 0 else self.degrees[k - 1]

    def betti(self) -> BettiTable:
        return BettiTable.from_degree_lists(self.degrees)

    def entry(self, k: int, r: int, c: int) -> Polynomial:
        return self.maps[k][c].get(r, self.ring.zero())

    def check_composition(self) -> bool:
        """d_{k-1} o d_k = 0 for every k."""
        zero = self.ring.zero()
        for k in range(1, len(self.maps)):
            prev = self.maps[k - 1]
            for col in self.maps[k]:
                acc: dict = {}
                for r, p in col.items():
                    for a, q in prev[r].items():
                        acc[a] = acc.get(a, zero) + q * p
                if any(v for v in acc.values()):
                    return False
        return True

    def check_degrees(self) -> bool:
        for k, cols in enumerate(self.maps):
            rows = self.row_degrees(k)
            for c, col in enumerate(cols):
                for r, p in col.items():
                    want = self.degrees[k][c] - rows[r]
                    if not p or not p.is_homogeneous() or p.degree != want:
                        return False
        return True

    def check_minimal(self) -> bool:
        """No differential has a nonzero constant entry (the augmentation is ignored)."""
        return not any(
            p.is_constant() for cols in self.maps[1:] for col in cols for p in col.values()
        )

    def check_length(self) -> bool:
        # a resolution of S/I has length <= n, so one of I has length <= n - 1
        return self.length < max(self.ring.n, 1)

    def is_valid(self) -> bool:
        return self.check_composition() and self.check_degrees() and self.check_length()


class _Level:
    """Schreyer order on a free module whose basis is one level of the frame."""

    __slots__ = ("parent", "ring_key", "leads", "cache")

    def __init__(self, parent, ring_key, leads):
        self.parent = parent
        self.ring_key = ring_key
        self.leads = leads
        self.cache: dict = {}

    def key(self, mon):
        k = self.cache.get(mon)
        if k is None:
            i, a = mon
            if self.parent is None:
                k = self.ring_key(a)
            else:
                comp, e = self.leads[i]
                k = self.parent.key((comp, tuple(x + y for x, y in zip(a, e)))) + (-i,)
            self.cache[mon] = k
        return k


def _syzygy_of_pair(E, leads, inv_lc, by_comp, level, i, j, L, fld):
    """Reduce the S-pair of elements i, j to zero; return the syzygy vector."""
    comp, ei = leads[i]
    _, ej = leads[j]
    mi = tuple(a - b for a, b in zip(L, ei))
    mj = tuple(a - b for a, b in zip(L, ej))
    syz = {(i, mi): fld.reduce(inv_lc[i]), (j, mj): fld.reduce(-inv_lc[j])}
    f: dict = {}
    for (c, e), v in E[i].items():
        f[c, tuple(x + y for x, y in zip(e, mi))] = fld.reduce(v * inv_lc[i])
    for (c, e), v in E[j].items():
        m = (c, tuple(x + y for x, y in zip(e, mj)))
        nv = fld.reduce(f.get(m, 0) - v * inv_lc[j])
        if nv:
            f[m] = nv
        else:
            f.pop(m, None)
    key = level.key
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        mc, me = m
        for u in by_comp.get(mc, ()):
            q = tuple(y - x for x, y in zip(leads[u][1], me))
            if min(q) >= 0:
                break
        else:
            raise AssertionError("S-pair does not reduce to zero: frame is not a Groebner basis")
        coef = fld.reduce(c * inv_lc[u])
        sk = (u, q)
        nv = fld.reduce(syz.get(sk, 0) - coef)
        if nv:
            syz[sk] = nv
        else:
            syz.pop(sk, None)
        lead_u = leads[u]
        for (cc, e), v in E[u].items():
            if (cc, e) == lead_u:
                continue
            mm = (cc, tuple(x + y for x, y in zip(e, q)))
            old = f.get(mm)
            if old is None:
                f[mm] = fld.reduce(-coef * v)
                heapq.heappush(heap, (_neg(key(mm)), mm))
            else:
                nv = fld.reduce(old - coef * v)
                if nv:
                    f[mm] = nv
                else:
                    del f[mm]
    return syz


def _lex_sorted(E: list[dict], leads: list) -> tuple[list[dict], list, list[int]]:
    order = sorted(range(len(E)), key=lambda u: (leads[u][0], tuple(-x for x in leads[u][1])))
    return [E[u] for u in order], [leads[u] for u in order], order


def schreyer_syzygies(E: list[dict], leads: list, level: _Level, ring: RingSpec):
    """Syzygies of a Groebner basis ``E`` of vectors in the module ordered by ``level``.

    Returns (syzygy vectors, their leading monomials). Only pairs whose
    leading multiplier is minimal for its row survive.
    """
    fld = ring.field
    inv_lc = [fld.inv(E[u][leads[u]]) for u in range(len(E))]
    by_comp: dict = {}
    for u, (c, _) in enumerate(leads):
        by_comp.setdefault(c, []).append(u)
    out, out_leads = [], []
    for i in range(len(E)):
        comp, ei = leads[i]
        cands: dict = {}
        for j in by_comp[comp]:
            if j <= i:
                continue
            L = mono.lcm(ei, leads[j][1])
            m = tuple(a - b for a, b in zip(L, ei))
            cands.setdefault(m, (j, L))
        ms = sorted(cands, key=mono.sort_key)
        kept = []
        for m in ms:
            if not any(mono.divides(k, m) for k in kept):
                kept.append(m)
        for m in kept:
            j, L = cands[m]
            out.append(_syzygy_of_pair(E, leads, inv_lc, by_comp, level, i, j, L, fld))
            out_leads.append((i, m))
    return out, out_leads


def _to_columns(E: list[dict], ring: RingSpec) -> list[Column]:
    cols = []
    for vec in E:
        col: dict = {}
        for (c, e), v in vec.items():
            col.setdefault(c, {})[e] = v
        cols.append({r: Polynomial._raw(ring, t) for r, t in sorted(col.items())})
    return cols


def free_resolution(I: PolyIdeal, max_steps: int | None = None) -> Resolution:
    """Schreyer resolution of the ideal I (generally not minimal)."""
    ring = I.ring
    if I.is_zero:
        raise DomainError("resolution of the zero ideal")
    I.require_homogeneous()
    cap = max_steps if max_steps is not None else ring.n + 1
    deg = ring.deg
    G = I.gb
    E = [{(0, m): c for m, c in g.terms.items()} for g in G]
    leads = [(0, g.lead) for g in G]
    E, leads, order = _lex_sorted(E, leads)
    degrees = [[G[u].degree for u in order]]
    maps = [[{0: G[u]} for u in order]]
    # order on the module containing E; starts as the term order on S itself
    level = _Level(None, ring.key, None)
    while True:
        syz, syz_leads = schreyer_syzygies(E, leads, level, ring)
        level = _Level(level, ring.key, leads)
        if not syz:
            break
        if len(degrees) >= cap:
            raise RuntimeError(f"resolution exceeded {cap} steps")
        syz, syz_leads, order = _lex_sorted(syz, syz_leads)
        prev = degrees[-1]
        degrees.append([deg(m) + prev[i] for i, m in syz_leads])
        maps.append(_to_columns(syz, ring))
        log.debug("level %d: %d generators", len(degrees) - 1, len(syz))
        E, leads = syz, syz_leads
    return Resolution(ring, degrees, maps)


def taylor_resolution(I: MonomialIdeal, ring: RingSpec) -> Resolution:
    """The Taylor resolution of a monomial ideal, as explicit matrices."""
    if I.is_zero:
        raise DomainError("resolution of the zero ideal")
    gens = I.gens
    r = len(gens)
    cells = [list(combinations(range(r), k + 1)) for k in range(r)]
    lcms = {}
    for k in range(r):
        for s in cells[k]:
            lcms[s] = gens[s[0]] if k == 0 else mono.lcm(lcms[s[:-1]], gens[s[-1]])
    degrees = [[sum(lcms[s]) for s in cells[k]] for k in range(r)]
    maps = [[{0: ring.monomial(lcms[s])} for s in cells[0]]]
    for k in range(1, r):
        index = {s: i for i, s in enumerate(cells[k - 1])}
        cols = []
        for s in cells[k]:
            col = {}
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                coeff = -1 if j % 2 else 1
                col[index[face]] = ring.monomial(mono.quotient(lcms[s], lcms[face]), coeff)
            cols.append(col)
        maps.append(cols)
    return Resolution(ring, degrees, maps)


class _Work:
    """Mutable sparse view of one differential for cancellation."""

    def __init__(self, cols: list[Column]):
        self.cols = {c: dict(col) for c, col in enumerate(cols)}
        self.rows: dict[int, set[int]] = {}
        for c, col in self.cols.items():
            for r in col:
                self.rows.setdefault(r, set()).add(c)

    def set(self, r, c, p):
        if p:
            self.cols[c][r] = p
            self.rows.setdefault(r, set()).add(c)
        else:
            self.cols[c].pop(r, None)
            self.rows.get(r, set()).discard(c)

    def drop_col(self, c):
        for r in self.cols.pop(c, {}):
            self.rows[r].discard(c)

    def drop_row(self, r):
        for c in self.rows.pop(r, set()):
            self.cols[c].pop(r, None)


def minimize(R: Resolution) -> Resolution:
    """Cancel unit entries until the resolution is minimal."""
    if R.minimal:
        return R
    ring = R.ring
    fld = ring.field
    work = [_Work(cols) for cols in R.maps]
    alive = [set(range(len(d))) for d in R.degrees]
    cancelled = 0
    for k in range(1, len(work)):
        W = work[k]
        rowdeg = R.degrees[k - 1]
        coldeg = R.degrees[k]
        while True:
            pivot = None
            best = None
            for c in sorted(W.cols):
                col = W.cols[c]
                for r, p in col.items():
                    if rowdeg[r] == coldeg[c] and p.is_constant():
                        cost = (len(col) - 1) * (len(W.rows[r]) - 1)
                        if best is None or cost < best:
                            best, pivot = cost, (r, c)
                            if cost == 0:
                                break
                if best == 0:
                    break
            if pivot is None:
                break
            r, c = pivot
            col_c = W.cols[c]
            inv_u = fld.inv(col_c[r].lc)
            for b in sorted(W.rows[r] - {c}):
                factor = W.cols[b][r] * inv_u
                for a, p in col_c.items():
                    old = W.cols[b].get(a)
                    new = (old - factor * p) if old is not None else -(factor * p)
                    W.set(a, b, new)
            W.drop_col(c)
            W.drop_row(r)
            work[k - 1].drop_col(r)
            if k + 1 < len(work):
                work[k + 1].drop_row(c)
            alive[k].discard(c)
            alive[k - 1].discard(r)
            cancelled += 1
    # compact
    degrees, maps = [], []
    remap_prev = {0: 0}
    for k in range(len(work)):
        keep = sorted(alive[k])
        remap = {old: new for new, old in enumerate(keep)}
        degrees.append([R.degrees[k][c] for c in keep])
        maps.append([{remap_prev[r]: p for r, p in sorted(work[k].cols[c].items())} for c in keep])
        remap_prev = remap
    while degrees and not degrees[-1]:
        degrees.pop()
        maps.pop()
    out = Resolution(ring, degrees, maps, minimal=True)
    out.stats = {"cancelled": cancelled, "ranks_before": R.ranks()}
    return out


def minimal_resolution(I: PolyIdeal) -> Resolution:
    return minimize(free_resolution(I))


def graded_betti(I: PolyIdeal) -> BettiTable:
    return minimal_resolution(I).betti()


def regularity_poly(I: PolyIdeal) -> int:
    if I.is_zero:
        raise DomainError("regularity of the zero ideal")
    return graded_betti(I).regularity


def hilbert_numerator(R: Resolution | PolyIdeal) -> list[int]:
    """Coefficients of the K-polynomial of S/I, alternating sum over the resolution."""
    if isinstance(R, PolyIdeal):
        R = free_resolution(R)
    coeffs: Counter = Counter({0: 1})
    for k, ds in enumerate(R.degrees):
        sign = -1 if k % 2 == 0 else 1
        for d in ds:
            coeffs[d] += sign
    top = max((d for d, c in coeffs.items() if c), default=0)
    return [coeffs[d] for d in range(top + 1)]


def monomial_regularity(I: MonomialIdeal, ring: RingSpec | None = None) -> int:
    """Regularity of a monomial ideal through the resolution engine."""
    if I.is_zero:
        raise DomainError("regularity of the zero ideal")
    if I.is_unit:
        return 0
    ring = ring or RingSpec(tuple(mono.default_names(I.n)))
    return regularity_poly(PolyIdeal.from_monomial(I, ring))


def betti_from_monomial(I: MonomialIdeal, ring: RingSpec | None = None) -> BettiTable:
    ring = ring or RingSpec(tuple(mono.default_names(I.n)))
    return graded_betti(PolyIdeal.from_monomial(I, ring))
