"""Buchberger's algorithm and ideal arithmetic for homogeneous polynomial ideals.

Intersections use the usual auxiliary-variable elimination

    I cap J = (w*I + (1 - w)*J) cap k[x],

with ``w`` given degree 0 so that the x-grading survives. Colon ideals and
saturation are built on top of that.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import monomial as mono
from .monomial import Monomial, MonomialIdeal
from .poly import Polynomial, RingSpec

log = logging.getLogger(__name__)

SATURATION_CAP = 50


class NotHomogeneous(ValueError):
    pass


class SaturationDiverged(RuntimeError):
    pass


def _neg(key):
    return tuple(-x for x in key)


def _divide_mon(a: Monomial, m: Monomial):
    """m / a if a divides m, else None."""
    q = tuple(y - x for x, y in zip(a, m))
    return q if min(q) >= 0 else None


def _reduce(terms: dict, G: Sequence[Polynomial], ring: RingSpec, full: bool = True) -> dict:
    """Remainder of ``terms`` on division by ``G``.

    With ``full=False`` only the leading term is reduced repeatedly (top
    reduction); the rest of the polynomial is returned untouched.
    """
    key = ring.key
    fld = ring.field
    f = dict(terms)
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    leads = [(g.lead, fld.inv(g.lc), g) for g in G]
    rem: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for lead, inv_lc, g in leads:
            q = _divide_mon(lead, m)
            if q is not None:
                break
        else:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
            continue
        coef = c * inv_lc
        for e, v in g.terms.items():
            if e == lead:
                continue
            mm = tuple(x + y for x, y in zip(e, q))
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
    return rem


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Fully reduced remainder of f modulo G (first matching divisor wins)."""
    G = [g for g in G if g]
    return Polynomial._raw(f.ring, _reduce(f.terms, G, f.ring))


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    L = mono.lcm(f.lead, g.lead)
    fld = f.ring.field
    a = f.mul_term(mono.quotient(L, f.lead), fld.inv(f.lc))
    b = g.mul_term(mono.quotient(L, g.lead), fld.inv(g.lc))
    return a - b


def _update(leads: list[Monomial], pairs: dict, k: int, deg, key) -> list[tuple]:
    """Gebauer-Moeller update after appending basis element ``k``.

    ``pairs`` maps (i, j) -> lcm and is pruned in place; the new pairs are
    returned as heap entries.
    """
    lf = leads[k]
    for (i, j), L in list(pairs.items()):
        if (mono.divides(lf, L) and mono.lcm(leads[i], lf) != L and mono.lcm(leads[j], lf) != L):
            del pairs[i, j]
    groups: dict[Monomial, list[int]] = {}
    for i in range(k):
        groups.setdefault(mono.lcm(leads[i], lf), []).append(i)
    kept: list[Monomial] = []
    new = []
    for L in sorted(groups, key=lambda m: (deg(m), key(m))):
        if any(mono.divides(K, L) for K in kept):
            continue
        kept.append(L)
        members = groups[L]
        if any(mono.lcm(leads[i], lf) == mono.mul(leads[i], lf) for i in members):
            continue
        i = min(members)
        pairs[i, k] = L
        new.append(((deg(L), key(L)), i, k))
    return new


def buchberger(gens: Iterable[Polynomial], ring: RingSpec | None = None) -> list[Polynomial]:
    """Reduced Groebner basis (monic, sorted by increasing leading term)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = ring or gens[0].ring
    key, deg = ring.key, ring.deg
    G: list[Polynomial] = []
    leads: list[Monomial] = []
    pairs: dict = {}
    heap: list = []

    def add(h: Polynomial):
        h = h.monic()
        G.append(h)
        leads.append(h.lead)
        for entry in _update(leads, pairs, len(G) - 1, deg, key):
            heapq.heappush(heap, entry)

    for f in sorted(gens, key=lambda p: (p.degree, key(p.lead))):
        h = Polynomial._raw(ring, _reduce(f.terms, G, ring, full=False))
        if h:
            add(h)
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        del pairs[i, j]
        s = spoly(G[i], G[j])
        h = Polynomial._raw(ring, _reduce(s.terms, G, ring, full=False))
        if h:
            add(h)
    return _reduced(G, ring)


def _reduced(G: list[Polynomial], ring: RingSpec) -> list[Polynomial]:
    key = ring.key
    minimal: list[Polynomial] = []
    for g in sorted(G, key=lambda p: key(p.lead)):
        if not any(mono.divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(Polynomial._raw(ring, _reduce(g.terms, others, ring)).monic())
    return out


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Every S-polynomial reduces to zero."""
    return all(
        not normal_form(spoly(G[i], G[j]), G)
        for i in range(len(G)) for j in range(i + 1, len(G))
    )


@dataclass(frozen=True)
class PolyIdeal:
    ring: RingSpec
    gens: tuple[Polynomial, ...]

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g)
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, *gens: Polynomial) -> PolyIdeal:
        return cls(gens[0].ring, tuple(gens))

    @classmethod
    def from_monomial(cls, I: MonomialIdeal, ring: RingSpec) -> PolyIdeal:
        if ring.n != I.n:
            raise mono.AmbientMismatch(f"ring has {ring.n} variables, ideal {I.n}")
        return cls(ring, tuple(ring.monomial(g) for g in I.gens))

    @cached_property
    def gb(self) -> list[Polynomial]:
        return buchberger(self.gens, self.ring)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def require_homogeneous(self) -> None:
        for g in self.gens:
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.gb)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def is_subset(self, other: PolyIdeal) -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: PolyIdeal) -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def as_monomial(self) -> MonomialIdeal | None:
        """The monomial ideal with the same generators, if every generator is a monomial."""
        if any(len(g.terms) != 1 for g in self.gens):
            return None
        return mono.minimalize((g.lead for g in self.gens), self.ring.n)

    def render(self) -> str:
        return "(" + ", ".join(g.render() for g in self.gens) + ")"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: PolyIdeal) -> PolyIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: PolyIdeal) -> PolyIdeal:
        return ideal_product(self, other)


def _same_ring(I: PolyIdeal, J: PolyIdeal) -> RingSpec:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return I.ring


def ideal_sum(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    return PolyIdeal(_same_ring(I, J), I.gens + J.gens)


def ideal_product(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    ring = _same_ring(I, J)
    prods: list[Polynomial] = []
    for f in I.gens:
        for g in J.gens:
            h = f * g
            if h not in prods:
                prods.append(h)
    return PolyIdeal(ring, tuple(prods))


def power(I: PolyIdeal, k: int) -> PolyIdeal:
    out = PolyIdeal(I.ring, (I.ring.const(1),))
    for _ in range(k):
        out = ideal_product(out, I)
    return out


def _elimination_ring(ring: RingSpec) -> RingSpec:
    w = "_w"
    while w in ring.names:
        w += "_"
    return RingSpec((w,) + ring.names, ring.field, "block", 1, (0,) + (ring.weights or (1,) * ring.n))


def intersect_poly(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """Generators of I cap J (a degrevlex Groebner basis of it, in fact)."""
    ring = _same_ring(I, J)
    if I.is_zero or J.is_zero:
        return PolyIdeal(ring, ())
    big = _elimination_ring(ring)
    shift = list(range(1, big.n))
    w = big.var(big.names[0])
    one = big.const(1)
    gens = [w * f.map_ring(big, shift) for f in I.gens]
    gens += [(one - w) * g.map_ring(big, shift) for g in J.gens]
    G = buchberger(gens, big)
    kept = [
        Polynomial(ring, {m[1:]: c for m, c in g.terms.items()})
        for g in G if g.lead[0] == 0
    ]
    # block order: a w-free leading term means the whole polynomial is w-free
    if I.is_homogeneous() and J.is_homogeneous():
        for g in kept:
            if not g.is_homogeneous():
                raise NotHomogeneous(f"intersection produced inhomogeneous {g}")
    result = PolyIdeal(ring, tuple(kept))
    result.__dict__["gb"] = buchberger(kept, ring)
    return result


def intersect_many_poly(ideals: Sequence[PolyIdeal]) -> PolyIdeal:
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect_poly(out, J)
    return out


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """a / b, raising ArithmeticError when b does not divide a."""
    ring = a.ring
    fld = ring.field
    rem = dict(a.terms)
    quot: dict = {}
    key = ring.key
    inv_lc = fld.inv(b.lc)
    lead = b.lead
    while rem:
        m = max(rem, key=key)
        q = _divide_mon(lead, m)
        if q is None:
            raise ArithmeticError(f"{b} does not divide {a}")
        c = fld.reduce(rem[m] * inv_lc)
        quot[q] = c
        for e, v in b.terms.items():
            mm = tuple(x + y for x, y in zip(e, q))
            nv = fld.reduce(rem.get(mm, 0) - c * v)
            if nv:
                rem[mm] = nv
            else:
                rem.pop(mm, None)
    return Polynomial._raw(ring, quot)


def colon_poly(I: PolyIdeal, f: Polynomial) -> PolyIdeal:
    """I : f, computed as (I cap (f)) / f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    meet = intersect_poly(I, PolyIdeal(I.ring, (f,)))
    return PolyIdeal(I.ring, tuple(divide_exact(g, f).monic() for g in meet.gens))


def colon_ideal(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """I : J as the intersection of I : g over the generators g of J."""
    if J.is_zero:
        return PolyIdeal(I.ring, (I.ring.const(1),))
    return intersect_many_poly([colon_poly(I, g) for g in J.gens])


def saturation(I: PolyIdeal, J: PolyIdeal, cap: int = SATURATION_CAP) -> PolyIdeal:
    """I : J^infinity, by iterating I <- I : J until it stops growing."""
    if J.is_zero:
        raise ValueError("saturation by the zero ideal")
    cur = I
    for rounds in range(1, cap + 1):
        nxt = colon_ideal(cur, J)
        if nxt.is_subset(cur):
            log.debug("saturation stabilized after %d rounds", rounds)
            return cur
        cur = nxt
    raise SaturationDiverged(f"saturation did not stabilize within {cap} rounds")


def maximal_ideal(ring: RingSpec) -> PolyIdeal:
    return PolyIdeal(ring, tuple(ring.gens()))
