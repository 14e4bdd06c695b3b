"""Sparse polynomials over an exact field with a fixed term order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .field import QQ, FieldSpec
from .monomial import Monomial, render_monomial

ORDERS = ("degrevlex", "lex", "block")


@dataclass(frozen=True)
class RingSpec:
    """Polynomial ring k[names] with a term order.

    ``order="block"`` eliminates the first ``elim`` variables: monomials are
    compared by degrevlex on that block first, then degrevlex on the rest.
    ``weights`` sets the grading (default: every variable has degree 1).
    """

    names: tuple[str, ...]
    field: FieldSpec = QQ
    order: str = "degrevlex"
    elim: int = 0
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"repeated variable names in {self.names}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown term order {self.order!r}")
        if self.order == "block" and not 0 < self.elim < len(self.names):
            raise ValueError("block order needs 0 < elim < number of variables")
        if self.weights is not None and len(self.weights) != len(self.names):
            raise ValueError("one weight per variable")

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def key(self):
        """Sort key on exponent tuples; larger key means larger monomial."""
        n = self.n
        if self.order == "lex":
            return lambda a: a
        if self.order == "degrevlex":
            w = self.weights
            if w is None:
                return lambda a: (sum(a), *(-a[i] for i in range(n - 1, -1, -1)))
            return lambda a: (sum(x * y for x, y in zip(a, w)), *(-a[i] for i in range(n - 1, -1, -1)))
        k = self.elim
        return lambda a: (
            sum(a[:k]), *(-a[i] for i in range(k - 1, -1, -1)),
            sum(a[k:]), *(-a[i] for i in range(n - 1, k - 1, -1)),
        )

    @cached_property
    def deg(self):
        w = self.weights
        if w is None:
            return sum
        return lambda a: sum(x * y for x, y in zip(a, w))

    def with_order(self, order: str, elim: int = 0, weights=None) -> RingSpec:
        return RingSpec(self.names, self.field, order, elim, weights)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def var(self, name: str) -> Polynomial:
        e = [0] * self.n
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.names]

    def monomial(self, exps: Monomial, coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): coeff})

    def const(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: c})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})


class Polynomial:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, object] | Iterable = ()):
        f = ring.field
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            c = f.coerce(c)
            if c:
                m = tuple(m)
                if len(m) != ring.n:
                    raise ValueError(f"exponent {m} does not fit ring with {ring.n} variables")
                clean[m] = c
        self.ring = ring
        self.terms = clean
        self._lead = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict) -> Polynomial:
        # terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._lead = None
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    @property
    def lead(self) -> Monomial:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.key)
        return self._lead

    @property
    def lc(self):
        return self.terms[self.lead]

    @property
    def degree(self) -> int:
        deg = self.ring.deg
        return max(deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        deg = self.ring.deg
        return len({deg(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial._raw(self.ring, _add(self.terms, other.terms, 1, self.ring.field))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return Polynomial._raw(self.ring, _add(self.terms, other.terms, -1, self.ring.field))

    def __neg__(self) -> Polynomial:
        f = self.ring.field
        return Polynomial._raw(self.ring, {m: f.reduce(-c) for m, c in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        f = self.ring.field
        if not isinstance(other, Polynomial):
            c = f.coerce(other)
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: f.reduce(c * v) for m, v in self.terms.items()})
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                v = f.reduce(out.get(m, 0) + ca * cb)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def mul_term(self, m: Monomial, c=1) -> Polynomial:
        f = self.ring.field
        c = f.coerce(c)
        return Polynomial._raw(
            self.ring,
            {tuple(x + y for x, y in zip(a, m)): f.reduce(c * v) for a, v in self.terms.items()},
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self * self.ring.field.inv(self.lc)

    def primitive(self) -> Polynomial:
        """Over Q, scale to coprime integer coefficients with positive leading coefficient."""
        if not self.terms or not self.ring.field.is_rational:
            return self.monic()
        from math import gcd, lcm

        den = lcm(*(int(c.denominator) for c in self.terms.values()))
        nums = [int(c * den) for c in self.terms.values()]
        g = gcd(*nums)
        s = 1 if self.lc > 0 else -1
        return self * (s * den / self.ring.field.coerce(g))

    def map_ring(self, ring: RingSpec, positions: Sequence[int] | None = None) -> Polynomial:
        """Re-embed into ``ring``; ``positions[i]`` is the new index of variable i."""
        if positions is None:
            return Polynomial(ring, self.terms)
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.n
            for i, v in enumerate(m):
                e[positions[i]] += v
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def render(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        f = self.ring.field
        pieces = []
        for m, c in self.sorted_terms():
            c = f.to_python(c)
            if f.prime is not None and c > f.prime // 2:
                c -= f.prime
            neg = (c < 0) if isinstance(c, int) else c.startswith("-")
            mag = (-c if isinstance(c, int) else c.lstrip("-")) if neg else c
            mon = render_monomial(m, names)
            if mon == "1":
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"


def _add(a: dict, b: dict, sign: int, f: FieldSpec) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = f.reduce(out.get(m, 0) + sign * c)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out
