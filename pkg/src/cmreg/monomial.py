"""Monomials and monomial ideals with canonical minimal generators.

A monomial is a plain tuple of non-negative exponents. A ``MonomialIdeal``
stores its minimal generators sorted by (degree, exponent tuple), so two
ideals are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

MAX_HEIGHT_VARS = 16


class AmbientMismatch(ValueError):
    """Raised when monomials or ideals live in rings with different variable counts."""


class DomainError(ValueError):
    """Raised when an operation is undefined for its argument (zero or unit ideal, non-CI, ...)."""


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b): exponents of a truncated at zero after subtracting b."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def sort_key(m: Monomial):
    return (sum(m), m)


def render_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    """Render as ``x^2*y``; the unit monomial is ``1``."""
    if names is None:
        names = default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def default_names(n: int) -> list[str]:
    if n <= 4:
        return list("xyzt"[:n])
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i}" for i in range(n)]


def _check_len(ms: Iterable[Monomial], n: int) -> None:
    for m in ms:
        if len(m) != n:
            raise AmbientMismatch(f"monomial {m} has length {len(m)}, expected {n}")


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        _check_len(self.gens, self.n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def render(self, names: Sequence[str] | None = None) -> str:
        return "(" + ", ".join(render_monomial(g, names) for g in self.gens) + ")"

    def __str__(self) -> str:
        return self.render()


def minimalize(monomials: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Canonical minimal generating set of the ideal generated by ``monomials``."""
    ms = sorted(set(tuple(m) for m in monomials), key=sort_key)
    _check_len(ms, n)
    kept: list[Monomial] = []
    for m in ms:
        # sorted by degree, so only earlier (smaller or equal degree) ones can divide m
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(kept))


def ideal(*monomials: Monomial, n: int | None = None) -> MonomialIdeal:
    if n is None:
        if not monomials:
            raise ValueError("need n for the zero ideal")
        n = len(monomials[0])
    return minimalize(monomials, n)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (unit(n),))


def maximal_ideal(n: int) -> MonomialIdeal:
    return minimalize([variable(i, n) for i in range(n)], n)


def principal(m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(len(m), (tuple(m),))


def _same(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.n != J.n:
        raise AmbientMismatch(f"ideals in {I.n} and {J.n} variables")
    return I.n


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same(I, J)
    return minimalize((mul(a, b) for a in I.gens for b in J.gens), n)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same(I, J)
    return minimalize((lcm(a, b) for a in I.gens for b in J.gens), n)


def intersect_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty intersection")
    return reduce(intersect, ideals)


def product_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty product")
    return reduce(product, ideals)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same(I, J)
    return minimalize(I.gens + J.gens, n)


def colon_monomial(I: MonomialIdeal, q: Monomial) -> MonomialIdeal:
    if len(q) != I.n:
        raise AmbientMismatch(f"monomial {q} has length {len(q)}, expected {I.n}")
    return minimalize((quotient(g, q) for g in I.gens), I.n)


def colon(I: MonomialIdeal, Q: MonomialIdeal) -> MonomialIdeal:
    """I : Q. By convention I : (0) is the unit ideal."""
    n = _same(I, Q)
    if Q.is_zero:
        return unit_ideal(n)
    return intersect_many([colon_monomial(I, q) for q in Q.gens])


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.n:
        raise AmbientMismatch(f"monomial {m} has length {len(m)}, expected {I.n}")
    return any(divides(g, m) for g in I.gens)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same(I, J)
    return all(contains(J, g) for g in I.gens)


def lcm_of_generators(I: MonomialIdeal) -> Monomial:
    if I.is_zero:
        raise DomainError("lcm of the generators of the zero ideal")
    return reduce(lcm, I.gens)


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise DomainError("zero ideal")
    if I.is_unit:
        raise DomainError("unit ideal")


def height(I: MonomialIdeal) -> int:
    """Smallest number of variables meeting the support of every generator."""
    _require_proper_nonzero(I)
    if I.n > MAX_HEIGHT_VARS:
        raise DomainError(f"height search limited to {MAX_HEIGHT_VARS} variables")
    supports = [support(g) for g in I.gens]
    used = sorted(frozenset().union(*supports))
    for k in range(1, len(used) + 1):
        for cover in combinations(used, k):
            c = set(cover)
            if all(s & c for s in supports):
                return k
    raise AssertionError("unreachable: the full support is a cover")


def is_complete_intersection(I: MonomialIdeal) -> bool:
    seen: set[int] = set()
    for g in I.gens:
        s = support(g)
        if s & seen:
            return False
        seen |= s
    return True


def ci_regularity(I: MonomialIdeal) -> int:
    """Regularity of a monomial complete intersection: sum of degrees - r + 1."""
    _require_proper_nonzero(I)
    if not is_complete_intersection(I):
        raise DomainError(f"{I} is not a complete intersection")
    return sum(degree(g) for g in I.gens) - len(I.gens) + 1


def ht_regularity_bound(I: MonomialIdeal) -> int:
    """deg lcm(gens) - ht(I) + 1, an upper bound for reg(I)."""
    return degree(lcm_of_generators(I)) - height(I) + 1
