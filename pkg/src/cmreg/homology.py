"""Multigraded Betti numbers of monomial ideals.

The main engine evaluates, for every multidegree b of the lcm lattice, the
reduced homology of the upper Koszul simplicial complex

    K^b(I) = { squarefree s <= b : x^(b - s) in I },

with beta_{i,b}(I) = dim H~_{i-1}(K^b(I)). ``taylor_betti`` is an independent
check that minimizes the Taylor complex instead.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from . import monomial as mono
from .betti import BettiTable
from .field import QQ, FieldSpec
from .linalg import rank
from .monomial import DomainError, Monomial, MonomialIdeal

MAX_LATTICE_GENS = 20
MAX_TAYLOR_GENS = 12


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets over vertices ``0..n-1``. No facets is the void complex; ``[()]`` is {emptyset}."""

    n: int
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, n: int, faces) -> SimplicialComplex:
        faces = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f))
        facets: list[tuple[int, ...]] = []
        for f in faces:
            if not any(set(f) <= set(g) for g in facets):
                facets.append(f)
        return cls(n, tuple(sorted(facets)))

    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        """Faces grouped by dimension (the empty face has dimension -1)."""
        seen: set[tuple[int, ...]] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                seen.update(combinations(f, k))
        out: dict[int, list[tuple[int, ...]]] = defaultdict(list)
        for f in sorted(seen):
            out[len(f) - 1].append(f)
        return dict(out)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)


def lcm_lattice(I: MonomialIdeal) -> set[Monomial]:
    """lcms of all nonempty subsets of the generators."""
    if I.is_zero:
        raise DomainError("lcm lattice of the zero ideal")
    if len(I.gens) > MAX_LATTICE_GENS:
        raise GuardExceeded(f"{len(I.gens)} generators exceeds the lcm-lattice guard {MAX_LATTICE_GENS}")
    lattice: set[Monomial] = set()
    for g in I.gens:
        lattice |= {mono.lcm(g, m) for m in lattice}
        lattice.add(g)
    return lattice


def upper_koszul(I: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    supp = [i for i, e in enumerate(b) if e]
    faces = []
    for k in range(len(supp) + 1):
        for s in combinations(supp, k):
            m = list(b)
            for i in s:
                m[i] -= 1
            if mono.contains(I, tuple(m)):
                faces.append(s)
    return SimplicialComplex.from_faces(I.n, faces)


def _boundary(rows_faces, cols_faces) -> list[list[int]]:
    index = {f: i for i, f in enumerate(rows_faces)}
    mat = [[0] * len(cols_faces) for _ in rows_faces]
    for c, f in enumerate(cols_faces):
        for j in range(len(f)):
            mat[index[f[:j] + f[j + 1:]]][c] = -1 if j % 2 else 1
    return mat


def reduced_homology_dims(C: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """dims[k + 1] = dim H~_k(C) for k = -1, 0, ..., dim C."""
    faces = C.faces()
    if not faces:
        return [0]
    top = max(faces)
    counts = {k: len(faces.get(k, [])) for k in range(-1, top + 1)}
    ranks = {k: rank(_boundary(faces[k - 1], faces[k]), field) for k in range(0, top + 1)}
    ranks[top + 1] = 0
    ranks[-1] = 0
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(-1, top + 1)]


def betti_multigraded(I: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    if I.is_zero:
        raise DomainError("Betti numbers of the zero ideal")
    if I.is_unit:
        return BettiTable.from_multigraded({(0, I.gens[0]): 1})
    entries = {}
    for b in lcm_lattice(I):
        for i, d in enumerate(reduced_homology_dims(upper_koszul(I, b), field)):
            if d:
                entries[i, b] = d
    return BettiTable.from_multigraded(entries)


def regularity(I: MonomialIdeal, field: FieldSpec = QQ) -> int:
    """Castelnuovo-Mumford regularity of I; the unit ideal has regularity 0."""
    if I.is_zero:
        raise DomainError("regularity of the zero ideal")
    if I.is_unit:
        return 0
    return betti_multigraded(I, field).regularity


def taylor_betti(I: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Betti numbers from the Taylor complex after cancelling its unit entries.

    In multidegree b the unit entries of the Taylor differential connect
    subsets whose lcm is exactly b, so minimizing amounts to eliminating
    inside each such strand: beta_{i,b} = dim C_i - rank d_i - rank d_{i+1}.
    """
    if I.is_zero:
        raise DomainError("Betti numbers of the zero ideal")
    gens = I.gens
    if len(gens) > MAX_TAYLOR_GENS:
        raise GuardExceeded(f"{len(gens)} generators exceeds the Taylor guard {MAX_TAYLOR_GENS}")
    strands: dict[Monomial, dict[int, list[tuple[int, ...]]]] = defaultdict(lambda: defaultdict(list))
    lcms: dict[tuple[int, ...], Monomial] = {}
    for k in range(1, len(gens) + 1):
        for s in combinations(range(len(gens)), k):
            m = gens[s[0]] if k == 1 else mono.lcm(lcms[s[:-1]], gens[s[-1]])
            lcms[s] = m
            strands[m][k - 1].append(s)
    entries = {}
    for b, cells in strands.items():
        top = max(cells)
        ranks = {0: 0, top + 1: 0}
        for i in range(1, top + 1):
            ranks[i] = rank(_boundary_in_strand(cells.get(i - 1, []), cells.get(i, [])), field)
        for i in range(top + 1):
            beta = len(cells.get(i, [])) - ranks[i] - ranks[i + 1]
            if beta:
                entries[i, b] = beta
    return BettiTable.from_multigraded(entries)


def _boundary_in_strand(rows_cells, cols_cells) -> list[list[int]]:
    if not rows_cells or not cols_cells:
        return []
    index = {s: i for i, s in enumerate(rows_cells)}
    mat = [[0] * len(cols_cells) for _ in rows_cells]
    for c, s in enumerate(cols_cells):
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            r = index.get(face)
            if r is not None:
                mat[r][c] = -1 if j % 2 else 1
    return mat
