"""Graded Betti tables of ideals, with text and JSON renderings.

Index ``i`` counts homological degree in a resolution of the ideal I itself
(``i = 0`` at the generators), so ``beta_i(I) = beta_{i+1}(S/I)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping


@dataclass(frozen=True)
class BettiTable:
    graded: Mapping[tuple[int, int], int]
    multigraded: Mapping[tuple[int, tuple[int, ...]], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if any(r <= 0 for r in self.graded.values()):
            raise ValueError("stored Betti numbers must be positive")

    @classmethod
    def from_multigraded(cls, entries: Mapping[tuple[int, tuple[int, ...]], int]) -> BettiTable:
        entries = {k: v for k, v in entries.items() if v}
        graded: Counter = Counter()
        for (i, b), r in entries.items():
            graded[i, sum(b)] += r
        return cls(dict(sorted(graded.items())), dict(sorted(entries.items())))

    @classmethod
    def from_degree_lists(cls, degrees: list[list[int]]) -> BettiTable:
        """Table of a minimal resolution given the degrees of each free module."""
        graded: Counter = Counter()
        for i, ds in enumerate(degrees):
            for d in ds:
                graded[i, d] += 1
        return cls(dict(sorted(graded.items())))

    @property
    def regularity(self) -> int:
        """max(degree - i); the empty table (unit ideal) has regularity 0."""
        if not self.graded:
            return 0
        return max(d - i for i, d in self.graded)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.graded), default=-1)

    def totals(self) -> list[int]:
        out = [0] * (self.length + 1)
        for (i, _), r in self.graded.items():
            out[i] += r
        return out

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.graded.get(key, 0)

    def render(self) -> str:
        """Rows are homological indices i; column j of row i holds degree i + j."""
        if not self.graded:
            return "(empty)"
        lo = min(d - i for i, d in self.graded)
        hi = self.regularity
        cols = list(range(lo, hi + 1))
        cells = [[str(self[i, i + j]) if self[i, i + j] else "." for j in cols] for i in range(self.length + 1)]
        width = max(len(c) for row in cells for c in row + [str(j) for j in cols])
        lines = ["      " + " ".join(str(j).rjust(width) for j in cols)]
        for i, row in enumerate(cells):
            lines.append(f"{i:>4}: " + " ".join(c.rjust(width) for c in row))
        lines.append("total: " + " ".join(str(t) for t in self.totals()))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "betti": [{"i": i, "degree": d, "rank": r} for (i, d), r in sorted(self.graded.items())],
            "regularity": self.regularity,
        }
