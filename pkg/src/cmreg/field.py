"""Coefficient fields: exact rationals or a prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpq


@dataclass(frozen=True)
class FieldSpec:
    """``prime=None`` means the rationals."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not (self.prime > 1 and gmpy2.is_prime(self.prime)):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls()
        if text.startswith("p:"):
            try:
                return cls(int(text[2:]))
            except ValueError:
                pass
        raise ValueError(f"bad field spec {text!r}; expected q or p:<prime>")

    def __str__(self) -> str:
        return "q" if self.prime is None else f"p:{self.prime}"

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    # coefficient arithmetic used by the polynomial layer

    def coerce(self, c):
        if self.prime is None:
            return mpq(c)
        if isinstance(c, int):
            return c % self.prime
        c = mpq(c)
        return int(c.numerator) * pow(int(c.denominator), -1, self.prime) % self.prime

    def one(self):
        return self.coerce(1)

    def zero(self):
        return self.coerce(0)

    def inv(self, c):
        if self.prime is None:
            return 1 / c
        return pow(c, -1, self.prime)

    def reduce(self, c):
        return c if self.prime is None else c % self.prime

    def to_python(self, c):
        """int when integral, else a ``"a/b"`` string; used for JSON output."""
        if self.prime is not None:
            return int(c)
        c = mpq(c)
        if c.denominator == 1:
            return int(c.numerator)
        return f"{c.numerator}/{c.denominator}"


QQ = FieldSpec()
