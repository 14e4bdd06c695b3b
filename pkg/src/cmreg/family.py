"""The binomial counter-example family in k[x, y, z, t].

For m, n >= 2 let g = x^m t - y^m z, I = (t^n, z^n), K = I + (g) and
J = (g, t^n). Predicted values:

    reg(I cap (g)) = (m + 1) n        vs  reg(I) + reg((g)) = m + 2n
    reg(I J)       = m n + 2 n - 1    vs  reg(I) + reg(J)   = m + 3n - 1
    reg(K)         = (m + 1) n - 1
    (I + J) saturated at (x, y, z, t)  =  (g) + (z, t)^n

so both inequalities fail exactly when (m, n) != (2, 2).
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field as dc_field

from .field import QQ, FieldSpec
from .groebner import PolyIdeal, intersect_poly, maximal_ideal, power, saturation
from .poly import RingSpec
from .resolution import regularity_poly

MAX_FAMILY_DEGREE = 40


@dataclass
class FamilyReport:
    m: int
    n: int
    reg_I: int
    reg_J: int
    reg_g: int
    reg_K: int
    reg_I_cap_g: int
    reg_IJ: int
    saturation_ok: bool
    field: str = "q"
    seconds: float = 0.0
    predicted: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError("the family needs m, n >= 2")
        if not self.predicted:
            self.predicted = predictions(self.m, self.n)

    @property
    def computed(self) -> dict:
        return {
            "reg_I": self.reg_I, "reg_J": self.reg_J, "reg_g": self.reg_g, "reg_K": self.reg_K,
            "reg_I_cap_g": self.reg_I_cap_g, "reg_IJ": self.reg_IJ,
        }

    @property
    def violates_intersection(self) -> bool:
        return self.reg_I_cap_g > self.reg_I + self.reg_g

    @property
    def violates_product(self) -> bool:
        return self.reg_IJ > self.reg_I + self.reg_J

    @property
    def matches(self) -> bool:
        comp = self.computed
        return self.saturation_ok and all(comp[k] == v for k, v in self.predicted.items() if k in comp)

    def to_json(self) -> dict:
        d = asdict(self)
        d.update(
            violates_intersection=self.violates_intersection,
            violates_product=self.violates_product,
            predicted_violation=self.predicted["violation"],
            matches=self.matches,
        )
        return d

    def render(self) -> str:
        p = self.predicted
        rows = [
            ("reg(I cap (g))", self.reg_I_cap_g, p["reg_I_cap_g"]),
            ("reg(K)", self.reg_K, p["reg_K"]),
            ("reg(IJ)", self.reg_IJ, p["reg_IJ"]),
            ("reg(I)", self.reg_I, p["reg_I"]),
            ("reg(J)", self.reg_J, p["reg_J"]),
            ("reg((g))", self.reg_g, p["reg_g"]),
        ]
        lines = [f"family m={self.m} n={self.n} over {self.field}"]
        lines += [f"  {name:<16}{got:>5}   predicted {want}" for name, got, want in rows]
        lines.append(f"  reg(I cap (g)) > reg(I) + reg((g)): {self.violates_intersection}"
                     f"  ({self.reg_I_cap_g} vs {self.reg_I + self.reg_g})")
        lines.append(f"  reg(IJ) > reg(I) + reg(J):          {self.violates_product}"
                     f"  ({self.reg_IJ} vs {self.reg_I + self.reg_J})")
        lines.append(f"  saturation of I + J equals (g) + (z,t)^n: {self.saturation_ok}")
        lines.append(f"  all predictions matched: {self.matches}")
        return "\n".join(lines)


def predictions(m: int, n: int) -> dict:
    return {
        "reg_I": 2 * n - 1,
        "reg_J": m + n,
        "reg_g": m + 1,
        "reg_K": (m + 1) * n - 1,
        "reg_I_cap_g": (m + 1) * n,
        "reg_IJ": m * n + 2 * n - 1,
        "bound_intersection": m + 2 * n,
        "bound_product": m + 3 * n - 1,
        "sigma_prime": m + 3 * n + 1,
        "violation": (m, n) != (2, 2),
    }


def family_ideals(m: int, n: int, field: FieldSpec = QQ) -> dict[str, PolyIdeal]:
    ring = RingSpec(("x", "y", "z", "t"), field)
    x, y, z, t = ring.gens()
    g = x**m * t - y**m * z
    I = PolyIdeal.of(t**n, z**n)
    G = PolyIdeal.of(g)
    J = PolyIdeal.of(g, t**n)
    return {
        "I": I, "J": J, "g": G, "K": I + G, "IJ": I * J,
        "I_Y": G + power(PolyIdeal.of(z, t), n),
    }


def family(m: int, n: int, field: FieldSpec = QQ) -> FamilyReport:
    if m < 2 or n < 2:
        raise ValueError("the family needs m, n >= 2")
    if m * n + 2 * n > MAX_FAMILY_DEGREE:
        raise ValueError(f"(m, n) = ({m}, {n}) exceeds the resource guard")
    t0 = time.perf_counter()
    ids = family_ideals(m, n, field)
    I, J, G = ids["I"], ids["J"], ids["g"]
    ring = I.ring
    sat = saturation(I + J, maximal_ideal(ring))
    return FamilyReport(
        m=m, n=n,
        reg_I=regularity_poly(I),
        reg_J=regularity_poly(J),
        reg_g=regularity_poly(G),
        reg_K=regularity_poly(ids["K"]),
        reg_I_cap_g=regularity_poly(intersect_poly(I, G)),
        reg_IJ=regularity_poly(ids["IJ"]),
        saturation_ok=sat.equals(ids["I_Y"]),
        field=str(field),
        seconds=time.perf_counter() - t0,
    )
