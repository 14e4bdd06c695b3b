"""Seeded randomized checks of the regularity inequalities for monomial ideals.

Every asserted check is backed by a theorem, so a failing trial means an
engine bug. The product-colon explorer is the one exception: it records
outcomes of an open inequality and never fails a run.

Per-trial seeds come from ``derive_seed``: the first 8 bytes (big endian) of
BLAKE2b over the UTF-8 string ``"{master}/{check_id}/{trial}"``.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path
from typing import Callable, Sequence

from . import homology
from . import monomial as mono
from .field import QQ, FieldSpec
from .monomial import Monomial, MonomialIdeal


def derive_seed(master: int, check_id: str, trial: int) -> int:
    digest = hashlib.blake2b(f"{master}/{check_id}/{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


# -- instance generators ----------------------------------------------------


def random_monomial_ci(n: int, r: int, max_deg: int, seed) -> MonomialIdeal:
    """r monomials with pairwise disjoint nonempty supports, exponents in [1, max_deg]."""
    if r > n:
        raise ValueError(f"cannot place {r} disjoint supports in {n} variables")
    if r < 1 or max_deg < 1:
        raise ValueError("need r >= 1 and max_deg >= 1")
    rng = _rng(seed)
    order = list(range(n))
    rng.shuffle(order)
    supports = [[v] for v in order[:r]]
    for v in order[r:]:
        # leave most spare variables unused so the lcm lattice stays small
        if rng.random() < 0.25:
            supports[rng.randrange(r)].append(v)
    gens = []
    for s in supports:
        e = [0] * n
        for v in s:
            e[v] = rng.randint(1, max_deg)
        gens.append(tuple(e))
    return mono.minimalize(gens, n)


def random_monomial(n: int, max_deg: int, rng: random.Random, min_deg: int = 1) -> Monomial:
    d = rng.randint(min_deg, max_deg)
    e = [0] * n
    for _ in range(d):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_monomial_ideal(n: int, ngens: int, max_deg: int, seed) -> MonomialIdeal:
    """A proper nonzero monomial ideal with at most ``ngens`` generators of degree <= max_deg.

    Draws continue until ``ngens`` minimal generators exist or a fixed budget
    of attempts runs out (small n and max_deg cannot always reach ngens).
    """
    rng = _rng(seed)
    I = mono.principal(random_monomial(n, max_deg, rng))
    for _ in range(12 * ngens):
        if len(I.gens) >= ngens:
            break
        m = random_monomial(n, max_deg, rng)
        if not mono.contains(I, m):
            I = mono.minimalize(I.gens + (m,), n)
    return I


def random_q(n: int, max_gens: int, max_deg: int, seed, unit_prob: float = 0.15) -> MonomialIdeal:
    """A colon partner: possibly the unit ideal, otherwise a small monomial ideal."""
    rng = _rng(seed)
    if rng.random() < unit_prob:
        return mono.unit_ideal(n)
    return random_monomial_ideal(n, rng.randint(1, max_gens), max_deg, rng)


# -- reports ------------------------------------------------------------------


@dataclass
class CheckReport:
    """Outcome of an asserted, theorem-backed inequality."""

    check_id: str
    lhs: int
    bound: int
    holds: bool
    inputs: list[str] = dc_field(default_factory=list)
    seed: int | None = None
    trial: int | None = None
    details: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    asserted = True

    @property
    def notable(self) -> bool:
        return not self.holds

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["kind"] = "asserted" if self.asserted else "exploration"
        d["notable"] = self.notable
        if not timing:
            d.pop("seconds")
        return d


@dataclass
class ExplorationReport(CheckReport):
    """Outcome of an open inequality; recorded, never asserted."""

    asserted = False


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.seconds = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def reg(I: MonomialIdeal, field: FieldSpec = QQ, engine: str = "homology") -> int:
    """Regularity with reg(S) = 0; ``engine`` is homology, resolution or both."""
    if I.is_unit:
        return 0
    if engine == "homology":
        return homology.regularity(I, field)
    from .poly import RingSpec
    from .resolution import monomial_regularity

    ring = RingSpec(tuple(mono.default_names(I.n)), field)
    r = monomial_regularity(I, ring)
    if engine == "both":
        h = homology.regularity(I, field)
        if h != r:
            raise AssertionError(f"engines disagree on {I}: homology {h}, resolution {r}")
    elif engine != "resolution":
        raise ValueError(f"unknown engine {engine!r}")
    return r


def _require_ci(*ideals: MonomialIdeal) -> None:
    for I in ideals:
        if I.is_zero or I.is_unit or not mono.is_complete_intersection(I):
            raise mono.DomainError(f"{I} is not a proper monomial complete intersection")


# -- checks ---------------------------------------------------------------------


@_timed
def check_product(I: MonomialIdeal, J: MonomialIdeal, field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(IJ) <= reg(I) + reg(J) for monomial complete intersections."""
    _require_ci(I, J)
    lhs = reg(mono.product(I, J), field, engine)
    bound = mono.ci_regularity(I) + mono.ci_regularity(J)
    return CheckReport("product", lhs, bound, lhs <= bound, [str(I), str(J)])


@_timed
def check_intersection(ideals: Sequence[MonomialIdeal], field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(I_1 cap ... cap I_d) <= sum of reg(I_j)."""
    _require_ci(*ideals)
    lhs = reg(mono.intersect_many(ideals), field, engine)
    bound = sum(mono.ci_regularity(I) for I in ideals)
    return CheckReport(f"intersection{len(ideals)}", lhs, bound, lhs <= bound, [str(I) for I in ideals])


def mixed_ideal(I: MonomialIdeal, J: MonomialIdeal, Qs: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """f_1 (J : Q_1) + ... + f_r (J : Q_r) over the generators f_i of I."""
    if len(Qs) != len(I.gens):
        raise ValueError(f"need {len(I.gens)} colon partners, got {len(Qs)}")
    parts = [mono.product(mono.principal(f), mono.colon(J, Q)) for f, Q in zip(I.gens, Qs)]
    out = parts[0]
    for p in parts[1:]:
        out = mono.ideal_sum(out, p)
    return out


@_timed
def check_mixed(I, J, Qs, field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(sum_i f_i (J : Q_i)) <= reg(I) + reg(J)."""
    _require_ci(I, J)
    L = mixed_ideal(I, J, Qs)
    lhs = reg(L, field, engine)
    bound = mono.ci_regularity(I) + mono.ci_regularity(J)
    return CheckReport("mixed", lhs, bound, lhs <= bound, [str(I), str(J)] + [str(Q) for Q in Qs],
                       details={"ideal": str(L)})


@_timed
def check_colon(I: MonomialIdeal, Q: MonomialIdeal, field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(I : Q) <= reg(I) for a monomial complete intersection I."""
    _require_ci(I)
    C = mono.colon(I, Q)
    lhs = reg(C, field, engine)
    bound = mono.ci_regularity(I)
    return CheckReport("colon", lhs, bound, lhs <= bound, [str(I), str(Q)], details={"colon": str(C)})


@_timed
def check_ht_bound(I: MonomialIdeal, field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(I) <= deg lcm(gens) - ht(I) + 1."""
    lhs = reg(I, field, engine)
    bound = mono.ht_regularity_bound(I)
    return CheckReport("ht_bound", lhs, bound, lhs <= bound, [str(I)],
                       details={"height": mono.height(I), "is_ci": mono.is_complete_intersection(I)})


@_timed
def check_d_fold_bounds(ideals: Sequence[MonomialIdeal], field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """Both d-fold bounds: reg(prod) and reg(cap) <= sum reg + sum ht - ht(.) - d + 1.

    The report's lhs/bound are the product form; the intersection form and
    the lcm-degree form are in ``details``. ``holds`` covers all of them.
    """
    _require_ci(*ideals)
    d = len(ideals)
    P = mono.product_many(ideals)
    C = mono.intersect_many(ideals)
    regs = [mono.ci_regularity(I) for I in ideals]
    hts = [mono.height(I) for I in ideals]
    degF = sum(mono.degree(mono.lcm_of_generators(I)) for I in ideals)
    reg_p, reg_c = reg(P, field, engine), reg(C, field, engine)
    ht_p, ht_c = mono.height(P), mono.height(C)
    bound_p = sum(regs) + sum(hts) - ht_p - d + 1
    bound_c = sum(regs) + sum(hts) - ht_c - d + 1
    lcm_p = degF - ht_p + 1
    lcm_c = degF - ht_c + 1
    holds = reg_p <= bound_p and reg_c <= bound_c and reg_p <= lcm_p and reg_c <= lcm_c
    return CheckReport("d_fold", reg_p, bound_p, holds, [str(I) for I in ideals], details={
        "reg_intersection": reg_c, "bound_intersection": bound_c,
        "lcm_bound_product": lcm_p, "lcm_bound_intersection": lcm_c,
        "slack_vs_sum": bound_p - sum(regs),
    })


@_timed
def check_sum_lemma(I: MonomialIdeal, J: MonomialIdeal, field: FieldSpec = QQ, engine: str = "homology") -> CheckReport:
    """reg(I+J) <= max(reg I, reg J, reg(I cap J) - 1), with the equality clause."""
    rI, rJ = reg(I, field, engine), reg(J, field, engine)
    r_sum = reg(mono.ideal_sum(I, J), field, engine)
    r_cap = reg(mono.intersect(I, J), field, engine)
    bound = max(rI, rJ, r_cap - 1)
    holds = r_sum <= bound
    forced = r_sum > max(rI, rJ) or r_cap > max(rI, rJ) + 1
    if forced:
        holds = holds and r_cap == r_sum + 1
    return CheckReport("sum_lemma", r_sum, bound, holds, [str(I), str(J)], details={
        "reg_I": rI, "reg_J": rJ, "reg_intersection": r_cap, "equality_forced": forced,
    })


@_timed
def check_colon_identity(I: MonomialIdeal, J: MonomialIdeal, Qs: Sequence[MonomialIdeal]) -> CheckReport:
    """f_i (J : Q_i) : f_r == f_i (J : f_r Q_i) for every i < r, as generator sets."""
    _require_ci(I)
    if len(Qs) != len(I.gens):
        raise ValueError(f"need {len(I.gens)} colon partners, got {len(Qs)}")
    f = I.gens
    r = len(f)
    bad = 0
    for i in range(r - 1):
        left = mono.colon_monomial(mono.product(mono.principal(f[i]), mono.colon(J, Qs[i])), f[r - 1])
        fr_Q = mono.product(mono.principal(f[r - 1]), Qs[i])
        right = mono.product(mono.principal(f[i]), mono.colon(J, fr_Q))
        bad += left != right
    return CheckReport("colon_identity", bad, 0, bad == 0, [str(I), str(J)] + [str(Q) for Q in Qs],
                       details={"pairs_checked": r - 1})


@_timed
def explore_product_colon(I: MonomialIdeal, J: MonomialIdeal, Q: MonomialIdeal,
                          field: FieldSpec = QQ, engine: str = "homology") -> ExplorationReport:
    """Record reg(IJ : Q) against reg(I) + reg(J); open, so never asserted."""
    _require_ci(I, J)
    C = mono.colon(mono.product(I, J), Q)
    lhs = reg(C, field, engine)
    bound = mono.ci_regularity(I) + mono.ci_regularity(J)
    return ExplorationReport("product_colon", lhs, bound, lhs <= bound, [str(I), str(J), str(Q)],
                             details={"colon": str(C)})


# -- suite ----------------------------------------------------------------------------


@dataclass
class SuiteConfig:
    """``trials`` maps check ids to trial counts; a missing id runs no trials."""

    trials: dict[str, int] = dc_field(default_factory=dict)
    master_seed: int = 0
    max_vars: int = 6
    max_deg: int = 4
    max_q_gens: int = 3
    field: str = "q"
    engine: str = "homology"
    workers: int = 1

    DEFAULT_TRIALS = {
        "product": 200, "intersection2": 200, "intersection3": 200, "mixed": 200,
        "ht_bound": 500, "colon": 200, "sum_lemma": 200, "colon_identity": 100,
        "d_fold": 100, "product_colon": 100,
    }

    @classmethod
    def default(cls, **kw) -> SuiteConfig:
        return cls(trials=dict(cls.DEFAULT_TRIALS), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> SuiteConfig:
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    @classmethod
    def from_file(cls, path: str | Path) -> SuiteConfig:
        return cls.from_dict(json.loads(Path(path).read_text()))

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    def validate(self) -> None:
        bad = set(self.trials) - set(TRIALS)
        if bad:
            raise ValueError(f"unknown check ids: {sorted(bad)}")
        if any(not isinstance(v, int) or v < 0 for v in self.trials.values()):
            raise ValueError("trial counts must be non-negative integers")
        if not 2 <= self.max_vars <= mono.MAX_HEIGHT_VARS:
            raise ValueError(f"max_vars must lie in [2, {mono.MAX_HEIGHT_VARS}]")
        if self.max_deg < 1 or self.max_q_gens < 1 or self.workers < 1:
            raise ValueError("max_deg, max_q_gens and workers must be positive")
        if self.engine not in ("homology", "resolution", "both"):
            raise ValueError(f"unknown engine {self.engine!r}")
        self.field_spec


def _ci(rng, cfg, n, max_r):
    return random_monomial_ci(n, rng.randint(1, min(n, max_r)), cfg.max_deg, rng)


def _trial_product(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    return check_product(_ci(rng, cfg, n, 3), _ci(rng, cfg, n, 3), cfg.field_spec, cfg.engine)


def _trial_intersection(d):
    def run(rng, cfg):
        n = rng.randint(2, cfg.max_vars)
        return check_intersection([_ci(rng, cfg, n, 3 if d == 2 else 2) for _ in range(d)],
                                  cfg.field_spec, cfg.engine)
    return run


def _trial_mixed(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    I, J = _ci(rng, cfg, n, 3), _ci(rng, cfg, n, 3)
    Qs = [random_q(n, cfg.max_q_gens, cfg.max_deg, rng) for _ in I.gens]
    return check_mixed(I, J, Qs, cfg.field_spec, cfg.engine)


def _trial_colon(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    return check_colon(_ci(rng, cfg, n, 3), random_q(n, cfg.max_q_gens, cfg.max_deg, rng),
                       cfg.field_spec, cfg.engine)


def _trial_ht(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    return check_ht_bound(random_monomial_ideal(n, rng.randint(1, 5), cfg.max_deg, rng),
                          cfg.field_spec, cfg.engine)


def _trial_sum(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    I = random_monomial_ideal(n, rng.randint(1, 4), cfg.max_deg, rng)
    J = random_monomial_ideal(n, rng.randint(1, 4), cfg.max_deg, rng)
    return check_sum_lemma(I, J, cfg.field_spec, cfg.engine)


def _trial_colon_identity(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    I = random_monomial_ci(n, rng.randint(2, min(n, 3)), cfg.max_deg, rng)
    J = _ci(rng, cfg, n, 3)
    Qs = [random_q(n, cfg.max_q_gens, cfg.max_deg, rng) for _ in I.gens]
    return check_colon_identity(I, J, Qs)


def _trial_d_fold(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    d = rng.randint(1, 3)
    return check_d_fold_bounds([_ci(rng, cfg, n, 2) for _ in range(d)], cfg.field_spec, cfg.engine)


def _trial_product_colon(rng, cfg):
    n = rng.randint(2, cfg.max_vars)
    I, J = _ci(rng, cfg, n, 3), _ci(rng, cfg, n, 3)
    return explore_product_colon(I, J, random_q(n, cfg.max_q_gens, cfg.max_deg, rng),
                                 cfg.field_spec, cfg.engine)


TRIALS: dict[str, Callable] = {
    "product": _trial_product,
    "intersection2": _trial_intersection(2),
    "intersection3": _trial_intersection(3),
    "mixed": _trial_mixed,
    "colon": _trial_colon,
    "ht_bound": _trial_ht,
    "sum_lemma": _trial_sum,
    "colon_identity": _trial_colon_identity,
    "d_fold": _trial_d_fold,
    "product_colon": _trial_product_colon,
}


def run_trial(check_id: str, trial: int, cfg: SuiteConfig) -> CheckReport:
    seed = derive_seed(cfg.master_seed, check_id, trial)
    rep = TRIALS[check_id](random.Random(seed), cfg)
    rep.seed, rep.trial = seed, trial
    return rep


def _run_job(job):
    return run_trial(*job)


CSV_COLUMNS = ["check_id", "trial", "seed", "lhs", "bound", "holds", "notable"]


@dataclass
class SuiteReport:
    config: SuiteConfig
    reports: list[CheckReport]
    seconds: float = 0.0

    @property
    def failures(self) -> list[CheckReport]:
        return [r for r in self.reports if r.asserted and not r.holds]

    @property
    def findings(self) -> list[CheckReport]:
        return [r for r in self.reports if not r.asserted and r.notable]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for r in self.reports:
            s = out.setdefault(r.check_id, {"trials": 0, "holds": 0, "notable": 0,
                                            "kind": "asserted" if r.asserted else "exploration"})
            s["trials"] += 1
            s["holds"] += r.holds
            s["notable"] += r.notable
        return out

    def to_json(self, timing: bool = True) -> str:
        data = {
            "config": asdict(self.config),
            "ok": self.ok,
            "failures": len(self.failures),
            "findings": len(self.findings),
            "summary": self.summary(),
            "reports": [r.to_dict(timing) for r in self.reports],
        }
        if timing:
            data["seconds"] = self.seconds
        return json.dumps(data, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        return reports_to_csv(self.reports)


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.check_id, r.trial, r.seed, r.lhs, r.bound, int(r.holds), int(r.notable)])
    return buf.getvalue()


def run_suite(cfg: SuiteConfig, progress: Callable[[str, int], None] | None = None) -> SuiteReport:
    """Run every configured check; reports come back in (check id, trial) order."""
    cfg.validate()
    jobs = [(cid, t, cfg) for cid in TRIALS for t in range(cfg.trials.get(cid, 0))]
    t0 = time.perf_counter()
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            reports = list(ex.map(_run_job, jobs, chunksize=8))
    else:
        reports = []
        for job in jobs:
            reports.append(_run_job(job))
            if progress:
                progress(job[0], job[1])
    return SuiteReport(cfg, reports, time.perf_counter() - t0)
