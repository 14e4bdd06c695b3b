import json

import pytest
from hypothesis import given, settings, strategies as st

from cmreg import harness as hz
from cmreg import homology as hom
from cmreg import monomial as mono
from cmreg.harness import SuiteConfig, run_suite

from conftest import monomials_upto

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def I3(*gens):
    return mono.ideal(*gens, n=3)


def test_derive_seed_fixed():
    a = hz.derive_seed(0, "product", 0)
    assert a == hz.derive_seed(0, "product", 0)
    assert a != hz.derive_seed(0, "product", 1)
    assert a != hz.derive_seed(1, "product", 0)
    assert 0 <= a < 2**64


def test_random_ci_shape_and_determinism():
    I = hz.random_monomial_ci(2, 2, 4, 17)
    assert len(I.gens) == 2 and mono.is_complete_intersection(I)
    assert all(len(mono.support(g)) == 1 for g in I.gens)
    assert I == hz.random_monomial_ci(2, 2, 4, 17)
    for seed in range(50):
        J = hz.random_monomial_ci(5, 3, 4, seed)
        assert len(J.gens) == 3 and mono.is_complete_intersection(J)
        assert all(1 <= e <= 4 for g in J.gens for e in g if e)


def test_check_product_examples():
    r = hz.check_product(I3((2, 0, 0)), I3((0, 3, 0)))
    assert (r.lhs, r.bound, r.holds) == (5, 5, True)
    m = I3(X, Y)
    r = hz.check_product(m, m)
    assert (r.lhs, r.bound, r.holds) == (2, 2, True)
    with pytest.raises(mono.DomainError):
        hz.check_product(I3((1, 1, 0), (0, 1, 1)), m)


def test_check_intersection_examples():
    r = hz.check_intersection([I3(X), I3(Y), I3(Z)])
    assert (r.lhs, r.bound, r.holds) == (3, 3, True)
    assert r.check_id == "intersection3"
    I = I3((2, 0, 0), (0, 0, 3))
    r = hz.check_intersection([I])
    assert r.lhs == r.bound


def test_check_mixed_reductions():
    I, J = I3((2, 0, 0), (0, 1, 0)), I3((0, 0, 2), (1, 0, 0))
    unit = mono.unit_ideal(3)
    assert hz.mixed_ideal(I, J, [unit, unit]) == mono.product(I, J)
    principal = [mono.principal(f) for f in I.gens]
    assert hz.mixed_ideal(I, J, principal) == mono.intersect(I, J)
    r = hz.check_mixed(I, J, [unit, unit])
    assert r.lhs == hz.check_product(I, J).lhs and r.holds


def test_check_colon_examples():
    I = I3((2, 0, 0), (0, 3, 0))
    r = hz.check_colon(I, mono.unit_ideal(3))
    assert r.lhs == r.bound == 4
    r = hz.check_colon(I, I3(X))
    assert (r.lhs, r.bound, r.holds) == (3, 4, True)


def test_check_ht_examples():
    ci = I3((2, 0, 0), (0, 0, 3))
    r = hz.check_ht_bound(ci)
    assert r.lhs == r.bound
    r = hz.check_ht_bound(I3((1, 1, 0), (0, 1, 1), (1, 0, 1)))
    assert (r.lhs, r.bound) == (2, 2)


def test_check_d_fold_examples():
    I = I3((2, 0, 0), (0, 3, 0))
    r = hz.check_d_fold_bounds([I])
    assert r.lhs == r.bound == mono.ci_regularity(I)
    A, B = I3((2, 0, 0)), I3((0, 1, 0), (0, 0, 2))
    r = hz.check_d_fold_bounds([A, B])
    slack = mono.height(A) + mono.height(B) - mono.height(mono.product(A, B)) - 1
    assert r.details["slack_vs_sum"] == slack
    assert r.holds


def test_check_sum_lemma_examples():
    r = hz.check_sum_lemma(I3(X), I3(Y))
    assert (r.lhs, r.bound, r.holds) == (1, 1, True)
    I = I3((2, 1, 0), (0, 2, 2))
    r = hz.check_sum_lemma(I, I)
    d = r.details
    assert r.lhs == d["reg_I"] == d["reg_J"] == d["reg_intersection"] == hom.regularity(I)


def test_check_colon_identity_examples():
    I = I3((2, 0, 0), (0, 0, 1))
    unit = mono.unit_ideal(3)
    r = hz.check_colon_identity(I, I3(Y), [unit, unit])
    assert r.holds and r.lhs == 0
    J = I3((0, 2, 0), (1, 1, 1))
    r = hz.check_colon_identity(I, J, [J, J])
    assert r.holds


def test_colon_identity_by_membership():
    # the left side of the identity, built from membership alone
    I = I3((2, 0, 0), (0, 0, 1))
    J, Q = I3((0, 2, 0), (1, 1, 1)), I3((0, 1, 0))
    f1, f2 = I.gens
    inner = [m for m in monomials_upto(3, 6) if all(mono.mul(m, q) in J for q in Q.gens)]
    left = mono.product(mono.principal(f1), mono.minimalize(inner, 3))
    left = mono.minimalize([m for m in monomials_upto(3, 6) if mono.mul(m, f2) in left], 3)
    fr_Q = mono.product(mono.principal(f2), Q)
    right = mono.product(mono.principal(f1), mono.colon(J, fr_Q))
    assert left == right


def test_explorer_examples():
    I, J = I3((2, 0, 0)), I3((0, 1, 0), (0, 0, 2))
    r = hz.explore_product_colon(I, J, mono.unit_ideal(3))
    assert r.holds and not r.asserted
    assert r.lhs == hz.check_product(I, J).lhs
    r = hz.explore_product_colon(I, J, mono.product(I, J))
    assert (r.lhs, r.holds) == (0, True)


def test_report_kinds():
    r = hz.explore_product_colon(I3(X), I3(Y), mono.unit_ideal(3))
    assert r.to_dict()["kind"] == "exploration"
    assert hz.check_ht_bound(I3(X)).to_dict()["kind"] == "asserted"


# -- suite -------------------------------------------------------------------------


def test_empty_config_empty_report():
    rep = run_suite(SuiteConfig())
    assert rep.reports == [] and rep.ok
    assert rep.to_csv() == ",".join(hz.CSV_COLUMNS) + "\n"


def test_suite_deterministic():
    cfg = SuiteConfig(trials={k: 4 for k in hz.TRIALS}, master_seed=9)
    a, b = run_suite(cfg), run_suite(cfg)
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert a.to_csv() == b.to_csv()
    other = run_suite(SuiteConfig(trials={k: 4 for k in hz.TRIALS}, master_seed=10))
    assert other.to_csv() != a.to_csv()


def test_suite_parallel_matches_serial():
    cfg = SuiteConfig(trials={"product": 6, "ht_bound": 6}, master_seed=2)
    par = SuiteConfig(trials=cfg.trials, master_seed=2, workers=2)
    assert run_suite(cfg).to_csv() == run_suite(par).to_csv()


def test_suite_json_mirrors_reports():
    rep = run_suite(SuiteConfig(trials={"colon": 3}, master_seed=1))
    data = json.loads(rep.to_json())
    assert data["ok"] and data["failures"] == 0
    r = data["reports"][0]
    assert {"check_id", "seed", "inputs", "lhs", "bound", "holds", "seconds", "trial"} <= set(r)
    assert r["seed"] == hz.derive_seed(1, "colon", 0)


def test_config_validation(tmp_path):
    with pytest.raises(ValueError, match="unknown check ids"):
        SuiteConfig(trials={"nope": 1}).validate()
    with pytest.raises(ValueError, match="unknown config keys"):
        SuiteConfig.from_dict({"trails": {}})
    with pytest.raises(ValueError):
        SuiteConfig(trials={"product": -1}).validate()
    with pytest.raises(ValueError):
        SuiteConfig(field="p:9").validate()
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"trials": {"product": 2}, "field": "p:32003"}))
    assert SuiteConfig.from_file(p).field_spec.prime == 32003


def test_explorer_never_fails_suite(monkeypatch):
    orig = hz.explore_product_colon

    def always_violates(*a, **kw):
        r = orig(*a, **kw)
        r.holds = False
        return r

    monkeypatch.setattr(hz, "explore_product_colon", always_violates)
    rep = run_suite(SuiteConfig(trials={"product_colon": 3}))
    assert rep.ok and len(rep.findings) == 3


@settings(max_examples=15)
@given(st.integers(0, 2**32))
def test_trials_hold_for_any_master_seed(seed):
    rep = run_suite(SuiteConfig(trials={k: 2 for k in hz.TRIALS if k != "product_colon"}, master_seed=seed))
    assert rep.ok, [r.to_dict() for r in rep.failures]


def test_resolution_engine_in_suite():
    rep = run_suite(SuiteConfig(trials={"product": 3, "colon": 3}, engine="both", max_vars=4, max_deg=2))
    assert rep.ok
