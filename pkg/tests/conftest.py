import itertools
import sys

from hypothesis import HealthCheck, settings, strategies as st

from cmreg import monomial as mono

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def monomials_upto(n, D):
    """Every exponent vector in n variables of total degree <= D."""
    for e in itertools.product(range(D + 1), repeat=n):
        if sum(e) <= D:
            yield e


@st.composite
def monomial_ideals(draw, n=None, max_gens=4, max_deg=3, allow_zero=False):
    if n is None:
        n = draw(st.integers(1, 4))
    lo = 0 if allow_zero else 1
    k = draw(st.integers(lo, max_gens))
    gens = [tuple(draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n))) for _ in range(k)]
    # keep proper ideals unless a test asks otherwise
    gens = [g for g in gens if sum(g) > 0] or ([] if allow_zero else [mono.variable(0, n)])
    return mono.minimalize(gens, n)


@st.composite
def ideal_pairs(draw, **kw):
    n = draw(st.integers(1, 4))
    return draw(monomial_ideals(n=n, **kw)), draw(monomial_ideals(n=n, **kw))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in mod.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
