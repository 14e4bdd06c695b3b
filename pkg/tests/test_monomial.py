import pytest
from hypothesis import given, strategies as st

from cmreg import monomial as mono
from cmreg.monomial import DomainError, AmbientMismatch

from conftest import ideal_pairs, monomial_ideals, monomials_upto

x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def I2(*gens):
    return mono.ideal(*gens, n=2)


def test_minimalize_examples():
    assert mono.minimalize([(1,), (2,)], 1).gens == ((1,),)
    assert mono.minimalize([], 2).is_zero
    assert mono.minimalize([(2, 1), (1, 2), (2, 2)], 2).gens == ((1, 2), (2, 1))


def test_canonical_order_is_degree_then_exponents():
    I = mono.minimalize([(0, 3), (2, 0), (1, 1)], 2)
    assert I.gens == ((1, 1), (2, 0), (0, 3))


def test_length_mismatch():
    with pytest.raises(AmbientMismatch):
        mono.minimalize([(1, 0, 0)], 2)
    with pytest.raises(AmbientMismatch):
        mono.product(I2((1, 0)), mono.ideal((1, 0, 0)))


def test_product_examples():
    assert mono.product(I2((2, 0)), I2((0, 1))).gens == ((2, 1),)
    m = mono.maximal_ideal(2)
    assert mono.product(m, m).gens == ((0, 2), (1, 1), (2, 0))
    assert mono.product(mono.zero_ideal(2), m).is_zero


def test_intersect_examples():
    assert mono.intersect(I2((2, 0)), I2((0, 3))).gens == ((2, 3),)
    assert mono.intersect(I2((1, 0)), I2((1, 0))).gens == ((1, 0),)
    assert mono.intersect(I2((2, 0), (0, 1)), I2((1, 0), (0, 2))) == I2((2, 0), (1, 1), (0, 2))


def test_intersect_example_by_membership():
    A, B = I2((2, 0), (0, 1)), I2((1, 0), (0, 2))
    want = [m for m in monomials_upto(2, 3) if m in A and m in B]
    assert mono.minimalize(want, 2) == I2((2, 0), (1, 1), (0, 2))


def test_sum_examples():
    assert mono.ideal_sum(I2((1, 0)), I2((0, 1))) == mono.maximal_ideal(2)
    I = I2((2, 0), (1, 3))
    assert mono.ideal_sum(I, mono.zero_ideal(2)) == I
    assert mono.ideal_sum(I2((2, 0)), I2((1, 0))) == I2((1, 0))


def test_colon_monomial_examples():
    assert mono.colon_monomial(I2((2, 0), (0, 3)), (1, 0)) == I2((1, 0), (0, 3))
    I = I2((2, 1), (0, 3))
    assert mono.colon_monomial(I, (0, 0)) == I
    assert mono.colon_monomial(I2((1, 1)), (5, 0)) == I2((0, 1))


def test_colon_examples():
    got = mono.colon(I2((2, 0), (0, 3)), mono.maximal_ideal(2))
    assert got == I2((2, 0), (1, 2), (0, 3))
    I = I2((2, 1), (0, 3))
    assert mono.colon(I, mono.unit_ideal(2)) == I
    assert mono.colon(I2((1, 1)), I2((1, 0))) == I2((0, 1))
    assert mono.colon(I, mono.zero_ideal(2)).is_unit


def test_colon_example_by_membership():
    I, Q = I2((2, 0), (0, 3)), mono.maximal_ideal(2)
    want = [m for m in monomials_upto(2, 4) if all(mono.mul(m, q) in I for q in Q.gens)]
    assert mono.minimalize(want, 2) == mono.colon(I, Q)


def test_lcm_examples():
    assert mono.lcm_of_generators(I2((2, 0), (0, 3))) == (2, 3)
    assert mono.lcm_of_generators(mono.ideal((1,))) == (1,)
    assert mono.lcm_of_generators(I2((2, 1), (1, 3))) == (2, 3)
    with pytest.raises(DomainError):
        mono.lcm_of_generators(mono.zero_ideal(2))


def test_height_examples():
    assert mono.height(I2((2, 0), (0, 3))) == 2
    assert mono.height(I2((1, 1))) == 1
    assert mono.height(mono.ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))) == 2
    for bad in (mono.zero_ideal(2), mono.unit_ideal(2)):
        with pytest.raises(DomainError):
            mono.height(bad)


def test_complete_intersection_examples():
    assert mono.is_complete_intersection(I2((2, 0), (0, 3)))
    assert not mono.is_complete_intersection(mono.ideal((1, 1, 0), (0, 1, 1)))
    assert mono.is_complete_intersection(I2((2, 3)))


def test_ci_regularity_examples():
    assert mono.ci_regularity(mono.maximal_ideal(2)) == 1
    assert mono.ci_regularity(I2((2, 0), (0, 3))) == 4
    assert mono.ci_regularity(mono.ideal((0, 0, 0, 3), (0, 0, 3, 0))) == 5
    with pytest.raises(DomainError):
        mono.ci_regularity(mono.ideal((1, 1, 0), (0, 1, 1)))


def test_ht_bound_examples():
    assert mono.ht_regularity_bound(I2((2, 0), (0, 3))) == 4
    assert mono.ht_regularity_bound(mono.ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))) == 2
    assert mono.ht_regularity_bound(mono.ideal((1,))) == 1


def test_contains_examples():
    I = I2((2, 0), (0, 1))
    assert (3, 0) in I
    assert (1, 0) not in I
    assert (1, 1) not in mono.zero_ideal(2)


def test_render():
    assert str(mono.ideal((2, 1, 0), (0, 0, 1))) == "(z, x^2*y)"
    assert str(mono.unit_ideal(2)) == "(1)"
    assert str(mono.zero_ideal(2)) == "()"


# -- properties --------------------------------------------------------------


@given(monomial_ideals())
def test_minimalize_idempotent(I):
    assert mono.minimalize(I.gens, I.n) == I
    assert not any(a != b and mono.divides(a, b) for a in I.gens for b in I.gens)
    assert list(I.gens) == sorted(I.gens, key=mono.sort_key)


@given(ideal_pairs())
def test_membership_coherence(pair):
    I, J = pair
    D = 2 * max(mono.degree(g) for g in I.gens + J.gens)
    meet, plus, prod, col = (mono.intersect(I, J), mono.ideal_sum(I, J),
                             mono.product(I, J), mono.colon(I, J))
    for m in monomials_upto(I.n, min(D, 8)):
        assert (m in meet) == (m in I and m in J)
        assert (m in plus) == (m in I or m in J)
        assert (m in col) == all(mono.mul(m, q) in I for q in J.gens)
        assert (m in prod) == any(
            mono.divides(mono.mul(a, b), m) for a in I.gens for b in J.gens)


@given(ideal_pairs(), st.data())
def test_commutative_associative_idempotent(pair, data):
    I, J = pair
    K = data.draw(monomial_ideals(n=I.n))
    for op in (mono.product, mono.intersect, mono.ideal_sum):
        assert op(I, J) == op(J, I)
        assert op(op(I, J), K) == op(I, op(J, K))
    assert mono.intersect(I, I) == I
    assert mono.ideal_sum(I, I) == I


@given(ideal_pairs())
def test_ideal_contained_in_colon(pair):
    I, Q = pair
    assert mono.is_subset(I, mono.colon(I, Q))


@given(st.integers(1, 5), st.data())
def test_ci_regularity_matches_ht_bound(n, data):
    from cmreg.harness import random_monomial_ci

    r = data.draw(st.integers(1, n))
    I = random_monomial_ci(n, r, 4, data.draw(st.integers(0, 2**32)))
    assert mono.is_complete_intersection(I)
    assert mono.ci_regularity(I) == mono.ht_regularity_bound(I)


@given(monomial_ideals(n=4, max_gens=5))
def test_height_by_brute_force(I):
    import itertools

    best = min(len(S) for k in range(I.n + 1) for S in itertools.combinations(range(I.n), k)
               if all(mono.support(g) & set(S) for g in I.gens))
    assert mono.height(I) == best
