import itertools

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, strategies as st

from cmreg import homology as hom
from cmreg import monomial as mono
from cmreg.betti import BettiTable
from cmreg.field import FieldSpec, QQ
from cmreg.homology import SimplicialComplex
from cmreg.linalg import rank

from conftest import monomial_ideals

F7 = FieldSpec(7)


# -- linear algebra ---------------------------------------------------------


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=0, max_size=5))
def test_rank_matches_sympy(rows):
    want = sympy.Matrix(rows).rank() if rows else 0
    assert rank(rows) == want


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_mod_p_matches_sympy(rows):
    dm = DomainMatrix.from_list_sympy(len(rows), 3, rows).convert_to(sympy.GF(7))
    assert rank(rows, F7) == dm.rank()


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(rows) == 2
    assert rank(rows, FieldSpec(2)) == 1


# -- lattice and complexes ------------------------------------------------------


def test_lcm_lattice_examples():
    assert hom.lcm_lattice(mono.maximal_ideal(2)) == {(1, 0), (0, 1), (1, 1)}
    assert hom.lcm_lattice(mono.ideal((2,))) == {(2,)}
    got = hom.lcm_lattice(mono.ideal((2, 0), (1, 1), (0, 2)))
    assert got == {(2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2)}


def test_lcm_lattice_by_enumeration():
    I = mono.ideal((2, 1, 0), (0, 1, 2), (1, 0, 1), (0, 3, 0))
    want = set()
    for k in range(1, len(I.gens) + 1):
        for S in itertools.combinations(I.gens, k):
            m = S[0]
            for g in S[1:]:
                m = mono.lcm(m, g)
            want.add(m)
    assert hom.lcm_lattice(I) == want


def test_upper_koszul_examples():
    C = hom.upper_koszul(mono.maximal_ideal(2), (1, 1))
    assert C.faces() == {-1: [()], 0: [(0,), (1,)]}
    assert hom.upper_koszul(mono.ideal((1,)), (1,)).faces() == {-1: [()]}
    assert hom.upper_koszul(mono.ideal((2,)), (1,)).faces() == {}


def test_reduced_homology_examples():
    two_points = SimplicialComplex(2, ((0,), (1,)))
    assert hom.reduced_homology_dims(two_points) == [0, 1]
    simplex = SimplicialComplex(3, ((0, 1, 2),))
    assert not any(hom.reduced_homology_dims(simplex))
    hollow = SimplicialComplex(3, ((0, 1), (0, 2), (1, 2)))
    assert hom.reduced_homology_dims(hollow) == [0, 0, 1]
    assert hom.reduced_homology_dims(SimplicialComplex(1, ((),))) == [1]
    assert hom.reduced_homology_dims(SimplicialComplex(1, ())) == [0]


def test_projective_plane_torsion():
    # six-vertex RP^2: H~_1 has Z/2 torsion, so H~ vanishes over Q but not over GF(2)
    tris = [(0, 1, 3), (1, 2, 3), (0, 2, 4), (2, 3, 4), (0, 3, 5), (1, 4, 5), (3, 4, 5),
            (0, 1, 4), (1, 2, 5), (0, 2, 5)]
    C = SimplicialComplex.from_faces(6, tris)
    assert not any(hom.reduced_homology_dims(C, QQ))
    assert hom.reduced_homology_dims(C, FieldSpec(2)) == [0, 0, 1, 1]


# -- Betti numbers and regularity ---------------------------------------------------


def test_betti_examples():
    B = hom.betti_multigraded(mono.maximal_ideal(2))
    assert B.multigraded == {(0, (1, 0)): 1, (0, (0, 1)): 1, (1, (1, 1)): 1}
    B = hom.betti_multigraded(mono.ideal((2, 0), (0, 3)))
    assert B.graded == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
    assert B.regularity == 4
    B = hom.betti_multigraded(mono.ideal((2, 0), (1, 1), (0, 2)))
    assert B.totals() == [3, 2]
    assert B.regularity == 2


def test_regularity_examples():
    assert hom.regularity(mono.maximal_ideal(3)) == 1
    assert hom.regularity(mono.ideal((2, 0, 0), (0, 3, 0), (0, 0, 4))) == 7
    assert hom.regularity(mono.ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))) == 2
    assert hom.regularity(mono.unit_ideal(3)) == 0
    with pytest.raises(mono.DomainError):
        hom.regularity(mono.zero_ideal(2))


def test_taylor_examples():
    m = mono.maximal_ideal(2)
    assert hom.taylor_betti(m) == hom.betti_multigraded(m)
    T = hom.taylor_betti(mono.ideal((2, 0), (1, 1)))
    assert T.totals() == [2, 1]
    assert T.regularity == 2
    ci = mono.ideal((2, 0, 0), (0, 3, 1))
    T = hom.taylor_betti(ci)
    assert T.totals() == [2, 1]
    assert T.regularity == mono.ci_regularity(ci)


def test_betti_table_render_and_json():
    B = hom.betti_multigraded(mono.ideal((2, 0), (0, 3)))
    # row i, column j holds degree i + j
    assert B.render().splitlines() == ["      2 3 4", "   0: 1 1 .", "   1: . . 1", "total: 2 1"]
    js = B.to_json()
    assert js["regularity"] == 4
    assert {"i": 1, "degree": 5, "rank": 1} in js["betti"]


def test_hilbert_style_sum_rule():
    # alternating sum of Betti numbers of an m-primary ideal in 2 variables is 1
    B = hom.betti_multigraded(mono.ideal((3, 0), (2, 1), (0, 2)))
    assert sum((-1) ** i * r for i, r in enumerate(B.totals())) == 1


def test_guards():
    many = mono.minimalize([(i, 20 - i) for i in range(21)], 2)
    with pytest.raises(hom.GuardExceeded):
        hom.lcm_lattice(many)
    with pytest.raises(hom.GuardExceeded):
        hom.taylor_betti(mono.minimalize([(i, 12 - i) for i in range(13)], 2))


# -- properties ------------------------------------------------------------------


@given(monomial_ideals(n=4, max_gens=5, max_deg=3))
def test_taylor_oracle_agrees(I):
    assert hom.betti_multigraded(I) == hom.taylor_betti(I)
    assert hom.betti_multigraded(I).multigraded == hom.taylor_betti(I).multigraded


@given(monomial_ideals(n=4, max_gens=5))
def test_ht_lemma(I):
    if not I.is_unit:
        assert hom.regularity(I) <= mono.ht_regularity_bound(I)


@given(monomial_ideals(n=4, max_gens=4), st.permutations(range(4)))
def test_permutation_equivariance(I, perm):
    P = mono.minimalize([tuple(g[perm[i]] for i in range(4)) for g in I.gens], 4)
    B, C = hom.betti_multigraded(I), hom.betti_multigraded(P)
    assert B.graded == C.graded
    moved = {(i, tuple(b[perm[k]] for k in range(4))): r for (i, b), r in B.multigraded.items()}
    assert moved == C.multigraded


@given(monomial_ideals(n=3, max_gens=4), st.data())
def test_off_lattice_degrees_vanish(I, data):
    L = hom.lcm_lattice(I)
    top = mono.lcm_of_generators(I)
    b = tuple(data.draw(st.integers(0, t + 1)) for t in top)
    if b not in L:
        assert not any(hom.reduced_homology_dims(hom.upper_koszul(I, b)))


@given(monomial_ideals(n=3, max_gens=4))
def test_field_independence_small(I):
    # small ideals in three variables have characteristic-free Betti numbers
    assert hom.betti_multigraded(I, QQ) == hom.betti_multigraded(I, FieldSpec(2))


def test_betti_table_rejects_nonpositive():
    with pytest.raises(ValueError):
        BettiTable({(0, 1): 0})


def test_field_independence_on_corpus():
    import random

    from cmreg.harness import random_monomial_ideal

    rng = random.Random(5)
    for _ in range(60):
        I = random_monomial_ideal(rng.randint(2, 5), rng.randint(1, 5), 4, rng.randrange(2**63))
        q = hom.betti_multigraded(I)
        assert q == hom.betti_multigraded(I, FieldSpec(2))
        assert q.regularity == hom.regularity(I, FieldSpec(32003))
