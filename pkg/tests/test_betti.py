import itertools

import pytest
from hypothesis import given, strategies as st

from edgereg.betti import (
    BettiTable,
    ResourceCapExceeded,
    betti_table,
    betti_table_quotient,
    is_betti_splitting,
    koszul_betti,
    lcm_lattice,
    multigraded_betti,
    regularity,
    regularity_quotient,
    split_by_variable,
    verify_polarization_invariance,
)
from edgereg.graphs import build_cycle, build_path, edge_ideal
from edgereg.monomials import MonomialIdeal, ideal_power, zero_ideal
from oracles import box, hochster_betti


def M(*gens):
    return MonomialIdeal(len(gens[0]), gens)


# -- lcm lattice ---------------------------------------------------------------

def test_lattice_examples():
    assert lcm_lattice(M((1, 1, 0), (0, 1, 1))).as_set() == {(1, 1, 0), (0, 1, 1), (1, 1, 1)}
    assert lcm_lattice(M((1, 1))).as_set() == {(1, 1)}
    # three generators, every pair joins to one of two points
    L = lcm_lattice(edge_ideal(build_cycle([2, 1, 1])))
    assert L.as_set() == {(2, 2, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1), (2, 2, 1)}
    with pytest.raises(ResourceCapExceeded):
        lcm_lattice(edge_ideal(build_cycle([1] * 8)), max_size=10)
    with pytest.raises(ValueError):
        lcm_lattice(zero_ideal(2))


@given(st.lists(st.tuples(*[st.integers(0, 2)] * 3).filter(any), min_size=1, max_size=5))
def test_lattice_is_closed_under_joins(gens):
    I = MonomialIdeal(3, gens)
    pts = lcm_lattice(I).as_set()
    expected = set()
    for k in range(1, len(I.gens) + 1):
        for sub in itertools.combinations(I.gens, k):
            expected.add(tuple(max(c) for c in zip(*sub)))
    assert pts == expected


# -- single multidegrees ---------------------------------------------------------------

def test_koszul_betti_examples():
    assert koszul_betti(M((1, 1)), (1, 1)) == [1]
    assert koszul_betti(M((1, 1, 0), (0, 1, 1)), (1, 1, 1)) == [0, 1]
    assert koszul_betti(M((1, 1, 0), (0, 1, 1)), (0, 0, 0)) == []
    with pytest.raises(ValueError):
        koszul_betti(M((1, 1)), (1, 1, 1))


def small_ideals(n=3, top=2):
    return st.lists(st.tuples(*[st.integers(0, top)] * n).filter(any), min_size=1, max_size=4).map(
        lambda g: MonomialIdeal(n, g))


@given(small_ideals())
def test_engine_agrees_with_definition_on_whole_box(I):
    mg = multigraded_betti(I, 32003)
    lattice = lcm_lattice(I).as_set()
    for a in box(I.max_exponents()):
        h = koszul_betti(I, a, 32003)
        expected = {(i, a): b for i, b in enumerate(h) if b}
        got = {k: v for k, v in mg.items() if k[1] == a}
        assert got == expected
        if a not in lattice:
            assert not any(h)


# -- tables ---------------------------------------------------------------

def test_table_examples():
    assert betti_table(M((1, 1, 0), (0, 1, 1))).entries == {(0, 2): 2, (1, 3): 1}
    assert betti_table(M((1, 1))).entries == {(0, 2): 1}
    assert betti_table(M((1, 1, 0, 0), (0, 0, 1, 1))).entries == {(0, 2): 2, (1, 4): 1}


def test_square_of_pentagon_table():
    # checked against the literal Koszul definition over the whole exponent box
    I2 = ideal_power(edge_ideal(build_cycle([1] * 5)), 2)
    assert betti_table(I2).entries == {(0, 4): 15, (1, 5): 24, (2, 6): 10}


def test_quotient_table_and_shift():
    I = M((1, 1, 0, 0), (0, 0, 1, 1))
    Q = betti_table_quotient(I)
    assert Q.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert Q.regularity() == betti_table(I).regularity() - 1


def test_regularity_examples():
    assert regularity_quotient(edge_ideal(build_cycle([1] * 5))) == 2
    assert regularity_quotient(edge_ideal(build_cycle([2, 1, 1]))) == 3
    assert regularity(M((1, 1))) == 2


def test_caps_and_bad_input():
    with pytest.raises(ResourceCapExceeded):
        betti_table(edge_ideal(build_path([1] * 5)), max_vars=4)
    with pytest.raises(ValueError):
        betti_table(zero_ideal(3))
    with pytest.raises(ValueError):
        betti_table(M((1, 1)), p=4)


def test_table_json_and_text():
    T = betti_table(edge_ideal(build_cycle([1] * 4)))
    assert BettiTable.from_dict(T.to_dict()) == T
    text = str(T)
    assert text.splitlines()[0].split() == ["0", "1", "2"]
    assert T.total(0) == 4
    assert T.projective_dimension() == 2


def test_characteristic_two_sees_torsion():
    # Stanley-Reisner ideal of the six-vertex projective plane
    tri = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
           (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    faces = {frozenset(s) for t in tri for k in range(4) for s in itertools.combinations(t, k)}
    nonfaces = [set(s) for k in range(1, 4) for s in itertools.combinations(range(6), k)
                if frozenset(s) not in faces]
    gens = [tuple(int(j in s) for j in range(6)) for s in nonfaces]
    I = MonomialIdeal(6, gens)
    assert regularity(I, 2) == 4
    assert regularity(I, 32003) == 3


# -- independent oracle ---------------------------------------------------------------

@given(st.lists(st.tuples(*[st.integers(0, 1)] * 5).filter(lambda u: sum(u) >= 2), min_size=1, max_size=6))
def test_squarefree_tables_match_hochster(gens):
    I = MonomialIdeal(5, gens)
    assert betti_table(I).entries == hochster_betti(5, I.gens)


def test_edge_ideals_match_hochster():
    for G in (build_cycle([1] * 5), build_cycle([1] * 6), build_path([1] * 5)):
        I = edge_ideal(G)
        assert betti_table(I, 2).entries == hochster_betti(I.n, I.gens)


# -- polarization and splittings ---------------------------------------------------------------

def test_polarization_invariance_examples():
    assert verify_polarization_invariance(M((2, 2)))
    assert verify_polarization_invariance(edge_ideal(build_cycle([2, 1, 1])))
    assert verify_polarization_invariance(ideal_power(edge_ideal(build_cycle([2, 1, 2, 1])), 2))


@given(small_ideals(n=3, top=3))
def test_polarization_invariance_random(I):
    assert verify_polarization_invariance(I)


def test_splitting_examples():
    I = M((1, 1, 0), (0, 1, 1))
    assert is_betti_splitting(I, M((1, 1, 0)), M((0, 1, 1)))
    with pytest.raises(ValueError):
        is_betti_splitting(M((1, 1)), M((1, 1)), MonomialIdeal(2, []))
    I = MonomialIdeal(4, [(2, 2, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)])
    J, K = split_by_variable(I, 4)
    assert set(J.gens) == {(0, 0, 1, 1), (1, 0, 0, 1)}
    assert is_betti_splitting(I, J, K)


def test_splitting_requires_partition():
    I = M((1, 1, 0), (0, 1, 1))
    with pytest.raises(ValueError):
        is_betti_splitting(I, I, M((0, 1, 1)))
