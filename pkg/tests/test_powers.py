import itertools

import pytest
from hypothesis import given, strategies as st

from edgereg.graphs import build_cycle, edge_ideal
from edgereg.monomials import MonomialIdeal, ideal_power
from edgereg.powers import (
    OrderedGenerators,
    colon_tail,
    edge_divides,
    edge_factorizations,
    edge_factorize,
    edge_monomial,
    find_li_witness,
    heavy_chain_length,
    middle_edge_colon_sides,
    normalize_single_heavy,
    ordered_generators,
    predicted_colon_tail,
    trivial_edge_colon_sides,
)

W4 = (2, 1, 1, 1)


def var_ideal(n, *idx):
    return MonomialIdeal(n, [tuple(int(j == i) for j in range(1, n + 1)) for i in idx])


def test_normalization():
    assert normalize_single_heavy((1, 1, 3, 1)) == (3, 1, 1, 1)
    with pytest.raises(ValueError):
        normalize_single_heavy((2, 1, 2, 1))
    with pytest.raises(ValueError):
        normalize_single_heavy((2, 1, 1))


def test_factorization_examples():
    assert edge_factorize((4, 4, 0, 0), W4, 2).exponents == (2, 0, 0, 0)
    assert edge_factorize((1, 1, 1, 1), W4, 2).exponents == (0, 1, 0, 1)
    assert edge_factorize((2, 3, 1, 0), W4, 2).exponents == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        edge_factorize((3, 3, 1, 1), W4, 2)  # L1 L3 = x1^2 x2^2 x3 x4 is not minimal
    assert edge_factorizations((3, 3, 1, 1), W4, 2) == []


def test_square_of_four_cycle_with_one_heavy_edge():
    # L1 L3 is divisible by L2 L4 = x1 x2 x3 x4, so 9 of the 10 products survive
    O = ordered_generators(W4, 2)
    assert O.r == 9 and O.c == 3
    assert [O.factorization(k).exponents for k in (1, 2, 3)] == [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 0, 1)]
    assert len(ideal_power(edge_ideal(build_cycle(W4)), 2)) == 9


def test_first_power_order():
    O = ordered_generators(W4, 1)
    assert O.monomials() == [edge_monomial(W4, i) for i in range(1, 5)]
    assert O.c == 1
    assert O.index_of(edge_monomial(W4, 3)) == 3
    with pytest.raises(IndexError):
        O[0]


def test_edge_divides_examples():
    W5 = (2, 1, 1, 1, 1)
    L1, L3 = edge_monomial(W5, 1), edge_monomial(W5, 3)
    L1L3 = tuple(a + b for a, b in zip(L1, L3))
    assert edge_divides(L1, 1, L1L3, 2, W5)
    assert not edge_divides(edge_monomial(W4, 1), 1, (1, 1, 1, 1), 2, W4)
    M = (2, 3, 1, 0)
    assert edge_divides(M, 2, M, 2, W4)


def test_colon_tail_examples():
    assert colon_tail(W4, 2, 1) == var_ideal(4, 3, 4)
    assert colon_tail((2, 1, 1, 1, 1), 1, 1) == var_ideal(5, 3, 5)
    O = ordered_generators(W4, 2)
    assert colon_tail(W4, 2, O.c) == var_ideal(4, 3, 4)
    with pytest.raises(ValueError):
        colon_tail(W4, 2, O.c + 1)


def test_heavy_chain_is_bounded():
    O = ordered_generators((2, 1, 1, 1, 1, 1), 3)
    for k in range(1, O.c + 1):
        assert -1 <= heavy_chain_length(O.factorization(k)) < 3


def test_li_witness_examples():
    O = ordered_generators(W4, 2)
    for exps in [(0, 1, 1, 0), (0, 1, 0, 1)]:
        j = next(k for k in range(1, O.r + 1) if O.factorization(k).exponents == exps)
        k, form = find_li_witness(W4, 2, 1, j)
        assert 1 < k <= O.r and form in (1, 2)
    for j in range(O.c + 1, O.r + 1):
        find_li_witness(W4, 2, O.c, j)
    with pytest.raises(ValueError):
        find_li_witness(W4, 2, 2, 2)


def test_middle_edge_colon_example():
    lhs, rhs = middle_edge_colon_sides((2, 1, 2, 1), 2, 1)
    assert lhs == rhs == edge_ideal(build_cycle((2, 1, 2, 1)))
    with pytest.raises(ValueError):
        middle_edge_colon_sides((2, 1, 2, 1), 1, 1)
    with pytest.raises(ValueError):
        trivial_edge_colon_sides((2, 1, 2, 1), 2, 1)


single_heavy = st.tuples(st.integers(4, 7), st.integers(2, 3), st.integers(0, 6)).map(
    lambda a: tuple(a[1] if i == a[2] % a[0] else 1 for i in range(a[0])))


@given(single_heavy, st.integers(1, 3))
def test_order_and_colon_tails(ws, t):
    O = ordered_generators(ws, t)
    exps = [O.factorization(k).exponents for k in range(1, O.r + 1)]
    assert exps == sorted(exps, reverse=True)
    assert all(e[0] >= 1 for e in exps[:O.c]) and all(e[0] == 0 for e in exps[O.c:])
    for i in range(1, O.c + 1):
        assert colon_tail(ws, t, i) == predicted_colon_tail(ws, t, i)


@given(single_heavy, st.integers(1, 3), st.integers(0, 6))
def test_colon_after_trivial_edge(ws, t, i):
    trivial = [k for k in range(1, len(ws) + 1) if ws[k - 1] == 1]
    lhs, rhs = trivial_edge_colon_sides(ws, t, trivial[i % len(trivial)])
    assert lhs == rhs


def test_every_minimal_generator_factors_once():
    for n, w1, t in itertools.product((4, 5, 6), (2, 3), (1, 2, 3)):
        ws = (w1,) + (1,) * (n - 1)
        O = ordered_generators(ws, t)
        assert isinstance(O, OrderedGenerators)
        for M in ideal_power(edge_ideal(build_cycle(ws)), t).gens:
            assert len(edge_factorizations(M, ws, t)) == 1
