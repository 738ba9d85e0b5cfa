import pytest
from hypothesis import given, strategies as st

from immaculate.compositions import (
    Composition,
    DescentSet,
    IntVector,
    comp,
    compositions_of,
    compositions_of_length,
    descent_set,
    display_key,
    neg,
    partitions_of,
    refinements,
    refines,
    sgn,
    subset_to_composition,
    tail,
)
from immaculate.config import CompositionError, IncomparableError

from .strategies import compositions, nonempty_compositions


def test_descent_set_examples():
    assert descent_set([4, 4, 2, 7]) == DescentSet(17, (4, 8, 10))
    assert descent_set([1, 1, 2, 1, 3, 2, 1, 4, 2]).elements == (1, 2, 4, 5, 8, 10, 11, 15)
    assert descent_set([]) == DescentSet(0, ())


def test_subset_to_composition_inverts():
    assert subset_to_composition(DescentSet(17, (4, 8, 10))) == (4, 4, 2, 7)


def test_refines_example():
    assert refines([1, 1, 2, 1, 3, 2, 1, 4, 2], [4, 4, 2, 7])
    assert not refines([4, 4, 2, 7], [1, 1, 2, 1, 3, 2, 1, 4, 2])
    with pytest.raises(IncomparableError):
        refines([1, 2], [4])


def test_compositions_of_canonical_order():
    assert compositions_of(3) == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    assert compositions_of(0) == [()]
    assert [len(compositions_of(n)) for n in range(1, 9)] == [2 ** (n - 1) for n in range(1, 9)]


def test_compositions_of_length():
    assert compositions_of_length(4, 2) == [(1, 3), (2, 2), (3, 1)]
    assert compositions_of_length(2, 3) == []


def test_partitions():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_tail_and_comp():
    assert tail([2, 1]) == (1,)
    assert tail([5]) == ()
    with pytest.raises(CompositionError):
        tail([])
    assert comp((4, 0, 3, 7)) == (4, 3, 7)
    assert comp(x for x in (0, 2, 0)) == (2,)
    with pytest.raises(CompositionError):
        comp((1, -1))


def test_sign_statistics():
    assert (neg((1, -2, 3, 0)), sgn((1, -2, 3, 0))) == (1, -1)
    assert (neg((1, -2, -4, 7)), sgn((1, -2, -4, 7))) == (2, 1)
    assert sgn(()) == 1


def test_validation():
    with pytest.raises(CompositionError):
        Composition([1, 0])
    with pytest.raises(CompositionError):
        Composition([1.5])
    assert IntVector([-1, 0, 3]) == (-1, 0, 3)
    with pytest.raises(CompositionError):
        IntVector([True])


@given(compositions())
def test_descent_round_trip(alpha):
    assert subset_to_composition(descent_set(alpha)) == alpha


@given(compositions(max_size=6))
def test_refinements_match_order(alpha):
    refs = set(refinements(alpha))
    assert alpha in refs
    for beta in compositions_of(alpha.size):
        assert (beta in refs) == refines(beta, alpha)


@given(st.integers(1, 7))
def test_display_order_reverses_canonical(n):
    canon = compositions_of(n)
    assert sorted(canon, key=display_key) == canon[::-1]


@given(nonempty_compositions())
def test_concatenation(alpha):
    assert isinstance(alpha + Composition([1]), Composition)
    assert (alpha + Composition([1])).size == alpha.size + 1
