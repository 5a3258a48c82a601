"""Tests for Cayley tables, subgroups and quotients."""

import numpy as np
import pytest

from centra.catalog import DEFAULT_CATALOG
from centra.groups import (
    ElementSet,
    NoIdentity,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
    center,
    derived_subgroup,
    from_cayley_table,
    from_permutation_generators,
    is_abelian,
    is_isomorphic,
    is_normal,
    is_simple,
    is_solvable,
    is_subgroup,
    quotient,
    subgroup_generated,
)
from centra.groups.group_core import (
    conjugacy_class,
    cycle_notation,
    derived_series,
)


def test_element_set_basics():
    s = ElementSet.from_indices([0, 3, 5], 8)
    assert len(s) == 3
    assert 3 in s and 4 not in s
    assert list(s) == [0, 3, 5]
    assert s == ElementSet.from_mask(s.mask())
    assert (s & ElementSet.from_indices([3, 4], 8)) == ElementSet(1 << 3, 8)
    assert s.issubset(ElementSet.full(8))
    assert not ElementSet.full(8).issubset(s)


def test_element_set_rejects_mixed_groups():
    with pytest.raises(ValueError):
        ElementSet.full(4) & ElementSet.full(5)
    with pytest.raises(ValueError):
        ElementSet(1 << 9, 8)


def test_identity_is_moved_to_index_zero():
    # Z_3 with the identity stored at index 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = from_cayley_table(table, ["a", "a2", "e"])
    assert G.identity == 0
    assert G.label(0) == "e"
    assert G.mul(1, 2) == 0
    assert G.inv(1) == 2


@pytest.mark.parametrize(
    ("table", "error"),
    [
        ([[0, 1], [1, 1]], NotLatinSquare),
        ([[1, 0], [0, 0]], NotLatinSquare),
        ([[0, 5], [5, 0]], NotLatinSquare),
        (np.zeros((0, 0), dtype=int), NoIdentity),
        ([0, 1], NotLatinSquare),
    ],
)
def test_invalid_tables(table, error):
    with pytest.raises(error):
        from_cayley_table(table)


def test_non_associative_latin_square():
    # a loop of order 5 with identity 0 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        from_cayley_table(table)


def test_tables_are_read_only(s3):
    with pytest.raises(ValueError):
        s3.table[0, 0] = 1


def test_permutation_closure_orders():
    transposition = [1, 0, 2, 3]
    four_cycle = [1, 2, 3, 0]
    S4 = from_permutation_generators(4, [transposition, four_cycle])
    assert S4.order == 24
    assert S4.label(0) == "()"


def test_permutation_closure_rejects_bad_input():
    with pytest.raises(NotAPermutation):
        from_permutation_generators(3, [[0, 0, 1]])
    with pytest.raises(OrderCapExceeded):
        from_permutation_generators(
            5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]], cap=50
        )


def test_cycle_notation():
    assert cycle_notation([1, 2, 0, 3]) == "(0 1 2)"
    assert cycle_notation([0, 1]) == "()"


def test_subgroups_and_normality(group):
    S4 = group("S(4)")
    A4 = subgroup_generated(
        S4,
        S4.subset(
            x for x in range(S4.order) if S4.element_orders[x] == 3
        ),
    )
    assert len(A4) == 12
    assert is_subgroup(S4, A4)
    assert is_normal(S4, A4)

    involution = next(
        x
        for x in range(S4.order)
        if S4.element_orders[x] == 2 and len(conjugacy_class(S4, x)) == 6
    )
    two = subgroup_generated(S4, S4.subset([involution]))
    assert len(two) == 2
    assert not is_normal(S4, two)
    with pytest.raises(NotNormal):
        quotient(S4, two)


def test_quotient_of_d8_by_center(group, d8):
    Q = quotient(d8, center(d8))
    assert Q.order == 4
    assert is_abelian(Q)
    assert is_isomorphic(Q, group("EA(2,2)"))


def test_derived_series_and_solvability(group, a5):
    S4 = group("S(4)")
    orders = [len(term) for term in derived_series(S4)]
    assert orders == [24, 12, 4, 1]
    assert is_solvable(S4)
    assert not is_solvable(a5)
    assert len(derived_subgroup(a5)) == 60


def test_simplicity(group, a5):
    assert is_simple(a5)
    assert is_simple(group("PSL2(7)"))
    assert is_simple(group("C(5)"))
    assert not is_simple(group("A(4)"))
    assert not is_simple(group("SL2(5)"))
    assert not is_simple(group("C(1)"))


def test_element_orders(group):
    orders = group("D(10)").element_orders
    values, counts = np.unique(orders, return_counts=True)
    assert dict(zip(values.tolist(), counts.tolist())) == {1: 1, 2: 5, 5: 4}


def test_large_non_associative_table_is_rejected():
    # Z_514 with one intercalate swapped stays a Latin square with
    # identity 0 but loses associativity
    n, half = 514, 257
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    rows, cols = (1, 1 + half), (3, 3 + half)
    block = table[np.ix_(rows, cols)]
    table[np.ix_(rows, cols)] = block[:, ::-1]
    with pytest.raises(NotAssociative):
        from_cayley_table(table)


SMALL_CATALOG = [
    entry.name
    for entry in DEFAULT_CATALOG
    if DEFAULT_CATALOG.order(entry.name) <= 24
]


@pytest.mark.parametrize("text", SMALL_CATALOG)
def test_trivial_quotients(group, text):
    G = group(text)
    assert is_isomorphic(quotient(G, G.trivial), G)
    assert quotient(G, G.whole).order == 1


@pytest.mark.parametrize("text", SMALL_CATALOG)
def test_derived_subgroup_is_normal_with_abelian_quotient(group, text):
    G = group(text)
    derived = derived_subgroup(G)
    assert is_normal(G, derived)
    assert is_abelian(quotient(G, derived))


@pytest.mark.parametrize("text", SMALL_CATALOG)
def test_subgroup_generated_is_idempotent(group, text):
    G = group(text)
    assert subgroup_generated(G, ElementSet.empty(G.order)) == G.trivial
    for x in range(G.order):
        cyclic = subgroup_generated(G, G.subset([x]))
        assert len(cyclic) == G.element_orders[x]
        assert subgroup_generated(G, cyclic) == cyclic
    pair = subgroup_generated(G, G.subset([0, G.order - 1]))
    assert is_subgroup(G, pair)
    assert subgroup_generated(G, pair) == pair
