"""Tests for centralizer invariants."""

import pytest

from centra.catalog import DEFAULT_CATALOG
from centra.groups import (
    AbelianGroup,
    ElementSet,
    GroupTooSmall,
    cent_profile,
    cent_set,
    center,
    centralizer_elem,
    centralizer_set,
    delta,
    is_ca_group,
    is_subgroup,
    max_noncommuting_set,
    second_center,
    two_cent,
    two_cent_naive,
)
from centra.groups.centralizers import max_clique

# (spec, |Cent|, |2-Cent|)
COUNTS = [
    ("S(3)", 5, 5),
    ("A(4)", 6, 6),
    ("D(8)", 4, 5),
    ("T(2)", 4, 5),
    ("D(10)", 7, 7),
    ("R", 7, 7),
    ("D(12)", 5, 6),
    ("D(14)", 9, 9),
    ("Hol(7)", 9, 9),
    ("G21", 9, 9),
    ("A(5)", 22, 22),
    ("S(4)", 14, 18),
    ("Heis(3)", 5, 6),
    ("SL2(3)", 8, 9),
    ("SL2(5)", 32, 33),
    ("prod(S(3),S(3))", 25, 35),
    ("PSL2(7)", 79, 114),
]


@pytest.mark.parametrize(("text", "n_cent", "n_2cent"), COUNTS)
def test_counts(group, text, n_cent, n_2cent):
    G = group(text)
    assert len(cent_set(G)) == n_cent
    assert len(two_cent(G)) == n_2cent


def _small_catalog():
    return [
        entry.name
        for entry in DEFAULT_CATALOG
        if 2 <= DEFAULT_CATALOG.order(entry.name) <= 64
    ]


@pytest.mark.parametrize("text", _small_catalog())
def test_two_cent_matches_definition(group, text):
    G = group(text)
    assert two_cent(G) == two_cent_naive(G)


def test_two_cent_members_contain_center(group):
    for text in ("D(8)", "SL2(3)", "prod(S(3),C(2),C(2))", "M(4)"):
        G = group(text)
        z = center(G)
        for member in two_cent(G):
            assert is_subgroup(G, member)
            assert z.issubset(member)


def test_abelian_groups(group):
    G = group("C(6)")
    assert cent_set(G) == {G.whole}
    assert two_cent(G) == {G.whole}
    assert delta(G) == 0
    assert delta(group("C(1)")) == 1
    with pytest.raises(GroupTooSmall):
        two_cent(group("C(1)"))
    with pytest.raises(AbelianGroup):
        max_noncommuting_set(G)


def test_element_and_set_centralizers(d8):
    z = center(d8)
    assert len(z) == 2
    for x in range(d8.order):
        assert z.issubset(centralizer_elem(d8, x))
    assert centralizer_set(d8, ElementSet.empty(8)) == d8.whole
    assert centralizer_set(d8, d8.whole) == z
    assert second_center(d8) == d8.whole


def test_ca_groups(group):
    assert is_ca_group(group("A(5)"))
    assert is_ca_group(group("SL2(3)"))
    assert not is_ca_group(group("S(4)"))
    assert not is_ca_group(group("PSL2(7)"))


@pytest.mark.parametrize(
    ("text", "r"),
    [("S(3)", 4), ("D(8)", 3), ("A(4)", 5), ("A(5)", 21), ("S(4)", 10)],
)
def test_max_noncommuting_set(group, text, r):
    G = group(text)
    size, witness = max_noncommuting_set(G)
    assert size == r
    assert len(witness) == r
    members = list(witness)
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            assert not G.commuting[x, y]


def test_max_noncommuting_set_psl2_7(group):
    assert max_noncommuting_set(group("PSL2(7)"))[0] == 57


def test_max_clique_small_graphs():
    # 5-cycle: the largest clique is an edge
    pentagon = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001]
    assert len(max_clique(pentagon)) == 2
    complete = [0b1110, 0b1101, 0b1011, 0b0111]
    assert sorted(max_clique(complete)) == [0, 1, 2, 3]
    assert max_clique([]) == []


def test_profile_fields(group):
    p = cent_profile(group("SL2(3)"), "SL2(3)")
    assert p.order == 24
    assert p.center_order == 2
    assert (p.n_cent, p.n_2cent, p.delta) == (8, 9, 0)
    assert p.is_ca
    assert p.r == 7
    assert p.quotient_n_cent == 6
    assert p.quotient_n_2cent == 6
    assert not p.primitive_n
    assert p.solvable
    assert list(p.as_dict())[:3] == ["group_spec", "order", "center_order"]


def test_profile_of_abelian_and_trivial_quotient(group):
    p = cent_profile(group("C(4)"), "C(4)")
    assert p.r is None
    assert p.quotient_n_cent == 1
    assert p.quotient_n_2cent == 0
    with pytest.raises(GroupTooSmall):
        cent_profile(group("C(1)"), "C(1)")


def test_centerless_ca_groups_are_primitive(group):
    for text in ("S(3)", "A(4)", "D(10)", "A(5)"):
        p = cent_profile(group(text), text)
        assert p.primitive_n and p.primitive_2n
