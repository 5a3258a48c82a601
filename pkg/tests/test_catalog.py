"""Tests for the group catalog."""

import pytest

from centra.catalog import (
    DEFAULT_CATALOG,
    Catalog,
    CatalogError,
    group_order,
    load_group,
)
from centra.groups import format_spec, parse_spec


def test_names_are_canonical_and_unique():
    names = DEFAULT_CATALOG.names()
    assert len(set(names)) == len(names) == len(DEFAULT_CATALOG)
    for name in names:
        assert format_spec(parse_spec(name)) == name


def test_duplicate_names_are_rejected():
    with pytest.raises(CatalogError):
        Catalog.from_texts(["C(2)", " C( 2 ) "])


def test_unknown_entry():
    with pytest.raises(CatalogError):
        DEFAULT_CATALOG.entry("C(99)")
    assert "C(99)" not in DEFAULT_CATALOG
    assert "SL2(3)" in DEFAULT_CATALOG


def test_build_failures_are_catalog_errors():
    catalog = Catalog.from_texts(["D(5)"])
    with pytest.raises(CatalogError):
        catalog.build("D(5)")


def test_notes():
    assert DEFAULT_CATALOG.entry("T(2)").note == "quaternion group"
    assert DEFAULT_CATALOG.entry("D(8)").note == ""


def test_orders():
    assert DEFAULT_CATALOG.order("PSL2(8)") == 504
    assert DEFAULT_CATALOG.order("prod(Heis(3),C(3))") == 81
    assert group_order("quotZ(D(8))") == 4
    assert load_group("S(3)") is load_group("S(3)")


@pytest.mark.parametrize(
    ("name", "alias"),
    [
        ("D(6)", "S(3)"),
        ("PSL2(5)", "A(5)"),
        ("V(1)", "D(8)"),
        ("U(1,3)", "S(3)"),
        ("U(1,4)", "D(8)"),
        ("U(2,3)", "T(3)"),
        ("U(2,5)", "T(5)"),
        ("S(3)", None),
        ("T(2)", None),
    ],
)
def test_aliases(name, alias):
    assert DEFAULT_CATALOG.alias_of(name) == alias


def test_identify(group):
    assert DEFAULT_CATALOG.identify(group("quotZ(SL2(3))")) == "A(4)"
    assert DEFAULT_CATALOG.identify(group("EA(2,5)")) is None
