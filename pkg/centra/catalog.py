"""The named group catalog every suite check runs over."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    CentraError,
    Group,
    GroupSpec,
    build,
    format_spec,
    identify_in_catalog,
    parse_spec,
    spec_order,
)

_LOGGER = logging.getLogger(__name__)


class CatalogError(CentraError):
    """Unknown catalog name or an entry that fails to build."""


@lru_cache(maxsize=None)
def load_group(text: str) -> Group:
    """Build a group from DSL text, memoised per process."""
    return build(parse_spec(text))


@lru_cache(maxsize=None)
def group_order(text: str) -> int:
    order = spec_order(parse_spec(text))
    return order if order is not None else load_group(text).order


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: GroupSpec
    note: str = ""


class Catalog:
    """Ordered, uniquely named group specs.

    Entry order breaks ties when identifying a group up to
    isomorphism: the earliest isomorphic entry names it.
    """

    def __init__(self, entries: Iterable[CatalogEntry]) -> None:
        self._entries = tuple(entries)
        self._by_name = {entry.name: entry for entry in self._entries}
        if len(self._by_name) != len(self._entries):
            raise CatalogError("catalog names must be unique")

    @classmethod
    def from_texts(cls, texts: Iterable[str | tuple[str, str]]) -> Catalog:
        entries = []
        for item in texts:
            text, note = (item, "") if isinstance(item, str) else item
            spec = parse_spec(text)
            entries.append(CatalogEntry(format_spec(spec), spec, note))
        return cls(entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def names(self) -> tuple[str, ...]:
        return tuple(entry.name for entry in self._entries)

    def entry(self, name: str) -> CatalogEntry:
        try:
            return self._by_name[name]
        except KeyError:
            raise CatalogError(f"no catalog entry named {name!r}") from None

    def build(self, name: str) -> Group:
        self.entry(name)
        try:
            return load_group(name)
        except CentraError as err:
            raise CatalogError(f"catalog entry {name} failed: {err}") from err

    def order(self, name: str) -> int:
        self.entry(name)
        return group_order(name)

    def identify(self, G: Group) -> str | None:
        """Name of the first entry isomorphic to G, or None."""
        candidates = (
            (entry.name, self.build(entry.name))
            for entry in self._entries
            if self.order(entry.name) == G.order
        )
        return identify_in_catalog(G, candidates)

    def alias_of(self, name: str) -> str | None:
        """An earlier entry isomorphic to name, if any."""
        found = self.identify(self.build(name))
        return None if found == name else found


DEFAULT_CATALOG = Catalog.from_texts(
    [f"C({n})" for n in range(1, 13)]
    + [
        "EA(2,2)",
        "EA(2,3)",
        "EA(2,4)",
        "EA(3,2)",
        "EA(5,2)",
        "EA(7,2)",
        "S(3)",
        "S(4)",
        "A(4)",
        "A(5)",
        ("SL2(3)", "binary tetrahedral group"),
        ("SL2(5)", "binary icosahedral group"),
        ("R", "Frobenius group Z5 x| Z4"),
        ("G21", "non-abelian group of order 21"),
        ("Hol(7)", "holomorph of Z7"),
        "sdp(9,3,4)",
        ("Heis(3)", "Heisenberg group mod 3"),
        ("M(4)", "modular group of order 16"),
    ]
    + [f"D({m})" for m in (6, 8, 10, 12, 14, 16, 20, 24)]
    + [f"SD({n})" for n in range(2, 7)]
    + [("T(2)", "quaternion group")]
    + [f"T({n})" for n in range(3, 9)]
    + [f"V({n})" for n in range(1, 7)]
    + [f"U({n},{m})" for n in (1, 2, 3) for m in (3, 4, 5, 6)]
    + ["PSL2(5)", "PSL2(7)", "PSL2(8)"]
    + [
        "prod(S(3),S(3))",
        "prod(D(8),C(2))",
        "prod(T(2),C(2))",
        "prod(Heis(3),C(3))",
        "prod(sdp(9,3,4),C(3))",
        "prod(S(3),C(2),C(2))",
        "prod(S(3),S(3),C(3))",
    ]
)
