"""Centralizer counting invariants of finite groups."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from .group_core import (
    AbelianGroup,
    ElementSet,
    Group,
    GroupTooSmall,
    derived_subgroup,
    is_abelian,
    is_solvable,
    quotient,
)

_LOGGER = logging.getLogger(__name__)


def centralizer_elem(G: Group, x: int) -> ElementSet:
    return G.element_centralizers[x]


def centralizer_set(G: Group, S: ElementSet) -> ElementSet:
    """Intersection of C_G(x) over x in S; the empty set gives G."""
    return ElementSet.from_mask(G.commuting[S.indices()].all(axis=0))


def center(G: Group) -> ElementSet:
    return ElementSet.from_mask(G.commuting.all(axis=1))


def second_center(G: Group) -> ElementSet:
    """{x : [x, g] in Z(G) for all g}."""
    central = center(G).mask()
    return ElementSet.from_mask(central[G.commutators].all(axis=1))


def _centralizer_classes(G: Group) -> Counter[ElementSet]:
    """Distinct element centralizers with their multiplicities."""
    return Counter(G.element_centralizers)


def cent_set(G: Group) -> frozenset[ElementSet]:
    """Cent(G): the distinct centralizers of single elements."""
    return frozenset(G.element_centralizers)


def _require_pairs(G: Group) -> None:
    if G.order < 2:
        raise GroupTooSmall("2-Cent needs at least two elements")


def two_cent_naive(G: Group) -> frozenset[ElementSet]:
    """2-Cent(G) straight from the definition, over all pairs x != y."""
    _require_pairs(G)
    cents = G.element_centralizers
    found = set()
    for x in range(G.order):
        for y in range(x + 1, G.order):
            found.add(cents[x] & cents[y])
    return frozenset(found)


def two_cent(G: Group) -> frozenset[ElementSet]:
    """2-Cent(G) from pairs of centralizer classes.

    C(x) & C(y) depends only on the classes of x and y, so the result
    is every pairwise intersection of distinct classes together with
    each class holding at least two elements.
    """
    _require_pairs(G)
    classes = _centralizer_classes(G)
    keys = list(classes)
    found = {c for c, count in classes.items() if count >= 2}
    for i, first in enumerate(keys):
        for second in keys[i + 1 :]:
            found.add(first & second)
    _LOGGER.debug(
        "2-Cent of order %d from %d classes: %d members",
        G.order,
        len(keys),
        len(found),
    )
    return frozenset(found)


def delta(G: Group) -> int:
    return 1 if len(center(G)) == 1 else 0


def is_ca_group(G: Group) -> bool:
    """True iff every proper element centralizer is abelian."""
    whole = G.whole
    for cent in cent_set(G):
        if cent == whole:
            continue
        idx = cent.indices()
        if not G.commuting[np.ix_(idx, idx)].all():
            return False
    return True


def _colour_sort(
    candidates: int, adjacency: list[int]
) -> list[tuple[int, int]]:
    """Greedy sequential colouring; returns (vertex, colour) by colour."""
    coloured = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            vertex = low.bit_length() - 1
            uncoloured &= ~low
            available &= ~low & ~adjacency[vertex]
            coloured.append((vertex, colour))
    return coloured


def _greedy_clique(adjacency: list[int]) -> list[int]:
    clique: list[int] = []
    candidates = (1 << len(adjacency)) - 1
    while candidates:
        vertex = max(
            _bits(candidates),
            key=lambda v: (adjacency[v] & candidates).bit_count(),
        )
        clique.append(vertex)
        candidates &= adjacency[vertex]
    return clique


def _bits(mask: int) -> list[int]:
    found = []
    while mask:
        low = mask & -mask
        found.append(low.bit_length() - 1)
        mask ^= low
    return found


def max_clique(adjacency: list[int]) -> list[int]:
    """Exact maximum clique by colour-bounded branch and bound.

    adjacency[v] is the neighbour bitset of vertex v. Vertices should
    be numbered by non-increasing degree for tight colour bounds.
    """
    best = _greedy_clique(adjacency)

    def expand(clique: list[int], candidates: int) -> None:
        nonlocal best
        for vertex, colour in reversed(_colour_sort(candidates, adjacency)):
            if len(clique) + colour <= len(best):
                return
            clique.append(vertex)
            narrowed = candidates & adjacency[vertex]
            if narrowed:
                expand(clique, narrowed)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            candidates &= ~(1 << vertex)

    expand([], (1 << len(adjacency)) - 1)
    return best


def max_noncommuting_set(G: Group) -> tuple[int, ElementSet]:
    """Largest set of pairwise non-commuting elements, with a witness.

    Elements sharing a centralizer commute with each other and with the
    same elements, so one representative per non-central class is
    searched.
    """
    if is_abelian(G):
        raise AbelianGroup("no non-commuting pairs in an abelian group")
    whole = G.whole
    reps: dict[ElementSet, int] = {}
    for x, cent in enumerate(G.element_centralizers):
        if cent != whole:
            reps.setdefault(cent, x)
    vertices = np.array(list(reps.values()), dtype=np.int64)
    apart = ~G.commuting[np.ix_(vertices, vertices)]
    ranking = np.argsort(-apart.sum(axis=1), kind="stable")
    vertices = vertices[ranking]
    apart = apart[np.ix_(ranking, ranking)]
    packed = np.packbits(apart, axis=1, bitorder="little")
    adjacency = [int.from_bytes(row.tobytes(), "little") for row in packed]
    clique = max_clique(adjacency)
    _LOGGER.debug(
        "Non-commuting search over %d classes of order %d: r=%d",
        len(adjacency),
        G.order,
        len(clique),
    )
    return len(clique), G.subset(vertices[clique].tolist())


@dataclass(frozen=True)
class CentProfile:
    """Every centralizer invariant of one group.

    r is None for abelian groups, where no non-commuting pair exists.
    quotient_n_2cent is 0 when G/Z(G) is trivial: a one-element group
    has no pair of distinct elements.
    """

    group_spec: str
    order: int
    center_order: int
    n_cent: int
    n_2cent: int
    delta: int
    is_ca: bool
    r: int | None
    derived_order: int
    solvable: bool
    second_center_order: int
    quotient_n_cent: int
    quotient_n_2cent: int
    primitive_n: bool
    primitive_2n: bool

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


def cent_profile(G: Group, spec_label: str) -> CentProfile:
    _require_pairs(G)
    z = center(G)
    factor = quotient(G, z)
    n_cent = len(cent_set(G))
    n_2cent = len(two_cent(G))
    quotient_n_cent = len(cent_set(factor))
    quotient_n_2cent = len(two_cent(factor)) if factor.order >= 2 else 0
    r = None if is_abelian(G) else max_noncommuting_set(G)[0]
    profile = CentProfile(
        group_spec=spec_label,
        order=G.order,
        center_order=len(z),
        n_cent=n_cent,
        n_2cent=n_2cent,
        delta=1 if len(z) == 1 else 0,
        is_ca=is_ca_group(G),
        r=r,
        derived_order=len(derived_subgroup(G)),
        solvable=is_solvable(G),
        second_center_order=len(second_center(G)),
        quotient_n_cent=quotient_n_cent,
        quotient_n_2cent=quotient_n_2cent,
        primitive_n=n_cent == quotient_n_cent,
        primitive_2n=n_2cent == quotient_n_2cent,
    )
    _LOGGER.debug("Profile of %s: %s", spec_label, profile)
    return profile
