"""Isomorphism testing for small concrete groups."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .centralizers import center
from .const import ISOMORPHISM_ORDER_CAP
from .group_core import (
    Group,
    OrderCapExceeded,
    derived_series,
    is_abelian,
    subgroup_generated,
)

_LOGGER = logging.getLogger(__name__)

Histogram = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants; unequal fingerprints prove G is not H.

    Histograms are sorted (value, count) pairs.
    """

    order: int
    abelian: bool
    center_order: int
    element_order_histogram: Histogram
    conjugacy_class_size_histogram: Histogram
    derived_order: int
    derived_length: int


def _histogram(values: np.ndarray) -> Histogram:
    keys, counts = np.unique(values, return_counts=True)
    return tuple(zip(keys.tolist(), counts.tolist()))


def fingerprint(G: Group) -> Fingerprint:
    n = G.order
    # an element with centralizer of order c lies in a class of size n/c
    class_sizes = n // G.commuting.sum(axis=1)
    sizes, members = np.unique(class_sizes, return_counts=True)
    series = derived_series(G)
    return Fingerprint(
        order=n,
        abelian=is_abelian(G),
        center_order=len(center(G)),
        element_order_histogram=_histogram(G.element_orders),
        conjugacy_class_size_histogram=tuple(
            (int(size), int(count // size))
            for size, count in zip(sizes, members)
        ),
        derived_order=len(series[1]) if len(series) > 1 else n,
        derived_length=len(series) - 1,
    )


def _generating_sequence(G: Group) -> list[int]:
    """Greedy generators: repeatedly add a highest-order element outside."""
    gens: list[int] = []
    generated = G.trivial
    orders = G.element_orders
    while generated != G.whole:
        outside = np.flatnonzero(~generated.mask())
        pick = int(outside[np.argmax(orders[outside])])
        gens.append(pick)
        generated = subgroup_generated(G, G.subset(gens))
    return gens


def _extend(
    g_table: list[list[int]],
    h_table: list[list[int]],
    gens: list[int],
    images: list[int],
) -> list[int] | None:
    """Extend gens -> images along the Cayley graph of <gens>.

    Returns the map on <gens> (-1 elsewhere), or None when the
    assignment is inconsistent or not injective.
    """
    phi = [-1] * len(g_table)
    used = [False] * len(h_table)
    phi[0] = 0
    used[0] = True
    queue = [0]
    for g in queue:
        row, image_row = g_table[g], h_table[phi[g]]
        for s, t in zip(gens, images):
            product, target = row[s], image_row[t]
            if phi[product] < 0:
                if used[target]:
                    return None
                phi[product] = target
                used[target] = True
                queue.append(product)
            elif phi[product] != target:
                return None
    return phi


def is_isomorphic(
    G: Group, H: Group, cap: int = ISOMORPHISM_ORDER_CAP
) -> bool:
    """Exact isomorphism test by backtracking over generator images."""
    if G.order > cap or H.order > cap:
        raise OrderCapExceeded(
            f"isomorphism test on orders {G.order} and {H.order} "
            f"exceeds cap {cap}"
        )
    if G.order != H.order:
        return False
    if np.array_equal(G.table, H.table):
        return True
    if fingerprint(G) != fingerprint(H):
        return False

    gens = _generating_sequence(G)
    g_table, h_table = G.table.tolist(), H.table.tolist()
    g_cent = G.commuting.sum(axis=1)
    h_cent = H.commuting.sum(axis=1)
    candidates = [
        np.flatnonzero(
            (H.element_orders == G.element_orders[g]) & (h_cent == g_cent[g])
        ).tolist()
        for g in gens
    ]

    def search(images: list[int]) -> bool:
        depth = len(images)
        if depth == len(gens):
            return True
        for target in candidates[depth]:
            trial = images + [target]
            if _extend(g_table, h_table, gens[: depth + 1], trial) is None:
                continue
            if search(trial):
                return True
        return False

    found = search([])
    _LOGGER.debug(
        "Isomorphism search of order %d over %d generators: %s",
        G.order,
        len(gens),
        found,
    )
    return found


def identify_in_catalog(
    G: Group, candidates: Iterable[tuple[str, Group]]
) -> str | None:
    """Name of the first candidate isomorphic to G, or None."""
    for name, group in candidates:
        if group.order == G.order and is_isomorphic(G, group):
            return name
    return None
