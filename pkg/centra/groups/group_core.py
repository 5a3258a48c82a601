"""Concrete finite groups as validated Cayley tables."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .const import (
    ASSOCIATIVITY_SAMPLES,
    ASSOCIATIVITY_SEED,
    ELEMENT_CAP,
    FULL_ASSOCIATIVITY_LIMIT,
    IDENTITY,
)

_LOGGER = logging.getLogger(__name__)


class CentraError(Exception):
    """Base class for all centra library errors."""


class GroupValidationError(CentraError):
    """A table or generator set does not describe a group."""


class NotLatinSquare(GroupValidationError):
    """A row or column of the table is not a permutation."""


class NotAssociative(GroupValidationError):
    """Some triple violates (ab)c = a(bc)."""


class NoIdentity(GroupValidationError):
    """No two-sided identity exists."""


class NoInverse(GroupValidationError):
    """Some element has no two-sided inverse."""


class NotAPermutation(GroupValidationError):
    """A generator is not a permutation of its degree."""


class OrderCapExceeded(CentraError):
    """A construction or search exceeded its configured order cap."""


class NotASubgroup(CentraError):
    """A subset expected to be a subgroup is not closed."""


class NotNormal(CentraError):
    """A subgroup expected to be normal is not."""


class GroupTooSmall(CentraError):
    """The operation needs at least two elements."""


class AbelianGroup(CentraError):
    """The operation is undefined for abelian groups."""


@dataclass(frozen=True, slots=True)
class ElementSet:
    """Subset of a group's elements as a canonical bitset.

    Bit i is set iff element index i belongs to the set. Two sets over
    the same group are equal iff their bits are identical.
    """

    bits: int
    group_order: int

    def __post_init__(self) -> None:
        if self.group_order < 1:
            raise ValueError(
                f"group order must be positive: {self.group_order}"
            )
        if self.bits < 0 or self.bits >> self.group_order:
            raise ValueError(
                f"bitset {self.bits:#x} exceeds group order {self.group_order}"
            )

    @classmethod
    def from_indices(
        cls, indices: Iterable[int], group_order: int
    ) -> ElementSet:
        bits = 0
        for idx in indices:
            bits |= 1 << int(idx)
        return cls(bits, group_order)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> ElementSet:
        packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"), len(mask))

    @classmethod
    def empty(cls, group_order: int) -> ElementSet:
        return cls(0, group_order)

    @classmethod
    def full(cls, group_order: int) -> ElementSet:
        return cls((1 << group_order) - 1, group_order)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, idx: object) -> bool:
        return isinstance(idx, (int, np.integer)) and bool(
            (self.bits >> int(idx)) & 1
        )

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices().tolist())

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check_compatible(other)
        return ElementSet(self.bits & other.bits, self.group_order)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check_compatible(other)
        return ElementSet(self.bits | other.bits, self.group_order)

    def issubset(self, other: ElementSet) -> bool:
        self._check_compatible(other)
        return self.bits & ~other.bits == 0

    def mask(self) -> np.ndarray:
        """Boolean membership array of length group_order."""
        raw = self.bits.to_bytes((self.group_order + 7) // 8, "little")
        bits = np.unpackbits(
            np.frombuffer(raw, dtype=np.uint8), bitorder="little"
        )
        return bits[: self.group_order].astype(bool)

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask())

    def _check_compatible(self, other: ElementSet) -> None:
        if self.group_order != other.group_order:
            raise ValueError(
                "element sets over groups of order "
                f"{self.group_order} and {other.group_order}"
            )


@dataclass(frozen=True, eq=False)
class Group:
    """Immutable finite group given by its Cayley table.

    table[a, b] is the index of a*b; the identity is always index 0.
    Instances are built through from_cayley_table or the constructors
    in constructions, which validate the group axioms.
    """

    table: np.ndarray
    inverses: np.ndarray
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return IDENTITY

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def subset(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet.from_indices(indices, self.order)

    @property
    def whole(self) -> ElementSet:
        return ElementSet.full(self.order)

    @property
    def trivial(self) -> ElementSet:
        return ElementSet(1, self.order)

    @cached_property
    def commuting(self) -> np.ndarray:
        """commuting[a, b] is True iff ab = ba."""
        matrix = self.table == self.table.T
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def commutators(self) -> np.ndarray:
        """commutators[a, b] is the index of a^-1 b^-1 a b."""
        left = self.table[np.ix_(self.inverses, self.inverses)]
        result = self.table[left, self.table]
        result.flags.writeable = False
        return result

    @cached_property
    def element_centralizers(self) -> tuple[ElementSet, ...]:
        """C_G(x) for every element x, in index order."""
        packed = np.packbits(self.commuting, axis=1, bitorder="little")
        return tuple(
            ElementSet(int.from_bytes(row.tobytes(), "little"), self.order)
            for row in packed
        )

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        everything = np.arange(n)
        power = everything.copy()
        k = 1
        while (orders == 0).any():
            done = (power == IDENTITY) & (orders == 0)
            orders[done] = k
            power = self.table[power, everything]
            k += 1
        orders.flags.writeable = False
        return orders

    def __repr__(self) -> str:
        return f"Group(order={self.order})"


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.int64)
    array.flags.writeable = False
    return array


def _check_associative(table: np.ndarray, sampled: bool) -> None:
    """Compare (ab)c with a(bc) on every triple.

    With sampled set, tables above FULL_ASSOCIATIVITY_LIMIT are only
    spot-checked on a seeded random sample of triples.
    """
    n = table.shape[0]
    if not sampled or n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # (ab)c against a(bc) for every b, c
            lhs = table[table[a]]
            rhs = table[a][table]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise NotAssociative(
                    f"({a}*{b})*{c} != {a}*({b}*{c})"
                )
        return
    rng = np.random.default_rng(ASSOCIATIVITY_SEED)
    a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
    if bad.size:
        i = bad[0]
        raise NotAssociative(
            f"({a[i]}*{b[i]})*{c[i]} != {a[i]}*({b[i]}*{c[i]})"
        )
    _LOGGER.debug(
        "Spot-checked associativity on %d triples of an order-%d table",
        ASSOCIATIVITY_SAMPLES,
        n,
    )


def from_cayley_table(
    table: Sequence[Sequence[int]] | np.ndarray,
    labels: Sequence[str] | None = None,
    *,
    _trusted: bool = False,
) -> Group:
    """Validate a multiplication table and relabel its identity to 0.

    Every triple is checked for associativity. _trusted is reserved for
    tables built inside the library, whose large orders are only
    spot-checked.
    """
    array = np.asarray(table, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise NotLatinSquare(f"table is not square: shape {array.shape}")
    n = array.shape[0]
    if n == 0:
        raise NoIdentity("empty table")
    if n > ELEMENT_CAP:
        raise OrderCapExceeded(f"order {n} exceeds cap {ELEMENT_CAP}")
    if labels is not None and len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} elements")
    out_of_range = np.argwhere((array < 0) | (array >= n))
    if out_of_range.size:
        a, b = out_of_range[0]
        raise NotLatinSquare(
            f"entry [{a}][{b}] = {array[a, b]} is out of range"
        )

    everything = np.arange(n)
    expected = np.broadcast_to(everything, (n, n))
    bad_rows = np.flatnonzero((np.sort(array, axis=1) != expected).any(1))
    if bad_rows.size:
        raise NotLatinSquare(f"row {bad_rows[0]} is not a permutation")
    bad_cols = np.flatnonzero((np.sort(array, axis=0) != expected.T).any(0))
    if bad_cols.size:
        raise NotLatinSquare(f"column {bad_cols[0]} is not a permutation")

    candidates = np.flatnonzero(
        (array == everything).all(axis=1)
        & (array.T == everything).all(axis=1)
    )
    if not candidates.size:
        raise NoIdentity("no element acts as a two-sided identity")
    e = int(candidates[0])

    right = np.argmax(array == e, axis=1)
    left = np.argmax(array == e, axis=0)
    mismatched = np.flatnonzero(right != left)
    if mismatched.size:
        a = int(mismatched[0])
        raise NoInverse(
            f"element {a} has right inverse {right[a]} "
            f"but left inverse {left[a]}"
        )

    _check_associative(array, sampled=_trusted)

    if e != IDENTITY:
        # move the identity to index 0 and keep the others in order
        perm = np.array([e] + [i for i in range(n) if i != e])
        relabel = np.empty(n, dtype=np.int64)
        relabel[perm] = everything
        array = relabel[array[np.ix_(perm, perm)]]
        right = relabel[right[perm]]
        if labels is not None:
            labels = [labels[i] for i in perm]

    return Group(
        table=_freeze(array),
        inverses=_freeze(right),
        labels=tuple(labels) if labels is not None else None,
    )


def cycle_notation(perm: Sequence[int]) -> str:
    """Render a permutation in disjoint-cycle notation."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(point)
            point = int(perm[point])
        if len(cycle) > 1:
            cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) or "()"


def from_permutation_generators(
    degree: int,
    gens: Sequence[Sequence[int]],
    cap: int = ELEMENT_CAP,
) -> Group:
    """Close a set of permutations of {0..degree-1} into a group.

    Elements are indexed in breadth-first discovery order starting
    from the identity. table[a, b] is "a then b", x -> b(a(x)).
    """
    if degree < 1:
        raise NotAPermutation(f"degree must be positive: {degree}")
    points = np.arange(degree)
    generators = []
    for position, gen in enumerate(gens):
        perm = np.asarray(gen, dtype=np.int64)
        if perm.shape != (degree,) or not np.array_equal(
            np.sort(perm), points
        ):
            raise NotAPermutation(
                f"generator {position} is not a permutation of {degree} points"
            )
        generators.append(perm)

    elements = [points]
    index = {points.tobytes(): 0}
    head = 0
    while head < len(elements):
        current = elements[head]
        head += 1
        for gen in generators:
            image = gen[current]
            key = image.tobytes()
            if key in index:
                continue
            if len(elements) >= cap:
                raise OrderCapExceeded(
                    f"closure exceeds {cap} elements on {degree} points"
                )
            index[key] = len(elements)
            elements.append(image)
    n = len(elements)
    _LOGGER.debug(
        "Closed %d generators on %d points into %d elements",
        len(generators),
        degree,
        n,
    )

    perms = np.stack(elements)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        composed = perms[:, perms[a]]
        table[a] = [index[row.tobytes()] for row in composed]
    labels = [cycle_notation(p) for p in elements]
    return from_cayley_table(table, labels, _trusted=True)


def is_subgroup(G: Group, H: ElementSet) -> bool:
    if IDENTITY not in H:
        return False
    idx = H.indices()
    return bool(H.mask()[G.table[np.ix_(idx, idx)]].all())


def subgroup_generated(G: Group, S: ElementSet) -> ElementSet:
    """Smallest subgroup of G containing S."""
    gens = S.indices()
    mask = S.mask()
    mask[IDENTITY] = True
    frontier = np.flatnonzero(mask)
    while frontier.size and gens.size:
        products = G.table[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return ElementSet.from_mask(mask)


def is_normal(G: Group, H: ElementSet) -> bool:
    """True iff gHg^-1 = H for every g in G."""
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{len(H)}-element subset is not a subgroup")
    idx = H.indices()
    conjugates = G.table[G.table[:, idx], G.inverses[:, None]]
    return bool(H.mask()[conjugates].all())


def quotient(G: Group, N: ElementSet) -> Group:
    """The factor group G/N on cosets; the coset of the identity is 0."""
    try:
        normal = is_normal(G, N)
    except NotASubgroup as err:
        raise NotNormal(f"cannot factor by a non-subgroup: {err}") from err
    if not normal:
        raise NotNormal(f"order-{len(N)} subgroup is not normal")
    members = N.indices()
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[G.table[g, members]] = len(reps)
            reps.append(g)
    table = coset_of[G.table[np.ix_(reps, reps)]]
    labels = [f"{G.label(r)}N" for r in reps]
    _LOGGER.debug(
        "Factored order %d by order %d into %d cosets",
        G.order,
        len(N),
        len(reps),
    )
    return from_cayley_table(table, labels, _trusted=True)


def commutator_subgroup(G: Group, H: ElementSet) -> ElementSet:
    """[H, H] for a subgroup H of G."""
    idx = H.indices()
    words = np.unique(G.commutators[np.ix_(idx, idx)])
    return subgroup_generated(G, G.subset(words))


def derived_subgroup(G: Group) -> ElementSet:
    return commutator_subgroup(G, G.whole)


def derived_series(G: Group) -> list[ElementSet]:
    """G = G0 > G1 > ... down to the first term equal to its successor."""
    series = [G.whole]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(G: Group) -> bool:
    return len(derived_series(G)[-1]) == 1


def is_abelian(G: Group) -> bool:
    return bool(G.commuting.all())


def conjugacy_class(G: Group, x: int) -> ElementSet:
    """{g x g^-1 : g in G}."""
    conjugates = G.table[G.table[:, x], G.inverses]
    return G.subset(np.unique(conjugates))


def normal_closure(G: Group, S: ElementSet) -> ElementSet:
    """Smallest normal subgroup of G containing S."""
    mask = np.zeros(G.order, dtype=bool)
    for x in S:
        mask |= conjugacy_class(G, x).mask()
    return subgroup_generated(G, ElementSet.from_mask(mask))


def is_simple(G: Group) -> bool:
    """True iff G is non-trivial with no normal subgroups but 1 and G."""
    if G.order == 1:
        return False
    seen = G.trivial
    for x in range(1, G.order):
        if x in seen:
            continue
        klass = conjugacy_class(G, x)
        seen = seen | klass
        if normal_closure(G, klass) != G.whole:
            return False
    return True
