"""Executable checks of the centralizer counting results.

Each check runs over one instance (a tuple of DSL texts) and yields
zero or more outcomes. Outcomes are gathered into one TheoremReport
per theorem id.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import asdict, dataclass, field
from enum import StrEnum
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Any

import numpy as np

from .catalog import DEFAULT_CATALOG, group_order, load_group
from .const import (
    CLIQUE_ORDER_LIMIT,
    DEFAULT_ORDER_CAP,
    FAMILY_RANGE,
    PRODUCT_SUBSET,
    REPORT_VERSION,
    SEMIDIRECT_TRIPLES,
    TRIPLE_PRODUCTS,
    U_M_RANGE,
)
from .groups import (
    CentProfile,
    CentraError,
    CosetCapExceeded,
    ElementSet,
    Group,
    OrderCapExceeded,
    cent_profile,
    cent_set,
    center,
    delta,
    is_ca_group,
    is_isomorphic,
    is_normal,
    is_simple,
    quotient,
    sdp_cyclic,
    second_center,
    subgroup_generated,
    two_cent,
)
from .groups.constructions import is_prime

_LOGGER = logging.getLogger(__name__)


class Status(StrEnum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Outcome:
    instance: str
    status: Status
    expected: str = ""
    got: str = ""
    reason: str = ""


@dataclass(frozen=True)
class Counterexample:
    instance: str
    expected: str
    got: str


@dataclass(frozen=True)
class SkippedInstance:
    instance: str
    reason: str


@dataclass
class TheoremReport:
    """Pass/fail tally of one theorem over its instances.

    passed + failed == instances; skipped instances are listed apart.
    """

    theorem_id: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    skipped_instances: list[SkippedInstance] = field(default_factory=list)

    @classmethod
    def from_outcomes(
        cls, theorem_id: str, outcomes: Iterable[Outcome]
    ) -> TheoremReport:
        report = cls(theorem_id)
        for outcome in outcomes:
            if outcome.status is Status.SKIPPED:
                report.skipped += 1
                report.skipped_instances.append(
                    SkippedInstance(outcome.instance, outcome.reason)
                )
                continue
            report.instances += 1
            if outcome.status is Status.PASSED:
                report.passed += 1
            else:
                report.failed += 1
                report.counterexamples.append(
                    Counterexample(
                        outcome.instance, outcome.expected, outcome.got
                    )
                )
        return report

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> TheoremReport:
        return cls(
            theorem_id=data["theorem_id"],
            instances=data["instances"],
            passed=data["passed"],
            failed=data["failed"],
            skipped=data["skipped"],
            counterexamples=[
                Counterexample(**item) for item in data["counterexamples"]
            ],
            skipped_instances=[
                SkippedInstance(**item) for item in data["skipped_instances"]
            ],
        )

    def as_dict(self) -> dict[str, Any]:
        return {"version": REPORT_VERSION, **asdict(self)}

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class SuiteConfig:
    """Which theorems run, over which groups, within which limits.

    catalog_names restricts the catalog; when given it is also the
    pool that product checks draw pairs and the sweep draws groups from.
    """

    theorem_ids: tuple[str, ...] | None = None
    catalog_names: tuple[str, ...] | None = None
    order_cap: int = DEFAULT_ORDER_CAP
    jobs: int = 1
    family_range: tuple[int, int] = FAMILY_RANGE
    u_m_range: tuple[int, int] = U_M_RANGE

    @property
    def groups(self) -> tuple[str, ...]:
        if self.catalog_names is None:
            return DEFAULT_CATALOG.names()
        return self.catalog_names

    @property
    def product_pool(self) -> tuple[str, ...]:
        if self.catalog_names is None:
            return PRODUCT_SUBSET
        return self.catalog_names


# Per-process memoised invariants, keyed by DSL text.


@lru_cache(maxsize=None)
def profile(text: str) -> CentProfile:
    return cent_profile(load_group(text), text)


@lru_cache(maxsize=None)
def counts(text: str) -> tuple[int, int, int]:
    """(|Cent|, |2-Cent|, delta) without the clique search."""
    G = load_group(text)
    n_2cent = len(two_cent(G)) if G.order >= 2 else 0
    return len(cent_set(G)), n_2cent, delta(G)


@lru_cache(maxsize=None)
def central_quotient(text: str) -> Group:
    G = load_group(text)
    return quotient(G, center(G))


def _isomorphic_to_any(G: Group, names: Iterable[str]) -> str | None:
    for name in names:
        if group_order(name) == G.order and is_isomorphic(
            G, load_group(name)
        ):
            return name
    return None


@lru_cache(maxsize=None)
def _is_abelian(text: str) -> bool:
    return bool(load_group(text).commuting.all())


# Outcome helpers.


def _passed(instance: str) -> Outcome:
    return Outcome(instance, Status.PASSED)


def _skipped(instance: str, reason: str) -> Outcome:
    return Outcome(instance, Status.SKIPPED, reason=reason)


def _judge(instance: str, clauses: Sequence[tuple[str, Any, Any]]) -> Outcome:
    """Pass iff every (label, expected, got) clause agrees."""
    bad = [(label, e, g) for label, e, g in clauses if e != g]
    if not bad:
        return _passed(instance)
    return Outcome(
        instance,
        Status.FAILED,
        expected="; ".join(f"{label}={e}" for label, e, _ in bad),
        got="; ".join(f"{label}={g}" for label, _, g in bad),
    )


def _product_text(texts: Sequence[str]) -> str:
    if len(texts) == 1:
        return texts[0]
    return f"prod({','.join(texts)})"


# Lemmas 2.1 - 2.3 and the product formulas.


def check_lemma_2_1(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    G = load_group(text)
    z = center(G)
    return [
        _judge(
            text,
            [
                ("Z in Cent", False, z in cent_set(G)),
                ("G in 2-Cent", len(z) > 1, G.whole in two_cent(G)),
            ],
        )
    ]


def check_lemma_2_2(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    G = load_group(text)
    cents, pairs = cent_set(G), two_cent(G)
    if len(center(G)) > 1:
        clauses = [("Cent strictly inside 2-Cent", True, cents < pairs)]
    else:
        clauses = [("|Cent| <= |2-Cent|", True, len(cents) <= len(pairs))]
    return [_judge(text, clauses)]


def check_lemma_2_3(*factors: str) -> list[Outcome]:
    instance = " x ".join(factors)
    got = counts(_product_text(factors))[0]
    expected = prod(counts(f)[0] for f in factors)
    return [_judge(instance, [("|Cent|", expected, got)])]


def two_cent_product_formula(
    two_cents: Sequence[int], deltas: Sequence[int]
) -> int:
    """|2-Cent| of a direct product from its factors' counts.

    Sums, over every set B of factors, the product of delta over B and
    of |2-Cent| over the rest; B = all factors is excluded.
    """
    n = len(two_cents)
    total = 0
    for size in range(n):
        for chosen in combinations(range(n), size):
            term = 1
            for i in range(n):
                term *= deltas[i] if i in chosen else two_cents[i]
            total += term
    return total


def two_cent_triple_expansion(
    two_cents: Sequence[int], deltas: Sequence[int]
) -> int:
    """The seven-term expansion for three factors, written out."""
    a, b, c = two_cents
    d1, d2, d3 = deltas
    return (
        a * b * c
        + d1 * b * c
        + d2 * a * c
        + d3 * a * b
        + d1 * d2 * c
        + d1 * d3 * b
        + d2 * d3 * a
    )


def check_theorem_2_4(left: str, right: str) -> list[Outcome]:
    instance = f"{left} x {right}"
    if group_order(left) < 2 or group_order(right) < 2:
        return [_skipped(instance, "factor of order 1")]
    _, h2, dh = counts(left)
    _, k2, dk = counts(right)
    got = counts(_product_text([left, right]))[1]
    expected = h2 * k2 + dk * h2 + dh * k2
    return [_judge(instance, [("|2-Cent|", expected, got)])]


def check_corollary_2_6(*factors: str) -> list[Outcome]:
    instance = " x ".join(factors)
    if any(group_order(f) < 2 for f in factors):
        return [_skipped(instance, "factor of order 1")]
    two_cents = [counts(f)[1] for f in factors]
    deltas = [counts(f)[2] for f in factors]
    got = counts(_product_text(factors))[1]
    clauses = [
        ("|2-Cent|", two_cent_product_formula(two_cents, deltas), got)
    ]
    if len(factors) == 3:
        clauses.append(
            (
                "seven-term expansion",
                two_cent_triple_expansion(two_cents, deltas),
                got,
            )
        )
    return [_judge(instance, clauses)]


# CA groups.


def _ca_instance(text: str) -> Outcome | None:
    if _is_abelian(text):
        return _skipped(text, "abelian")
    if not profile(text).is_ca:
        return _skipped(text, "not a CA-group")
    return None


def check_theorem_2_6(text: str) -> list[Outcome]:
    if (skip := _ca_instance(text)) is not None:
        return [skip]
    p = profile(text)
    central = 1 if p.center_order > 1 else 0
    return [_judge(text, [("|2-Cent|", p.n_cent + central, p.n_2cent)])]


def check_corollary_2_8(text: str) -> list[Outcome]:
    if (skip := _ca_instance(text)) is not None:
        return [skip]
    p = profile(text)
    n = p.n_2cent
    holds = (p.center_order == 1 and p.n_cent == n) or (
        p.center_order > 1 and p.n_cent == n - 1
    )
    return [_judge(text, [(f"(2,{n})-centralizer condition", True, holds)])]


def check_theorem_2_9(text: str) -> list[Outcome]:
    """Z_n x| Z_p for prime p, with H = Z_n."""
    prime = _semidirect_prime(text)
    if not is_prime(prime):
        return [_skipped(text, "p not prime")]
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    p = profile(text)
    n = p.order // prime
    z = p.center_order
    expected_2cent = n + 2 if z == 1 else n // z + 3
    return [
        _judge(
            text,
            [
                ("|Z| divides |H|", True, n % z == 0),
                ("|Cent|", n // z + 2, p.n_cent),
                ("|2-Cent|", expected_2cent, p.n_2cent),
            ],
        )
    ]


def _semidirect_prime(text: str) -> int:
    inner = text[text.index("(") + 1 : text.index(")")]
    return int(inner.split(",")[1])


def _cyclic_by_prime_shape(Q: Group) -> tuple[int, int, int] | None:
    """(n, p, k) with Q = Z_n x| Z_p, b a b^-1 = a^k, or None."""
    orders = Q.element_orders
    seen: set[ElementSet] = set()
    for a in np.argsort(-orders, kind="stable").tolist():
        n = int(orders[a])
        p = Q.order // n
        if not is_prime(p):
            continue
        cyclic = subgroup_generated(Q, Q.subset([a]))
        if cyclic in seen:
            continue
        seen.add(cyclic)
        if not is_normal(Q, cyclic):
            continue
        outside = [
            b
            for b in np.flatnonzero(orders == p).tolist()
            if b not in cyclic
        ]
        if not outside:
            continue
        b = outside[0]
        image = Q.mul(Q.mul(b, a), Q.inv(b))
        power, k = a, 1
        while power != image:
            power = Q.mul(power, a)
            k += 1
        return n, p, k
    return None


def check_corollary_2_10(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    Q = central_quotient(text)
    shape = _cyclic_by_prime_shape(Q)
    if shape is None:
        return [_skipped(text, "G/Z is not Z_n x| Z_p")]
    n, p, k = shape
    if k == 1:
        return [_skipped(text, "G/Z is abelian")]
    if not is_isomorphic(Q, sdp_cyclic(n, p, k)):
        return [_skipped(text, f"G/Z is not sdp({n},{p},{k})")]
    prof = profile(text)
    G = load_group(text)
    z_equals_z2 = second_center(G) == center(G)
    clauses: list[tuple[str, Any, Any]] = []
    if prof.center_order == 1:
        clauses += [
            ("|Cent|", n + 2, prof.n_cent),
            ("|2-Cent|", n + 2, prof.n_2cent),
        ]
    else:
        clauses += [
            ("|Cent|", n + 2, prof.n_cent),
            ("|2-Cent| - 1", n + 2, prof.n_2cent - 1),
        ]
        if z_equals_z2:
            clauses += [
                ("|Cent(G/Z)|", n + 2, prof.quotient_n_cent),
                ("|2-Cent(G/Z)|", n + 2, prof.quotient_n_2cent),
            ]
        else:
            zq = len(center(Q))
            clauses += [
                ("|Cent(G/Z)|", n // zq + 2, prof.quotient_n_cent),
                ("|2-Cent(G/Z)| - 1", n // zq + 2, prof.quotient_n_2cent - 1),
            ]
        clauses.append(
            ("primitive n iff Z2 = Z", z_equals_z2, prof.primitive_n)
        )
    clauses.append(
        (
            "primitive (2,n) iff Z = 1",
            prof.center_order == 1,
            prof.primitive_2n,
        )
    )
    return [_judge(f"{text} [G/Z = sdp({n},{p},{k})]", clauses)]


def check_theorem_2_13(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    if group_order(text) > CLIQUE_ORDER_LIMIT:
        return [_skipped(text, f"order above {CLIQUE_ORDER_LIMIT}")]
    p = profile(text)
    assert p.r is not None
    target = p.r + 1 if p.center_order == 1 else p.r + 2
    return [
        _judge(
            text,
            [("CA iff |2-Cent| = r+1+[Z!=1]", p.is_ca, p.n_2cent == target)],
        )
    ]


# Classification of (2,n)-centralizer groups for n <= 9.

CLASSIFIED: dict[int, str] = {
    2: "thm2.14",
    3: "thm2.14",
    4: "thm2.14",
    5: "thm2.18",
    6: "thm2.19",
    7: "thm2.20",
    8: "thm2.21",
    9: "thm2.22",
}

# groups named outright; every one of them is primitive
WITNESSES: dict[int, tuple[str, ...]] = {
    5: ("S(3)",),
    6: ("A(4)",),
    7: ("D(10)", "R"),
    8: (),
    9: ("D(14)", "Hol(7)", "G21"),
}

# G/Z for non-centerless groups with |2-Cent| = n
CENTRAL_QUOTIENTS: dict[int, tuple[str, ...]] = {
    5: ("EA(2,2)",),
    6: ("EA(3,2)", "S(3)"),
}


def check_no_small_two_cent(text: str) -> list[Outcome]:
    if group_order(text) < 2:
        return []
    n_2cent = counts(text)[1]
    clause = ("|2-Cent| in {2,3,4}", False, n_2cent in (2, 3, 4))
    return [_judge(text, [clause])]


def _central_case(text: str, n: int) -> bool:
    """Non-centerless G lying in the second family for |2-Cent| = n."""
    p = profile(text)
    if p.center_order == 1:
        return False
    if n in CENTRAL_QUOTIENTS:
        Q = central_quotient(text)
        return _isomorphic_to_any(Q, CENTRAL_QUOTIENTS[n]) is not None
    return p.n_cent == n - 1


def check_classification(n: int, text: str) -> list[Outcome]:
    if group_order(text) < 2 or _is_abelian(text):
        return []
    p = profile(text)
    G = load_group(text)
    outcomes = []
    if p.n_2cent == n:
        named = _isomorphic_to_any(G, WITNESSES[n])
        clauses: list[tuple[str, Any, Any]] = [
            (
                "named group or central case",
                True,
                named is not None or _central_case(text, n),
            )
        ]
        if p.primitive_2n:
            clauses.append(
                ("primitive only for named groups", True, named is not None)
            )
        outcomes.append(_judge(text, clauses))
    if p.n_2cent != n and _central_case(text, n):
        outcomes.append(
            _judge(f"converse: {text}", [("|2-Cent|", n, p.n_2cent)])
        )
    return outcomes


def check_witness(n: int, text: str) -> list[Outcome]:
    p = profile(text)
    return [
        _judge(
            f"witness: {text}",
            [("|2-Cent|", n, p.n_2cent), ("primitive", True, p.primitive_2n)],
        )
    ]


def check_remark_2_7(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return []
    p = profile(text)
    clauses: list[tuple[str, Any, Any]] = []
    if p.center_order == 1 and p.is_ca:
        clauses += [
            ("primitive n", True, p.primitive_n),
            ("primitive (2,n)", True, p.primitive_2n),
        ]
    if (
        p.is_ca
        and p.second_center_order != p.center_order
        and is_ca_group(central_quotient(text))
    ):
        clauses.append(
            ("primitive n iff primitive (2,n)", p.primitive_n, p.primitive_2n)
        )
    return [_judge(text, clauses)] if clauses else []


def check_lemma_2_17(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return []
    p = profile(text)
    if p.n_cent > 9 and p.n_2cent > 9:
        return []
    return [_judge(text, [("CA", True, p.is_ca)])]


# Background results on n-centralizer groups.

QUOTIENTS_BY_N_CENT: dict[int, tuple[str, ...]] = {
    4: ("EA(2,2)",),
    5: ("EA(3,2)", "S(3)"),
    6: ("EA(2,3)", "EA(2,4)", "D(8)", "A(4)"),
    7: ("EA(5,2)", "D(10)", "R"),
    8: ("EA(2,3)", "D(12)", "A(4)"),
    9: ("D(14)", "EA(7,2)", "Hol(7)", "G21"),
}
# counts determined by G/Z alone
CHARACTERISED_N_CENT = (4, 5, 7, 9)
PRIMITIVE_QUOTIENTS: dict[int, tuple[str, ...]] = {
    7: ("D(10)", "R"),
    9: ("D(14)", "Hol(7)", "G21"),
}


def check_theorem_1_1(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return []
    p = profile(text)
    Q = central_quotient(text)
    clauses: list[tuple[str, Any, Any]] = []
    if p.n_cent in QUOTIENTS_BY_N_CENT:
        match = _isomorphic_to_any(Q, QUOTIENTS_BY_N_CENT[p.n_cent])
        clauses.append((f"G/Z listed for {p.n_cent}", True, match is not None))
    for n in CHARACTERISED_N_CENT:
        if n != p.n_cent and _isomorphic_to_any(Q, QUOTIENTS_BY_N_CENT[n]):
            clauses.append(("|Cent| from G/Z", n, p.n_cent))
    for n, names in PRIMITIVE_QUOTIENTS.items():
        listed = _isomorphic_to_any(Q, names) is not None
        if p.n_cent == n and p.primitive_n:
            clauses.append((f"primitive {n}: G/Z listed", True, listed))
        if listed:
            attained = p.n_cent == n and p.primitive_n
            clauses.append((f"G/Z listed: primitive {n}", True, attained))
    return [_judge(text, clauses)] if clauses else []


def check_theorem_1_2(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return [_skipped(text, "abelian")]
    if group_order(text) > CLIQUE_ORDER_LIMIT:
        return [_skipped(text, f"order above {CLIQUE_ORDER_LIMIT}")]
    p = profile(text)
    r = p.r
    assert r is not None
    clauses: list[tuple[str, Any, Any]] = [
        ("r >= 3", True, r >= 3),
        ("r + 1 <= |Cent|", True, r + 1 <= p.n_cent),
        ("r = 3 iff |Cent| = 4", r == 3, p.n_cent == 4),
        ("r = 4 iff |Cent| = 5", r == 4, p.n_cent == 5),
        ("CA iff |Cent| = r + 1", p.is_ca, p.n_cent == r + 1),
    ]
    if p.is_ca:
        G = load_group(text)
        z = center(G)
        proper = sorted(
            (c for c in cent_set(G) if c != G.whole), key=lambda c: c.bits
        )
        disjoint = all(
            a & b == z for a, b in combinations(proper, 2)
        )
        clauses.append(("centralizers meet in Z", True, disjoint))
    return [_judge(text, clauses)]


# Simple groups and the solvability threshold.

SMALL_SIMPLE = ("PSL2(5)", "PSL2(7)", "PSL2(8)")


@lru_cache(maxsize=None)
def _simple(text: str) -> bool:
    p = profile(text)
    if p.solvable or p.center_order > 1:
        return False
    return is_simple(load_group(text))


def check_lemma_3_1(text: str) -> list[Outcome]:
    if group_order(text) % 60 or _is_abelian(text):
        return []
    Q = central_quotient(text)
    if _isomorphic_to_any(Q, ["A(5)"]) is None:
        return []
    p = profile(text)
    is_a5 = p.center_order == 1
    holds = is_a5 or (
        p.n_2cent == p.n_cent + 1 and p.n_2cent in (23, 33)
    )
    return [
        _judge(
            text,
            [
                ("G = A5 or |2-Cent| = |Cent| + 1 in {23, 33}", True, holds),
                ("|Cent| in {22, 32}", True, p.n_cent in (22, 32)),
            ],
        )
    ]


def check_section_5(text: str) -> list[Outcome]:
    if group_order(text) < 2:
        return []
    p = profile(text)
    clauses: list[tuple[str, Any, Any]] = []
    if p.n_2cent < 22:
        clauses.append(("solvable", True, p.solvable))
    if not p.solvable and _simple(text):
        G = load_group(text)
        if p.n_2cent <= 100:
            named = _isomorphic_to_any(G, SMALL_SIMPLE)
            clauses.append(
                ("simple, |2-Cent| <= 100: PSL2(q)", True, named is not None)
            )
        if p.n_2cent == 22:
            named = _isomorphic_to_any(G, ["A(5)"])
            clauses.append(
                ("simple, |2-Cent| = 22: A5", True, named is not None)
            )
    return [_judge(text, clauses)] if clauses else []


def check_alternating_five(text: str) -> list[Outcome]:
    p = profile(text)
    return [
        _judge(
            f"A5: {text}",
            [("|Cent|", 22, p.n_cent), ("|2-Cent|", 22, p.n_2cent)],
        )
    ]


# p-groups.


def _prime_power(n: int) -> tuple[int, int] | None:
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    return None


def check_p_group(text: str) -> list[Outcome]:
    if _is_abelian(text):
        return []
    shape = _prime_power(group_order(text))
    if shape is None:
        return []
    p, _ = shape
    prof = profile(text)
    G = load_group(text)
    z = prof.center_order
    index_shape = _prime_power(G.order // z)
    assert index_shape is not None
    n = index_shape[1]
    geometric = sum(p**i for i in range(n))
    proper_orders = sorted(
        {len(c) for c in cent_set(G) if c != G.whole}
    )
    clauses: list[tuple[str, Any, Any]] = []
    if proper_orders == [p * z]:
        clauses += [
            ("|Cent|", geometric + 1, prof.n_cent),
            ("|2-Cent|", prof.n_cent + 1, prof.n_2cent),
        ]
    Q = central_quotient(text)
    elementary = bool(Q.commuting.all()) and bool(
        (Q.element_orders <= p).all()
    )
    if elementary and set(proper_orders) <= {p * z, p * p * z}:
        proper = [c for c in cent_set(G) if c != G.whole]
        s = sum(1 for c in proper if len(c) == p * z)
        t = sum(1 for c in proper if len(c) == p * p * z)
        clauses += [
            ("s + t(p+1)", geometric, s + t * (p + 1)),
            ("|Cent|", s + t + 1, prof.n_cent),
            ("|2-Cent|", s + t + 2, prof.n_2cent),
        ]
    if G.order == p**4:
        clauses += [
            (
                "|Cent| in {p+2, p^2+2, p^2+p+2}",
                True,
                prof.n_cent in (p + 2, p * p + 2, p * p + p + 2),
            ),
            ("|2-Cent|", prof.n_cent + 1, prof.n_2cent),
        ]
    return [_judge(text, clauses)] if clauses else []


# Closed forms for the presented families.


def family_expectation(text: str) -> tuple[int, int]:
    """(|Cent|, |2-Cent|) predicted for D, SD, T, V and U members."""
    head = text[: text.index("(")]
    args = [int(a) for a in text[text.index("(") + 1 : -1].split(",")]
    match head, args:
        case "D", [m]:
            n = m // 2
            if n % 2:
                return n + 2, n + 2
            return n // 2 + 2, n // 2 + 3
        case "SD", [n]:
            two = n + 3 if n % 2 else 2 * n + 3
            return two - 1, two
        case "T", [n]:
            return n + 2, n + 3
        case "V", [n]:
            two = 2 * n + 3 if n % 2 else n + 3
            return two - 1, two
        case "U", [n, m]:
            if m <= 2:
                return 1, 1
            if m % 2 == 0:
                return m // 2 + 2, m // 2 + 3
            if n == 1:
                return m + 2, m + 2
            return m + 2, m + 3
    raise ValueError(f"no closed form for {text}")


def check_family(text: str) -> list[Outcome]:
    n_cent, n_2cent, _ = counts(text)
    expected_cent, expected_2cent = family_expectation(text)
    return [
        _judge(
            text,
            [
                ("|Cent|", expected_cent, n_cent),
                ("|2-Cent|", expected_2cent, n_2cent),
            ],
        )
    ]


# Registry.

Plan = Callable[[SuiteConfig], list[tuple[str, ...]]]

# instance arguments that select a check mode rather than name a group
MODE_WITNESS = "witness"
MODE_A5 = "A5"


@dataclass(frozen=True)
class Verifier:
    theorem_id: str
    plan: Plan
    check: Callable[..., list[Outcome]]
    summary: str = ""

    def subject(self, args: tuple[str, ...]) -> str:
        """DSL text of the largest group an instance builds."""
        texts = [
            a
            for a in args
            if not a.isdigit() and a not in (MODE_WITNESS, MODE_A5)
        ]
        return _product_text(texts)


def _each_group(config: SuiteConfig) -> list[tuple[str, ...]]:
    return [(name,) for name in config.groups]


def _pairs(config: SuiteConfig) -> list[tuple[str, ...]]:
    return list(combinations(config.product_pool, 2))


def _triples(config: SuiteConfig) -> list[tuple[str, ...]]:
    if config.catalog_names is None:
        return list(TRIPLE_PRODUCTS)
    return list(combinations(config.product_pool, 3))


def _semidirect(config: SuiteConfig) -> list[tuple[str, ...]]:
    return [(f"sdp({n},{p},{k})",) for n, p, k in SEMIDIRECT_TRIPLES]


def _classification(n: int) -> Plan:
    def plan(config: SuiteConfig) -> list[tuple[str, ...]]:
        sweep: list[tuple[str, ...]] = [
            (str(n), name) for name in config.groups
        ]
        return sweep + [(str(n), name, MODE_WITNESS) for name in WITNESSES[n]]

    return plan


def _classification_check(n: str, text: str, mode: str = "") -> list[Outcome]:
    if mode == MODE_WITNESS:
        return check_witness(int(n), text)
    return check_classification(int(n), text)


def _section_5(config: SuiteConfig) -> list[tuple[str, ...]]:
    return _each_group(config) + [("A(5)", MODE_A5)]


def _section_5_check(text: str, mode: str = "") -> list[Outcome]:
    if mode == MODE_A5:
        return check_alternating_five(text)
    return check_section_5(text)


def _lemma_3_1(config: SuiteConfig) -> list[tuple[str, ...]]:
    plan = _each_group(config)
    return plan if ("A(5)",) in plan else plan + [("A(5)",)]


def _span(bounds: tuple[int, int], low: int) -> range:
    return range(max(bounds[0], low), bounds[1] + 1)


def _dihedral_family(config: SuiteConfig) -> list[tuple[str, ...]]:
    return [(f"D({2 * n})",) for n in _span(config.family_range, 3)]


def _single_family(head: str, low: int) -> Plan:
    def plan(config: SuiteConfig) -> list[tuple[str, ...]]:
        return [(f"{head}({n})",) for n in _span(config.family_range, low)]

    return plan


def _u_family(config: SuiteConfig) -> list[tuple[str, ...]]:
    ns = [1] + list(_span(config.family_range, 2))
    ms = [1, 2] + list(_span(config.u_m_range, 3))
    return [(f"U({n},{m})",) for n in ns for m in ms]


def _registry() -> dict[str, Verifier]:
    verifiers = [
        Verifier(
            "lem2.1",
            _each_group,
            check_lemma_2_1,
            "Z not in Cent; G in 2-Cent iff Z != 1",
        ),
        Verifier(
            "lem2.2", _each_group, check_lemma_2_2, "Cent against 2-Cent"
        ),
        Verifier(
            "lem2.3", _pairs, check_lemma_2_3, "|Cent| of a direct product"
        ),
        Verifier(
            "thm2.4", _pairs, check_theorem_2_4, "|2-Cent| of a direct product"
        ),
        Verifier(
            "cor2.6",
            _triples,
            check_corollary_2_6,
            "|2-Cent| of an n-fold product",
        ),
        Verifier(
            "thm2.6", _each_group, check_theorem_2_6, "|2-Cent| of CA-groups"
        ),
        Verifier(
            "cor2.8",
            _each_group,
            check_corollary_2_8,
            "(2,n)-centralizer CA-groups",
        ),
        Verifier(
            "thm2.9",
            _semidirect,
            check_theorem_2_9,
            "abelian-by-prime semidirect products",
        ),
        Verifier(
            "cor2.10", _each_group, check_corollary_2_10, "G/Z = Z_n x| Z_p"
        ),
        Verifier(
            "thm2.13",
            _each_group,
            check_theorem_2_13,
            "CA iff |2-Cent| = r + 1 + [Z != 1]",
        ),
        Verifier(
            "thm2.14",
            _each_group,
            check_no_small_two_cent,
            "no (2,n)-centralizer group for n = 2, 3, 4",
        ),
    ]
    verifiers += [
        Verifier(
            CLASSIFIED[n],
            _classification(n),
            _classification_check,
            f"(2,{n})-centralizer groups",
        )
        for n in range(5, 10)
    ]
    verifiers += [
        Verifier(
            "rem2.7",
            _each_group,
            check_remark_2_7,
            "primitivity of centerless CA-groups",
        ),
        Verifier(
            "lem2.17", _each_group, check_lemma_2_17, "small counts force CA"
        ),
        Verifier(
            "thm1.1",
            _each_group,
            check_theorem_1_1,
            "n-centralizer groups for n <= 9",
        ),
        Verifier(
            "thm1.2",
            _each_group,
            check_theorem_1_2,
            "non-commuting sets against Cent",
        ),
        Verifier("lem3.1", _lemma_3_1, check_lemma_3_1, "G/Z = A5"),
        Verifier(
            "sec5",
            _section_5,
            _section_5_check,
            "solvability threshold and small simple groups",
        ),
        Verifier("pgroup", _each_group, check_p_group, "p-group counts"),
        Verifier(
            "sec6.D", _dihedral_family, check_family, "dihedral closed forms"
        ),
        Verifier(
            "sec6.SD",
            _single_family("SD", 2),
            check_family,
            "semidihedral closed forms",
        ),
        Verifier(
            "sec6.T",
            _single_family("T", 2),
            check_family,
            "dicyclic closed forms",
        ),
        Verifier(
            "sec6.V", _single_family("V", 1), check_family, "V_8n closed forms"
        ),
        Verifier("sec6.U", _u_family, check_family, "U_2(n,m) closed forms"),
    ]
    return {v.theorem_id: v for v in verifiers}


VERIFIERS: dict[str, Verifier] = _registry()
THEOREM_IDS: tuple[str, ...] = tuple(VERIFIERS)


def run_instance(
    theorem_id: str, args: tuple[str, ...], order_cap: int
) -> list[Outcome]:
    """Run one instance; never raises for mathematical failures."""
    verifier = VERIFIERS[theorem_id]
    subject = verifier.subject(args)
    try:
        order = group_order(subject)
        if order > order_cap:
            reason = f"order {order} exceeds cap {order_cap}"
            return [_skipped(subject, reason)]
        outcomes = verifier.check(*args)
    except (OrderCapExceeded, CosetCapExceeded) as err:
        _LOGGER.warning("Skipping %s for %s: %s", subject, theorem_id, err)
        return [_skipped(subject, str(err))]
    except CentraError as err:
        _LOGGER.error("Construction of %s failed: %s", subject, err)
        return [Outcome(subject, Status.FAILED, "construction", str(err))]
    for outcome in outcomes:
        _LOGGER.debug(
            "%s %s: %s", theorem_id, outcome.instance, outcome.status
        )
    return outcomes


def plan_instances(
    theorem_id: str, config: SuiteConfig
) -> list[tuple[str, ...]]:
    return VERIFIERS[theorem_id].plan(config)


def verify(
    theorem_id: str,
    instances: Iterable[tuple[str, ...]] | None = None,
    config: SuiteConfig | None = None,
) -> TheoremReport:
    """Run one theorem in-process over explicit or planned instances."""
    config = config or SuiteConfig()
    if instances is None:
        instances = plan_instances(theorem_id, config)
    outcomes: list[Outcome] = []
    for args in instances:
        outcomes += run_instance(theorem_id, tuple(args), config.order_cap)
    return TheoremReport.from_outcomes(theorem_id, outcomes)


def verify_lemma_2_1(text: str) -> TheoremReport:
    return verify("lem2.1", [(text,)])


def verify_lemma_2_2(text: str) -> TheoremReport:
    return verify("lem2.2", [(text,)])


def verify_lemma_2_3(left: str, right: str) -> TheoremReport:
    return verify("lem2.3", [(left, right)])


def verify_thm_2_4(left: str, right: str) -> TheoremReport:
    return verify("thm2.4", [(left, right)])


def verify_cor_2_6(factors: Sequence[str]) -> TheoremReport:
    return verify("cor2.6", [tuple(factors)])


def verify_thm_2_6(text: str) -> TheoremReport:
    return verify("thm2.6", [(text,)])


def verify_thm_2_9(n: int, p: int, k: int) -> TheoremReport:
    return verify("thm2.9", [(f"sdp({n},{p},{k})",)])


def verify_cor_2_10_11_12(text: str) -> TheoremReport:
    return verify("cor2.10", [(text,)])


def verify_thm_2_13(text: str) -> TheoremReport:
    return verify("thm2.13", [(text,)])


def verify_classification(
    n: int, config: SuiteConfig | None = None
) -> TheoremReport:
    """Sweep the catalog for |2-Cent| = n, 2 <= n <= 9."""
    if n not in CLASSIFIED:
        raise ValueError(f"no classification for |2-Cent| = {n}")
    return verify(CLASSIFIED[n], config=config)


def verify_section5(config: SuiteConfig | None = None) -> TheoremReport:
    return verify("sec5", config=config)


def verify_pgroup_theorems(
    config: SuiteConfig | None = None,
) -> TheoremReport:
    return verify("pgroup", config=config)


def verify_section6_families(
    config: SuiteConfig | None = None,
) -> list[TheoremReport]:
    return [
        verify(theorem_id, config=config)
        for theorem_id in THEOREM_IDS
        if theorem_id.startswith("sec6.")
    ]
