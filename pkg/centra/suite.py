"""Suite runner and the simple-group experiment."""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Iterable
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Any

from .catalog import DEFAULT_CATALOG, Catalog, group_order, load_group
from .const import REPORT_VERSION
from .groups import (
    CentraError,
    center,
    is_abelian,
    is_isomorphic,
    is_simple,
    is_solvable,
)
from .theorems import (
    THEOREM_IDS,
    Outcome,
    SuiteConfig,
    TheoremReport,
    counts,
    plan_instances,
    run_instance,
)

_LOGGER = logging.getLogger(__name__)


class UnknownTheorem(CentraError):
    """A theorem id outside the registry."""


def selected_theorems(config: SuiteConfig) -> tuple[str, ...]:
    if config.theorem_ids is None:
        return THEOREM_IDS
    unknown = [t for t in config.theorem_ids if t not in THEOREM_IDS]
    if unknown:
        raise UnknownTheorem(f"unknown theorem ids: {', '.join(unknown)}")
    # registry order, not selection order
    return tuple(t for t in THEOREM_IDS if t in config.theorem_ids)


class SuiteRunner:
    """Dispatch every planned instance and merge outcomes per theorem."""

    def __init__(self, config: SuiteConfig) -> None:
        self.config = config
        self.theorem_ids = selected_theorems(config)

    def _tasks(self) -> list[tuple[str, tuple[str, ...]]]:
        return [
            (theorem_id, args)
            for theorem_id in self.theorem_ids
            for args in plan_instances(theorem_id, self.config)
        ]

    async def _async_dispatch(
        self,
        executor: Executor,
        tasks: list[tuple[str, tuple[str, ...]]],
    ) -> list[list[Outcome]]:
        loop = asyncio.get_running_loop()
        futures = [
            loop.run_in_executor(
                executor,
                partial(run_instance, theorem_id, args, self.config.order_cap),
            )
            for theorem_id, args in tasks
        ]
        return await asyncio.gather(*futures)

    async def async_run(self) -> list[TheoremReport]:
        tasks = self._tasks()
        _LOGGER.info(
            "Running %d theorems over %d instances with %d jobs",
            len(self.theorem_ids),
            len(tasks),
            self.config.jobs,
        )
        if self.config.jobs > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                results = await self._async_dispatch(pool, tasks)
        else:
            results = [
                run_instance(theorem_id, args, self.config.order_cap)
                for theorem_id, args in tasks
            ]

        by_theorem: dict[str, list[Outcome]] = {
            theorem_id: [] for theorem_id in self.theorem_ids
        }
        for (theorem_id, _), outcomes in zip(tasks, results):
            by_theorem[theorem_id].extend(outcomes)
        reports = [
            TheoremReport.from_outcomes(theorem_id, outcomes)
            for theorem_id, outcomes in by_theorem.items()
        ]
        failed = sum(report.failed for report in reports)
        _LOGGER.info(
            "Suite finished: %d reports, %d failures", len(reports), failed
        )
        return reports


async def async_run_suite(config: SuiteConfig) -> list[TheoremReport]:
    return await SuiteRunner(config).async_run()


def run_suite(config: SuiteConfig | None = None) -> list[TheoremReport]:
    """Run the selected verifiers; reports come back in registry order."""
    return asyncio.run(async_run_suite(config or SuiteConfig()))


@dataclass
class ExperimentReport:
    """|2-Cent| of the simple groups; informational only.

    Groups isomorphic to an earlier one are listed as duplicates and
    left out of the distinctness claim.
    """

    values: dict[str, int] = field(default_factory=dict)
    duplicates: dict[str, str] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)
    collisions: list[tuple[str, str]] = field(default_factory=list)

    @property
    def pairwise_distinct(self) -> bool:
        return not self.collisions

    def as_dict(self) -> dict[str, Any]:
        return {
            "version": REPORT_VERSION,
            "values": self.values,
            "duplicates": self.duplicates,
            "skipped": self.skipped,
            "pairwise_distinct": self.pairwise_distinct,
            "collisions": [list(pair) for pair in self.collisions],
        }


def _is_simple_nonabelian(name: str) -> bool:
    G = load_group(name)
    if G.order < 2 or is_abelian(G) or len(center(G)) > 1:
        return False
    return not is_solvable(G) and is_simple(G)


def conjecture_experiment(
    names: Iterable[str] | None = None,
    catalog: Catalog = DEFAULT_CATALOG,
    order_cap: int | None = None,
) -> ExperimentReport:
    """Check that non-isomorphic simple groups have distinct |2-Cent|.

    names defaults to every catalog group; only the simple non-abelian
    ones take part.
    """
    report = ExperimentReport()
    representatives: list[str] = []
    for name in catalog.names() if names is None else names:
        order = group_order(name)
        if order_cap is not None and order > order_cap:
            report.skipped[name] = f"order {order} exceeds cap {order_cap}"
            continue
        if not _is_simple_nonabelian(name):
            continue
        same = next(
            (
                seen
                for seen in representatives
                if group_order(seen) == order
                and is_isomorphic(load_group(seen), load_group(name))
            ),
            None,
        )
        if same is not None:
            _LOGGER.debug("%s duplicates %s", name, same)
            report.duplicates[name] = same
            continue
        representatives.append(name)
        report.values[name] = counts(name)[1]

    report.collisions = [
        (a, b)
        for a, b in combinations(representatives, 2)
        if report.values[a] == report.values[b]
    ]
    if report.collisions:
        _LOGGER.warning(
            "Non-isomorphic simple groups share |2-Cent|: %s",
            report.collisions,
        )
    return report
