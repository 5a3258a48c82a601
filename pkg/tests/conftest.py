"""Shared fixtures for the centra tests."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from centra.catalog import load_group
from centra.groups import Group


@pytest.fixture(scope="session")
def group() -> Callable[[str], Group]:
    """Build (and memoise) a group from DSL text."""
    return load_group


@pytest.fixture(scope="session")
def s3(group: Callable[[str], Group]) -> Group:
    return group("S(3)")


@pytest.fixture(scope="session")
def d8(group: Callable[[str], Group]) -> Group:
    return group("D(8)")


@pytest.fixture(scope="session")
def a5(group: Callable[[str], Group]) -> Group:
    return group("A(5)")
