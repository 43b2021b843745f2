"""Shared fixtures."""

import logging
from typing import Iterator

import pytest

from permlab.logging import setup_logging
from permlab.numerics.interfaces import RectMatrix


@pytest.fixture(autouse=True)
def quiet_logging() -> Iterator[None]:
    """Keep INFO records out of captured command output."""
    setup_logging(logging.WARNING)
    yield


@pytest.fixture
def small_rect() -> RectMatrix:
    return RectMatrix.from_rows([[1, 2], [3, 4], [5, 6]])


@pytest.fixture
def small_square() -> RectMatrix:
    return RectMatrix.from_rows([[1, 2], [3, 4]])
