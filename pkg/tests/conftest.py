from __future__ import annotations

import hypothesis
import pytest

from flagtop import build_root_system, parse_kind

hypothesis.settings.register_profile(
    "suite", max_examples=40, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("suite")

GRID_KIND_NAMES = [
    "A1", "A2", "A3", "A4",
    "B2", "B3", "B4",
    "C2", "C3", "C4",
    "D3", "D4",
    "F4", "G2",
    "BC1", "BC2", "BC3", "BC4",
]

REDUCED_KIND_NAMES = [k for k in GRID_KIND_NAMES if not k.startswith("BC")]


def system(name: str):
    return build_root_system(parse_kind(name))


@pytest.fixture(scope="session")
def g2():
    return system("G2")


@pytest.fixture(scope="session")
def a2():
    return system("A2")


@pytest.fixture(scope="session")
def bc2():
    return system("BC2")
