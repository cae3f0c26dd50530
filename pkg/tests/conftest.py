import random

import pytest

from twointerval.model import ColouredGraph, Instance, Interval, RelationSet, TwoInterval


def two(label, a, b, c, d):
    return TwoInterval(Interval(a, b), Interval(c, d), label)


CROSSING_TRIPLE = (
    two("x", 0, 1, 6, 7),
    two("y", 2, 3, 8, 9),
    two("z", 4, 5, 10, 11),
)


@pytest.fixture
def crossing_triple():
    return CROSSING_TRIPLE


@pytest.fixture
def k3():
    return ColouredGraph(3, {1: 1, 2: 2, 3: 3}, frozenset({(1, 2), (1, 3), (2, 3)}))


@pytest.fixture
def rainbow_path():
    return ColouredGraph(3, {1: 1, 2: 2, 3: 3}, frozenset({(1, 2), (2, 3)}))


@pytest.fixture
def single_edge():
    return ColouredGraph(2, {1: 1, 2: 2}, frozenset({(1, 2)}))


def random_instance(rng: random.Random, n: int, relations: RelationSet, hi: int = 60) -> Instance:
    items = []
    for i in range(n):
        xs = sorted(rng.sample(range(hi + 1), 4))
        items.append(two(f"t{i}", *xs))
    return Instance(tuple(items), relations)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
