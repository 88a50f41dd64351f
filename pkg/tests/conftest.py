import random

import pytest

from decicount import Group, GroupMultiset


@pytest.fixture
def rng():
    return random.Random(20260819)


def random_multiset(rng, group, density):
    mult = [0] * group.order
    for _ in range(density):
        mult[rng.randrange(group.order)] += 1
    return GroupMultiset(group, tuple(mult))


@pytest.fixture
def small_groups():
    return [Group((l,)) for l in range(3, 13)] + [
        Group.from_spec(s) for s in ("Z2xZ3", "Z3xZ3", "Z2xZ4", "Z3xZ4", "Z2xZ2xZ2")
    ]


def dp_sum_count(values, duplicities, total):
    """Independent counter: coefficient of x^total in prod 1/(1-x^v)^r,
    computed by repeated unbounded-knapsack passes."""
    ways = [0] * (total + 1)
    ways[0] = 1
    for v, r in zip(values, duplicities):
        for _ in range(r):
            for s in range(v, total + 1):
                ways[s] += ways[s - v]
    return ways[total]
