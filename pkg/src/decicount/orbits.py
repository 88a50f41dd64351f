"""Orbits of group elements under unit scaling, and stars-and-bars counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import GroupMismatch
from .groups import Group, GroupElement
from .units import UnitSubgroup


def multiset_coeff(n: int, k: int) -> int:
    """Number of multisets of size k drawn from n types: C(n+k-1, k)."""
    if n < 0 or k < 0:
        raise ValueError("multiset_coeff needs nonnegative arguments")
    if n == 0:
        return 1 if k == 0 else 0
    return math.comb(n + k - 1, k)


@dataclass(frozen=True)
class OrbitProfile:
    """Partition of the group into orbits under a unit subgroup acting by scaling."""

    group: Group
    subgroup: UnitSubgroup
    orbits: tuple[tuple[GroupElement, ...], ...]

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    @cached_property
    def unique_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.sizes)))

    @cached_property
    def duplicities(self) -> tuple[int, ...]:
        """How many orbits have each of the unique sizes, aligned with unique_sizes."""
        return tuple(self.sizes.count(q) for q in self.unique_sizes)


def unit_orbits(group: Group, subgroup: UnitSubgroup) -> OrbitProfile:
    """Orbits of every group element under x -> t*x for t in the subgroup."""
    if subgroup.modulus != group.exponent:
        raise GroupMismatch(
            f"subgroup lives modulo {subgroup.modulus}, group exponent is {group.exponent}"
        )
    perms = [group.permutation_of_mul(t) for t in sorted(subgroup.elements)]
    seen = [False] * group.order
    orbits: list[tuple[GroupElement, ...]] = []
    for i in range(group.order):
        if seen[i]:
            continue
        members = sorted({perm[i] for perm in perms})
        for j in members:
            seen[j] = True
        orbits.append(tuple(group.element_from_index(j) for j in members))
    return OrbitProfile(group, subgroup, tuple(orbits))


def count_sum_solutions(
    values: Sequence[int], duplicities: Sequence[int], total: int
) -> int:
    """Number of ways to pick a multiset of parts summing to the total.

    There are duplicities[i] distinguishable kinds of parts of size values[i];
    parts of the same kind are interchangeable, so choosing j parts of one
    value contributes a multiset coefficient, not a power.
    """
    if len(values) != len(duplicities):
        raise ValueError("values and duplicities must have equal length")
    if any(v <= 0 for v in values):
        raise ValueError("part values must be positive")
    if any(d <= 0 for d in duplicities):
        raise ValueError("duplicities must be positive")
    if list(values) != sorted(set(values)):
        raise ValueError("part values must be strictly ascending")
    if total < 0:
        raise ValueError("total must be nonnegative")

    cache: dict[tuple[int, int], int] = {}

    def rec(k: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if k == len(values):
            return 0
        key = (k, remaining)
        if key in cache:
            return cache[key]
        v, d = values[k], duplicities[k]
        acc = 0
        for j in range(remaining // v + 1):
            acc += multiset_coeff(d, j) * rec(k + 1, remaining - j * v)
        cache[key] = acc
        return acc

    return rec(0, total)
