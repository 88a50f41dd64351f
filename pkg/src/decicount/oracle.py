"""Deliberately dumb exhaustive counters used to cross-check the formulas.

Everything here enumerates complete orbits with no number theory beyond
gcd, so it is slow but trustworthy.  Budget-guarded: enumeration refuses
to start when the vector count exceeds the budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import TooLarge
from .groups import Group
from .multisets import GroupMultiset
from .orbits import multiset_coeff


@dataclass(frozen=True)
class OracleReport:
    """Counts obtained by full enumeration."""

    necklaces: int
    symmetric_necklaces: int
    bracelets: int
    decimation_classes: int
    per_multiplier_group: dict[frozenset[int], int]
    class_representatives: tuple[tuple[int, ...], ...] | None = field(default=None)


def enumerate_multisets(group: Group, delta: int) -> Iterator[tuple[int, ...]]:
    """All multiplicity vectors of the given density, first coordinate
    descending: (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2)."""
    n = group.order

    def rec(pos: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if pos == n - 1:
            yield prefix + (remaining,)
            return
        for v in range(remaining, -1, -1):
            yield from rec(pos + 1, remaining - v, prefix + (v,))

    yield from rec(0, delta, ())


def orbit_census(
    group: Group,
    delta: int,
    *,
    budget: int = 5_000_000,
    include_representatives: bool = False,
) -> OracleReport:
    """Count necklaces, symmetric necklaces, bracelets and decimation
    classes by walking every single vector.

    per_multiplier_group maps each multiplier subgroup (as a frozenset of
    units) to the number of necklaces having exactly that group.
    """
    total = multiset_coeff(group.order, delta)
    if total > budget:
        raise TooLarge(
            f"{total} vectors of density {delta} over {group} exceed the "
            f"budget of {budget}"
        )

    n = group.order
    exp = group.exponent
    unit_list = [u for u in range(1, exp) if math.gcd(u, exp) == 1]
    add_perms = [group.permutation_of_add(g) for g in group.elements]
    mul_perms = {u: group.permutation_of_mul(u) for u in unit_list}
    neg = mul_perms[exp - 1]

    def moved(vec: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * n
        for i, v in enumerate(vec):
            out[perm[i]] = v
        return tuple(out)

    # canon maps every vector to the least vector in its translate orbit
    canon: dict[tuple[int, ...], tuple[int, ...]] = {}
    reps: list[tuple[int, ...]] = []
    for vec in enumerate_multisets(group, delta):
        if vec in canon:
            continue
        orbit = {moved(vec, perm) for perm in add_perms}
        rep = min(orbit)
        for w in orbit:
            canon[w] = rep
        reps.append(rep)

    necklaces = len(reps)

    if delta == 0:
        symmetric = necklaces
    else:
        symmetric = sum(
            1 for rep in reps if GroupMultiset(group, rep).symmetry_indices()
        )

    bracelet_reps = {min(rep, canon[moved(rep, neg)]) for rep in reps}

    stabilizers: dict[tuple[int, ...], frozenset[int]] = {}
    for rep in reps:
        stab = frozenset(
            u for u in unit_list if canon[moved(rep, mul_perms[u])] == rep
        )
        stabilizers[rep] = stab

    per_group: dict[frozenset[int], int] = {}
    for stab in stabilizers.values():
        per_group[stab] = per_group.get(stab, 0) + 1

    class_reps: list[tuple[int, ...]] = []
    assigned: set[tuple[int, ...]] = set()
    for rep in reps:
        if rep in assigned:
            continue
        family = {canon[moved(rep, mul_perms[u])] for u in unit_list}
        assigned.update(family)
        class_reps.append(min(family))

    return OracleReport(
        necklaces=necklaces,
        symmetric_necklaces=symmetric,
        bracelets=len(bracelet_reps),
        decimation_classes=len(class_reps),
        per_multiplier_group=per_group,
        class_representatives=tuple(sorted(class_reps)) if include_representatives else None,
    )
