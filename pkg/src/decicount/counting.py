"""Exact counts of necklaces, bracelets and decimation classes.

A necklace is a translate class of density vectors; a bracelet additionally
folds in negation; a decimation class folds in every unit scaling.  All
formulas here are exact integer arithmetic, and every division is checked.

The decimation-class count walks the subgroup lattice of the units modulo
the group exponent.  For each subgroup H it counts the vectors that H maps
onto translates of themselves (a stars-and-bars count over the scaling
orbits, divided by the number of translates that stay distinct), then
removes the overcount from larger subgroups so each necklace is attributed
to its exact multiplier group, and finally converts necklace counts into
class counts through the orbit size of the unit-group action.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import InternalConsistencyError, UnsupportedParameters
from .groups import Group
from .orbits import count_sum_solutions, multiset_coeff, unit_orbits
from .units import SubgroupLattice, UnitSubgroup, subgroup_lattice, totient, unit_offset_gcd


class EvenOrderWarning(UserWarning):
    """Even group order narrows the valid densities to odd values."""


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InternalConsistencyError(
            f"{what}: {numerator} is not divisible by {denominator}"
        )
    return q


def _require_coprime(group: Group, delta: int) -> None:
    if delta < 0:
        raise UnsupportedParameters(f"density must be nonnegative, got {delta}")
    if math.gcd(delta, group.exponent) != 1:
        raise UnsupportedParameters(
            f"density {delta} shares a factor with the group exponent "
            f"{group.exponent}"
        )


def necklace_count(group: Group, delta: int) -> int:
    """Translate classes of density-delta vectors, for densities coprime to
    the exponent (every vector then has all translates distinct)."""
    _require_coprime(group, delta)
    return _exact_div(
        multiset_coeff(group.order, delta), group.order, "necklace count"
    )


def symmetric_necklace_count(group: Group, delta: int) -> int:
    """Necklaces equal to their own reflection.

    Counts vectors symmetric about the identity by splitting the group into
    the 2-torsion part (theta elements) and matched +/- pairs, then divides
    by theta: each symmetric necklace holds exactly theta such vectors when
    the density is positive and coprime to the exponent.  Without
    coprimality the undivided vector count is returned.
    """
    theta = math.prod(math.gcd(2, m) for m in group.moduli)
    half = (group.order - theta) // 2
    total = 0
    for pairs in range(delta // 2 + 1):
        rest = delta - 2 * pairs
        total += multiset_coeff(half, pairs) * multiset_coeff(theta, rest)
    if delta > 0 and math.gcd(delta, group.exponent) == 1:
        return _exact_div(total, theta, "symmetric necklace count")
    return total


def cyclic_symmetric_necklace_count(length: int, delta: int) -> int:
    """Closed form of the symmetric count for Z_length: a single multiset
    coefficient over floor(length/2)+1 slots."""
    return multiset_coeff(length // 2 + 1, delta // 2)


def bracelet_count(group: Group, delta: int) -> int:
    """Necklace classes folded under negation: (necklaces + symmetric) / 2."""
    _require_coprime(group, delta)
    n = necklace_count(group, delta)
    eta = symmetric_necklace_count(group, delta)
    return _exact_div(n + eta, 2, "bracelet count")


@dataclass(frozen=True)
class SubgroupTally:
    """Counting breakdown for one subgroup of the units."""

    generators: tuple[int, ...]
    order: int
    offset_gcd: int
    solutions: int
    necklaces_containing: int
    necklaces_exact: int
    decimation_classes: int


@dataclass(frozen=True)
class CountReport:
    """Full counting report for one group and density."""

    group: Group
    density: int
    necklaces: int
    symmetric_necklaces: int
    bracelets: int
    decimation_classes: int
    subgroups: tuple[SubgroupTally, ...]

    def to_dict(self) -> dict:
        return {
            "group": str(self.group),
            "density": self.density,
            "necklaces": str(self.necklaces),
            "symmetric_necklaces": str(self.symmetric_necklaces),
            "bracelets": str(self.bracelets),
            "decimation_classes": str(self.decimation_classes),
            "subgroups": [
                {
                    "generators": list(t.generators),
                    "order": t.order,
                    "offset_gcd": t.offset_gcd,
                    "solutions": str(t.solutions),
                    "necklaces_containing": str(t.necklaces_containing),
                    "necklaces_exact": str(t.necklaces_exact),
                    "decimation_classes": str(t.decimation_classes),
                }
                for t in self.subgroups
            ],
        }


def _containing_count(group: Group, delta: int, node: UnitSubgroup) -> tuple[int, int, int]:
    """(solutions, offset gcd, necklaces whose multiplier group contains node)."""
    if node.order == 1:
        nsol = multiset_coeff(group.order, delta)
    else:
        profile = unit_orbits(group, node)
        nsol = count_sum_solutions(
            profile.unique_sizes, profile.duplicities, delta
        )
    c_value = unit_offset_gcd(node.generators, group.exponent)
    denom = math.prod(math.gcd(c_value, m) for m in group.moduli)
    containing = _exact_div(nsol, denom, f"containing count for {node.generators}")
    return nsol, c_value, containing


def count_decimation_classes(
    group: Group, delta: int, *, threads: int = 1
) -> CountReport:
    """Count necklaces, bracelets and decimation classes of density-delta
    vectors, with a per-subgroup attribution of necklaces to their exact
    multiplier groups.

    Requires gcd(delta, exponent) = 1.  An even group order still works but
    triggers EvenOrderWarning because it restricts densities to odd values.
    """
    _require_coprime(group, delta)
    if group.order % 2 == 0:
        warnings.warn(
            f"group order {group.order} is even; only odd densities are usable",
            EvenOrderWarning,
            stacklevel=2,
        )

    lattice: SubgroupLattice = subgroup_lattice(group.exponent)
    nodes = list(lattice.nodes)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            raw = list(pool.map(lambda n: _containing_count(group, delta, n), nodes))
    else:
        raw = [_containing_count(group, delta, n) for n in nodes]

    # attribute each necklace to its exact multiplier group, largest first
    order_of = {i: nodes[i].order for i in range(len(nodes))}
    processing = sorted(
        range(len(nodes)),
        key=lambda i: (-order_of[i], tuple(sorted(nodes[i].elements))),
    )
    exact: dict[int, int] = {}
    for i in processing:
        value = raw[i][2]
        for j in lattice.strict_supergroups(i):
            value -= exact[j]
        if value < 0:
            raise InternalConsistencyError(
                f"negative exact count for subgroup {nodes[i].generators}"
            )
        exact[i] = value

    phi = totient(group.exponent)
    tallies = []
    class_total = 0
    for i in processing:
        nsol, c_value, containing = raw[i]
        classes = _exact_div(
            exact[i] * nodes[i].order,
            phi,
            f"class count for subgroup {nodes[i].generators}",
        )
        class_total += classes
        tallies.append(
            SubgroupTally(
                generators=nodes[i].generators,
                order=nodes[i].order,
                offset_gcd=c_value,
                solutions=nsol,
                necklaces_containing=containing,
                necklaces_exact=exact[i],
                decimation_classes=classes,
            )
        )

    n = necklace_count(group, delta)
    if sum(exact.values()) != n:
        raise InternalConsistencyError(
            f"exact counts sum to {sum(exact.values())}, necklace total is {n}"
        )
    eta = symmetric_necklace_count(group, delta)
    return CountReport(
        group=group,
        density=delta,
        necklaces=n,
        symmetric_necklaces=eta,
        bracelets=_exact_div(n + eta, 2, "bracelet count"),
        decimation_classes=class_total,
        subgroups=tuple(tallies),
    )
