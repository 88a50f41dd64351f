"""Dense multiplicity vectors over a finite abelian group.

A multiset assigns a nonnegative count to every group element.  The counts
live in a flat tuple indexed by the canonical element order of the group, so
a rank-1 group over Z_l stores plain length-l vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    EmptyMultiset,
    GroupMismatch,
    InvalidVectorLiteral,
    NotAUnit,
    UnsupportedParameters,
)
from .groups import ElementLike, Group, GroupElement, solve_linear


@dataclass(frozen=True)
class GroupMultiset:
    """Multiset of group elements stored as a dense multiplicity vector."""

    group: Group
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        mult = tuple(int(v) for v in self.mult)
        if len(mult) != self.group.order:
            raise GroupMismatch(
                f"vector of length {len(mult)} cannot index {self.group} "
                f"(order {self.group.order})"
            )
        if any(v < 0 for v in mult):
            raise InvalidVectorLiteral("multiplicities must be nonnegative")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def from_counts(cls, group: Group, counts: Sequence[int]) -> "GroupMultiset":
        return cls(group, tuple(counts))

    @classmethod
    def from_elements(cls, group: Group, elements: Iterable[ElementLike]) -> "GroupMultiset":
        mult = [0] * group.order
        for e in elements:
            mult[group.element(e).index] += 1
        return cls(group, tuple(mult))

    @classmethod
    def from_literal(cls, group: Group, literal: str) -> "GroupMultiset":
        """Parse a comma-separated multiplicity vector such as ``1,0,2,0,0``."""
        parts = [p.strip() for p in literal.split(",")]
        try:
            counts = [int(p) for p in parts]
        except ValueError as exc:
            raise InvalidVectorLiteral(f"bad multiplicity in {literal!r}") from exc
        if len(counts) != group.order:
            raise InvalidVectorLiteral(
                f"vector literal has {len(counts)} entries, {group} needs {group.order}"
            )
        if any(c < 0 for c in counts):
            raise InvalidVectorLiteral("multiplicities must be nonnegative")
        return cls(group, tuple(counts))

    def literal(self) -> str:
        return ",".join(str(v) for v in self.mult)

    @cached_property
    def density(self) -> int:
        """Total number of elements counted with multiplicity."""
        return sum(self.mult)

    @cached_property
    def sigma(self) -> GroupElement:
        """Sum of all members, with multiplicity."""
        total = self.group.identity
        for e, v in zip(self.group.elements, self.mult):
            if v:
                total = total + v * e
        return total

    def multiplicity(self, g: ElementLike) -> int:
        return self.mult[self.group.element(g).index]

    def support(self) -> tuple[GroupElement, ...]:
        return tuple(
            e for e, v in zip(self.group.elements, self.mult) if v
        )

    def translate(self, g: ElementLike) -> "GroupMultiset":
        """Multiset whose count at x+g equals this one's count at x."""
        g = self.group.element(g)
        perm = self.group.permutation_of_add(g)
        new = [0] * self.group.order
        for i, v in enumerate(self.mult):
            new[perm[i]] = v
        return GroupMultiset(self.group, tuple(new))

    def dilate(self, t: int) -> "GroupMultiset":
        """Multiset whose count at t*x equals this one's count at x."""
        if math.gcd(t, self.group.exponent) != 1:
            raise NotAUnit(f"{t} is not a unit modulo {self.group.exponent}")
        perm = self.group.permutation_of_mul(t)
        new = [0] * self.group.order
        for i, v in enumerate(self.mult):
            new[perm[i]] = v
        return GroupMultiset(self.group, tuple(new))

    def is_periodic(self) -> GroupElement | None:
        """First nonzero period in canonical order, or None when aperiodic."""
        if self.density == 0:
            raise EmptyMultiset("periodicity is undefined for the empty multiset")
        for g in self.group.elements[1:]:
            if self.translate(g).mult == self.mult:
                return g
        return None

    def canonical_shift(self) -> GroupElement:
        """The translate offset fixed by every multiplier: -(1/density) * sigma.

        Requires gcd(density, exponent) = 1.
        """
        exp = self.group.exponent
        try:
            inv = pow(self.density % exp, -1, exp)
        except ValueError:
            raise UnsupportedParameters(
                f"density {self.density} shares a factor with the exponent {exp}"
            ) from None
        return (-inv) * self.sigma

    def symmetry_indices(self) -> tuple[GroupElement, ...]:
        """Centers of symmetry: the witnesses that the multiset equals a
        reflection of itself.

        Empty when the multiset is not symmetric; otherwise the returned
        centers form one coset of the 2-torsion subgroup (the least raw
        center plus every solution of 2x = 0), sorted canonically.
        """
        if self.density == 0:
            raise EmptyMultiset("symmetry is undefined for the empty multiset")
        group = self.group
        neg = group.permutation_of_mul(group.exponent - 1)
        base: GroupElement | None = None
        for c in group.elements:
            # reflected-through-c count at x is the count at c - (x - c) = 2c - x
            perm = group.permutation_of_add(c + c)
            if all(self.mult[i] == self.mult[perm[neg[i]]] for i in range(group.order)):
                base = c
                break
        if base is None:
            return ()
        torsion = solve_linear(group, 2, group.identity)
        centers = sorted((base + z for z in torsion), key=lambda e: e.index)
        return tuple(centers)
