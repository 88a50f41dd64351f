"""Finite abelian groups as products of cyclic factors.

A group is a tuple of moduli (l1, ..., lr); elements are residue tuples.
Elements are ordered row-major with the last coordinate varying fastest,
and every dense vector in the package indexes into that order.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from .errors import GroupMismatch, InvalidGroupSpec

_FACTOR_RE = re.compile(r"^[Zz]([0-9]+)$")


@dataclass(frozen=True)
class Group:
    """Direct product of cyclic groups Z_l1 x ... x Z_lr."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        moduli = self.moduli
        if isinstance(moduli, int):
            moduli = (moduli,)
        else:
            moduli = tuple(int(m) for m in moduli)
        if not moduli:
            raise InvalidGroupSpec("a group needs at least one cyclic factor")
        for m in moduli:
            if m < 2:
                raise InvalidGroupSpec(f"cyclic factor must have order >= 2, got {m}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def from_spec(cls, spec: str) -> "Group":
        """Parse a spec string such as ``Z5`` or ``Z3xZ9`` (case-insensitive)."""
        parts = re.split("[xX]", spec.strip())
        moduli = []
        for part in parts:
            m = _FACTOR_RE.match(part.strip())
            if not m:
                raise InvalidGroupSpec(f"cannot parse group factor {part!r} in {spec!r}")
            moduli.append(int(m.group(1)))
        return cls(tuple(moduli))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.moduli)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        # stride[i] = product of the moduli after position i
        strides = []
        acc = 1
        for m in reversed(self.moduli):
            strides.append(acc)
            acc *= m
        return tuple(reversed(strides))

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    @cached_property
    def elements(self) -> tuple["GroupElement", ...]:
        return tuple(
            GroupElement(self, res)
            for res in itertools.product(*(range(m) for m in self.moduli))
        )

    def element(self, value: "ElementLike") -> "GroupElement":
        """Coerce a residue tuple (or a bare int for rank-1 groups) to an element."""
        if isinstance(value, GroupElement):
            if value.group != self:
                raise GroupMismatch(f"element of {value.group} used with {self}")
            return value
        if isinstance(value, int):
            if self.rank != 1:
                raise GroupMismatch(
                    f"bare integer element only allowed for rank-1 groups, not {self}"
                )
            return GroupElement(self, (value,))
        residues = tuple(int(v) for v in value)
        if len(residues) != self.rank:
            raise GroupMismatch(
                f"expected {self.rank} coordinates for {self}, got {len(residues)}"
            )
        return GroupElement(self, residues)

    def element_from_index(self, index: int) -> "GroupElement":
        if not 0 <= index < self.order:
            raise IndexError(f"element index {index} out of range for {self}")
        residues = []
        for m, s in zip(self.moduli, self._strides):
            residues.append((index // s) % m)
        return GroupElement(self, tuple(residues))

    def permutation_of_add(self, g: "ElementLike") -> tuple[int, ...]:
        """perm[i] = index of (elements[i] + g)."""
        g = self.element(g)
        return tuple((e + g).index for e in self.elements)

    def permutation_of_mul(self, m: int) -> tuple[int, ...]:
        """perm[i] = index of (m * elements[i])."""
        return tuple((m * e).index for e in self.elements)

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)


@dataclass(frozen=True)
class GroupElement:
    """A residue tuple inside a fixed group."""

    group: Group
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        residues = tuple(
            int(v) % m for v, m in zip(self.residues, self.group.moduli)
        )
        if len(self.residues) != self.group.rank:
            raise GroupMismatch(
                f"expected {self.group.rank} coordinates, got {len(self.residues)}"
            )
        object.__setattr__(self, "residues", residues)

    @property
    def index(self) -> int:
        return sum(r * s for r, s in zip(self.residues, self.group._strides))

    def _coerce(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            raise TypeError(f"cannot combine GroupElement with {type(other).__name__}")
        if other.group != self.group:
            raise GroupMismatch(f"cannot combine elements of {self.group} and {other.group}")
        return other

    def __add__(self, other: "GroupElement") -> "GroupElement":
        other = self._coerce(other)
        return GroupElement(
            self.group,
            tuple(a + b for a, b in zip(self.residues, other.residues)),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        other = self._coerce(other)
        return GroupElement(
            self.group,
            tuple(a - b for a, b in zip(self.residues, other.residues)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.residues))

    def __rmul__(self, scalar: int) -> "GroupElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return GroupElement(self.group, tuple(scalar * a for a in self.residues))

    def __str__(self) -> str:
        if self.group.rank == 1:
            return str(self.residues[0])
        return "(" + ",".join(str(r) for r in self.residues) + ")"


ElementLike = Union[GroupElement, Sequence[int], int]


def solve_linear(group: Group, m: int, a: "ElementLike") -> list[GroupElement]:
    """All x in the group with m*x = a, in canonical element order.

    Returns [] when unsolvable, otherwise prod(gcd(m, l_i)) solutions.
    """
    a = group.element(a)
    per_coordinate: list[list[int]] = []
    for lk, ak in zip(group.moduli, a.residues):
        d = math.gcd(m, lk)
        if ak % d:
            return []
        step = lk // d
        if step > 1:
            inv = pow((m // d) % step, -1, step)
            x0 = (inv * (ak // d)) % step
        else:
            x0 = 0
        per_coordinate.append([x0 + j * step for j in range(d)])
    return [GroupElement(group, res) for res in itertools.product(*per_coordinate)]
