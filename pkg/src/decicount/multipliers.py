"""Units that map a multiset onto one of its translates.

A unit t is a multiplier of the multiset I when t*I = I + g for some group
element g.  For an aperiodic I the shift g is unique, and its coordinates
decompose into a base term derived from the density and element sum plus a
bounded per-coordinate offset; those offsets drive the translate-fixing test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyMultiset,
    InternalConsistencyError,
    NotAMultiplier,
    NotAUnit,
    PeriodicInput,
)
from .groups import GroupElement, solve_linear
from .multisets import GroupMultiset
from .units import UnitSubgroup, totient, units


@dataclass(frozen=True)
class MultiplierWitness:
    """Shift g with t*I = I + g, plus its per-coordinate offset decomposition."""

    t: int
    shift: GroupElement
    offsets: tuple[int, ...]


def _normalized_unit(ms: GroupMultiset, t: int) -> int:
    exp = ms.group.exponent
    t %= exp
    if math.gcd(t, exp) != 1:
        raise NotAUnit(f"{t} is not a unit modulo {exp}")
    return t


def _check_not_periodic(ms: GroupMultiset) -> None:
    # density coprime to the exponent already forces aperiodicity
    if math.gcd(ms.density, ms.group.exponent) == 1:
        return
    if ms.is_periodic() is not None:
        raise PeriodicInput("the multiset has a nonzero period")


def _shift_candidates(ms: GroupMultiset, t: int) -> list[GroupElement]:
    # any shift g with t*I = I + g must satisfy density*g = (t-1)*sigma
    return solve_linear(ms.group, ms.density, (t - 1) * ms.sigma)


def _coordinate_terms(ms: GroupMultiset, t: int) -> Iterator[tuple[int, int, int, int]]:
    """Per coordinate: (modulus, gcd(density, modulus), unit part, scaled sum).

    The unit part is (density/d) raised to totient(modulus/d)-1, i.e. the
    inverse of density/d modulo modulus/d lifted to the full modulus.
    """
    density = ms.density
    for lk, sk in zip(ms.group.moduli, ms.sigma.residues):
        d = math.gcd(density, lk)
        unit_part = pow((density // d) % lk, totient(lk // d) - 1, lk)
        yield lk, d, unit_part, (t - 1) * sk


def _witness_offsets(ms: GroupMultiset, t: int, shift: GroupElement) -> tuple[int, ...]:
    offsets = []
    for (lk, d, unit_part, scaled), gk in zip(
        _coordinate_terms(ms, t), shift.residues
    ):
        if scaled % d:
            raise InternalConsistencyError(
                f"shift candidate violates the coordinate congruence mod {lk}"
            )
        base = (unit_part * (scaled // d)) % lk
        off, rem = divmod((gk - base) % lk, lk // d)
        if rem:
            raise InternalConsistencyError(
                f"shift coordinate {gk} is not congruent to its base term mod {lk // d}"
            )
        offsets.append(off)
    return tuple(offsets)


def translate_witness(ms: GroupMultiset, t: int) -> MultiplierWitness | None:
    """The unique witness with t*I = I + shift, or None when t is no multiplier.

    Demands an aperiodic multiset; otherwise the shift would not be unique.
    """
    t = _normalized_unit(ms, t)
    if ms.density == 0:
        raise EmptyMultiset("multipliers are undefined for the empty multiset")
    _check_not_periodic(ms)
    dilated = ms.dilate(t)
    for g in _shift_candidates(ms, t):
        if dilated.mult == ms.translate(g).mult:
            return MultiplierWitness(t, g, _witness_offsets(ms, t, g))
    return None


def _is_multiplier(ms: GroupMultiset, t: int) -> bool:
    dilated = ms.dilate(t)
    return any(
        dilated.mult == ms.translate(g).mult for g in _shift_candidates(ms, t)
    )


def multiplier_group(ms: GroupMultiset) -> UnitSubgroup:
    """All units t with t*I = I + g for some g, as a unit subgroup.

    Works for periodic multisets as well; only the witness accessors insist
    on aperiodicity.
    """
    if ms.density == 0:
        raise EmptyMultiset("multipliers are undefined for the empty multiset")
    group = ms.group
    exp = group.exponent
    if math.gcd(ms.density, exp) == 1:
        # every multiplier fixes the canonical translate, so anchor there
        anchor = ms.translate(ms.canonical_shift())
        members = [t for t in units(exp) if anchor.dilate(t).mult == anchor.mult]
    else:
        members = [t for t in units(exp) if _is_multiplier(ms, t)]
    return UnitSubgroup.from_elements(exp, members)


def is_translate_fixing(ms: GroupMultiset, t: int) -> bool:
    """Whether t maps some translate of the multiset onto itself.

    Uses the offset decomposition of the witness shift: per coordinate the
    combination (unit part)*(scaled sum) + modulus*offset must be divisible
    by gcd(density, modulus) * gcd(t-1, modulus).
    """
    witness = translate_witness(ms, t)
    if witness is None:
        raise NotAMultiplier(f"{t} is not a multiplier of this multiset")
    for (lk, d, unit_part, scaled), off in zip(
        _coordinate_terms(ms, witness.t), witness.offsets
    ):
        value = unit_part * scaled + lk * off
        if value % (d * math.gcd(witness.t - 1, lk)):
            return False
    return True


def fixed_translates(ms: GroupMultiset, t: int) -> list[GroupElement]:
    """All z such that t maps I + z onto itself, in canonical order."""
    witness = translate_witness(ms, t)
    if witness is None:
        raise NotAMultiplier(f"{t} is not a multiplier of this multiset")
    return solve_linear(ms.group, witness.t - 1, -witness.shift)


def subgroup_fixed_translates(
    ms: GroupMultiset, generators: Iterable[int]
) -> list[GroupElement]:
    """Translates fixed simultaneously by every generator.

    An empty generator list means the trivial subgroup, which fixes all
    translates.
    """
    gens = [g for g in generators]
    if not gens:
        return list(ms.group.elements)
    common: set[int] | None = None
    for t in gens:
        zs = {z.index for z in fixed_translates(ms, t)}
        common = zs if common is None else common & zs
        if not common:
            return []
    assert common is not None
    return [ms.group.element_from_index(i) for i in sorted(common)]
