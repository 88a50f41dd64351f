"""Unit groups modulo an integer, their subgroups and the subgroup lattice."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator

from .errors import InvalidGroupSpec, NotAUnit


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _prime_factors(n: int) -> list[int]:
    return sorted(_factorize(n))


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient undefined for {n}")
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def units(modulus: int) -> tuple[int, ...]:
    """All residues coprime to the modulus, ascending."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    return tuple(u for u in range(1, modulus) if math.gcd(u, modulus) == 1)


def _cyclic_component_orders(modulus: int) -> list[int]:
    """Orders of the cyclic factors in the classical unit-group decomposition."""
    orders: list[int] = []
    for p, e in sorted(_factorize(modulus).items()):
        if p == 2:
            if e == 2:
                orders.append(2)
            elif e >= 3:
                orders.extend([2, 2 ** (e - 2)])
            # 2^1 contributes a trivial factor
        else:
            orders.append(p ** (e - 1) * (p - 1))
    return orders


def unit_group_rank(modulus: int) -> int:
    """Least number of generators of the unit group modulo the modulus."""
    orders = _cyclic_component_orders(modulus)
    if not orders:
        return 0
    rank = 0
    primes = set()
    for o in orders:
        primes.update(_prime_factors(o))
    for q in primes:
        rank = max(rank, sum(1 for o in orders if o % q == 0))
    return rank


def _closure(modulus: int, seed: Iterable[int]) -> frozenset[int]:
    """Multiplicative closure of the seed units, always containing 1."""
    current = {1}
    frontier = [s % modulus for s in seed]
    for s in frontier:
        current.add(s)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(current):
                c = (a * b) % modulus
                if c not in current:
                    current.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(current)


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup of the unit group modulo a fixed modulus."""

    modulus: int
    elements: frozenset[int]
    generators: tuple[int, ...]

    @classmethod
    def generated(cls, modulus: int, generators: Iterable[int]) -> "UnitSubgroup":
        gens = []
        for g in generators:
            g = g % modulus
            if math.gcd(g, modulus) != 1:
                raise NotAUnit(f"{g} is not a unit modulo {modulus}")
            gens.append(g)
        if not gens:
            gens = [1]
        return cls(modulus, _closure(modulus, gens), tuple(gens))

    @classmethod
    def from_elements(cls, modulus: int, elements: Iterable[int]) -> "UnitSubgroup":
        elems = frozenset(e % modulus for e in elements) | {1}
        gens = _greedy_generators(modulus, elems)
        return cls(modulus, elems, gens)

    @classmethod
    def trivial(cls, modulus: int) -> "UnitSubgroup":
        return cls(modulus, frozenset({1}), (1,))

    @classmethod
    def full(cls, modulus: int) -> "UnitSubgroup":
        elems = frozenset(units(modulus))
        return cls(modulus, elems, _greedy_generators(modulus, elems))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, t: int) -> bool:
        return (t % self.modulus) in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))


def _greedy_generators(modulus: int, elements: frozenset[int]) -> tuple[int, ...]:
    gens: list[int] = []
    have = frozenset({1})
    for e in sorted(elements):
        if e not in have:
            gens.append(e)
            have = _closure(modulus, gens)
            if have == elements:
                break
    if not gens:
        gens = [1]
    return tuple(gens)


def unit_offset_gcd(generators: Iterable[int], modulus: int) -> int:
    """gcd of the modulus together with g-1 over the given generators."""
    return reduce(math.gcd, (g - 1 for g in generators), modulus)


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of the unit group, with Hasse cover edges.

    Nodes are sorted by (order, sorted element tuple); edges (j, k) say that
    node k is a maximal proper subgroup of node j.
    """

    modulus: int
    nodes: tuple[UnitSubgroup, ...]
    edges: frozenset[tuple[int, int]]

    @cached_property
    def _element_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(n.elements for n in self.nodes)

    def strict_supergroups(self, index: int) -> list[int]:
        s = self._element_sets[index]
        return [
            j
            for j, other in enumerate(self._element_sets)
            if s < other
        ]

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "nodes": [
                {
                    "generators": list(n.generators),
                    "order": n.order,
                    "elements": sorted(n.elements),
                }
                for n in self.nodes
            ],
            "edges": sorted(self.edges),
        }


def _hasse_insert_all(sets: list[frozenset[int]]) -> set[tuple[int, int]]:
    """Incrementally maintain Hasse cover edges while inserting each set.

    For the set at position idx: add an edge down to every maximal strict
    subset already present, an edge up from every minimal strict superset,
    and drop previously present edges the new node now sits between.
    """
    edges: set[tuple[int, int]] = set()
    for idx, s in enumerate(sets):
        subs = [i for i in range(idx) if sets[i] < s]
        sups = [i for i in range(idx) if s < sets[i]]
        for i in subs:
            if not any(sets[i] < sets[m] for m in subs):
                edges.add((idx, i))
        for j in sups:
            if not any(sets[m] < sets[j] for m in sups):
                edges.add((j, idx))
        for j in sups:
            for i in subs:
                edges.discard((j, i))
    return edges


def subgroup_lattice(modulus: int) -> SubgroupLattice:
    """Every subgroup of the unit group modulo the modulus.

    Starts from the cyclic subgroups and repeatedly extends each known
    subgroup by one more cyclic subgroup; the number of joins needed is
    bounded by the least size of a generating set of the whole unit group,
    so the loop depth is capped by that rank.
    """
    if modulus < 2:
        raise InvalidGroupSpec(f"modulus must be >= 2, got {modulus}")
    all_units = units(modulus)

    gens_for: dict[frozenset[int], tuple[int, ...]] = {}
    discovered: list[frozenset[int]] = []

    def record(elems: frozenset[int], gens: tuple[int, ...]) -> None:
        if elems not in gens_for:
            gens_for[elems] = gens
            discovered.append(elems)

    record(frozenset({1}), (1,))
    cyclic: list[tuple[frozenset[int], int]] = []
    for u in all_units:
        elems = _closure(modulus, (u,))
        cyclic.append((elems, u))
        if u != 1:
            record(elems, (u,))

    depth = max(unit_group_rank(modulus), 1)
    frontier = list(discovered)
    for _ in range(depth - 1):
        new_frontier: list[frozenset[int]] = []
        for elems in frontier:
            base_gens = gens_for[elems]
            for c_elems, u in cyclic:
                if c_elems <= elems:
                    continue
                combined = _closure(modulus, base_gens + (u,))
                if combined not in gens_for:
                    record(combined, base_gens + (u,))
                    new_frontier.append(combined)
        if not new_frontier:
            break
        frontier = new_frontier

    order_key = lambda elems: (len(elems), tuple(sorted(elems)))
    ordered = sorted(gens_for, key=order_key)
    edges_raw = _hasse_insert_all(ordered)

    nodes = tuple(
        UnitSubgroup(modulus, elems, gens_for[elems]) for elems in ordered
    )
    return SubgroupLattice(modulus, nodes, frozenset(edges_raw))
