import math

import pytest

from decicount import (
    NotAUnit,
    UnitSubgroup,
    subgroup_lattice,
    totient,
    unit_group_rank,
    unit_offset_gcd,
    units,
)
from decicount.units import _closure


def test_units_list():
    assert units(12) == (1, 5, 7, 11)
    assert units(7) == (1, 2, 3, 4, 5, 6)
    assert units(2) == (1,)
    with pytest.raises(ValueError):
        units(1)


def test_totient():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert totient(360) == 96


@pytest.mark.parametrize(
    "modulus,rank",
    [(2, 0), (3, 1), (4, 1), (5, 1), (7, 1), (8, 2), (9, 1), (12, 2), (15, 2), (16, 2), (24, 3), (40, 3), (48, 3)],
)
def test_unit_group_rank(modulus, rank):
    assert unit_group_rank(modulus) == rank


def test_generated_subgroup():
    h = UnitSubgroup.generated(7, [2])
    assert h.elements == frozenset({1, 2, 4})
    assert h.order == 3
    assert 4 in h
    assert 3 not in h
    assert list(h) == [1, 2, 4]
    with pytest.raises(NotAUnit):
        UnitSubgroup.generated(6, [3])


def test_trivial_and_full():
    assert UnitSubgroup.trivial(10).elements == frozenset({1})
    assert UnitSubgroup.trivial(10).generators == (1,)
    assert UnitSubgroup.full(10).elements == frozenset({1, 3, 7, 9})


def test_from_elements_greedy_generators():
    h = UnitSubgroup.from_elements(8, [1, 3, 5, 7])
    assert h.generators == (3, 5)
    assert _closure(8, h.generators) == h.elements
    assert UnitSubgroup.from_elements(5, [1]).generators == (1,)


def test_unit_offset_gcd():
    assert unit_offset_gcd((1,), 12) == 12
    assert unit_offset_gcd((5,), 12) == 4
    assert unit_offset_gcd((5, 7), 12) == 2
    assert unit_offset_gcd((), 9) == 9


def test_lattice_z8():
    lat = subgroup_lattice(8)
    assert [sorted(n.elements) for n in lat.nodes] == [
        [1], [1, 3], [1, 5], [1, 7], [1, 3, 5, 7],
    ]
    assert sorted(lat.edges) == [(1, 0), (2, 0), (3, 0), (4, 1), (4, 2), (4, 3)]


def test_lattice_z7_chain():
    lat = subgroup_lattice(7)
    assert [n.order for n in lat.nodes] == [1, 2, 3, 6]
    # full group covers both proper nontrivial subgroups, never the trivial one
    assert sorted(lat.edges) == [(1, 0), (2, 0), (3, 1), (3, 2)]


def test_lattice_nodes_sorted_and_generated():
    for modulus in (5, 8, 12, 15, 16, 24):
        lat = subgroup_lattice(modulus)
        keys = [(n.order, tuple(sorted(n.elements))) for n in lat.nodes]
        assert keys == sorted(keys)
        bound = max(unit_group_rank(modulus), 1)
        for n in lat.nodes:
            assert len(n.generators) <= bound
            assert _closure(modulus, n.generators) == n.elements


def test_strict_supergroups():
    lat = subgroup_lattice(8)
    trivial = next(i for i, n in enumerate(lat.nodes) if n.order == 1)
    assert len(lat.strict_supergroups(trivial)) == 4
    full = next(i for i, n in enumerate(lat.nodes) if n.order == 4)
    assert lat.strict_supergroups(full) == []


def brute_subgroups(modulus):
    found = {frozenset({1})}
    frontier = [frozenset({1})]
    while frontier:
        nxt = []
        for s in frontier:
            for u in units(modulus):
                if u in s:
                    continue
                c = _closure(modulus, tuple(s) + (u,))
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return found


@pytest.mark.parametrize("modulus", [2, 3, 8, 12, 16, 21, 24])
def test_lattice_complete(modulus):
    lat = subgroup_lattice(modulus)
    assert {n.elements for n in lat.nodes} == brute_subgroups(modulus)


def test_lattice_edges_are_covers():
    for modulus in (8, 12, 15, 16, 20, 24):
        lat = subgroup_lattice(modulus)
        sets = [n.elements for n in lat.nodes]
        expected = {
            (j, k)
            for j in range(len(sets))
            for k in range(len(sets))
            if sets[k] < sets[j]
            and not any(sets[k] < mid < sets[j] for mid in sets)
        }
        assert set(lat.edges) == expected


def test_to_dict_shape():
    d = subgroup_lattice(5).to_dict()
    assert d["modulus"] == 5
    assert {n["order"] for n in d["nodes"]} == {1, 2, 4}
    assert all(isinstance(e, tuple) and len(e) == 2 for e in d["edges"])
