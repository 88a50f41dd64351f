import math

import pytest

from decicount import (
    EmptyMultiset,
    Group,
    GroupMultiset,
    NotAMultiplier,
    NotAUnit,
    PeriodicInput,
    fixed_translates,
    is_translate_fixing,
    multiplier_group,
    subgroup_fixed_translates,
    totient,
    translate_witness,
    units,
)
from conftest import random_multiset


def brute_multipliers(ms):
    g = ms.group
    out = []
    for t in units(g.exponent):
        dil = ms.dilate(t)
        if any(dil.mult == ms.translate(x).mult for x in g.elements):
            out.append(t)
    return frozenset(out)


# support {-10,-4,-2,0,2,8} mod 28, density 6: a multiset whose witness
# offsets distinguish translate-fixing multipliers from the rest
Z28 = Group((28,))
EXAMPLE = GroupMultiset.from_elements(Z28, [18, 24, 26, 0, 2, 8])


def test_example_multiplier_group_is_full():
    h = multiplier_group(EXAMPLE)
    assert h.order == 12
    assert h.elements == frozenset(units(28))


def test_example_witnesses():
    w3 = translate_witness(EXAMPLE, 3)
    assert w3 is not None
    assert EXAMPLE.dilate(3).mult == EXAMPLE.translate(w3.shift).mult
    w5 = translate_witness(EXAMPLE, 5)
    assert w5.shift.residues == (10,)
    assert w5.offsets == (1,)


def test_example_translate_fixing():
    # 27 and 23 fix translates, 5 does not
    assert is_translate_fixing(EXAMPLE, 27)
    assert is_translate_fixing(EXAMPLE, 23)
    assert not is_translate_fixing(EXAMPLE, 5)
    assert fixed_translates(EXAMPLE, 5) == []
    fixed = fixed_translates(EXAMPLE, 27)
    assert len(fixed) == math.gcd(26, 28)
    for z in fixed:
        moved = EXAMPLE.translate(z)
        assert moved.dilate(27).mult == moved.mult


def test_not_a_multiplier_raises():
    g = Group((7,))
    ms = GroupMultiset.from_elements(g, [0, 1, 2])
    assert translate_witness(ms, 2) is None
    with pytest.raises(NotAMultiplier):
        fixed_translates(ms, 2)
    with pytest.raises(NotAMultiplier):
        is_translate_fixing(ms, 2)
    # {0,1,3} mod 7 on the other hand is fixed by doubling up to a shift
    planar = GroupMultiset.from_elements(g, [0, 1, 3])
    w = translate_witness(planar, 2)
    assert w is not None and w.shift == g.element(6)


def test_unit_validation():
    g = Group((6,))
    ms = GroupMultiset.from_elements(g, [0, 1, 3])
    with pytest.raises(NotAUnit):
        translate_witness(ms, 2)
    with pytest.raises(NotAUnit):
        is_translate_fixing(ms, 3)
    # negative units are normalized before the check
    assert translate_witness(ms, -1) == translate_witness(ms, 5)


def test_periodic_input():
    g = Group((6,))
    periodic = GroupMultiset.from_counts(g, (1, 0, 0, 1, 0, 0))
    with pytest.raises(PeriodicInput):
        translate_witness(periodic, 5)
    # the multiplier group itself is still well defined
    h = multiplier_group(periodic)
    assert h.elements == brute_multipliers(periodic)


def test_empty_multiset():
    g = Group((5,))
    empty = GroupMultiset.from_counts(g, (0,) * 5)
    with pytest.raises(EmptyMultiset):
        multiplier_group(empty)
    with pytest.raises(EmptyMultiset):
        translate_witness(empty, 2)


def test_multiplier_group_matches_brute_force(rng, small_groups):
    for _ in range(120):
        g = rng.choice(small_groups)
        ms = random_multiset(rng, g, rng.randrange(1, 8))
        assert multiplier_group(ms).elements == brute_multipliers(ms)


def test_group_closure_and_invariance(rng, small_groups):
    for _ in range(60):
        g = rng.choice(small_groups)
        ms = random_multiset(rng, g, rng.randrange(1, 8))
        h = multiplier_group(ms)
        for a in h.elements:
            for b in h.elements:
                assert (a * b) % h.modulus in h
        # invariant under translation and dilation
        x = rng.choice(g.elements)
        assert multiplier_group(ms.translate(x)).elements == h.elements
        t = rng.choice(units(g.exponent))
        assert multiplier_group(ms.dilate(t)).elements == h.elements
        # and hence under any affine map
        assert multiplier_group(ms.dilate(t).translate(x)).elements == h.elements


def test_witness_shift_unique_and_offsets_bounded(rng, small_groups):
    for _ in range(60):
        g = rng.choice(small_groups)
        ms = random_multiset(rng, g, rng.randrange(1, 8))
        if ms.is_periodic() is not None:
            continue
        for t in multiplier_group(ms).elements:
            w = translate_witness(ms, t)
            assert w is not None
            shifts = [
                x for x in g.elements
                if ms.dilate(t).mult == ms.translate(x).mult
            ]
            assert shifts == [w.shift]
            for off, lk in zip(w.offsets, g.moduli):
                assert 0 <= off < math.gcd(ms.density, lk)


def test_fixed_translates_properties(rng, small_groups):
    for _ in range(60):
        g = rng.choice(small_groups)
        density = rng.randrange(1, 8)
        if math.gcd(density, g.exponent) != 1:
            continue
        ms = random_multiset(rng, g, density)
        z0 = ms.canonical_shift()
        h = multiplier_group(ms)
        for t in h.elements:
            fixed = fixed_translates(ms, t)
            if t == 1:
                assert len(fixed) == g.order
            else:
                assert len(fixed) == math.prod(
                    math.gcd(t - 1, lk) for lk in g.moduli
                )
            assert z0 in fixed
            assert is_translate_fixing(ms, t)
        common = subgroup_fixed_translates(ms, h.generators)
        assert z0 in common


def test_fixed_translate_count_can_be_zero(rng, small_groups):
    # with gcd(density, exponent) > 1 a multiplier may fix nothing
    seen_zero = False
    for _ in range(200):
        g = rng.choice(small_groups)
        ms = random_multiset(rng, g, rng.randrange(2, 8))
        if ms.is_periodic() is not None or math.gcd(ms.density, g.exponent) == 1:
            continue
        for t in multiplier_group(ms).elements:
            fixed = fixed_translates(ms, t)
            assert len(fixed) in (
                0,
                math.prod(math.gcd(t - 1, lk) for lk in g.moduli)
                if t != 1
                else g.order,
            )
            assert is_translate_fixing(ms, t) == bool(fixed)
            if not fixed:
                seen_zero = True
    assert seen_zero


def test_orbit_stabilizer_on_necklaces(rng, small_groups):
    for _ in range(60):
        g = rng.choice(small_groups)
        density = rng.randrange(1, 8)
        if math.gcd(density, g.exponent) != 1:
            continue
        ms = random_multiset(rng, g, density)
        h = multiplier_group(ms)
        orbit = {
            min(ms.dilate(t).translate(x).mult for x in g.elements)
            for t in units(g.exponent)
        }
        assert len(orbit) * h.order == totient(g.exponent)


def test_subgroup_fixed_translates_intersection():
    h = multiplier_group(EXAMPLE)
    per_gen = [set(z.index for z in fixed_translates(EXAMPLE, t)) for t in h.generators]
    expected = set.intersection(*per_gen) if per_gen else set()
    got = {z.index for z in subgroup_fixed_translates(EXAMPLE, h.generators)}
    assert got == expected
    # empty generator list fixes everything
    assert len(subgroup_fixed_translates(EXAMPLE, [])) == Z28.order
