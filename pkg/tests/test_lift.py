"""Liftability, the curve/interval catalog, types, and generator sets."""

import itertools
import random

import pytest

from diskcovers.core import MonodromySequence, Transposition, disk_covering
from diskcovers.hurwitz import BraidWord
from diskcovers.lift import (
    CurveRef,
    IntervalRef,
    count_regular_bases,
    curve_monodromy,
    index0_curve,
    index0_interval,
    index1_curve,
    index1_interval,
    interval_braid,
    interval_type,
    is_liftable,
    is_regular_curve,
    reference_alpha_monodromy,
    standard_curve,
    standard_interval,
    systems_liftable_equivalent,
    theorem_c_generators,
    transport_curve,
    transport_interval,
    twisted_interval,
)


def word(strands, *letters):
    return BraidWord(strands, letters)


def rotation_braid(branch_points):
    """The full boundary rotation: the ascending generator run, n + 1 times."""
    n = branch_points
    return BraidWord(n, tuple(range(1, n)) * (n + 1))


def test_is_liftable_examples():
    p2 = disk_covering(2)
    assert not is_liftable(p2, word(2, 1))
    assert is_liftable(p2, word(2, 1, 1, 1))
    assert is_liftable(p2, word(2))
    p3 = disk_covering(3)
    assert is_liftable(p3, word(3, 2, 1, 1, -2))


def test_interval_braid_examples():
    p3 = disk_covering(3)
    x1 = standard_interval(3, 1)
    assert interval_braid(x1).letters == (1,)
    x13 = twisted_interval(3, 1, 3)
    assert x13 == IntervalRef(1, word(3, 2))
    assert interval_braid(x13).letters == (2, 1, -2)
    assert interval_braid(x13, power=2).letters == (2, 1, 1, -2)
    assert is_liftable(p3, interval_braid(x13, power=2))
    xhat13 = index0_interval(3, 1, 3)
    assert xhat13 == IntervalRef(1, word(3, -2))
    assert interval_braid(xhat13).letters == (-2, 1, 2)


def test_interval_type_examples():
    p3 = disk_covering(3)
    assert interval_type(p3, standard_interval(3, 1)) == 3
    assert interval_type(p3, twisted_interval(3, 1, 3)) == 2
    assert interval_type(p3, index0_interval(3, 1, 3)) == 3


def test_interval_symmetric_constructors():
    assert twisted_interval(4, 3, 1) == twisted_interval(4, 1, 3)
    assert index0_interval(4, 3, 1) == index0_interval(4, 1, 3)
    assert index0_interval(4, 1, 2) == standard_interval(4, 1)
    assert twisted_interval(4, 2, 3) == standard_interval(4, 2)
    assert index1_interval(5, 4, 2, 1) == index1_interval(5, 1, 2, 4)
    assert index1_interval(5, 2, 2, 4) == index0_interval(5, 2, 4)
    assert index1_interval(5, 2, 4, 4) == index0_interval(5, 2, 4)
    with pytest.raises(ValueError):
        index1_interval(5, 2, 3, 2)


def test_reference_monodromy_examples():
    assert reference_alpha_monodromy(3, 1, 3) == Transposition(1, 4)
    assert reference_alpha_monodromy(3, 3, 1) == Transposition(1, 4)
    assert reference_alpha_monodromy(4, 1, 2, 4) == Transposition(3, 5)
    with pytest.raises(ValueError):
        reference_alpha_monodromy(4, 1, 1, 2)
    with pytest.raises(ValueError):
        reference_alpha_monodromy(3, 1, 4)


def test_curve_monodromy_examples():
    p3 = disk_covering(3)
    assert curve_monodromy(p3, standard_curve(3, 1)) == Transposition(1, 2)
    alpha13 = index0_curve(3, 1, 3)
    assert alpha13 == CurveRef(1, word(3, -2, -1, 2))
    assert curve_monodromy(p3, alpha13) == Transposition(1, 4)
    alpha31 = index0_curve(3, 3, 1)
    assert alpha31 == CurveRef(3, word(3, -2, 1, 2))
    assert curve_monodromy(p3, alpha31) == Transposition(1, 4)


def test_curve_monodromy_matches_reference_tables():
    for n in range(2, 6):
        pn = disk_covering(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert curve_monodromy(pn, index0_curve(n, i, j)) == reference_alpha_monodromy(n, i, j)
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            if i == j or j == k:
                continue
            assert curve_monodromy(pn, index1_curve(n, i, j, k)) == reference_alpha_monodromy(n, i, j, k), (n, i, j, k)


def test_theorem_c_generators_examples():
    assert [w.letters for w in theorem_c_generators(2)] == [(1, 1, 1)]
    assert [w.letters for w in theorem_c_generators(3)] == [
        (1, 1, 1),
        (2, 2, 2),
        (2, 1, 1, -2),
    ]
    assert theorem_c_generators(1) == []
    n = 5
    assert len(theorem_c_generators(n)) == (n - 1) + (n - 1) * (n - 2) // 2


def test_theorem_c_generators_are_liftable():
    for n in range(1, 6):
        pn = disk_covering(n)
        for w in theorem_c_generators(n):
            assert is_liftable(pn, w)


def test_liftable_words_form_a_group():
    rng = random.Random(5)
    p4 = disk_covering(4)
    pool = theorem_c_generators(4)
    for _ in range(50):
        parts = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        product = BraidWord(4, ())
        for part in parts:
            product = product * (part if rng.random() < 0.7 else part.inverse())
        assert is_liftable(p4, product)
        assert is_liftable(p4, product.inverse())


def test_interval_type_is_least_liftable_power():
    for n in (2, 3):
        pn = disk_covering(n)
        letters = [s * i for i in range(1, n) for s in (1, -1)]
        for base in range(1, n):
            for length in range(0, 4):
                for combo in itertools.product(letters, repeat=length):
                    ref = IntervalRef(base, BraidWord(n, combo))
                    claimed = interval_type(pn, ref)
                    powers = [
                        k
                        for k in (1, 2, 3)
                        if is_liftable(pn, interval_braid(ref, power=k))
                    ]
                    assert powers and powers[0] == claimed


def test_no_type_one_intervals_on_disk_coverings():
    for n in (2, 3, 4):
        pn = disk_covering(n)
        letters = [s * i for i in range(1, n) for s in (1, -1)]
        for base in range(1, n):
            for length in range(0, 4):
                for combo in itertools.product(letters, repeat=length):
                    assert interval_type(pn, IntervalRef(base, BraidWord(n, combo))) != 1


def test_no_type_one_intervals_randomized_longer_words():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(2, 4)
        pn = disk_covering(n)
        base = rng.randint(1, n - 1)
        letters = tuple(
            rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))
        )
        assert interval_type(pn, IntervalRef(base, BraidWord(n, letters))) != 1


def test_type_invariant_under_liftable_transport():
    rng = random.Random(17)
    n = 4
    pn = disk_covering(n)
    pool = theorem_c_generators(n)
    for _ in range(100):
        base = rng.randint(1, n - 1)
        letters = tuple(
            rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))
        )
        ref = IntervalRef(base, BraidWord(n, letters))
        liftable = rng.choice(pool)
        if rng.random() < 0.5:
            liftable = liftable.inverse()
        transported = transport_interval(ref, liftable)
        assert interval_type(pn, ref) == interval_type(pn, transported)


def test_interval_catalog_types():
    for n in range(2, 6):
        pn = disk_covering(n)
        for i in range(1, n):
            assert interval_type(pn, standard_interval(n, i)) == 3
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                if abs(i - j) > 1:
                    assert interval_type(pn, twisted_interval(n, i, j)) == 2
                assert interval_type(pn, index0_interval(n, i, j)) == 3
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            if i == j or j == k or i == k:
                continue
            assert interval_type(pn, index1_interval(n, i, j, k)) == 2


def test_is_regular_curve_examples():
    p3 = disk_covering(3)
    assert is_regular_curve(p3, standard_curve(3, 3))
    assert is_regular_curve(p3, index0_curve(3, 1, 3))
    assert not is_regular_curve(p3, index0_curve(3, 1, 2))
    with pytest.raises(ValueError):
        is_regular_curve(MonodromySequence.from_pairs(2, [(1, 2), (1, 2)]), standard_curve(2, 1))


def test_regular_index0_catalog_is_exact():
    for n in (2, 3, 4):
        pn = disk_covering(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                expected = i == j or (i, j) in ((1, n), (n, 1))
                assert is_regular_curve(pn, index0_curve(n, i, j)) == expected, (n, i, j)


def test_standard_curve_monodromies_distinct():
    n = 4
    pn = disk_covering(n)
    monodromies = [curve_monodromy(pn, standard_curve(n, j)) for j in range(1, n + 1)]
    assert len(set(monodromies)) == n


def test_systems_equivalence_examples():
    p3 = disk_covering(3)
    assert systems_liftable_equivalent(p3, [index0_curve(3, 1, 3)], [index0_curve(3, 3, 1)])
    system = [standard_curve(3, 1), standard_curve(3, 2)]
    assert systems_liftable_equivalent(p3, system, system)
    assert not systems_liftable_equivalent(p3, [standard_curve(3, 1)], [standard_curve(3, 2)])


def test_systems_equivalence_validates_input():
    p3 = disk_covering(3)
    with pytest.raises(ValueError):
        systems_liftable_equivalent(p3, [], [])
    with pytest.raises(ValueError):
        systems_liftable_equivalent(
            p3, [standard_curve(3, 1)], [standard_curve(3, 1), standard_curve(3, 2)]
        )
    with pytest.raises(ValueError):
        systems_liftable_equivalent(
            p3,
            [standard_curve(3, 1), CurveRef(2, word(3, 1))],
            [standard_curve(3, 1), standard_curve(3, 2)],
        )


def test_every_transported_fundamental_system_has_two_regular_curves():
    rng = random.Random(23)
    for n in (2, 3, 4):
        pn = disk_covering(n)
        words = [BraidWord(n, ())]
        for _ in range(12):
            letters = tuple(
                rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))
            )
            words.append(BraidWord(n, letters))
        for w in words:
            assert count_regular_bases(pn, w) >= 2, (n, w.letters)


def test_rotation_braid_is_liftable():
    for n in range(2, 7):
        assert is_liftable(disk_covering(n), rotation_braid(n))


def test_rotation_braid_carries_first_chord_to_last():
    for n in range(3, 7):
        pn = disk_covering(n)
        rot = rotation_braid(n)
        first = index0_curve(n, 1, n)
        last = index0_curve(n, n, 1)
        transported = transport_curve(first, rot)
        assert curve_monodromy(pn, transported) == curve_monodromy(pn, last)
        assert curve_monodromy(pn, transported) == Transposition(1, n + 1)
        assert systems_liftable_equivalent(pn, [transported], [last])
