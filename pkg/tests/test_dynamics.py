import random
from math import lcm

import pytest

from rowmotion import (
    Antichain,
    OrderIdeal,
    antichain_rowmotion,
    enumerate_antichains,
    enumerate_ideals,
    gyration,
    ideal_generated_by,
    maximal_elements,
    minimal_complement,
    orbit,
    orbit_partition,
    rank_of,
    rank_toggle,
    rowmotion,
    rowmotion_by_toggles,
    rowmotion_sigma,
    t_signed,
    toggle,
)
from rowmotion.families import (
    double_tailed_diamond,
    rectangle,
    root_poset_A,
    shifted_staircase,
)
from rowmotion.poset import LinearExtension, linear_extension

from conftest import random_extension


def test_toggle_examples():
    P = rectangle(2, 2)
    empty = OrderIdeal(P)
    assert toggle(P, P.element_at((1, 1)), empty).members == (0,)
    one = OrderIdeal(P, [P.element_at((1, 1))])
    assert toggle(P, P.element_at((2, 2)), one) == one


def test_toggle_involution_exhaustive():
    P = rectangle(2, 3)
    for I in enumerate_ideals(P):
        for p in range(P.n):
            assert toggle(P, p, toggle(P, p, I)) == I


def test_incomparable_toggles_commute():
    for P in (rectangle(2, 3), shifted_staircase(3), double_tailed_diamond(4)):
        for I in enumerate_ideals(P):
            for p in range(P.n):
                for q in range(p + 1, P.n):
                    if P.leq(p, q) or P.leq(q, p):
                        continue
                    assert toggle(P, p, toggle(P, q, I)) == toggle(P, q, toggle(P, p, I))


def test_rowmotion_definition_and_orbits():
    P = rectangle(2, 2)
    empty = OrderIdeal(P)
    assert rowmotion(P, empty) == ideal_generated_by(minimal_complement(empty))
    assert orbit(lambda I: rowmotion(P, I), empty).period == 4
    two = OrderIdeal(P, [P.element_at((1, 1)), P.element_at((1, 2))])
    assert orbit(lambda I: rowmotion(P, I), two).period == 2


def test_rowmotion_max_equals_min_complement():
    P = shifted_staircase(3)
    for I in enumerate_ideals(P):
        assert maximal_elements(rowmotion(P, I)) == minimal_complement(I)


def test_rowmotion_by_toggles_agrees():
    P = rectangle(3, 3)
    rng = random.Random(11)
    exts = [LinearExtension(P, random_extension(P, rng)) for _ in range(5)]
    for I in enumerate_ideals(P):
        expect = rowmotion(P, I)
        for ext in exts:
            assert rowmotion_by_toggles(P, ext, I) == expect


def test_rowmotion_by_toggles_single_element_and_both_extensions():
    from rowmotion import Poset

    single = Poset(1, [])
    I = OrderIdeal(single)
    assert rowmotion_by_toggles(single, linear_extension(single), I) == toggle(single, 0, I)

    P = rectangle(2, 2)
    from conftest import all_linear_extensions

    for order in all_linear_extensions(P):
        ext = LinearExtension(P, order)
        for I in enumerate_ideals(P):
            assert rowmotion_by_toggles(P, ext, I) == rowmotion(P, I)


def test_rowmotion_by_toggles_rejects_foreign_extension():
    P = rectangle(2, 2)
    Q = rectangle(2, 2)
    ext = linear_extension(Q)
    with pytest.raises(ValueError):
        rowmotion_by_toggles(P, ext, OrderIdeal(P))


def test_rank_toggle_and_identity_sigma():
    P = rectangle(2, 3)
    sigma = tuple(range(P.max_rank() + 1))
    step = rowmotion_sigma(P, sigma)
    for I in enumerate_ideals(P):
        assert step(I) == rowmotion(P, I)


def test_rank_toggle_composition_matches_sigma():
    P = rectangle(2, 3)
    toggles = [rank_toggle(P, i) for i in range(P.max_rank() + 1)]
    step = rowmotion_sigma(P, tuple(range(P.max_rank() + 1)))
    for I in enumerate_ideals(P):
        J = I
        for i in reversed(range(P.max_rank() + 1)):
            J = toggles[i](J)
        assert J == step(I)


def test_sigma_validation():
    P = rectangle(2, 2)
    with pytest.raises(ValueError):
        rowmotion_sigma(P, (0, 1))
    with pytest.raises(ValueError):
        rowmotion_sigma(P, (0, 1, 1))


def test_gyration_is_bijection_and_striker():
    P = rectangle(2, 2)
    ideals = enumerate_ideals(P)
    orbits = orbit_partition(gyration(P), ideals)
    assert sum(o.period for o in orbits) == len(ideals)

    S = shifted_staircase(3)
    orbits = orbit_partition(gyration(S), enumerate_ideals(S))
    for p in range(S.n):
        stat = t_signed(S, p)
        for o in orbits:
            assert sum(stat.value_on(I) for I in o) == 0


def test_every_sigma_is_bijection():
    import itertools

    P = shifted_staircase(3)
    ideals = enumerate_ideals(P)
    for sigma in itertools.permutations(range(P.max_rank() + 1)):
        orbits = orbit_partition(rowmotion_sigma(P, sigma), ideals)
        assert sum(o.period for o in orbits) == len(ideals)


def test_antichain_rowmotion():
    P = rectangle(2, 3)
    empty = Antichain(P)
    assert antichain_rowmotion(P, empty).mask == P.minimal_mask
    tops = Antichain(P, mask=P.maximal_mask)
    assert antichain_rowmotion(P, tops).members == ()

    A3 = root_poset_A(3)
    for I in enumerate_ideals(A3):
        lhs = antichain_rowmotion(A3, maximal_elements(I))
        assert lhs == maximal_elements(rowmotion(A3, I))


def test_orbit_partition_identity_and_counts():
    P = rectangle(2, 2)
    ideals = enumerate_ideals(P)
    orbits = orbit_partition(lambda I: rowmotion(P, I), ideals)
    assert sorted(o.period for o in orbits) == [2, 4]
    orbits = orbit_partition(lambda I: I, ideals)
    assert all(o.period == 1 for o in orbits)


def test_rowmotion_order_divides_twice_rank_plus_two():
    for P in (rectangle(2, 3), shifted_staircase(3), double_tailed_diamond(3)):
        ideals = enumerate_ideals(P)
        orbits = orbit_partition(lambda I: rowmotion(P, I), ideals)
        order = lcm(*(o.period for o in orbits))
        assert 2 * (rank_of(P) + 2) % order == 0


def test_antichain_rowmotion_partitions_antichains():
    P = root_poset_A(3)
    anti = enumerate_antichains(P)
    orbits = orbit_partition(lambda A: antichain_rowmotion(P, A), anti)
    assert sum(o.period for o in orbits) == len(anti)
