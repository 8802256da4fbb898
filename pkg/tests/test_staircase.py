import pytest

from oracles import brute_force_monoid_ideals, partition_count

from kleinhilb.mckay import DynkinType, build_framed_quiver
from kleinhilb.reps import is_cyclic_at_infinity, satisfies_relations
from kleinhilb.staircase import (MonoidStaircase, Staircase,
                                 enumerate_monoid_staircases,
                                 enumerate_regular_fixed_points,
                                 enumerate_staircases,
                                 euler_characteristic_series,
                                 euler_series_csv, intersect_with_invariants,
                                 rep_from_ideal, regular_type_multiplicity,
                                 weight_profile)

# frozen from the brute-force order-ideal oracle (see oracles.py)
FROZEN_CHI = {
    1: [1, 1, 3, 5, 9, 14, 24],
    2: [1, 1, 3, 6, 11, 18, 31],
    3: [1, 1, 3, 6, 12, 20, 35],
}


def test_staircase_validation():
    Staircase([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        Staircase([(1, 0)])                 # missing (0, 0)
    with pytest.raises(ValueError):
        Staircase([(0, 0), (1, 1)])         # missing (1, 0) and (0, 1)
    with pytest.raises(ValueError):
        Staircase([(-1, 0), (0, 0)])


def test_enumerate_staircases_counts():
    for n in range(13):
        assert len(enumerate_staircases(n)) == partition_count(n), n
    listed = enumerate_staircases(4)
    assert len(set(listed)) == 5            # duplicate-free
    assert listed == sorted(listed, key=lambda s: s.cells)


def test_weight_profile_examples():
    square = Staircase([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert weight_profile(square, 1) == {0: 2, 1: 2}
    assert regular_type_multiplicity(square, 1) == 2
    column = Staircase([(0, 0), (0, 1)])
    assert weight_profile(column, 1) == {0: 1, 1: 1}
    single = Staircase([(0, 0)])
    assert weight_profile(single, 2) == {0: 1, 1: 0, 2: 0}
    assert regular_type_multiplicity(single, 2) is None


def test_regular_fixed_points():
    fps = enumerate_regular_fixed_points(1, 1)
    assert [s.cells for s in fps] == [((0, 0), (0, 1)), ((0, 0), (1, 0))]
    assert len(enumerate_regular_fixed_points(1, 0)) == 1
    assert len(enumerate_regular_fixed_points(2, 1)) == 3


def test_monoid_staircase_validation():
    MonoidStaircase(1, [(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        MonoidStaircase(1, [(0, 0), (1, 0)])      # not invariant
    with pytest.raises(ValueError):
        MonoidStaircase(1, [(0, 0), (2, 2)])      # missing (1, 1) and (2, 0)
    with pytest.raises(ValueError):
        MonoidStaircase(1, [(1, 1)])              # missing (0, 0)


def test_enumerate_monoid_staircases_small():
    assert [m.cells for m in enumerate_monoid_staircases(1, 1)] == [((0, 0),)]
    two = enumerate_monoid_staircases(1, 2)
    assert len(two) == 3
    atoms = {m.cells[1] for m in two}
    assert atoms == {(1, 1), (2, 0), (0, 2)}
    assert len(enumerate_monoid_staircases(2, 0)) == 1
    assert len(enumerate_monoid_staircases(2, 2)) == 3


def test_monoid_enumerator_matches_bruteforce_oracle():
    for r in (1, 2, 3):
        for n in range(7):
            expected = brute_force_monoid_ideals(r, n)
            got = {frozenset(m.cells) for m in enumerate_monoid_staircases(r, n)}
            assert got == expected, (r, n)


def test_euler_series_frozen_and_csv():
    for r, chi in FROZEN_CHI.items():
        assert euler_characteristic_series(r, 6) == chi
    assert euler_characteristic_series(1, 2) == [1, 1, 3]
    csv = euler_series_csv(1, 2)
    assert csv == "n,chi\n0,1\n1,1\n2,3\n"


def test_intersect_examples():
    assert intersect_with_invariants(Staircase([(0, 0), (1, 0)]), 1).cells == ((0, 0),)
    square = Staircase([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert intersect_with_invariants(square, 1).cells == ((0, 0), (1, 1))
    assert intersect_with_invariants(Staircase([]), 1).cells == ()


def test_intersect_cell_count_on_regular_staircases():
    for r in (1, 2, 3):
        for n in (1, 2):
            for s in enumerate_regular_fixed_points(r, n):
                assert intersect_with_invariants(s, r).size == n


def test_fixed_point_surjectivity():
    # every n-cell monoid staircase arises from some regular staircase
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            hit = {intersect_with_invariants(s, r).cells
                   for s in enumerate_regular_fixed_points(r, n)}
            wanted = {m.cells for m in enumerate_monoid_staircases(r, n)}
            assert wanted <= hit, (r, n)
            assert wanted == hit


def test_rep_from_ideal_examples():
    rep = rep_from_ideal(Staircase([(0, 0), (1, 0)]), 1, 1)
    assert rep.dims.to_json() == {"inf": 1, "0": 1, "1": 1}
    assert not rep.mat("0>1#0").is_zero()     # multiplication by x is 1 -> x
    assert satisfies_relations(rep)

    square = Staircase([(0, 0), (1, 0), (0, 1), (1, 1)])
    rep = rep_from_ideal(square, 1, 2)
    assert rep.dims.to_json() == {"inf": 1, "0": 2, "1": 2}
    assert is_cyclic_at_infinity(rep)

    hook = Staircase([(0, 0), (1, 0), (0, 1)])
    rep = rep_from_ideal(hook, 2, 1)
    assert rep.dims.to_json() == {"inf": 1, "0": 1, "1": 1, "2": 1}

    with pytest.raises(ValueError):
        rep_from_ideal(Staircase([(0, 0)]), 1, 1)
    with pytest.raises(ValueError):
        rep_from_ideal(square, 1, 1)
    with pytest.raises(ValueError):
        rep_from_ideal(square, 1, 2, quiver=build_framed_quiver(DynkinType("A", 2)))


def test_rep_from_ideal_moment_and_cyclicity_sweep():
    for r in (1, 2, 3):
        for n in (0, 1, 2):
            for s in enumerate_regular_fixed_points(r, n):
                rep = rep_from_ideal(s, r, n)
                assert satisfies_relations(rep), (r, n, s)
                assert is_cyclic_at_infinity(rep), (r, n, s)


def test_staircase_json():
    s = Staircase([(0, 0), (1, 0), (0, 1)])
    assert s.to_json() == {"cells": [[0, 0], [0, 1], [1, 0]]}
    assert Staircase.from_json(s.to_json()) == s
    m = intersect_with_invariants(s, 2)
    assert MonoidStaircase.from_json(m.to_json()) == m
