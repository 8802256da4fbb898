"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Each test prints a single PASS line when its criterion holds; any
failure surfaces as an ordinary assertion error.
"""

import random
import time
from fractions import Fraction

from oracles import brute_force_monoid_ideals

from kleinhilb.corner import (check_relations, conjugate,
                              corner_restriction, hilbert_chow,
                              is_corner_stable, wstar_vanishes)
from kleinhilb.linalg import random_invertible
from kleinhilb.mckay import DynkinType, build_framed_quiver
from kleinhilb.reps import is_cyclic_at_infinity, satisfies_relations
from kleinhilb.staircase import (enumerate_monoid_staircases,
                                 enumerate_regular_fixed_points,
                                 euler_characteristic_series,
                                 intersect_with_invariants, rep_from_ideal)
from kleinhilb.stability import classify, face_parameter, face_poset
from kleinhilb.verifier import verify_all, verify_bound, build_system, lp_max, integer_enumerate

ALL_TYPES = [DynkinType.parse(s) for s in
             ("A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8")]


def _criterion_4_range():
    for r in (1, 2, 3):
        n_values = (1, 2, 3) if r == 1 else (1, 2)
        for n in n_values:
            for s in enumerate_regular_fixed_points(r, n):
                yield r, n, s


def test_criterion_1_dimension_bound_sweep():
    start = time.time()
    sweeps = [("A", 1, (1, 2, 3)), ("A", 2, (1, 2, 3)), ("A", 3, (1, 2, 3)),
              ("A", 4, (1, 2, 3)), ("D", 4, (1, 2)), ("D", 5, (1, 2)),
              ("E", 6, (1,)), ("E", 7, (1,))]
    total = 0
    for family, rank, n_values in sweeps:
        t = DynkinType(family, rank)
        for n in n_values:
            reports = verify_all(t, n)
            assert len(reports) == 2 ** (rank + 1) - 1
            for report in reports:
                assert report.verified, (t, n, report.J, report.witnesses)
            total += len(reports)
    e8 = DynkinType("E", 8)
    e8_subsets = [frozenset({i}) for i in range(9)] + [frozenset(range(9))]
    for J in e8_subsets:
        report = verify_bound(e8, 1, J)
        assert report.verified, (J, report.witnesses)
        total += 1
    elapsed = time.time() - start
    assert elapsed < 600, "criterion 1 exceeded the 10 minute budget"
    print("ACCEPTANCE 1 PASS: %d (type, n, J) systems verified exactly in %.1fs"
          % (total, elapsed))


def test_criterion_2_integrality_gap():
    t = DynkinType("A", 1)
    for n in (1, 2, 3):
        system = build_system(t, n, {1})
        assert lp_max(system, 0) == Fraction(2 * n + 1, 2)
        points = integer_enumerate(system)
        assert max(p[0] for p in points) == n
        report = verify_bound(t, n, {1})
        assert report.lp_max_map()[0] == n + Fraction(1, 2)
        assert report.integer_max_map()[0] == n
    print("ACCEPTANCE 2 PASS: rank-1 family A gap is exactly 1/2 for n = 1..3")


def test_criterion_3_null_root_identity():
    for t in ALL_TYPES:
        q = build_framed_quiver(t)
        assert q.delta[0] == 1
        for i in t.unframed_vertices:
            acc = 0
            for (u, v, mult) in q.unframed_edges_at(i):
                acc += mult * q.delta[v if u == i else u]
            assert 2 * q.delta[i] == acc, (t, i)
    e8 = build_framed_quiver(DynkinType("E", 8))
    trivalent = [i for i in e8.unframed_vertices
                 if len(e8.unframed_edges_at(i)) == 3]
    assert trivalent == [5]
    assert e8.delta[5] == 6
    print("ACCEPTANCE 3 PASS: null-root identity exact for all types; "
          "E8 branch vertex mark is 6")


def test_criterion_4_moment_map_vanishing():
    start = time.time()
    count = 0
    for r, n, s in _criterion_4_range():
        rep = rep_from_ideal(s, r, n)
        assert satisfies_relations(rep), (r, n, s)
        assert is_cyclic_at_infinity(rep), (r, n, s)
        count += 1
    elapsed = time.time() - start
    assert elapsed < 60, "criterion 4 exceeded the 1 minute budget"
    print("ACCEPTANCE 4 PASS: residuals vanish and cyclicity holds for "
          "%d staircase representations in %.1fs" % (count, elapsed))


def test_criterion_5_fixed_point_morphism():
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            images = set()
            for s in enumerate_regular_fixed_points(r, n):
                monoid = intersect_with_invariants(s, r)
                assert monoid.size == n, (r, n, s)
                images.add(monoid.cells)
            wanted = {m.cells for m in enumerate_monoid_staircases(r, n)}
            assert images == wanted, (r, n)
    print("ACCEPTANCE 5 PASS: fixed-point shadow of the morphism is onto "
          "for r <= 3, n <= 3")


def test_criterion_6_euler_counts():
    oracle_chi_r1 = [len(brute_force_monoid_ideals(1, n)) for n in (0, 1, 2)]
    assert oracle_chi_r1 == [1, 1, 3]
    assert euler_characteristic_series(1, 2) == [1, 1, 3]
    for r in (1, 2, 3):
        series = euler_characteristic_series(r, 6)
        for n in range(7):
            assert series[n] == len(brute_force_monoid_ideals(r, n)), (r, n)
    print("ACCEPTANCE 6 PASS: enumerator matches the brute-force order-ideal "
          "oracle for r <= 3, n <= 6")


def test_criterion_7_corner_module_laws():
    count = 0
    for r, n, s in _criterion_4_range():
        t = DynkinType("A", r)
        module = corner_restriction(rep_from_ideal(s, r, n), t, n)
        report = check_relations(module, t)
        assert report.holds, (r, n, s)
        assert wstar_vanishes(module)[0], (r, n, s)
        assert is_corner_stable(module, t), (r, n, s)
        assert hilbert_chow(module) == ((0, 0, 0),) * n, (r, n, s)
        count += 1
    print("ACCEPTANCE 7 PASS: all corner laws hold for %d restricted modules"
          % count)


def test_criterion_8_poset_combinatorics():
    round_trips = 0
    for t in ALL_TYPES:
        poset = face_poset(t)
        r = t.rank
        assert poset.node_count == 2 ** (r + 1), t
        assert poset.edge_count == (r + 1) * 2 ** r, t
        for J in poset.elements:
            located = classify(face_parameter(t, 2, J))
            assert located.J == J, (t, J)
            round_trips += 1
    print("ACCEPTANCE 8 PASS: poset sizes exact; classification round-trips "
          "all %d faces" % round_trips)


def test_criterion_9_basis_change_invariance():
    rng = random.Random(20230921)
    modules = []
    for r, n, s in [(1, 2, None), (2, 2, None)]:
        staircases = enumerate_regular_fixed_points(r, n)
        t = DynkinType("A", r)
        modules.append(corner_restriction(rep_from_ideal(staircases[0], r, n), t, n))
        modules.append(corner_restriction(rep_from_ideal(staircases[-1], r, n), t, n))
    checked = 0
    for module in modules:
        stable = is_corner_stable(module)
        support = hilbert_chow(module)
        for _ in range(20):
            p = random_invertible(module.n, rng)
            moved = conjugate(module, p)
            assert is_corner_stable(moved) == stable
            assert hilbert_chow(moved) == support
            checked += 1
    print("ACCEPTANCE 9 PASS: stability and support cycles invariant under "
          "%d random basis changes" % checked)
