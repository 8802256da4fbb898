import random

import pytest

from oracles import reachable_staircase_cells, socle_cells

from kleinhilb.linalg import RMatrix
from kleinhilb.mckay import INF, DimensionVector, DynkinType, build_framed_quiver
from kleinhilb.reps import (QuiverRepresentation, direct_sum,
                            is_cyclic_at_infinity, moment_residual,
                            satisfies_relations, submodule_generated,
                            vertex_simple, vertex_stability_probe)
from kleinhilb.staircase import (cell_weight, enumerate_regular_fixed_points,
                                 enumerate_staircases, rep_from_ideal,
                                 regular_type_multiplicity)

A2 = DynkinType("A", 2)


def test_zero_rep_residual():
    q = build_framed_quiver(A2)
    dims = DimensionVector({INF: 1, 0: 2, 1: 1, 2: 0})
    rep = QuiverRepresentation(q, dims)
    assert satisfies_relations(rep)
    assert all(m.is_zero() for m in moment_residual(rep).values())


def test_single_pair_identity_residual():
    # one arrow pair set to 1x1 identities: residual is +1 at the head
    # of the positively signed arrow and -1 at the other end
    q = build_framed_quiver(A2)
    dims = DimensionVector({INF: 0, 0: 1, 1: 1, 2: 0})
    one = RMatrix.identity(1)
    rep = QuiverRepresentation(q, dims, {"0>1#0": one, "0>1#0*": one})
    res = moment_residual(rep)
    assert q.epsilon["0>1#0"] == 1
    assert res[1] == one
    assert res[0] == -one
    assert res[2].is_zero() and res[INF].is_zero()


def test_shape_validation():
    q = build_framed_quiver(A2)
    dims = DimensionVector({INF: 1, 0: 2, 1: 1, 2: 1})
    with pytest.raises(Exception):
        QuiverRepresentation(q, dims, {"0>1#0": RMatrix.zeros(2, 2)})
    with pytest.raises(ValueError):
        QuiverRepresentation(q, dims, {"9>9#0": RMatrix.zeros(1, 1)})


def test_vertex_simple_dims():
    q = build_framed_quiver(A2)
    s0 = vertex_simple(q, 0)
    assert s0.dims.to_json() == {"inf": 0, "0": 1, "1": 0, "2": 0}
    s_inf = vertex_simple(q, INF)
    assert s_inf.dims.to_json() == {"inf": 1, "0": 0, "1": 0, "2": 0}
    both = direct_sum(vertex_simple(q, 1), vertex_simple(q, 1))
    assert both.dims[1] == 2


def test_direct_sum_dims_and_residual():
    s = enumerate_regular_fixed_points(2, 1)[0]
    rep = rep_from_ideal(s, 2, 1)
    summed = direct_sum(rep, rep)
    for v in summed.quiver.vertices:
        assert summed.dims[v] == 2 * rep.dims[v]
    assert satisfies_relations(summed)
    # sum with a zero representation leaves the matrices unchanged
    q = rep.quiver
    zero = QuiverRepresentation(q, DimensionVector({v: 0 for v in q.vertices}))
    padded = direct_sum(rep, zero)
    assert padded.dims == rep.dims
    assert all(padded.mat(k) == rep.mat(k) for k in rep.mats)


def test_submodule_full_and_empty_seeds():
    s = enumerate_regular_fixed_points(1, 2)[0]
    rep = rep_from_ideal(s, 1, 2)
    full_seeds = []
    for v in rep.quiver.vertices:
        for k in range(rep.dims[v]):
            vec = [0] * rep.dims[v]
            vec[k] = 1
            full_seeds.append((v, tuple(vec)))
    dims, _ = submodule_generated(rep, full_seeds)
    assert dims == rep.dims
    dims0, _ = submodule_generated(rep, [])
    assert all(dims0[v] == 0 for v in rep.quiver.vertices)


def test_submodule_output_is_arrow_invariant():
    rng = random.Random(11)
    for s in enumerate_regular_fixed_points(2, 2)[:4]:
        rep = rep_from_ideal(s, 2, 2)
        seed_vertex = rng.choice([0, 1, 2])
        d = rep.dims[seed_vertex]
        seed = tuple(rng.randint(-2, 2) for _ in range(d))
        dims, spaces = submodule_generated(rep, [(seed_vertex, seed)])
        for arrow in rep.quiver.arrows:
            m = rep.mat(arrow.key)
            for vec in spaces[arrow.tail].basis:
                assert spaces[arrow.head].contains(m.apply(vec))
        for v in rep.quiver.vertices:
            assert dims[v] <= rep.dims[v]


def test_cyclicity_matches_reachability_oracle():
    for r in (1, 2):
        for n in (1, 2):
            for s in enumerate_regular_fixed_points(r, n):
                rep = rep_from_ideal(s, r, n)
                expected = reachable_staircase_cells(s.cells) == set(s.cells)
                assert is_cyclic_at_infinity(rep) == expected
                assert expected  # staircases are always reachable from (0,0)


def test_cyclicity_counterexamples():
    s = enumerate_regular_fixed_points(1, 1)[0]
    rep = rep_from_ideal(s, 1, 1)
    spoiled = direct_sum(rep, vertex_simple(rep.quiver, 1))
    assert not is_cyclic_at_infinity(spoiled)
    # empty staircase: everything trivially generated
    empty = enumerate_staircases(0)[0]
    vacuous = rep_from_ideal(empty, 1, 0)
    assert is_cyclic_at_infinity(vacuous)
    with pytest.raises(ValueError):
        is_cyclic_at_infinity(vertex_simple(rep.quiver, 0))


def test_cyclic_reps_have_no_proper_invariant_cover():
    # any arrow-invariant graded subspace containing the framing
    # generator must be everything when the module is cyclic
    rng = random.Random(5)
    for s in enumerate_regular_fixed_points(2, 1):
        rep = rep_from_ideal(s, 2, 1)
        assert is_cyclic_at_infinity(rep)
        for _ in range(5):
            v = rng.choice([0, 1, 2])
            vec = tuple(rng.randint(-1, 1) for _ in range(rep.dims[v]))
            dims, _ = submodule_generated(rep, [(INF, (1,)), (v, vec)])
            assert dims == rep.dims


def test_probe_against_socle_oracle():
    # exhaustive over regular staircases of colength <= 8, r <= 3
    for r in (1, 2, 3):
        for colength in range(0, 9):
            if colength % (r + 1):
                continue
            n = colength // (r + 1)
            for s in enumerate_staircases(colength):
                if regular_type_multiplicity(s, r) != n:
                    continue
                rep = rep_from_ideal(s, r, n)
                socle_weights = {cell_weight(c, r) for c in socle_cells(s.cells)}
                for i in range(r + 1):
                    probe = vertex_stability_probe(rep, i)
                    assert probe.f_injective == (i not in socle_weights), (s, i)
                    assert probe.g_surjective
                    if probe.f_injective and probe.g_surjective:
                        assert probe.inequality_holds


def test_probe_on_vertex_simple_and_zero():
    q = build_framed_quiver(A2)
    s1 = vertex_simple(q, 1)
    probe = vertex_stability_probe(s1, 1)
    assert not probe.f_injective and not probe.g_surjective
    zero = QuiverRepresentation(q, DimensionVector({v: 0 for v in q.vertices}))
    assert vertex_stability_probe(zero, 0) == (True, True, True)
    with pytest.raises(ValueError):
        vertex_stability_probe(s1, INF)


def test_flipped_and_mixed_epsilon_conventions():
    rng = random.Random(23)
    for r in (1, 2):
        t = DynkinType("A", r)
        base = build_framed_quiver(t)
        conventions = [base.flipped_epsilon()]
        for _ in range(3):
            signs = {i: rng.choice((1, -1)) for i in range(len(base.edges))}
            conventions.append(build_framed_quiver(t, epsilon_signs=signs))
        for quiver in conventions:
            for s in enumerate_regular_fixed_points(r, 2):
                rep = rep_from_ideal(s, r, 2, quiver=quiver)
                assert satisfies_relations(rep)
                assert is_cyclic_at_infinity(rep)


def test_representation_json_round_trip():
    s = enumerate_regular_fixed_points(2, 2)[1]
    rep = rep_from_ideal(s, 2, 2)
    payload = rep.to_json()
    back = QuiverRepresentation.from_json(payload)
    assert back.dims == rep.dims
    assert all(back.mat(k) == rep.mat(k) for k in rep.mats)
