"""Representations of the framed McKay quiver over exact rationals.

A representation assigns a rational matrix to every arrow of the
doubled quiver, with the shape dictated by the dimension vector at the
arrow's endpoints.  The module supplies the preprojective residuals,
submodule generation, cyclicity at the framing vertex, and the local
injectivity/surjectivity probes used when bounding dimension vectors
of stable modules.
"""

from __future__ import annotations

from collections import namedtuple

from .linalg import (RMatrix, Subspace, ShapeError, rank,
                     stack_horizontal, stack_vertical, block_diagonal,
                     matrix_to_strings, matrix_from_strings)
from .mckay import INF, DimensionVector, FramedMcKayQuiver


class QuiverRepresentation:
    """Dimension vector plus one matrix per arrow.

    The matrix attached to an arrow a has shape dims[head(a)] x
    dims[tail(a)]; missing arrows default to zero matrices.
    Representations are immutable once built.
    """

    __slots__ = ("quiver", "dims", "mats")

    def __init__(self, quiver, dims, mats=None):
        if set(dims.vertices()) != set(quiver.vertices):
            raise ValueError("dimension vector must cover exactly the quiver vertices")
        mats = dict(mats or {})
        full = {}
        for arrow in quiver.arrows:
            shape = (dims[arrow.head], dims[arrow.tail])
            m = mats.pop(arrow.key, None)
            if m is None:
                m = RMatrix.zeros(*shape)
            if (m.rows, m.cols) != shape:
                raise ShapeError("arrow %s needs a %dx%d matrix, got %dx%d"
                                 % (arrow.key, shape[0], shape[1], m.rows, m.cols))
            full[arrow.key] = m
        if mats:
            raise ValueError("unknown arrow keys: %s" % sorted(mats))
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", full)

    def __setattr__(self, name, value):
        raise AttributeError("QuiverRepresentation is immutable")

    def mat(self, arrow_key):
        return self.mats[arrow_key]

    def to_json(self):
        return {
            "quiver": self.quiver.to_json(),
            "dims": self.dims.to_json(),
            "mats": {key: matrix_to_strings(m) for key, m in sorted(self.mats.items())},
        }

    @classmethod
    def from_json(cls, payload):
        quiver = FramedMcKayQuiver.from_json(payload["quiver"])
        dims = DimensionVector.from_json(payload["dims"])
        mats = {}
        for key, rows in payload["mats"].items():
            arrow = quiver.arrow(key)
            mats[key] = matrix_from_strings(rows, dims[arrow.head], dims[arrow.tail])
        return cls(quiver, dims, mats)


def moment_residual(rep):
    """Preprojective residual at each vertex.

    The residual at vertex i is the signed sum of a a* over arrows a
    with head i; the representation satisfies the preprojective
    relations exactly when every residual vanishes.
    """
    out = {}
    for v in rep.quiver.vertices:
        total = RMatrix.zeros(rep.dims[v], rep.dims[v])
        for arrow in rep.quiver.arrows_into(v):
            sign = rep.quiver.epsilon[arrow.key]
            product = rep.mat(arrow.key) @ rep.mat(arrow.star_key)
            total = total + (product if sign == 1 else -product)
        out[v] = total
    return out


def satisfies_relations(rep):
    return all(m.is_zero() for m in moment_residual(rep).values())


def submodule_generated(rep, seeds):
    """Smallest arrow-invariant graded subspace containing the seeds.

    seeds is an iterable of (vertex, vector) pairs, each vector living
    in the space at its vertex.  Returns (DimensionVector, dict of
    vertex -> Subspace).  Arrows map vertex-homogeneous vectors to
    vertex-homogeneous vectors, so the fixpoint is computed one vertex
    space at a time.
    """
    spaces = {v: Subspace(rep.dims[v]) for v in rep.quiver.vertices}
    for vertex, vec in seeds:
        if vertex not in spaces:
            raise ValueError("unknown vertex %r" % (vertex,))
        vec = tuple(vec)
        if len(vec) != rep.dims[vertex]:
            raise ShapeError("seed at vertex %r has length %d, expected %d"
                             % (vertex, len(vec), rep.dims[vertex]))
        spaces[vertex] = spaces[vertex].extend([vec])
    changed = True
    while changed:
        changed = False
        for arrow in rep.quiver.arrows:
            m = rep.mat(arrow.key)
            target = spaces[arrow.head]
            new = []
            for vec in spaces[arrow.tail].basis:
                image = m.apply(vec)
                if not target.contains(image):
                    new.append(image)
            if new:
                spaces[arrow.head] = target.extend(new)
                changed = True
    dims = DimensionVector({v: spaces[v].dim for v in rep.quiver.vertices})
    return dims, spaces


def is_cyclic_at_infinity(rep):
    """Whether the framing generator spans the whole representation."""
    if rep.dims[INF] != 1:
        raise ValueError("cyclicity probe needs dimension 1 at the framing vertex")
    dims, _ = submodule_generated(rep, [(INF, (1,))])
    return dims == rep.dims


def vertex_simple(quiver, vertex):
    """One-dimensional space at the given vertex, zero maps everywhere."""
    if vertex not in quiver.vertices:
        raise ValueError("unknown vertex %r" % (vertex,))
    dims = DimensionVector({v: (1 if v == vertex else 0) for v in quiver.vertices})
    return QuiverRepresentation(quiver, dims)


def direct_sum(a, b):
    """Block-diagonal sum of two representations of the same quiver."""
    if a.quiver is not b.quiver and a.quiver.to_json() != b.quiver.to_json():
        raise ValueError("representations live on different quivers")
    dims = a.dims + b.dims
    mats = {key: block_diagonal(a.mat(key), b.mat(key)) for key in a.mats}
    return QuiverRepresentation(a.quiver, dims, mats)


StabilityProbe = namedtuple("StabilityProbe", ["f_injective", "g_surjective", "inequality_holds"])


def vertex_stability_probe(rep, vertex):
    """Local probe at an unframed vertex.

    f stacks all arrows out of the vertex, g stacks all arrows into it;
    the inequality reads 2*dims[vertex] <= sum of dims[tail(a)] over
    arrows a into the vertex.  For representations satisfying the
    preprojective relations, f injective together with g surjective
    forces the inequality (the two maps then form a complex through
    the middle space).
    """
    if vertex == INF:
        raise ValueError("probe is defined at unframed vertices only")
    d = rep.dims[vertex]
    outgoing = sorted(rep.quiver.arrows_out_of(vertex), key=lambda a: a.key)
    incoming = sorted(rep.quiver.arrows_into(vertex), key=lambda a: a.key)
    f = stack_vertical([rep.mat(a.key) for a in outgoing], cols=d)
    g = stack_horizontal([rep.mat(a.key) for a in incoming], rows=d)
    f_injective = rank(f) == d
    g_surjective = rank(g) == d
    neighbour_total = sum(rep.dims[a.tail] for a in incoming)
    return StabilityProbe(f_injective, g_surjective, 2 * d <= neighbour_total)
