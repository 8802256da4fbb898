"""Stability parameters, the positive chamber, and its face poset.

A stability parameter is a rational weight per vertex.  The positive
chamber consists of parameters strictly positive on all unframed
vertices; faces of its closure are indexed by the subset J of unframed
vertices where the parameter stays strictly positive.  The
distinguished parameter attached to a face carries weight 1 on J, a
balancing negative weight at the framing vertex, and 0 elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mckay import INF, build_framed_quiver, vertex_key, vertex_to_name


class StabilityParameter:
    """Rational weight per vertex; evaluates on dimension vectors."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        object.__setattr__(self, "weights",
                           {v: Fraction(w) for v, w in dict(weights).items()})

    def __setattr__(self, name, value):
        raise AttributeError("StabilityParameter is immutable")

    def __getitem__(self, v):
        return self.weights[v]

    def vertices(self):
        return tuple(sorted(self.weights, key=vertex_key))

    def evaluate(self, dims):
        """Pairing with a dimension vector over this parameter's vertex set."""
        return sum((w * dims[v] for v, w in self.weights.items()), Fraction(0))

    def vanishes_on(self, dims):
        return self.evaluate(dims) == 0

    def __eq__(self, other):
        return isinstance(other, StabilityParameter) and self.weights == other.weights

    def __repr__(self):
        body = ", ".join("%s: %s" % (vertex_to_name(v), self.weights[v]) for v in self.vertices())
        return "StabilityParameter({%s})" % body

    def to_json(self):
        return {vertex_to_name(v): str(self.weights[v]) for v in self.vertices()}


def _check_subset(t, J):
    J = frozenset(J)
    allowed = set(t.unframed_vertices)
    if not J <= allowed:
        raise ValueError("J contains vertices outside 0..%d" % t.rank)
    return J


def face_parameter(t, n, J):
    """The distinguished parameter in the face indexed by J.

    Weight 1 on J, 0 on the other unframed vertices, and the balancing
    value at the framing vertex making it vanish on the dimension
    vector for (t, n).
    """
    J = _check_subset(t, J)
    quiver = build_framed_quiver(t)
    weights = {INF: -sum(n * quiver.delta[j] for j in J)}
    for i in t.unframed_vertices:
        weights[i] = 1 if i in J else 0
    return StabilityParameter(weights)


def corner_parameter(t, n, J):
    """Restriction of the face parameter to the framing vertex plus J."""
    J = _check_subset(t, J)
    if not J:
        raise ValueError("the cornered parameter needs a nonempty J")
    quiver = build_framed_quiver(t)
    weights = {INF: -sum(n * quiver.delta[j] for j in J)}
    weights.update({j: 1 for j in J})
    return StabilityParameter(weights)


@dataclass(frozen=True)
class FaceLocation:
    """Where a parameter sits relative to the closed positive chamber."""

    kind: str               # "chamber" | "face" | "outside"
    J: frozenset | None     # strictly positive unframed vertices, None outside

    def __str__(self):
        if self.kind == "outside":
            return "outside closure"
        label = "{%s}" % ",".join(str(j) for j in sorted(self.J))
        return "chamber" if self.kind == "chamber" else "face J=%s" % label


def classify(theta):
    """Locate a parameter relative to the closed positive chamber.

    Strictly positive on every unframed vertex lands in the open
    chamber; nonnegative everywhere lands in the face indexed by the
    strictly positive subset; a negative unframed weight falls outside.
    """
    unframed = [v for v in theta.vertices() if v != INF]
    if any(theta[v] < 0 for v in unframed):
        return FaceLocation("outside", None)
    J = frozenset(v for v in unframed if theta[v] > 0)
    if len(J) == len(unframed):
        return FaceLocation("chamber", J)
    return FaceLocation("face", J)


MAXIMAL_LABEL = "nG-Hilb(C^2)"
MINIMAL_LABEL = "Sym^n(C^2/G)"


def _face_name(J):
    return "J={%s}" % ",".join(str(j) for j in sorted(J))


class FacePoset:
    """Face poset of the closed positive chamber, ordered by J-inclusion.

    Elements are the 2^(r+1) subsets of the unframed vertices; the
    Hasse diagram joins J to J' exactly when J' is J with one vertex
    removed, oriented from the larger to the smaller subset.
    """

    __slots__ = ("dtype", "elements", "hasse_edges", "labels")

    def __init__(self, dtype):
        vertices = dtype.unframed_vertices
        subsets = [frozenset()]
        for v in vertices:
            subsets += [s | {v} for s in subsets]
        elements = tuple(sorted(subsets, key=lambda s: (len(s), sorted(s))))
        edges = []
        for J in elements:
            for v in sorted(J):
                edges.append((J, J - {v}))
        edges.sort(key=lambda e: (len(e[0]), sorted(e[0]), sorted(e[1])))
        top = frozenset(vertices)
        labels = {top: MAXIMAL_LABEL, frozenset(): MINIMAL_LABEL}
        object.__setattr__(self, "dtype", dtype)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "hasse_edges", tuple(edges))
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("FacePoset is immutable")

    @property
    def node_count(self):
        return len(self.elements)

    @property
    def edge_count(self):
        return len(self.hasse_edges)

    def grade(self, J):
        return len(J)

    def to_dot(self):
        lines = ["digraph face_poset {"]
        for J in self.elements:
            name = _face_name(J)
            label = self.labels.get(J)
            if label is not None:
                lines.append('  "%s" [rank=%d, label="%s : %s"];' % (name, len(J), name, label))
            else:
                lines.append('  "%s" [rank=%d];' % (name, len(J)))
        for J, Jp in self.hasse_edges:
            lines.append('  "%s" -> "%s";' % (_face_name(J), _face_name(Jp)))
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_poset(t):
    return FacePoset(t)


def n1_edge_collapses(J, Jp):
    """Whether a Hasse edge becomes an isomorphism of moduli for n = 1.

    Requires Jp to be J with exactly one vertex removed; the edge
    collapses precisely when the removed vertex is 0.
    """
    J = frozenset(J)
    Jp = frozenset(Jp)
    if not (Jp < J and len(J - Jp) == 1):
        raise ValueError("not a covering relation of the face poset")
    return (J ^ Jp) == {0}
