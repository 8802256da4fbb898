"""Framed McKay quivers of the ADE families.

The framing vertex is the string "inf"; unframed vertices are the
integers 0..r, with 0 the vertex attached to the framing vertex.
Vertex numbering is canonical per family:

* family A: the unframed diagram is the (r+1)-cycle 0-1-...-r-0; for
  r = 1 it degenerates to a single doubled edge between 0 and 1.
* family D: 0 and 1 hang off vertex 2, the chain 2-3-...-(r-2) runs
  through the middle, and r-1 and r hang off vertex r-2.
* family E: vertices are numbered from 0 along the branch containing 0
  up to the trivalent vertex, then outward along the remaining
  branches in decreasing length order.

Each undirected edge of multiplicity m is realised by m arrow pairs
(a, a*) with opposite orientations and opposite signs; the arrow
oriented away from the framing side of the canonical vertex order
carries sign +1 by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .linalg import RMatrix, kernel_basis

INF = "inf"

FAMILIES = ("A", "D", "E")


def vertex_key(v):
    """Sort key putting the framing vertex first, then 0..r."""
    return (0, 0) if v == INF else (1, v)


def vertex_to_name(v):
    return INF if v == INF else str(v)


def vertex_from_name(name):
    return INF if name == INF else int(name)


@dataclass(frozen=True)
class DynkinType:
    """An ADE family together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        r = self.rank
        if self.family == "A" and r < 1:
            raise ValueError("family A needs rank >= 1")
        if self.family == "D" and r < 4:
            raise ValueError("family D needs rank >= 4")
        if self.family == "E" and r not in (6, 7, 8):
            raise ValueError("family E needs rank 6, 7 or 8")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in FAMILIES:
            raise ValueError("cannot parse Dynkin type from %r" % (text,))
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return "%s%d" % (self.family, self.rank)

    @property
    def unframed_vertices(self):
        return tuple(range(self.rank + 1))


class DimensionVector:
    """Nonnegative integer attached to each vertex, framing included."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = dict(values)
        for v, d in values.items():
            if not isinstance(d, int) or d < 0:
                raise ValueError("dimension at vertex %r must be a nonnegative integer" % (v,))
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("DimensionVector is immutable")

    def __getitem__(self, v):
        return self.values[v]

    def get(self, v, default=0):
        return self.values.get(v, default)

    def items(self):
        return sorted(self.values.items(), key=lambda kv: vertex_key(kv[0]))

    def vertices(self):
        return tuple(v for v, _ in self.items())

    def total(self):
        return sum(self.values.values())

    def __add__(self, other):
        keys = set(self.values) | set(other.values)
        return DimensionVector({v: self.get(v) + other.get(v) for v in keys})

    def __eq__(self, other):
        return isinstance(other, DimensionVector) and dict(self.items()) == dict(other.items())

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return "DimensionVector(%s)" % (dict(self.items()),)

    def to_json(self):
        return {vertex_to_name(v): d for v, d in self.items()}

    @classmethod
    def from_json(cls, payload):
        return cls({vertex_from_name(k): int(v) for k, v in payload.items()})


@dataclass(frozen=True)
class Arrow:
    """One oriented edge of the doubled quiver."""

    tail: object
    head: object
    edge: tuple
    unit: int
    is_star: bool

    @property
    def key(self):
        u, v = self.edge[0], self.edge[1]
        base = "%s>%s#%d" % (vertex_to_name(u), vertex_to_name(v), self.unit)
        return base + "*" if self.is_star else base

    @property
    def star_key(self):
        u, v = self.edge[0], self.edge[1]
        base = "%s>%s#%d" % (vertex_to_name(u), vertex_to_name(v), self.unit)
        return base if self.is_star else base + "*"


def _family_edges(t):
    """Unframed edges (u, v, multiplicity) in the canonical numbering."""
    r = t.rank
    if t.family == "A":
        if r == 1:
            return [(0, 1, 2)]
        return [(i, i + 1, 1) for i in range(r)] + [(0, r, 1)]
    if t.family == "D":
        edges = [(0, 2, 1), (1, 2, 1)]
        edges += [(i, i + 1, 1) for i in range(2, r - 2)]
        edges += [(r - 2, r - 1, 1), (r - 2, r, 1)]
        return edges
    if r == 6:
        return [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)]
    if r == 7:
        return [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (3, 7, 1)]
    return [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (5, 8, 1)]


def _solve_delta(t, edges):
    """Positive integer null vector of the affine adjacency system.

    Solves 2*d_i = sum of mult * d_neighbour over the unframed diagram,
    normalised to d_0 = 1.  The solution space is one-dimensional for
    every affine ADE diagram; solving instead of hardcoding removes any
    transcription risk for the E ranks.
    """
    size = t.rank + 1
    adjacency = [[0] * size for _ in range(size)]
    for u, v, mult in edges:
        adjacency[u][v] += mult
        adjacency[v][u] += mult
    cartan = RMatrix.from_rows(
        [[(2 if i == j else 0) - adjacency[i][j] for j in range(size)] for i in range(size)])
    basis = kernel_basis(cartan)
    if len(basis) != 1:
        raise ValueError("affine null space has dimension %d, expected 1" % len(basis))
    vec = basis[0]
    if vec[0] == 0:
        raise ValueError("null vector vanishes at vertex 0")
    scaled = [x / vec[0] for x in vec]
    if any(x.denominator != 1 or x <= 0 for x in scaled):
        raise ValueError("null vector is not positive integral after normalisation")
    return {i: int(scaled[i]) for i in range(size)}


class FramedMcKayQuiver:
    """Doubled framed affine ADE diagram with signs and marks."""

    __slots__ = ("dtype", "vertices", "edges", "arrows", "epsilon", "delta", "_by_key")

    def __init__(self, dtype, edges, delta, epsilon_signs=None):
        object.__setattr__(self, "dtype", dtype)
        object.__setattr__(self, "vertices", (INF,) + dtype.unframed_vertices)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "delta", dict(delta))
        arrows = []
        epsilon = {}
        for index, (u, v, mult) in enumerate(self.edges):
            forward_sign = 1 if epsilon_signs is None else epsilon_signs.get(index, 1)
            if forward_sign not in (1, -1):
                raise ValueError("epsilon signs must be +1 or -1")
            for k in range(mult):
                fwd = Arrow(u, v, (u, v), k, False)
                bwd = Arrow(v, u, (u, v), k, True)
                arrows.append(fwd)
                arrows.append(bwd)
                epsilon[fwd.key] = forward_sign
                epsilon[bwd.key] = -forward_sign
        object.__setattr__(self, "arrows", tuple(arrows))
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "_by_key", {a.key: a for a in arrows})

    def __setattr__(self, name, value):
        raise AttributeError("FramedMcKayQuiver is immutable")

    def arrow(self, key):
        return self._by_key[key]

    def arrows_into(self, v):
        return tuple(a for a in self.arrows if a.head == v)

    def arrows_out_of(self, v):
        return tuple(a for a in self.arrows if a.tail == v)

    def unframed_edges_at(self, v):
        return tuple((u, w, m) for (u, w, m) in self.edges
                     if INF not in (u, w) and v in (u, w))

    @property
    def unframed_vertices(self):
        return self.dtype.unframed_vertices

    def flipped_epsilon(self):
        """Copy with every sign reversed; still a valid convention."""
        return FramedMcKayQuiver(self.dtype, self.edges, self.delta,
                                 epsilon_signs={i: -1 for i in range(len(self.edges))})

    def to_json(self):
        ordered = sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        return {
            "type": self.dtype.family,
            "rank": self.dtype.rank,
            "edges": [[vertex_to_name(u), vertex_to_name(v), m] for (u, v, m) in ordered],
            "delta": [self.delta[i] for i in self.unframed_vertices],
        }

    def to_json_str(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, payload):
        t = DynkinType(payload["type"], int(payload["rank"]))
        quiver = build_framed_quiver(t)
        edges = sorted(((vertex_from_name(u), vertex_from_name(v), int(m))
                        for u, v, m in payload["edges"]),
                       key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        expected = sorted(quiver.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        if edges != expected:
            raise ValueError("edge list does not match the canonical %s quiver" % t)
        if payload.get("delta") is not None:
            if [quiver.delta[i] for i in quiver.unframed_vertices] != list(payload["delta"]):
                raise ValueError("delta does not match the canonical %s quiver" % t)
        return quiver


@lru_cache(maxsize=None)
def _canonical_quiver(t):
    edges = _family_edges(t)
    delta = _solve_delta(t, edges)
    return FramedMcKayQuiver(t, edges + [(INF, 0, 1)], delta)


def build_framed_quiver(t, epsilon_signs=None):
    """Framed McKay quiver of type t with the computed mark vector.

    epsilon_signs optionally overrides the +1 default on the forward
    arrow of selected edges (keyed by edge position, the framing edge
    sits at the end); any consistent choice yields the same relations
    up to rescaling the representation maps.  The default quiver is
    cached: it is immutable and safe to share.
    """
    if epsilon_signs is None:
        return _canonical_quiver(t)
    edges = _family_edges(t)
    delta = _solve_delta(t, edges)
    return FramedMcKayQuiver(t, edges + [(INF, 0, 1)], delta, dict(epsilon_signs))


def dimension_vector(t, n):
    """The dimension vector with 1 at the framing vertex and n*delta elsewhere."""
    if n < 1:
        raise ValueError("n must be at least 1")
    quiver = build_framed_quiver(t)
    values = {INF: 1}
    values.update({i: n * quiver.delta[i] for i in t.unframed_vertices})
    return DimensionVector(values)


# ---------------------------------------------------------------------------
# sparse polynomials with integer coefficients, exponent-tuple keyed

def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
            if out[e] == 0:
                del out[e]
    return out


def poly_pow(p, k, nvars):
    out = {(0,) * nvars: 1}
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_substitute(f, generators, nvars):
    """Substitute polynomials for the variables of f.

    f has len(generators) variables; the generators live in nvars
    variables.  Returns the composed polynomial.
    """
    out = {}
    for exponents, coeff in f.items():
        term = {(0,) * nvars: coeff}
        for g, e in zip(generators, exponents):
            term = poly_mul(term, poly_pow(g, e, nvars))
        out = poly_add(out, term)
    return out


def _poly_str(p, names):
    if not p:
        return "0"
    pieces = []
    for e in sorted(p, reverse=True):
        c = p[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append("%s^%d" % (name, k))
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            pieces.append(body)
        elif c == -1 and factors:
            pieces.append("-" + body)
        else:
            pieces.append("%d*%s" % (c, body) if factors else "%d" % c)
    text = " + ".join(pieces)
    return text.replace("+ -", "- ")


@dataclass(frozen=True)
class HypersurfaceData:
    """Defining polynomial of the quotient surface, plus, for family A,
    the three invariant generators it vanishes on."""

    dtype: DynkinType
    f: tuple          # sorted ((e1, e2, e3), coeff) pairs
    generators: tuple  # for family A: three 2-variable polynomials, else ()

    def f_poly(self):
        return dict(self.f)

    def generator_polys(self):
        return tuple(dict(g) for g in self.generators)

    def f_str(self):
        return _poly_str(self.f_poly(), ("z1", "z2", "z3"))

    def substitution_residual(self):
        """f composed with the generators; identically zero for family A."""
        if not self.generators:
            raise ValueError("no generators stored for family %s" % self.dtype.family)
        return poly_substitute(self.f_poly(), self.generator_polys(), 2)


def hypersurface(t):
    """Hypersurface presentation of the quotient surface for type t.

    Family A returns z1*z2 - z3^(r+1) together with the invariant
    generators (x^(r+1), y^(r+1), x*y); families D and E return a
    standard normal form with no generators (metadata only, since the
    ideal-level operations in this package are restricted to family A).
    """
    r = t.rank
    if t.family == "A":
        f = {(1, 1, 0): 1, (0, 0, r + 1): -1}
        gens = ({(r + 1, 0): 1}, {(0, r + 1): 1}, {(1, 1): 1})
    elif t.family == "D":
        f = {(r - 1, 0, 0): 1, (1, 2, 0): 1, (0, 0, 2): 1}
        gens = ()
    elif r == 6:
        f = {(3, 0, 0): 1, (0, 4, 0): 1, (0, 0, 2): 1}
        gens = ()
    elif r == 7:
        f = {(3, 0, 0): 1, (1, 3, 0): 1, (0, 0, 2): 1}
        gens = ()
    else:
        f = {(3, 0, 0): 1, (0, 5, 0): 1, (0, 0, 2): 1}
        gens = ()
    return HypersurfaceData(
        t,
        tuple(sorted(f.items())),
        tuple(tuple(sorted(g.items())) for g in gens),
    )
