"""Monomial-ideal combinatorics for the cyclic (family A) quotients.

The cyclic group of order r+1 acts on the plane with weights (+1, -1),
so the monomial x^i y^j has weight (i - j) mod (r+1) and the invariant
monomials form the monoid {(i, j) : i = j mod r+1}.  Two kinds of
finite order ideals appear:

* a Staircase is the set of monomials outside a monomial ideal of the
  polynomial ring in x, y -- a Young diagram;
* a MonoidStaircase is a finite downward-closed subset of the
  invariant monoid -- the torus-fixed points of the punctual Hilbert
  scheme of the quotient surface.

A staircase whose cells split evenly (n in each weight class) carries
a representation of the framed McKay quiver satisfying the
preprojective relations; this module builds those representations.
"""

from __future__ import annotations

from .linalg import RMatrix
from .mckay import INF, DimensionVector, DynkinType, build_framed_quiver
from .reps import QuiverRepresentation


class Staircase:
    """Finite downward-closed set of lattice cells (i, j) with i, j >= 0."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        cells = tuple(sorted(set((int(i), int(j)) for i, j in cells)))
        cell_set = set(cells)
        for (i, j) in cells:
            if i < 0 or j < 0:
                raise ValueError("cell %r has a negative coordinate" % ((i, j),))
            if i > 0 and (i - 1, j) not in cell_set:
                raise ValueError("cells are not downward closed at %r" % ((i, j),))
            if j > 0 and (i, j - 1) not in cell_set:
                raise ValueError("cells are not downward closed at %r" % ((i, j),))
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("Staircase is immutable")

    @classmethod
    def from_partition(cls, heights):
        """Staircase with column i of the given height, left to right."""
        return cls((i, j) for i, h in enumerate(heights) for j in range(h))

    @property
    def colength(self):
        return len(self.cells)

    def cell_set(self):
        return set(self.cells)

    def __contains__(self, cell):
        return cell in set(self.cells)

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return "Staircase(%r)" % (list(self.cells),)

    def to_json(self):
        return {"cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, payload):
        return cls(tuple(c) for c in payload["cells"])


def _partitions(total):
    """All nonincreasing positive tuples with the given sum."""
    if total == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(total, total)


def enumerate_staircases(colength):
    """Every staircase with the given number of cells, sorted."""
    if colength < 0:
        raise ValueError("colength must be nonnegative")
    found = [Staircase.from_partition(p) for p in _partitions(colength)]
    return sorted(found, key=lambda s: s.cells)


def cell_weight(cell, r):
    i, j = cell
    return (i - j) % (r + 1)


def weight_profile(staircase, r):
    """Cell counts per weight class mod r+1 (all classes reported)."""
    counts = {w: 0 for w in range(r + 1)}
    for cell in staircase.cells:
        counts[cell_weight(cell, r)] += 1
    return counts


def regular_type_multiplicity(staircase, r):
    """n when every weight class holds exactly n cells, else None."""
    counts = weight_profile(staircase, r)
    values = set(counts.values())
    if len(values) == 1:
        return values.pop()
    return None


def enumerate_regular_fixed_points(r, n):
    """Staircases of colength n(r+1) with n cells in every weight class.

    These index the torus-fixed points of the moduli of cyclic
    equivariant ideals with regular-representation quotient.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [s for s in enumerate_staircases(n * (r + 1))
            if regular_type_multiplicity(s, r) == n]


# ---------------------------------------------------------------------------
# the invariant monoid and its order ideals

def monoid_generators(r):
    return ((1, 1), (r + 1, 0), (0, r + 1))


def in_monoid(cell, r):
    i, j = cell
    return i >= 0 and j >= 0 and (i - j) % (r + 1) == 0


class MonoidStaircase:
    """Finite downward-closed subset of the invariant monoid."""

    __slots__ = ("r", "cells")

    def __init__(self, r, cells):
        cells = tuple(sorted(set((int(i), int(j)) for i, j in cells)))
        cell_set = set(cells)
        for cell in cells:
            if not in_monoid(cell, r):
                raise ValueError("cell %r is not invariant for r=%d" % (cell, r))
            for g in monoid_generators(r):
                below = (cell[0] - g[0], cell[1] - g[1])
                if below[0] >= 0 and below[1] >= 0 and below not in cell_set:
                    raise ValueError("cells are not downward closed at %r" % (cell,))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("MonoidStaircase is immutable")

    @property
    def size(self):
        return len(self.cells)

    def __eq__(self, other):
        return (isinstance(other, MonoidStaircase) and self.r == other.r
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.r, self.cells))

    def __repr__(self):
        return "MonoidStaircase(r=%d, %r)" % (self.r, list(self.cells))

    def to_json(self):
        return {"r": self.r, "cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, payload):
        return cls(int(payload["r"]), (tuple(c) for c in payload["cells"]))


def _addable_cells(cells, r):
    """Cells whose insertion keeps the set a monoid order ideal."""
    gens = monoid_generators(r)
    if not cells:
        return [(0, 0)]
    candidates = set()
    for cell in cells:
        for g in gens:
            candidates.add((cell[0] + g[0], cell[1] + g[1]))
    candidates -= set(cells)
    good = []
    for c in sorted(candidates):
        ok = True
        for g in gens:
            below = (c[0] - g[0], c[1] - g[1])
            if below[0] >= 0 and below[1] >= 0 and below not in cells:
                ok = False
                break
        if ok:
            good.append(c)
    return good


def _monoid_ideal_levels(r, n_max):
    """Order ideals of the invariant monoid, level by level up to n_max.

    Graded breadth-first extension: each level adds one addable cell to
    every ideal of the previous level, deduplicating by the canonical
    sorted cell tuple.
    """
    levels = [{frozenset()}]
    for _ in range(n_max):
        nxt = set()
        for ideal in levels[-1]:
            for c in _addable_cells(ideal, r):
                nxt.add(ideal | {c})
        levels.append(nxt)
    return levels


def enumerate_monoid_staircases(r, n):
    """Every monoid staircase with exactly n cells, sorted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    level = _monoid_ideal_levels(r, n)[n]
    return sorted((MonoidStaircase(r, cells) for cells in level),
                  key=lambda m: m.cells)


def intersect_with_invariants(staircase, r):
    """Invariant cells of a staircase, as a monoid staircase.

    This is the fixed-point shadow of intersecting a cyclic-invariant
    ideal with the invariant subring; a staircase with n cells per
    weight class lands on an n-cell monoid staircase.
    """
    return MonoidStaircase(r, (c for c in staircase.cells if in_monoid(c, r)))


def euler_characteristic_series(r, n_max):
    """Counts of monoid staircases of each size 0..n_max."""
    levels = _monoid_ideal_levels(r, n_max)
    return [len(level) for level in levels]


def euler_series_csv(r, n_max):
    lines = ["n,chi"]
    for n, chi in enumerate(euler_characteristic_series(r, n_max)):
        lines.append("%d,%d" % (n, chi))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# representations of the framed quiver built from staircases

def arrow_roles(quiver):
    """Which unframed arrows multiply by x and which by y.

    Multiplication by x raises the weight by one, multiplication by y
    lowers it.  For rank >= 2 the role is read off the vertex labels
    mod r+1; for rank 1 both endpoints differ by 1 in both directions,
    so the first edge unit carries x forward and the second carries y
    forward.
    """
    t = quiver.dtype
    if t.family != "A":
        raise ValueError("staircase representations need family A, got %s" % t)
    r = t.rank
    roles = {}
    for arrow in quiver.arrows:
        if INF in (arrow.tail, arrow.head):
            continue
        if r == 1:
            forward_is_x = arrow.unit == 0
            roles[arrow.key] = ("x" if forward_is_x else "y") if not arrow.is_star \
                else ("y" if forward_is_x else "x")
        else:
            roles[arrow.key] = "x" if (arrow.tail + 1) % (r + 1) == arrow.head else "y"
    return roles


def _weight_bases(cells, r):
    bases = {w: [] for w in range(r + 1)}
    for cell in sorted(cells):
        bases[cell_weight(cell, r)].append(cell)
    return {w: tuple(v) for w, v in bases.items()}


def _mult_matrix(cell_set, source, target, step):
    """Multiplication by the monomial step, in the given cell bases."""
    index = {cell: k for k, cell in enumerate(target)}
    rows = len(target)
    cols = len(source)
    data = [0] * (rows * cols)
    for k, cell in enumerate(source):
        image = (cell[0] + step[0], cell[1] + step[1])
        if image in cell_set:
            data[index[image] * cols + k] = 1
    return RMatrix(rows, cols, data)


def rep_from_ideal(staircase, r, n, quiver=None):
    """Framed quiver representation carried by a regular-type staircase.

    The space at vertex w is spanned by the cells of weight w; the
    x and y multiplications populate the arrows, with one map per edge
    unit negated as needed so the preprojective residual vanishes for
    the quiver's sign convention.  The framing arrow sends the
    generator to the cell (0, 0) and the coframing arrow is zero.
    """
    if regular_type_multiplicity(staircase, r) != n:
        raise ValueError("staircase is not of regular-representation type for n=%d" % n)
    t = DynkinType("A", r)
    if quiver is None:
        quiver = build_framed_quiver(t)
    elif quiver.dtype != t:
        raise ValueError("quiver type %s does not match r=%d" % (quiver.dtype, r))
    bases = _weight_bases(staircase.cells, r)
    cell_set = set(staircase.cells)
    dims = DimensionVector({INF: 1, **{w: len(bases[w]) for w in range(r + 1)}})
    roles = arrow_roles(quiver)
    mats = {}
    for arrow in quiver.arrows:
        if INF in (arrow.tail, arrow.head):
            continue
        step = (1, 0) if roles[arrow.key] == "x" else (0, 1)
        m = _mult_matrix(cell_set, bases[arrow.tail], bases[arrow.head], step)
        if roles[arrow.key] == "y":
            # pairs the y map with its x partner so the signed products
            # cancel vertex by vertex under any epsilon convention
            partner = arrow.star_key
            if quiver.epsilon[partner] == -1:
                m = -m
        mats[arrow.key] = m
    framing = [0] * n
    if n > 0:
        framing[bases[0].index((0, 0))] = 1
    mats["inf>0#0"] = RMatrix(n, 1, framing)
    mats["inf>0#0*"] = RMatrix.zeros(1, n)
    return QuiverRepresentation(quiver, dims, mats)


def step_matrices(rep):
    """Recover the plain x and y multiplication maps from a staircase
    representation, undoing the sign normalisation.

    Returns (x_maps, y_maps) keyed by source vertex; x_maps[u] sends
    the space at u to the space at u+1 mod r+1, y_maps[u] to u-1.
    """
    roles = arrow_roles(rep.quiver)
    x_maps = {}
    y_maps = {}
    for arrow in rep.quiver.arrows:
        key = arrow.key
        if key not in roles:
            continue
        if roles[key] == "x":
            x_maps[arrow.tail] = rep.mat(key)
        else:
            m = rep.mat(key)
            if rep.quiver.epsilon[arrow.star_key] == -1:
                m = -m
            y_maps[arrow.tail] = m
    return x_maps, y_maps
