"""Corner modules: the two-vertex model of points on the quotient surface.

A corner module is a tuple (w, w*, A1, A2, A3): three commuting n x n
operators satisfying the surface equation f(A1, A2, A3) = 0, a framing
vector w picking out a generator, and a coframing w* that vanishes on
every module this package constructs.  Cyclic modules of this shape
model points of the punctual Hilbert scheme of the quotient surface;
restriction of a staircase-built quiver representation to the
framing-plus-trivial corner produces exactly such modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .linalg import (RMatrix, ShapeError, Subspace, block_diagonal,
                     closure_under, inverse, kernel_basis, matrix_to_strings,
                     matrix_from_strings, restrict_operator, scalar_to_str)
from .mckay import INF, dimension_vector, hypersurface
from .staircase import step_matrices


@dataclass(frozen=True)
class QPrime:
    """The two-vertex quiver shape: one arrow in, three loops."""

    vertices: tuple = (INF, 0)
    framing_arrow: str = "a"
    loops: tuple = ("a1", "a2", "a3")


@dataclass(frozen=True)
class CornerIdealK:
    """Relations cutting out the corner algebra: the surface equation on
    the loops plus the three commutators."""

    dtype: object
    f: tuple

    @property
    def relations(self):
        names = QPrime().loops
        rels = ["f(%s)" % ",".join(names)]
        for i in range(3):
            for j in range(i + 1, 3):
                rels.append("[%s,%s]" % (names[i], names[j]))
        return tuple(rels)


def corner_ideal(t):
    return CornerIdealK(t, hypersurface(t).f)


class CornerModuleQ0:
    """Module datum (w, w*, A1, A2, A3) at the cornered pair of vertices."""

    __slots__ = ("n", "w", "wstar", "ops")

    def __init__(self, n, w, wstar, ops):
        ops = tuple(ops)
        if len(ops) != 3:
            raise ValueError("expected three operators")
        for m in ops:
            if m.rows != n or m.cols != n:
                raise ShapeError("operator is %dx%d, expected %dx%d" % (m.rows, m.cols, n, n))
        if w.rows != n or w.cols != 1:
            raise ShapeError("framing vector must be %dx1" % n)
        if wstar.rows != 1 or wstar.cols != n:
            raise ShapeError("coframing must be 1x%d" % n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "wstar", wstar)
        object.__setattr__(self, "ops", ops)

    def __setattr__(self, name, value):
        raise AttributeError("CornerModuleQ0 is immutable")

    def __eq__(self, other):
        return (isinstance(other, CornerModuleQ0) and self.n == other.n
                and self.w == other.w and self.wstar == other.wstar
                and self.ops == other.ops)

    def __repr__(self):
        return "CornerModuleQ0(n=%d)" % self.n

    def to_json(self):
        return {
            "n": self.n,
            "w": [scalar_to_str(x) for x in self.w.col(0)],
            "wstar": [scalar_to_str(x) for x in self.wstar.row(0)],
            "A": [matrix_to_strings(m) for m in self.ops],
        }

    @classmethod
    def from_json(cls, payload):
        n = int(payload["n"])
        w = RMatrix.column([Fraction(str(x)) for x in payload["w"]])
        wstar = RMatrix(1, n, [Fraction(str(x)) for x in payload["wstar"]])
        ops = tuple(matrix_from_strings(rows, n, n) for rows in payload["A"])
        return cls(n, w, wstar, ops)


def _evaluate_poly(f, ops, n):
    """Evaluate a sparse 3-variable polynomial on three square matrices."""
    total = RMatrix.zeros(n, n)
    for exponents, coeff in dict(f).items():
        term = RMatrix.identity(n)
        for m, e in zip(ops, exponents):
            term = term @ m.power(e)
        total = total + term.scale(coeff)
    return total


@dataclass(frozen=True)
class RelationReport:
    """Exact residuals of the corner relations for one module."""

    commutators: tuple   # ((i, j, RMatrix), ...) for i < j
    f_residual: RMatrix

    @property
    def holds(self):
        return self.f_residual.is_zero() and all(m.is_zero() for _, _, m in self.commutators)


def check_relations(module, t):
    """Residuals of the three commutators and of f(A1, A2, A3)."""
    a = module.ops
    commutators = []
    for i in range(3):
        for j in range(i + 1, 3):
            commutators.append((i + 1, j + 1, a[i] @ a[j] - a[j] @ a[i]))
    f_residual = _evaluate_poly(hypersurface(t).f, a, module.n)
    return RelationReport(tuple(commutators), f_residual)


def _check_commuting(module):
    for i in range(3):
        for j in range(i + 1, 3):
            if not (module.ops[i] @ module.ops[j] - module.ops[j] @ module.ops[i]).is_zero():
                raise ValueError("operators %d and %d do not commute" % (i + 1, j + 1))


def is_corner_stable(module, t=None):
    """Cyclicity of the framing vector under the three operators.

    This is the stability notion for corner modules: the module is
    generated from the framing vertex.  When a type is supplied the
    surface relation is validated as well; commutativity is always
    required.
    """
    _check_commuting(module)
    if t is not None:
        report = check_relations(module, t)
        if not report.holds:
            raise ValueError("corner relations are violated")
    space = closure_under(module.ops, [module.w.col(0)], ambient=module.n)
    return space.dim == module.n


def wstar_vanishes(module):
    """Whether the coframing map is zero; names the first offender if not."""
    for j in range(module.n):
        value = module.wstar[0, j]
        if value != 0:
            return False, "wstar[0,%d] = %s" % (j, scalar_to_str(value))
    return True, None


def corner_from_monoid_staircase(ms):
    """Corner module of a torus-fixed point of the quotient Hilbert scheme.

    Basis: the monoid staircase cells.  The operators multiply by the
    three invariant generators, the framing vector is the class of 1,
    and the coframing is zero.
    """
    cells = ms.cells
    index = {cell: k for k, cell in enumerate(cells)}
    n = len(cells)
    cell_set = set(cells)
    ops = []
    r = ms.r
    for step in ((r + 1, 0), (0, r + 1), (1, 1)):
        data = [0] * (n * n)
        for k, cell in enumerate(cells):
            image = (cell[0] + step[0], cell[1] + step[1])
            if image in cell_set:
                data[index[image] * n + k] = 1
        ops.append(RMatrix(n, n, data))
    w = [0] * n
    if n > 0:
        w[index[(0, 0)]] = 1
    return CornerModuleQ0(n, RMatrix(n, 1, w), RMatrix.zeros(1, n), tuple(ops))


def corner_direct_sum(first, second):
    """Block-diagonal sum of two corner modules.

    Modules supported away from the origin are modelled this way: one
    rank-1 summand per point of the support.
    """
    n = first.n + second.n
    w = RMatrix(n, 1, list(first.w.col(0)) + list(second.w.col(0)))
    wstar = RMatrix(1, n, list(first.wstar.row(0)) + list(second.wstar.row(0)))
    ops = tuple(block_diagonal(a, b) for a, b in zip(first.ops, second.ops))
    return CornerModuleQ0(n, w, wstar, ops)


def corner_restriction(rep, t, n):
    """Restriction of a staircase representation to the corner vertices.

    The module space is the weight-zero graded piece; the operators are
    the multiplications by the three invariant generators composed from
    the representation's arrow maps; the framing vector is the class of
    1 and the coframing is zero.
    """
    if t.family != "A":
        raise ValueError("corner restriction is modelled for family A only")
    if rep.dims != dimension_vector(t, n):
        raise ValueError("input is not of regular-representation type for n=%d" % n)
    r = t.rank
    x_maps, y_maps = step_matrices(rep)
    a1 = RMatrix.identity(n)
    for u in range(r + 1):
        a1 = x_maps[u] @ a1
    a2 = y_maps[0]
    for u in range(r, 0, -1):
        a2 = y_maps[u] @ a2
    a3 = y_maps[1] @ x_maps[0]
    w = rep.mat("inf>0#0")
    wstar = rep.mat("inf>0#0*")
    return CornerModuleQ0(n, w, wstar, (a1, a2, a3))


class NonSplitSpectrumError(ValueError):
    """The joint spectrum is not rational; carries the characteristic
    polynomials as diagnostics."""

    def __init__(self, char_polys):
        self.char_polys = tuple(tuple(p) for p in char_polys)
        super().__init__("characteristic polynomial does not split over the rationals")


def characteristic_polynomial(m):
    """Monic characteristic polynomial, coefficients highest degree first.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n = m.rows
    coeffs = [Fraction(1)]
    work = RMatrix.zeros(n, n)
    for k in range(1, n + 1):
        work = m @ (work + RMatrix.identity(n).scale(coeffs[-1]))
        coeffs.append(-work.trace() / k)
    return coeffs


def _rational_roots(coeffs):
    """Split a monic rational polynomial into rational roots.

    Returns (list of (root, multiplicity), degree of the unsplit
    remainder).
    """
    poly = list(coeffs)
    roots = []

    def evaluate(p, x):
        acc = Fraction(0)
        for c in p:
            acc = acc * x + c
        return acc

    def deflate(p, root):
        out = [p[0]]
        for c in p[1:-1]:
            out.append(c + root * out[-1])
        return out

    # strip zero roots first
    zero_mult = 0
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))

    while len(poly) > 1:
        scale = 1
        for c in poly:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        integers = [int(c * scale) for c in poly]
        lead, trail = integers[0], integers[-1]
        found = None
        for p in _divisors(abs(trail)):
            for q in _divisors(abs(lead)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if evaluate(poly, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        mult = 0
        while evaluate(poly, found) == 0 and len(poly) > 1:
            poly = deflate(poly, found)
            mult += 1
        roots.append((found, mult))
    return roots, len(poly) - 1


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def hilbert_chow(module):
    """Support cycle of a corner module: the joint spectrum with
    multiplicity of the commuting triple.

    Splits the space into joint generalised eigenspaces one operator at
    a time (each generalised eigenspace is invariant under anything
    commuting with the operator that produced it).  Requires every
    characteristic polynomial to split over the rationals; raises
    NonSplitSpectrumError carrying the characteristic polynomials
    otherwise.
    """
    _check_commuting(module)
    points = []

    def split(ops, prefix, ambient_dim):
        if ambient_dim == 0:
            return
        if not ops:
            points.extend([tuple(prefix)] * ambient_dim)
            return
        head, tail = ops[0], ops[1:]
        roots, leftover = _rational_roots(characteristic_polynomial(head))
        if leftover > 0:
            raise NonSplitSpectrumError([characteristic_polynomial(m) for m in module.ops])
        for value, mult in sorted(roots):
            shifted = head - RMatrix.identity(ambient_dim).scale(value)
            basis = kernel_basis(shifted.power(mult))
            space = Subspace(ambient_dim, basis)
            restricted = [restrict_operator(m, space) for m in tail]
            split(restricted, prefix + [value], space.dim)

    split(list(module.ops), [], module.n)
    return tuple(sorted(points))


def conjugate(module, p):
    """Basis change by an invertible matrix p."""
    p_inv = inverse(p)
    ops = tuple(p @ m @ p_inv for m in module.ops)
    return CornerModuleQ0(module.n, p @ module.w, module.wstar @ p_inv, ops)
