"""Exact dense linear algebra over the rationals.

Every computation in this package runs over arbitrary-precision
rationals; there is no floating point anywhere.  Matrices are immutable
once constructed.  Two elimination routines are provided: a
fraction-free Bareiss elimination on a denominator-cleared integer copy
(used for ranks, keeps intermediate entries from swelling) and a
rational Gauss-Jordan pass producing the reduced row echelon form (used
for kernels, solving, and canonical subspace bases).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ShapeError(ValueError):
    """Incompatible matrix or vector shapes."""


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _lcm(a, b):
    return a // gcd(a, b) * b


class RMatrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        data = tuple(_frac(x) for x in data)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise ShapeError("%d entries do not fill a %dx%d matrix" % (len(data), rows, cols))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RMatrix is immutable")

    @classmethod
    def from_rows(cls, rows_list, cols=None):
        rows_list = [list(r) for r in rows_list]
        n_rows = len(rows_list)
        if n_rows == 0:
            if cols is None:
                cols = 0
            return cls(0, cols, ())
        n_cols = len(rows_list[0])
        if cols is not None and cols != n_cols:
            raise ShapeError("expected %d columns, found %d" % (cols, n_cols))
        if any(len(r) != n_cols for r in rows_list):
            raise ShapeError("ragged rows")
        return cls(n_rows, n_cols, [x for r in rows_list for x in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, entries):
        entries = list(entries)
        return cls(len(entries), 1, entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, RMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return "RMatrix(%d, %d, %r)" % (self.rows, self.cols, [str(x) for x in self.data])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("cannot add %dx%d and %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        return RMatrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RMatrix(self.rows, self.cols, [-a for a in self.data])

    def scale(self, c):
        c = _frac(c)
        return RMatrix(self.rows, self.cols, [c * a for a in self.data])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeError("cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.data[k * other.cols + j] for k in range(self.cols)), Fraction(0)))
        return RMatrix(self.rows, other.cols, out)

    def power(self, k):
        if self.rows != self.cols:
            raise ShapeError("power of a non-square matrix")
        result = RMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def transpose(self):
        return RMatrix(self.cols, self.rows,
                       [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of length cols."""
        vec = [_frac(x) for x in vec]
        if len(vec) != self.cols:
            raise ShapeError("vector length %d does not match %d columns" % (len(vec), self.cols))
        return tuple(sum((self.row(i)[k] * vec[k] for k in range(self.cols)), Fraction(0))
                     for i in range(self.rows))

    def is_zero(self):
        return all(x == 0 for x in self.data)

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))


def stack_vertical(blocks, cols):
    """Stack matrices with a common column count on top of each other."""
    rows = []
    for b in blocks:
        if b.cols != cols:
            raise ShapeError("block has %d columns, expected %d" % (b.cols, cols))
        rows.extend(b.to_lists())
    return RMatrix.from_rows(rows, cols=cols)


def stack_horizontal(blocks, rows):
    """Stack matrices with a common row count side by side."""
    out = [[] for _ in range(rows)]
    for b in blocks:
        if b.rows != rows:
            raise ShapeError("block has %d rows, expected %d" % (b.rows, rows))
        for i in range(rows):
            out[i].extend(b.row(i))
    total_cols = sum(b.cols for b in blocks)
    return RMatrix.from_rows(out, cols=total_cols)


def block_diagonal(a, b):
    rows = []
    for i in range(a.rows):
        rows.append(list(a.row(i)) + [Fraction(0)] * b.cols)
    for i in range(b.rows):
        rows.append([Fraction(0)] * a.cols + list(b.row(i)))
    return RMatrix.from_rows(rows, cols=a.cols + b.cols)


def rank(m):
    """Rank by fraction-free Bareiss elimination.

    Rows are first scaled to integers (clearing denominators row by row
    does not change the rank), then eliminated with the two-step
    determinant update whose divisions are exact over the integers.
    """
    work = []
    for i in range(m.rows):
        row = list(m.row(i))
        scale = 1
        for x in row:
            scale = _lcm(scale, x.denominator)
        work.append([int(x * scale) for x in row])
    n_rows, n_cols = m.rows, m.cols
    prev = 1
    piv_r = 0
    for piv_c in range(n_cols):
        pivot_row = None
        for i in range(piv_r, n_rows):
            if work[i][piv_c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != piv_r:
            work[piv_r], work[pivot_row] = work[pivot_row], work[piv_r]
        pivot = work[piv_r][piv_c]
        for i in range(piv_r + 1, n_rows):
            factor = work[i][piv_c]
            for j in range(piv_c, n_cols):
                work[i][j] = (work[i][j] * pivot - factor * work[piv_r][j]) // prev
        prev = pivot
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r


def rref(m):
    """Reduced row echelon form over the rationals.

    Returns (echelon matrix, tuple of pivot column indices).
    """
    work = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    piv_r = 0
    for piv_c in range(m.cols):
        pivot_row = None
        for i in range(piv_r, m.rows):
            if work[i][piv_c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[piv_r], work[pivot_row] = work[pivot_row], work[piv_r]
        inv = Fraction(1) / work[piv_r][piv_c]
        work[piv_r] = [x * inv for x in work[piv_r]]
        for i in range(m.rows):
            if i != piv_r and work[i][piv_c] != 0:
                factor = work[i][piv_c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == m.rows:
            break
    return RMatrix.from_rows(work, cols=m.cols), tuple(pivots)


def kernel_basis(m):
    """Exact basis of the null space {x : m x = 0}, as column vectors.

    The basis size is always cols - rank; vectors are read off the
    reduced echelon form with one free coordinate set to 1 at a time.
    """
    echelon, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -echelon[i, f]
        basis.append(tuple(vec))
    return basis


def inverse(m):
    """Inverse of a square matrix; raises ValueError when singular."""
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    augmented = RMatrix.from_rows(
        [list(m.row(i)) + list(RMatrix.identity(n).row(i)) for i in range(n)], cols=2 * n)
    echelon, pivots = rref(augmented)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return RMatrix.from_rows([list(echelon.row(i))[n:] for i in range(n)], cols=n)


class Subspace:
    """Subspace of Q^n held as reduced-echelon basis rows.

    The reduced echelon basis is canonical, so equality of subspaces is
    equality of the stored rows.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, vectors=()):
        vectors = [tuple(_frac(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ShapeError("vector length %d in ambient dimension %d" % (len(v), ambient))
        if vectors:
            echelon, pivots = rref(RMatrix.from_rows(vectors, cols=ambient))
            basis = tuple(echelon.row(i) for i in range(len(pivots)))
        else:
            basis, pivots = (), ()
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        vec = [_frac(x) for x in vec]
        if len(vec) != self.ambient:
            raise ShapeError("vector length %d in ambient dimension %d" % (len(vec), self.ambient))
        residual = list(vec)
        for row, p in zip(self.basis, self.pivots):
            factor = residual[p]
            if factor != 0:
                residual = [a - factor * b for a, b in zip(residual, row)]
        return all(x == 0 for x in residual)

    def coordinates(self, vec):
        """Coefficients of vec in the echelon basis, or None if outside."""
        if not self.contains(vec):
            return None
        vec = [_frac(x) for x in vec]
        return tuple(vec[p] for p in self.pivots)

    def extend(self, vectors):
        return Subspace(self.ambient, list(self.basis) + [tuple(v) for v in vectors])

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def closure_under(operators, seed, ambient=None):
    """Smallest subspace containing seed and invariant under the operators.

    Each operator must be a square RMatrix acting on the ambient space.
    Terminates because the dimension strictly increases until the
    fixpoint is reached.
    """
    operators = list(operators)
    if ambient is None:
        if operators:
            ambient = operators[0].cols
        else:
            seed = [tuple(v) for v in seed]
            if not seed:
                raise ShapeError("cannot infer ambient dimension from empty input")
            ambient = len(seed[0])
    for op in operators:
        if op.rows != op.cols or op.cols != ambient:
            raise ShapeError("operator is %dx%d in ambient dimension %d" % (op.rows, op.cols, ambient))
    space = Subspace(ambient, seed)
    while True:
        images = []
        for op in operators:
            for vec in space.basis:
                image = op.apply(vec)
                if not space.contains(image):
                    images.append(image)
        if not images:
            return space
        space = space.extend(images)


def restrict_operator(op, space):
    """Matrix of op on an invariant subspace, in the echelon basis.

    Raises ValueError when the subspace is not actually invariant.
    """
    cols = []
    for vec in space.basis:
        image = op.apply(vec)
        coords = space.coordinates(image)
        if coords is None:
            raise ValueError("subspace is not invariant under the operator")
        cols.append(coords)
    d = space.dim
    return RMatrix(d, d, [cols[j][i] for i in range(d) for j in range(d)])


def random_invertible(n, rng, low=-3, high=3):
    """Seeded random invertible n x n matrix with small integer entries."""
    if n == 0:
        return RMatrix(0, 0, ())
    while True:
        m = RMatrix(n, n, [rng.randint(low, high) for _ in range(n * n)])
        if rank(m) == n:
            return m


def parse_scalar(text):
    """Parse "p/q" or "p" into a Fraction."""
    return Fraction(str(text))


def scalar_to_str(x):
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    return str(_frac(x))


def matrix_to_strings(m):
    return [[scalar_to_str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_strings(rows_list, rows, cols):
    flat = []
    if len(rows_list) != rows:
        raise ShapeError("expected %d rows, found %d" % (rows, len(rows_list)))
    for r in rows_list:
        if len(r) != cols:
            raise ShapeError("expected %d columns, found %d" % (cols, len(r)))
        flat.extend(parse_scalar(x) for x in r)
    return RMatrix(rows, cols, flat)
