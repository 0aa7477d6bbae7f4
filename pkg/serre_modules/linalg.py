"""
Exact dense linear algebra over the rationals.

Matrices are immutable and hold ``Fraction`` entries. Subspaces are stored by
their canonical basis (reduced column-echelon form), so two subspaces are
equal exactly when their canonical bases are equal entrywise.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DimensionMismatch, InvalidParameter
from .exactnum import to_scalar

logger = logging.getLogger(__name__)


def _vector(values):
    return tuple(to_scalar(v) for v in values)


def _is_zero_vector(v):
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols matrix; ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(_vector(row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        entries = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values):
        values = _vector(values)
        n = len(values)
        zero = Fraction(0)
        return cls(n, n, tuple(tuple(values[i] if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def is_square(self):
        return self.rows == self.cols

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def is_zero(self):
        return all(not any(row) for row in self.entries)

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self):
        return Matrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def __mul__(self, scalar):
        scalar = to_scalar(scalar)
        return Matrix(self.rows, self.cols, tuple(tuple(scalar * a for a in r) for r in self.entries))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = to_scalar(scalar)
        if scalar == 0:
            raise InvalidParameter("matrix division by zero")
        return self * (1 / scalar)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            other_cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return Matrix(self.rows, other.cols, tuple(
                tuple(Fraction(sum(a * b for a, b in zip(row, col) if a and b)) for col in other_cols)
                for row in self.entries
            ))
        return self.apply(other)

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        return tuple(Fraction(sum(a * b for a, b in zip(row, v) if a and b)) for row in self.entries)

    def power(self, k):
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = self @ result
        return result

    def kron(self, other):
        """Kronecker product; the row/column index of self is the major one."""
        rows = []
        for r in self.entries:
            for s in other.entries:
                rows.append(tuple(a * b for a in r for b in s))
        return Matrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    def rank(self):
        return len(_rref([list(r) for r in self.entries])[1])

    def inverse(self):
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        augmented = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        reduced, pivots = _rref(augmented)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise InvalidParameter("matrix is singular")
        return Matrix(n, n, tuple(tuple(row[n:]) for row in reduced[:n]))

    def flatten(self):
        return tuple(a for row in self.entries for a in row)

    def max_entry(self):
        """(row, col, value) of the first entry of largest magnitude, or None if zero."""
        best = None
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if a and (best is None or abs(a) > abs(best[2])):
                    best = (i, j, a)
        return best


def hstack(matrices, rows):
    columns = []
    for m in matrices:
        columns.extend(m.columns())
    return Matrix.from_columns(columns, rows=rows)


def _rref(rows):
    """
    Reduced row-echelon form by Gauss-Jordan elimination, first nonzero pivot.

    Returns the reduced rows (zero rows dropped) and the pivot columns.
    """
    rows = [list(r) for r in rows]
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    pivot_row = 0
    for col in range(n_cols):
        for i in range(pivot_row, len(rows)):
            if rows[i][col] != 0:
                break
        else:
            continue
        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            rows[pivot_row] = [a / lead for a in rows[pivot_row]]
        pivot = rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row:
                factor = rows[r][col]
                if factor:
                    rows[r] = [a - factor * b for a, b in zip(rows[r], pivot)]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows[:pivot_row], pivots


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of Q^ambient_dim.

    ``basis`` is ambient_dim x k with linearly independent columns in reduced
    column-echelon form. Build instances with ``Subspace.span``.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [_vector(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionMismatch(f"vectors do not live in dimension {ambient_dim}")
        reduced, _ = _rref([v for v in vectors if not _is_zero_vector(v)])
        return cls(ambient_dim, Matrix.from_columns(reduced, rows=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim):
        return cls.span([], ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self):
        return self.basis.cols

    def vectors(self):
        return self.basis.columns()

    def is_zero(self):
        return self.dim == 0

    def _pivots(self):
        pivots = []
        for v in self.vectors():
            pivots.append(next(i for i, a in enumerate(v) if a))
        return pivots

    def contains_vector(self, v):
        v = list(_vector(v))
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.ambient_dim}")
        for pivot, b in zip(self._pivots(), self.vectors()):
            factor = v[pivot]
            if factor:
                v = [x - factor * y for x, y in zip(v, b)]
        return _is_zero_vector(v)

    def contains(self, other):
        _check_ambient(self, other)
        return all(self.contains_vector(v) for v in other.vectors())


def _check_ambient(*spaces):
    dims = {s.ambient_dim for s in spaces}
    if len(dims) > 1:
        raise DimensionMismatch(f"ambient dimensions differ: {sorted(dims)}")


def kernel(M):
    """Canonical basis of {v : Mv = 0}."""
    reduced, pivots = _rref([list(r) for r in M.entries])
    free = [c for c in range(M.cols) if c not in set(pivots)]
    vectors = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        vectors.append(v)
    return Subspace.span(vectors, M.cols)


def eigenspace(M, theta):
    if not M.is_square:
        raise DimensionMismatch("eigenspace of a non-square matrix")
    return kernel(M - Matrix.identity(M.rows) * to_scalar(theta))


def subspace_sum(*spaces):
    _check_ambient(*spaces)
    vectors = [v for s in spaces for v in s.vectors()]
    return Subspace.span(vectors, spaces[0].ambient_dim)


def subspace_intersection(s1, s2):
    _check_ambient(s1, s2)
    n = s1.ambient_dim
    if s1.is_zero() or s2.is_zero():
        return Subspace.zero(n)
    stacked = hstack([s1.basis, -s2.basis], rows=n)
    k1 = s1.dim
    vectors = [s1.basis.apply(v[:k1]) for v in kernel(stacked).vectors()]
    return Subspace.span(vectors, n)


def is_direct_sum(parts, ambient_dim):
    """True iff the nonzero parts sum directly to the whole space."""
    if any(p.ambient_dim != ambient_dim for p in parts):
        return False
    if any(p.is_zero() for p in parts):
        return False
    if sum(p.dim for p in parts) != ambient_dim:
        return False
    if not parts:
        return ambient_dim == 0
    return subspace_sum(*parts).dim == ambient_dim


def image(M, space):
    """M applied to a subspace."""
    if M.cols != space.ambient_dim:
        raise DimensionMismatch("matrix does not act on the subspace's ambient space")
    return Subspace.span([M.apply(v) for v in space.vectors()], M.rows)


def is_invariant(M, space):
    return space.contains(image(M, space))


class EchelonBasis:
    """
    Incrementally maintained row-echelon basis, used by the closure oracles.

    ``add`` reduces a vector against the stored rows and keeps it when it is
    independent.
    """

    def __init__(self, length):
        self.length = length
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def add(self, v):
        v = list(v)
        for pivot in sorted(self._rows):
            factor = v[pivot]
            if factor:
                row = self._rows[pivot]
                v = [x - factor * y for x, y in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is None:
            return False
        scale = v[lead]
        self._rows[lead] = [a / scale for a in v]
        return True


def _check_generators(generators):
    sizes = {(g.rows, g.cols) for g in generators}
    if len(sizes) > 1 or any(r != c for r, c in sizes):
        raise DimensionMismatch("generators must be square matrices of one size")


def cyclic_span(generators, v):
    """Smallest subspace containing v and invariant under every generator."""
    _check_generators(generators)
    v = _vector(v)
    n = len(v)
    basis = EchelonBasis(n)
    found = []
    queue = []
    if basis.add(v):
        found.append(v)
        queue.append(v)
    while queue:
        current = queue.pop(0)
        for g in generators:
            w = g.apply(current)
            if basis.add(w):
                found.append(w)
                queue.append(w)
    return Subspace.span(found, n)


def generated_algebra_dim(generators):
    """
    Dimension of the unital algebra generated by square matrices.

    Breadth-first closure of {I} under left multiplication by the generators,
    in the given order; a value of n^2 certifies that the generators act
    irreducibly.
    """
    _check_generators(generators)
    if not generators:
        return 1
    n = generators[0].rows
    if n == 0:
        return 0
    identity = Matrix.identity(n)
    basis = EchelonBasis(n * n)
    basis.add(identity.flatten())
    frontier = [identity]
    sweep = 0
    while frontier:
        sweep += 1
        next_frontier = []
        for current in frontier:
            for g in generators:
                product = g @ current
                if basis.add(product.flatten()):
                    next_frontier.append(product)
        logger.debug("algebra closure sweep %d: dim=%d", sweep, len(basis))
        frontier = next_frontier
        if len(basis) == n * n:
            break
    return len(basis)


def block_operator(spaces, scalars):
    """
    The operator acting on spaces[i] as scalars[i] times the identity.

    The spaces must form a direct sum decomposition of their ambient space.
    """
    n = spaces[0].ambient_dim
    if not is_direct_sum(spaces, n):
        raise InvalidParameter("spaces do not form a direct sum decomposition")
    columns, diagonal = [], []
    for space, value in zip(spaces, scalars):
        columns.extend(space.vectors())
        diagonal.extend([to_scalar(value)] * space.dim)
    change = Matrix.from_columns(columns, rows=n)
    return change @ Matrix.diagonal(diagonal) @ change.inverse()
