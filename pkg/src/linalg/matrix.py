"""Exact rational matrices.

Scalars are ``fractions.Fraction``. A ``Matrix`` is immutable: every operation
returns a new instance. Elimination is done fraction-free: rows are cleared to
integers and reduced over ZZ with sympy's ``DomainMatrix.rref_den``.

Flat tensor index convention used throughout the package: the basis vector
e_i ⊗ e_j of V ⊗ W has index ``i * dim(W) + j`` (0-based), which is the
convention of ``kron``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from loguru import logger
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..utils.exceptions import InconsistentSystemError, ShapeMismatchError, SingularOperatorError

Scalar = Fraction
Number = Union[int, Fraction]
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions, "num/den" strings and sympy domain elements"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(value: Fraction) -> str:
    """Canonical "num/den" form used by every file format"""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix stored row-major"""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # ------------------------------------------------------------------ builders

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        flat: List[Fraction] = []
        for row in rows:
            if len(row) != n_cols:
                raise ShapeMismatchError("ragged row list")
            flat.extend(to_scalar(x) for x in row)
        return cls(n_rows, n_cols, tuple(flat))

    @classmethod
    def from_entries(cls, rows: int, cols: int, triples: Iterable[Tuple[int, int, Number]]) -> "Matrix":
        """Sparse constructor; repeated positions accumulate"""
        flat = [ZERO] * (rows * cols)
        for i, j, value in triples:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeMismatchError(f"entry ({i}, {j}) outside {rows}x{cols}")
            flat[i * cols + j] += to_scalar(value)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            return cls(0, 0, ())
        return cls.from_rows(columns).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_entries(n, n, ((i, i, 1) for i in range(n)))

    # ------------------------------------------------------------------ access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def nonzero(self) -> Iterator[Tuple[int, int, Fraction]]:
        cols = self.cols
        for k, value in enumerate(self.entries):
            if value:
                yield k // cols, k % cols, value

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # ------------------------------------------------------------------ arithmetic

    def transpose(self) -> "Matrix":
        return Matrix.from_entries(self.cols, self.rows, ((j, i, v) for i, j, v in self.nonzero()))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other, "add")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other, "subtract")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: Number) -> "Matrix":
        c = to_scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * v for v in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        # sparse row-by-row product
        other_rows: Dict[int, List[Tuple[int, Fraction]]] = {}
        for k, j, v in other.nonzero():
            other_rows.setdefault(k, []).append((j, v))
        flat = [ZERO] * (self.rows * other.cols)
        for i, k, a in self.nonzero():
            base = i * other.cols
            for j, b in other_rows.get(k, ()):
                flat[base + j] += a * b
        return Matrix(self.rows, other.cols, tuple(flat))

    def apply(self, vector: Sequence[Number]) -> Vector:
        if len(vector) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = [ZERO] * self.rows
        for i, j, v in self.nonzero():
            if vector[j]:
                out[i] += v * vector[j]
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def hstack(self, *others: "Matrix") -> "Matrix":
        return hstack([self, *others])

    def vstack(self, *others: "Matrix") -> "Matrix":
        for other in others:
            if other.cols != self.cols:
                raise ShapeMismatchError("vstack needs equal column counts")
        entries = self.entries + tuple(e for other in others for e in other.entries)
        return Matrix(self.rows + sum(o.rows for o in others), self.cols, entries)

    def _same_shape(self, other: "Matrix", what: str):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot {what} {self.shape} and {other.shape}")

    # ------------------------------------------------------------------ exact queries

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> List[Vector]:
        return kernel_basis(self)

    def solve(self, rhs: Sequence[Number]) -> Vector:
        return solve(self, rhs)

    def inverse(self) -> "Matrix":
        return inverse(self)

    def det(self) -> Fraction:
        return det(self)

    def charpoly(self) -> List[Fraction]:
        """Coefficients of det(t·I - A), leading coefficient first"""
        if not self.is_square():
            raise ShapeMismatchError("charpoly of a non-square matrix")
        dm = DomainMatrix([[QQ(v.numerator, v.denominator) for v in self.row(i)] for i in range(self.rows)],
                          self.shape, QQ)
        return [to_scalar(c) for c in dm.charpoly()]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------------- elimination

SparseRow = Dict[int, Fraction]


def sparse_rows(m: Matrix) -> List[SparseRow]:
    out: List[SparseRow] = [dict() for _ in range(m.rows)]
    for i, j, v in m.nonzero():
        out[i][j] = v
    return out


def _integer_row(row: SparseRow) -> Dict[int, int]:
    scale = 1
    for v in row.values():
        scale = lcm(scale, Fraction(v).denominator)
    return {j: int(Fraction(v) * scale) for j, v in row.items() if v}


def _rref_den(rows: Iterable[SparseRow], n_cols: int):
    """Fraction-free reduced row echelon form.

    Each row is cleared to integers, the system is reduced over ZZ by
    ``DomainMatrix.rref_den`` and the nonzero reduced rows are returned as
    sparse integer dicts together with the common denominator and pivots.
    """
    zz_rows = {}
    for row in rows:
        int_row = _integer_row(row)
        if int_row:
            zz_rows[len(zz_rows)] = {j: ZZ(v) for j, v in int_row.items()}
    if not zz_rows or n_cols == 0:
        return [], 1, ()
    system = DomainMatrix(zz_rows, (len(zz_rows), n_cols), ZZ).to_sparse()
    reduced, den, pivots = system.rref_den()
    reduced_rows = reduced.to_sparse().rep
    out = [{j: int(v) for j, v in reduced_rows.get(r, {}).items()} for r in range(len(pivots))]
    logger.debug(f"rref_den on {len(zz_rows)}x{n_cols} system: rank {len(pivots)}")
    return out, int(den), tuple(pivots)


def sparse_rank(rows: Iterable[SparseRow], n_cols: int) -> int:
    return len(_rref_den(rows, n_cols)[2])


def sparse_kernel_basis(rows: Iterable[SparseRow], n_cols: int) -> List[Vector]:
    """Basis of the common null space of the given rows, one vector per free column"""
    reduced, den, pivots = _rref_den(rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [0] * n_cols
        v[free] = den
        for r, p in enumerate(pivots):
            v[p] = -reduced[r].get(free, 0)
        g = 0
        for x in v:
            g = gcd(g, x)
        if v[free] < 0:
            g = -g
        basis.append(tuple(Fraction(x // g) for x in v))
    return basis


def sparse_solve(rows: Sequence[SparseRow], rhs: Sequence[Number], n_cols: int) -> Vector:
    """One exact solution of the sparse system (free variables set to zero)"""
    if len(rhs) != len(rows):
        raise ShapeMismatchError(f"{len(rows)} equations but {len(rhs)} right-hand sides")
    augmented = []
    for row, b in zip(rows, rhs):
        row = dict(row)
        if b:
            row[n_cols] = to_scalar(b)
        augmented.append(row)
    reduced, den, pivots = _rref_den(augmented, n_cols + 1)
    if pivots and pivots[-1] == n_cols:
        raise InconsistentSystemError(f"{len(rows)}x{n_cols} system has no solution")
    x = [ZERO] * n_cols
    for r, p in enumerate(pivots):
        x[p] = Fraction(reduced[r].get(n_cols, 0), den)
    for row, b in zip(rows, rhs):
        if sum((v * x[j] for j, v in row.items()), ZERO) != to_scalar(b):
            raise InconsistentSystemError("substitution check failed")
    return tuple(x)


def rank(m: Matrix) -> int:
    return sparse_rank(sparse_rows(m), m.cols)


def rank_nullity(m: Matrix) -> Tuple[int, int]:
    r = rank(m)
    return r, m.cols - r


def kernel_basis(m: Matrix) -> List[Vector]:
    """Basis of {v : m·v = 0}"""
    return sparse_kernel_basis(sparse_rows(m), m.cols)


def solve(m: Matrix, rhs: Sequence[Number]) -> Vector:
    """One exact solution of m·x = rhs, verified by substitution"""
    if len(rhs) != m.rows:
        raise ShapeMismatchError(f"right-hand side of length {len(rhs)} for {m.shape} system")
    return sparse_solve(sparse_rows(m), rhs, m.cols)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ShapeMismatchError("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    rows = sparse_rows(m.hstack(Matrix.identity(n)))
    reduced, den, pivots = _rref_den(rows, 2 * n)
    if pivots != tuple(range(n)):
        raise SingularOperatorError(f"{n}x{n} matrix is singular")
    return Matrix.from_entries(
        n, n, ((i, j - n, Fraction(v, den)) for i, row in enumerate(reduced) for j, v in row.items() if j >= n)
    )


def det(m: Matrix) -> Fraction:
    if not m.is_square():
        raise ShapeMismatchError("determinant of a non-square matrix")
    if m.rows == 0:
        return ONE
    scales = 1
    int_rows = []
    for i in range(m.rows):
        row = m.row(i)
        scale = 1
        for v in row:
            if v:
                scale = lcm(scale, v.denominator)
        scales *= scale
        int_rows.append([ZZ(int(v * scale)) for v in row])
    # sympy uses Bareiss elimination for ZZ determinants
    value = DomainMatrix(int_rows, m.shape, ZZ).det()
    return Fraction(int(value), scales)


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def column_span_rank(ms: Sequence[Matrix]) -> int:
    """Dimension of the sum of the column spaces"""
    if not ms:
        return 0
    return rank(hstack(ms))


def column_basis(m: Matrix) -> List[Vector]:
    """A basis of the column span, taken from the pivot columns of m"""
    _, _, pivots = _rref_den(sparse_rows(m), m.cols)
    return [m.column(j) for j in pivots]


def hstack(ms: Sequence[Matrix]) -> Matrix:
    if not ms:
        return Matrix(0, 0, ())
    n_rows = ms[0].rows
    for m in ms:
        if m.rows != n_rows:
            raise ShapeMismatchError(f"row counts differ: {n_rows} vs {m.rows}")
    cols = sum(m.cols for m in ms)
    flat: List[Fraction] = []
    for i in range(n_rows):
        for m in ms:
            flat.extend(m.row(i))
    return Matrix(n_rows, cols, tuple(flat))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: (e_i ⊗ e_j) -> index i*dim(W) + j"""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    b_nz = list(b.nonzero())
    return Matrix.from_entries(
        rows,
        cols,
        ((i * b.rows + k, j * b.cols + l, x * y) for i, j, x in a.nonzero() for k, l, y in b_nz),
    )


def kron_all(ms: Sequence[Matrix]) -> Matrix:
    result = Matrix.identity(1)
    for m in ms:
        result = kron(result, m)
    return result


def span_basis(vectors: Sequence[Sequence[Number]]) -> List[Vector]:
    """Linearly independent subset of the given vectors spanning the same space"""
    if not vectors:
        return []
    return column_basis(Matrix.from_columns(vectors))
