"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`.  Matrices are stored
densely, but elimination runs on sparse dictionary rows because the matrices
that show up (adjoint maps in a Chevalley basis, stacked commutator systems)
are overwhelmingly zero.  Subspaces are always kept as the reduced row echelon
form of a spanning set, so two subspaces are equal iff their bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "RationalMatrix",
    "Subspace",
    "as_fraction",
    "rank",
    "rref",
    "kernel",
    "solve",
    "intersect",
    "span",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

SparseRow = dict  # column index -> nonzero Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use int or Fraction")
    return Fraction(value)


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: Optional[int] = None):
        data = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix: expected %d columns, got %d" % (cols, len(row)))
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _trusted(cls, data: tuple, cols: int) -> "RationalMatrix":
        m = object.__new__(cls)
        m.rows = len(data)
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        zero_row = (_ZERO,) * cols
        return cls._trusted((zero_row,) * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_sparse([{i: _ONE} for i in range(n)], n)

    @classmethod
    def from_sparse(cls, rows: Sequence[dict], cols: int) -> "RationalMatrix":
        data = []
        for r in rows:
            dense = [_ZERO] * cols
            for j, v in r.items():
                dense[j] = as_fraction(v)
            data.append(tuple(dense))
        return cls._trusted(tuple(data), cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls(zip(*columns), len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list:
        return [list(r) for r in self._data]

    def sparse_rows(self) -> list:
        return [{j: v for j, v in enumerate(r) if v} for r in self._data]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def transpose(self) -> "RationalMatrix":
        if self.rows == 0:
            return RationalMatrix.zeros(self.cols, 0)
        return RationalMatrix._trusted(tuple(zip(*self._data)), self.rows)

    T = property(transpose)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return "RationalMatrix(%dx%d: [%s])" % (self.rows, self.cols, body)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return RationalMatrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._trusted(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        return RationalMatrix._trusted(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        other_rows = other.sparse_rows()
        out = []
        for r in self._data:
            acc: dict = {}
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in other_rows[k].items():
                    acc[j] = acc.get(j, _ZERO) + a * b
            out.append(acc)
        return RationalMatrix.from_sparse(out, other.cols)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product ``self @ vector``."""
        if len(vector) != self.cols:
            raise ValueError("vector length %d != %d columns" % (len(vector), self.cols))
        nz = [(j, as_fraction(v)) for j, v in enumerate(vector) if v]
        return tuple(sum((r[j] * v for j, v in nz), _ZERO) for r in self._data)

    def vstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        data = list(self._data)
        for o in others:
            if o.cols != self.cols:
                raise ValueError("column mismatch in vstack")
            data.extend(o._data)
        return RationalMatrix._trusted(tuple(data), self.cols)

    def hstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        data = [list(r) for r in self._data]
        cols = self.cols
        for o in others:
            if o.rows != self.rows:
                raise ValueError("row mismatch in hstack")
            for acc, r in zip(data, o._data):
                acc.extend(r)
            cols += o.cols
        return RationalMatrix._trusted(tuple(tuple(r) for r in data), cols)


# ---------------------------------------------------------------------------
# elimination


def _eliminate(rows: list, ncols: int, stop_col: Optional[int] = None):
    """Gauss-Jordan on sparse rows.

    Returns ``(pivot_rows, pivot_cols)`` where the pivot rows are in reduced
    form with unit pivots.  Pivoting on ``stop_col`` and beyond is still
    performed (the caller inspects it), but columns are visited in order so
    the result is the canonical RREF.
    """
    pending = [{j: as_fraction(v) for j, v in r.items() if v} for r in rows if r]
    pending = [r for r in pending if r]
    done: list = []
    pivots: list = []
    limit = ncols if stop_col is None else stop_col + 1
    for col in range(limit):
        best = -1
        best_len = 0
        for idx, r in enumerate(pending):
            if col in r and (best < 0 or len(r) < best_len):
                best, best_len = idx, len(r)
        if best < 0:
            continue
        prow = pending.pop(best)
        inv = 1 / prow[col]
        if inv != 1:
            prow = {j: v * inv for j, v in prow.items()}
        items = [(j, v) for j, v in prow.items() if j != col]
        for group in (pending, done):
            for r in group:
                f = r.get(col)
                if f is None:
                    continue
                del r[col]
                for j, v in items:
                    nv = r.get(j, _ZERO) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
        pending = [r for r in pending if r]
        done.append(prow)
        pivots.append(col)
        if not pending:
            break
    return done, pivots


def _as_sparse_rows(m) -> list:
    if isinstance(m, RationalMatrix):
        return m.sparse_rows()
    return [dict(r) for r in m]


def rref(m: RationalMatrix) -> tuple:
    """Reduced row echelon form of ``m`` (zero rows dropped) and pivot columns."""
    done, pivots = _eliminate(m.sparse_rows(), m.cols)
    return RationalMatrix.from_sparse(done, m.cols), tuple(pivots)


def rank(m: RationalMatrix) -> int:
    """Row rank over the rationals."""
    return len(_eliminate(m.sparse_rows(), m.cols)[1])


def _kernel_from_rref(done: list, pivots: list, ncols: int) -> list:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = {f: _ONE}
        for prow, p in zip(done, pivots):
            c = prow.get(f)
            if c:
                v[p] = -c
        vecs.append(v)
    return vecs


def kernel(m: RationalMatrix) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a canonical subspace of Q^cols."""
    return kernel_sparse(m.sparse_rows(), m.cols)


def kernel_sparse(rows: list, ncols: int) -> "Subspace":
    done, pivots = _eliminate(rows, ncols)
    vecs = _kernel_from_rref(done, pivots, ncols)
    return Subspace._from_sparse_spanning(vecs, ncols)


def solve(m: RationalMatrix, b: Sequence) -> Optional[tuple]:
    """A solution of ``m x = b`` with free variables set to zero, or ``None``."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has length %d, matrix has %d rows" % (len(b), m.rows))
    rows = m.sparse_rows()
    n = m.cols
    for r, bi in zip(rows, b):
        bi = as_fraction(bi)
        if bi:
            r[n] = bi
    done, pivots = _eliminate(rows, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [_ZERO] * n
    for prow, p in zip(done, pivots):
        x[p] = prow.get(n, _ZERO)
    return tuple(x)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A linear subspace of Q^n held as the RREF of a spanning set."""

    __slots__ = ("ambient_dim", "basis", "pivots", "_rows")

    def __init__(self, ambient_dim: int, basis: RationalMatrix, pivots=None, _rows=None):
        # Callers outside this module should use span(); this trusts its input.
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots) if pivots is not None else rref(basis)[1]
        self._rows = _rows if _rows is not None else basis.sparse_rows()

    @classmethod
    def _from_sparse_spanning(cls, rows: list, n: int) -> "Subspace":
        done, pivots = _eliminate(rows, n)
        order = sorted(range(len(pivots)), key=pivots.__getitem__)
        done = [done[i] for i in order]
        pivots = [pivots[i] for i in order]
        return cls(n, RationalMatrix.from_sparse(done, n), pivots, done)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, RationalMatrix.zeros(0, n), (), [])

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, RationalMatrix.identity(n), range(n), [{i: _ONE} for i in range(n)])

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list:
        return [self.basis.row(i) for i in range(self.dim)]

    def sparse_vectors(self) -> list:
        return [dict(r) for r in self._rows]

    def reduce(self, vector) -> dict:
        """Residual of ``vector`` after subtracting its projection along the pivots."""
        if isinstance(vector, dict):
            v = {j: as_fraction(x) for j, x in vector.items() if x}
        else:
            if len(vector) != self.ambient_dim:
                raise ValueError("vector length %d != ambient dim %d" % (len(vector), self.ambient_dim))
            v = {j: as_fraction(x) for j, x in enumerate(vector) if x}
        for prow, p in zip(self._rows, self.pivots):
            f = v.get(p)
            if not f:
                continue
            for j, c in prow.items():
                nv = v.get(j, _ZERO) - f * c
                if nv:
                    v[j] = nv
                else:
                    v.pop(j, None)
        return v

    def __contains__(self, vector) -> bool:
        return not self.reduce(vector)

    def contains(self, vector) -> bool:
        return vector in self

    def coordinates(self, vector) -> Optional[tuple]:
        """Coefficients of ``vector`` in the RREF basis, or None if outside."""
        if vector not in self:
            return None
        return tuple(as_fraction(vector[p]) for p in self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(not other.reduce(r) for r in self._rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace._from_sparse_spanning(self._rows + other._rows, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def annihilator(self) -> "Subspace":
        """Vectors orthogonal (standard dot product) to every vector of the space."""
        return kernel_sparse(self._rows, self.ambient_dim)

    def __repr__(self) -> str:
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch: %d vs %d" % (u.ambient_dim, v.ambient_dim))


def span(vectors: Iterable, ambient_dim: int) -> Subspace:
    rows = []
    for v in vectors:
        if isinstance(v, dict):
            rows.append({j: as_fraction(x) for j, x in v.items() if x})
        else:
            if len(v) != ambient_dim:
                raise ValueError("vector length %d != ambient dim %d" % (len(v), ambient_dim))
            rows.append({j: as_fraction(x) for j, x in enumerate(v) if x})
    return Subspace._from_sparse_spanning(rows, ambient_dim)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """``u ∩ v`` via the kernel of the stacked annihilators."""
    _check_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim)
    if u == v:
        return u
    ann = u.annihilator()._rows + v.annihilator()._rows
    return kernel_sparse(ann, u.ambient_dim)
