"""Classical Lie algebras as matrices, and the explicit commuting tuples.

Block conventions follow Humphreys: ``sp_2l`` and ``so_2l`` consist of
``[[A, B], [C, -A^T]]`` with ``B, C`` symmetric (sp) or antisymmetric (so).
Basis order: A-block (for ``sl_n``: off-diagonal units and ``E_ii - E_{i+1,i+1}``
in row-major order), then B-block, then C-block, each row-major.

Matrices are kept sparse internally as ``{(row, col): Fraction}`` and turned
into :class:`RationalMatrix` at the edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chevalley import LieAlgebraStructure, LieElement, chevalley_algebra
from .exactla import RationalMatrix, Subspace, span
from . import refdata

__all__ = [
    "MatrixLieAlgebra",
    "ExamplePoint",
    "build_classical",
    "parse_algebra",
    "shape_check",
    "example_point",
    "point_labels",
    "s_prime_space",
    "s_prime_slot",
    "so_blocks",
    "so4s_x1_matrix",
    "so_constraint_bound",
    "so_centralizer_predicate",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

FAMILIES = ("sl", "sp", "so")


def _commutator(a: dict, b: dict) -> dict:
    out: dict = {}
    b_rows: dict = {}
    for (r, c), v in b.items():
        b_rows.setdefault(r, []).append((c, v))
    a_rows: dict = {}
    for (r, c), v in a.items():
        a_rows.setdefault(r, []).append((c, v))
    for (r, k), v in a.items():
        for c, w in b_rows.get(k, ()):
            out[(r, c)] = out.get((r, c), _ZERO) + v * w
    for (r, k), v in b.items():
        for c, w in a_rows.get(k, ()):
            out[(r, c)] = out.get((r, c), _ZERO) - v * w
    return {key: v for key, v in out.items() if v}


class MatrixLieAlgebra:
    """A classical Lie algebra realised by ``size x size`` matrices."""

    def __init__(self, family: str, size: int):
        if family not in FAMILIES:
            raise ValueError("unknown family %r (expected one of %s)" % (family, FAMILIES))
        if family == "sl" and size < 2:
            raise ValueError("sl_n needs n >= 2")
        if family in ("sp", "so") and (size < 2 or size % 2):
            raise ValueError("%s_n needs an even n >= 2" % family)
        if family == "so" and size < 4:
            raise ValueError("so_n needs n >= 4 here")
        self.family = family
        self.n = size
        self._basis, self._readers = _basis(family, size)
        self.dim = len(self._basis)
        self.rank = size - 1 if family == "sl" else size // 2
        self.as_structure = self._structure()
        self.as_structure.rank = self.rank
        self.as_structure.matrix_algebra = self

    @property
    def name(self) -> str:
        return "%s%d" % (self.family, self.n)

    def __repr__(self) -> str:
        return "MatrixLieAlgebra(%s, dim=%d)" % (self.name, self.dim)

    @property
    def basis(self) -> list:
        return [self.to_matrix(self._basis[i]) for i in range(self.dim)]

    def to_matrix(self, sparse: dict) -> RationalMatrix:
        n = self.n
        return RationalMatrix.from_sparse(
            [{c: v for (r, c), v in sparse.items() if r == row} for row in range(n)], n)

    def coordinates_sparse(self, sparse: dict) -> dict:
        """Basis coordinates of a matrix already known to lie in the algebra."""
        out = {}
        for idx, read in enumerate(self._readers):
            v = read(sparse)
            if v:
                out[idx] = v
        return out

    def combine(self, coords: dict) -> dict:
        out: dict = {}
        for idx, c in coords.items():
            for key, v in self._basis[idx].items():
                out[key] = out.get(key, _ZERO) + c * v
        return {k: v for k, v in out.items() if v}

    def _sparse_of(self, m) -> dict:
        if isinstance(m, dict):
            return {k: Fraction(v) for k, v in m.items() if v}
        if not isinstance(m, RationalMatrix):
            m = RationalMatrix(m)
        if m.shape != (self.n, self.n):
            raise ValueError("expected a %dx%d matrix, got %dx%d" % (self.n, self.n, *m.shape))
        return {(r, c): m[r, c] for r in range(self.n) for c in range(self.n) if m[r, c]}

    def contains(self, m) -> bool:
        s = self._sparse_of(m)
        return self.combine(self.coordinates_sparse(s)) == s

    def element(self, m) -> LieElement:
        """The algebra element with matrix ``m`` (raises if ``m`` is outside the algebra)."""
        s = self._sparse_of(m)
        coords = self.coordinates_sparse(s)
        if self.combine(coords) != s:
            raise ValueError("matrix does not lie in %s" % self.name)
        return self.as_structure.element(coords)

    def matrix(self, x: LieElement) -> RationalMatrix:
        return self.to_matrix(self.combine(x.support))

    def _structure(self) -> LieAlgebraStructure:
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                br = _commutator(self._basis[i], self._basis[j])
                if br:
                    out = self.coordinates_sparse(br)
                    table[(i, j)] = out
                    table[(j, i)] = {k: -v for k, v in out.items()}
        labels = [("m", i) for i in range(self.dim)]
        return LieAlgebraStructure(labels, table, name=self.name)


def _basis(family: str, n: int):
    basis = []
    readers = []

    def unit(r, c, v=_ONE):
        return {(r, c): v}

    if family == "sl":
        for r in range(n):
            for c in range(n):
                if r != c:
                    basis.append(unit(r, c))
                    readers.append(lambda m, r=r, c=c: m.get((r, c), _ZERO))
                elif r < n - 1:
                    basis.append({(r, r): _ONE, (r + 1, r + 1): -_ONE})
                    # coefficient of E_kk - E_{k+1,k+1} is the partial diagonal sum
                    readers.append(lambda m, r=r: sum((m.get((t, t), _ZERO) for t in range(r + 1)), _ZERO))
        return basis, readers

    l = n // 2
    sym = family == "sp"
    for r in range(l):
        for c in range(l):
            basis.append({(r, c): _ONE, (l + c, l + r): -_ONE})
            readers.append(lambda m, r=r, c=c: m.get((r, c), _ZERO))
    for r in range(l):
        for c in range(r if sym else r + 1, l):
            if r == c:
                basis.append(unit(r, l + r))
            else:
                basis.append({(r, l + c): _ONE, (c, l + r): _ONE if sym else -_ONE})
            readers.append(lambda m, r=r, c=c: m.get((r, l + c), _ZERO))
    for r in range(l):
        for c in range(r if sym else r + 1, l):
            if r == c:
                basis.append(unit(l + r, r))
            else:
                basis.append({(l + r, c): _ONE, (l + c, r): _ONE if sym else -_ONE})
            readers.append(lambda m, r=r, c=c: m.get((l + r, c), _ZERO))
    return basis, readers


@lru_cache(maxsize=None)
def build_classical(family: str, size: int) -> MatrixLieAlgebra:
    return MatrixLieAlgebra(family, size)


def parse_algebra(text: str):
    """``"sl4"``, ``"sp4"``, ``"so20"`` give matrix algebras; ``"g2"``, ``"E7"`` Chevalley ones."""
    m = re.fullmatch(r"(sl|sp|so)(\d+)", text.strip().lower())
    if m:
        return build_classical(m.group(1), int(m.group(2))).as_structure
    return chevalley_algebra(text.strip().upper())


def shape_check(family: str, A) -> bool:
    """Does the square matrix ``A`` lie in ``family`` of its own size?"""
    if not isinstance(A, RationalMatrix):
        A = RationalMatrix(A)
    rows, cols = A.shape
    if rows != cols:
        raise ValueError("matrix is not square")
    fam = family.rstrip("0123456789_n").rstrip("_") if family not in FAMILIES else family
    try:
        alg = build_classical(fam, rows)
    except ValueError as exc:
        raise ValueError("size %d does not fit family %s: %s" % (rows, family, exc)) from None
    return alg.contains(A)


# ---------------------------------------------------------------------------
# explicit points


@dataclass(frozen=True)
class ExamplePoint:
    label: str
    tuple: tuple
    m_extendable: bool
    algebra: LieAlgebraStructure

    def __post_init__(self):
        ls = self.algebra
        for i, a in enumerate(self.tuple):
            for b in self.tuple[i + 1:]:
                if ls.bracket_sparse(a.support, b.support):
                    raise ValueError("point %s does not commute" % self.label)

    def __len__(self) -> int:
        return len(self.tuple)


def _from_entries(alg: MatrixLieAlgebra, entries: dict) -> LieElement:
    """Element from 1-based ``{(row, col): value}`` entries."""
    return alg.element({(r - 1, c - 1): Fraction(v) for (r, c), v in entries.items()})


def _root_combination(ls, terms) -> LieElement:
    out = {}
    for sign, root in terms:
        i = ls.index[("x", tuple(root))]
        out[i] = out.get(i, 0) + sign
    return ls.element(out)


def so4s_x1_matrix(s: int) -> dict:
    """Sparse 0-based entries of the so_{4s} element with identity blocks."""
    out = {}
    for i in range(s):
        out[(i, s + i)] = _ONE           # (1,2) = I
        out[(i, 3 * s + i)] = _ONE       # (1,4) = I
        out[(s + i, 2 * s + i)] = -_ONE  # (2,3) = -I
        out[(3 * s + i, 2 * s + i)] = -_ONE  # (4,3) = -I
    return out


POINT_LABELS = ("sl4-guralnick", "sp4-triple", "so4s-x1", "g2-triple", "e7-orbit-0200000", "e7-h")


def point_labels() -> tuple:
    return POINT_LABELS


def _parse_point_label(label: str):
    m = re.fullmatch(r"so4s-x1(?:\((\d+)\))?", label)
    if m:
        return "so4s-x1", int(m.group(1)) if m.group(1) else None
    return label, None


def example_point(label: str, s: Optional[int] = None) -> ExamplePoint:
    """The explicit tuple named ``label``; ``so4s-x1`` takes ``s`` (or ``so4s-x1(5)``)."""
    base, s_in_label = _parse_point_label(label)
    if s_in_label is not None:
        s = s_in_label
    if base == "sl4-guralnick":
        alg = build_classical("sl", 4)
        pts = (
            _from_entries(alg, {(1, 3): 1, (2, 4): 1}),
            _from_entries(alg, {(1, 4): 1}),
            _from_entries(alg, {(2, 3): 1}),
            _from_entries(alg, {(2, 4): 1}),
        )
        return ExamplePoint(base, pts, True, alg.as_structure)
    if base == "sp4-triple":
        alg = build_classical("sp", 4)
        pts = (
            _from_entries(alg, {(1, 2): 1, (4, 3): -1}),
            _from_entries(alg, {(1, 3): 1}),
            _from_entries(alg, {(4, 2): 1}),
        )
        return ExamplePoint(base, pts, True, alg.as_structure)
    if base == "so4s-x1":
        if s is None or s < 1:
            raise ValueError("so4s-x1 needs a block size s >= 1")
        alg = build_classical("so", 4 * s)
        return ExamplePoint("so4s-x1(%d)" % s, (alg.element(so4s_x1_matrix(s)),), False, alg.as_structure)
    if base == "g2-triple":
        ls = chevalley_algebra("G2")
        pts = (
            _root_combination(ls, [(1, (0, 1)), (1, (3, 1))]),
            ls.x((2, 1)),
            ls.x((3, 2)),
        )
        return ExamplePoint(base, pts, True, ls)
    if base == "e7-orbit-0200000":
        ls = chevalley_algebra("E7")
        x = _root_combination(ls, [(1, r) for r in refdata.E7_ORBIT_REPRESENTATIVE])
        return ExamplePoint(base, (x,), False, ls)
    if base == "e7-h":
        ls = chevalley_algebra("E7")
        h = ls.element({ls.index[("h", i)]: c for i, c in enumerate(refdata.E7_NEUTRAL)})
        return ExamplePoint(base, (h,), False, ls)
    raise ValueError("unknown point label %r (known: %s)" % (label, ", ".join(POINT_LABELS)))


# ---------------------------------------------------------------------------
# S' spaces


def _slot_space(alg: MatrixLieAlgebra, generators) -> list:
    return [alg.element(g).support for g in generators]


def s_prime_slot(label: str, s: Optional[int] = None) -> Subspace:
    """One slot of S' as a subspace of the algebra (for sl4/sp4), or the per-matrix shape (so4s)."""
    base, s_in_label = _parse_point_label(label)
    s = s_in_label or s
    if base in ("sl4", "sl4-guralnick"):
        alg = build_classical("sl", 4)
        gens = [{(0, 2): 1}, {(0, 3): 1}, {(1, 2): 1}, {(1, 3): 1}]
    elif base in ("sp4", "sp4-triple"):
        alg = build_classical("sp", 4)
        gens = [{(0, 1): 1, (3, 2): -1}, {(0, 2): 1}, {(3, 1): 1}]
    elif base in ("so4s", "so4s-x1"):
        if not s:
            raise ValueError("so4s needs a block size s")
        alg = build_classical("so", 4 * s)
        gens = _so_shape_generators(s)
    else:
        raise ValueError("unknown S' label %r" % label)
    return span(_slot_space(alg, gens), alg.dim)


def _so_shape_generators(s: int) -> list:
    """Spanning matrices of ``[[0,A2,A5,A6],[0,0,-A6^T,0],[0,0,0,0],[0,0,-A2^T,0]]``."""
    gens = []

    def shape(A2, A5, A6):
        out = {}
        for (r, c), v in A2.items():
            out[(r, s + c)] = out.get((r, s + c), _ZERO) + v
            out[(3 * s + c, 2 * s + r)] = out.get((3 * s + c, 2 * s + r), _ZERO) - v
        for (r, c), v in A5.items():
            out[(r, 2 * s + c)] = out.get((r, 2 * s + c), _ZERO) + v
        for (r, c), v in A6.items():
            out[(r, 3 * s + c)] = out.get((r, 3 * s + c), _ZERO) + v
            out[(s + c, 2 * s + r)] = out.get((s + c, 2 * s + r), _ZERO) - v
        return {k: v for k, v in out.items() if v}

    # A2 free with A6 = -A2 keeps A2 + A6 = 0 symmetric.
    for r in range(s):
        for c in range(s):
            gens.append(shape({(r, c): _ONE}, {}, {(r, c): -_ONE}))
    for r in range(s):
        for c in range(r, s):
            sym = {(r, c): _ONE, (c, r): _ONE} if r != c else {(r, r): _ONE}
            gens.append(shape({}, {}, sym))
    for r in range(s):
        for c in range(r + 1, s):
            gens.append(shape({}, {(r, c): _ONE, (c, r): -_ONE}, {}))
    return gens


def s_prime_space(label: str, m: int, s: Optional[int] = None) -> Subspace:
    """S' as a linear subspace of ``(m - 1)``-tuples.

    For ``sl4`` and ``sp4`` this is the printed affine space itself.  For
    ``so4s`` (``m = 3`` only) it is the linear space of *shapes* of pairs; the
    commuting pairs inside it are cut out by at most
    :func:`so_constraint_bound` equations.
    """
    base, s_in_label = _parse_point_label(label)
    s = s_in_label or s
    if base in ("sl4", "sl4-guralnick"):
        if m < 4:
            raise ValueError("sl4 S' needs m >= 4")
    elif base in ("sp4", "sp4-triple"):
        if m < 2:
            raise ValueError("sp4 S' needs m >= 2")
    elif base in ("so4s", "so4s-x1"):
        if m != 3:
            raise ValueError("so4s S' is defined for m = 3 only")
    else:
        raise ValueError("unknown S' label %r" % label)
    slot = s_prime_slot(base, s)
    n = slot.ambient_dim
    vecs = []
    for k in range(m - 1):
        for v in slot.sparse_vectors():
            vecs.append({k * n + i: c for i, c in v.items()})
    return span(vecs, n * (m - 1))


def so_constraint_bound(s: int) -> int:
    """Independent entries of an antisymmetric s x s block: ``s(s-1)/2``."""
    return s * (s - 1) // 2


def so_blocks(M: RationalMatrix, s: int) -> dict:
    """The sixteen s x s blocks of a 4s x 4s matrix, keyed 1-based ``(i, j)``."""
    if M.shape != (4 * s, 4 * s):
        raise ValueError("expected a %dx%d matrix" % (4 * s, 4 * s))
    out = {}
    for bi in range(4):
        for bj in range(4):
            out[(bi + 1, bj + 1)] = RationalMatrix(
                [[M[bi * s + r, bj * s + c] for c in range(s)] for r in range(s)])
    return out


def so_centralizer_predicate(M: RationalMatrix, s: int) -> bool:
    """Block form of the centraliser of the so_{4s} point.

    ``[[A1, A2, A5, A6], [0, A4, -A6^T, A1+A4^T], [0, 0, A1, 0], [0, A1-A4, -A2^T, A4]]``
    with ``A1, A4, A5`` antisymmetric and ``A2 + A6`` symmetric.
    """
    b = so_blocks(M, s)
    A1, A2, A5, A6, A4 = b[(1, 1)], b[(1, 2)], b[(1, 3)], b[(1, 4)], b[(2, 2)]

    def anti(X):
        return X.transpose() == -X

    zero = RationalMatrix.zeros(s, s)
    checks = [
        anti(A1), anti(A4), anti(A5),
        (A2 + A6).transpose() == A2 + A6,
        b[(2, 1)] == zero, b[(3, 1)] == zero, b[(3, 2)] == zero, b[(3, 4)] == zero, b[(4, 1)] == zero,
        b[(2, 3)] == -A6.transpose(),
        b[(2, 4)] == A1 + A4.transpose(),
        b[(3, 3)] == A1,
        b[(4, 2)] == A1 - A4,
        b[(4, 3)] == -A2.transpose(),
        b[(4, 4)] == A4,
    ]
    return all(checks)
