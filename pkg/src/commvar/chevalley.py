"""Lie algebras given by structure constants, and the Chevalley construction.

A :class:`LieAlgebraStructure` is a basis plus a sparse table
``(i, j) -> {k: gamma_ijk}``.  :func:`build_chevalley` fills that table for a
simple Lie algebra from its root system, with the integer constants
``N_{a,b}`` fixed by extraspecial pairs.  The default sign choice makes every
extraspecial constant negative; for G2 this reproduces the published sign
table on the nose (see :func:`calibrate_g2`).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactla import RationalMatrix, Subspace, as_fraction, kernel_sparse, span
from .rootsys import RootSystem, build_root_system, sub_system

__all__ = [
    "LieAlgebraStructure",
    "LieElement",
    "SubalgebraPackage",
    "build_chevalley",
    "chevalley_algebra",
    "bracket",
    "ad_matrix",
    "subalgebra_package",
    "rescale",
    "calibrate_g2",
    "jacobi_defect",
]

_ZERO = Fraction(0)

# Default sign of N_{a,b} on extraspecial pairs.
EXTRASPECIAL_SIGN = -1


class LieAlgebraStructure:
    """A finite-dimensional Lie algebra over Q given by structure constants."""

    def __init__(self, basis_labels: Sequence, table: dict, name: str = "",
                 root_system: Optional[RootSystem] = None):
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        self.name = name
        self.root_system = root_system
        self.index = {lab: i for i, lab in enumerate(self.basis_labels)}
        # by_first[i][j] = {k: gamma_ijk}, only nonzero entries.
        by_first = [dict() for _ in range(self.dim)]
        for (i, j), out in table.items():
            out = {k: as_fraction(c) for k, c in out.items() if c}
            if out:
                by_first[i][j] = out
        self._by_first = by_first

    def __repr__(self) -> str:
        return "LieAlgebraStructure(%s, dim=%d)" % (self.name or "?", self.dim)

    def structure(self, i: int, j: int) -> dict:
        return self._by_first[i].get(j, {})

    def table_items(self):
        for i, row in enumerate(self._by_first):
            for j, out in row.items():
                for k, c in out.items():
                    yield i, j, k, c

    def element(self, coeffs) -> "LieElement":
        if isinstance(coeffs, dict):
            dense = [_ZERO] * self.dim
            for k, v in coeffs.items():
                dense[k] = as_fraction(v)
            coeffs = dense
        return LieElement(self, tuple(as_fraction(c) for c in coeffs))

    def basis_element(self, i: int) -> "LieElement":
        return self.element({i: 1})

    def zero(self) -> "LieElement":
        return self.element({})

    def x(self, root) -> "LieElement":
        """Root vector ``x_root`` (Chevalley algebras only)."""
        return self.basis_element(self.index[("x", tuple(root))])

    def h(self, i: int) -> "LieElement":
        """Simple coroot ``h_{alpha_i}`` (0-based index)."""
        return self.basis_element(self.index[("h", i)])

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        table = self._by_first
        for i, a in x.items():
            row = table[i]
            if not row:
                continue
            for j, b in y.items():
                entry = row.get(j)
                if entry is None:
                    continue
                ab = a * b
                for k, c in entry.items():
                    out[k] = out.get(k, _ZERO) + ab * c
        return {k: v for k, v in out.items() if v}

    def ad_rows(self, x: dict) -> list:
        """Sparse rows of the matrix of ``ad x``."""
        rows = [dict() for _ in range(self.dim)]
        table = self._by_first
        for i, a in x.items():
            for j, entry in table[i].items():
                for k, c in entry.items():
                    r = rows[k]
                    v = r.get(j, _ZERO) + a * c
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
        return rows

    def label_str(self, i: int) -> str:
        lab = self.basis_labels[i]
        if isinstance(lab, tuple) and len(lab) == 2 and lab[0] == "x":
            return "x(%s)" % ",".join(str(c) for c in lab[1])
        if isinstance(lab, tuple) and len(lab) == 2 and lab[0] == "h":
            return "h%d" % (lab[1] + 1)
        return str(lab)

    def to_csv(self) -> str:
        lines = ["i,j,k,gamma"]
        for i, j, k, c in self.table_items():
            lines.append("%d,%d,%d,%s" % (i, j, k, c))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class LieElement:
    algebra: LieAlgebraStructure
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise ValueError("coefficient vector has length %d, algebra has dim %d"
                             % (len(self.coeffs), self.algebra.dim))

    @property
    def support(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same(self, other: "LieElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coeffs))

    def __add__(self, other: "LieElement") -> "LieElement":
        self._same(other)
        return LieElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._same(other)
        return LieElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LieElement":
        return LieElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, c) -> "LieElement":
        c = as_fraction(c)
        return LieElement(self.algebra, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def bracket(self, other: "LieElement") -> "LieElement":
        return bracket(self, other)

    def __repr__(self) -> str:
        terms = []
        for i, c in self.support.items():
            terms.append("%s*%s" % (c, self.algebra.label_str(i)))
        return "LieElement(%s)" % (" + ".join(terms) or "0")


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """``[x, y]`` expanded bilinearly through the structure table."""
    x._same(y)
    return x.algebra.element(x.algebra.bracket_sparse(x.support, y.support))


def ad_matrix(x: LieElement) -> RationalMatrix:
    """Matrix of ``ad x``; column ``j`` holds the coefficients of ``[x, basis_j]``."""
    ls = x.algebra
    return RationalMatrix.from_sparse(ls.ad_rows(x.support), ls.dim)


def jacobi_defect(ls: LieAlgebraStructure, i, j, k) -> dict:
    """``[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`` for basis or sparse vectors."""
    def vec(v):
        return {v: Fraction(1)} if isinstance(v, int) else v
    a, b, c = vec(i), vec(j), vec(k)
    br = ls.bracket_sparse
    out: dict = {}
    for t in (br(a, br(b, c)), br(b, br(c, a)), br(c, br(a, b))):
        for key, v in t.items():
            out[key] = out.get(key, _ZERO) + v
    return {key: v for key, v in out.items() if v}


# ---------------------------------------------------------------------------
# Chevalley construction


def _neg(r):
    return tuple(-c for c in r)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def structure_constants(rs: RootSystem, extraspecial_sign: int = EXTRASPECIAL_SIGN) -> dict:
    """All ``N_{a,b}`` with ``a + b`` a root, keyed by ``(a, b)``.

    Positive pairs are filled in order of height: the extraspecial pair of a
    root gets ``sign * (p + 1)``, every other special pair follows from the
    four-root relation, and pairs involving negative roots follow from the
    three-root relation and ``N_{-a,-b} = -N_{a,b}``.
    """
    roots = rs.root_set
    pos = rs.positive
    pidx = rs.positive_index
    norm = rs.norm
    npos: dict = {}

    def n_any(a, b) -> Fraction:
        c = _add(a, b)
        if c not in roots:
            return Fraction(0)
        a_pos, b_pos = rs.is_positive(a), rs.is_positive(b)
        if a_pos and b_pos:
            return npos[(a, b)]
        if not a_pos and not b_pos:
            return -npos[(_neg(a), _neg(b))]
        if not a_pos:
            return -n_any(b, a)
        # a > 0 > b; the triple (a, b, -c) sums to zero.
        if rs.is_positive(c):
            return -Fraction(norm(c), norm(a)) * npos[(_neg(b), c)]
        return Fraction(norm(c), norm(b)) * npos[(_neg(c), a)]

    for xi in pos[rs.rank:]:
        pairs = []
        for g in pos:
            d = tuple(x - y for x, y in zip(xi, g))
            if d in roots and rs.is_positive(d) and pidx[g] < pidx[d]:
                pairs.append((g, d))
        pairs.sort(key=lambda gd: pidx[gd[0]])
        (a, b), rest = pairs[0], pairs[1:]
        p, _ = rs.string(a, b)
        nab = Fraction(extraspecial_sign * (p + 1))
        npos[(a, b)] = nab
        npos[(b, a)] = -nab
        na, nb = _neg(a), _neg(b)
        for g, d in rest:
            t = Fraction(0)
            da = tuple(x - y for x, y in zip(d, a))
            if da in roots:
                t += n_any(d, na) * n_any(g, nb) / norm(da)
            ga = tuple(x - y for x, y in zip(g, a))
            if ga in roots:
                t += n_any(na, g) * n_any(d, nb) / norm(ga)
            ngd = norm(xi) * t / nab
            assert ngd.denominator == 1, "non-integral structure constant"
            npos[(g, d)] = ngd
            npos[(d, g)] = -ngd

    full = {}
    for a in rs.roots:
        for b in rs.roots:
            if _add(a, b) in roots:
                v = n_any(a, b)
                assert v.denominator == 1
                full[(a, b)] = int(v)
    return full


def build_chevalley(rs, extraspecial_sign: int = EXTRASPECIAL_SIGN,
                    constants: Optional[dict] = None) -> LieAlgebraStructure:
    """Chevalley basis ``x_a`` (positive roots, then negatives) followed by ``h_1..h_l``."""
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    n_const = constants if constants is not None else structure_constants(rs, extraspecial_sign)
    pos = list(rs.positive)
    labels = [("x", r) for r in pos] + [("x", _neg(r)) for r in pos] + [("h", i) for i in range(rs.rank)]
    index = {lab: i for i, lab in enumerate(labels)}
    l = rs.rank
    hidx = [index[("h", i)] for i in range(l)]
    table: dict = {}
    all_roots = [r for r in (pos + [_neg(r) for r in pos])]
    for a in all_roots:
        ia = index[("x", a)]
        for i in range(l):
            c = rs.pairing(a, rs.simple_roots[i])
            if c:
                table[(hidx[i], ia)] = {ia: c}
                table[(ia, hidx[i])] = {ia: -c}
        na = _neg(a)
        coeffs = rs.coroot_coefficients(a)
        table[(ia, index[("x", na)])] = {hidx[i]: c for i, c in enumerate(coeffs) if c}
        for b in all_roots:
            v = n_const.get((a, b))
            if v:
                table[(ia, index[("x", b)])] = {index[("x", _add(a, b))]: v}
    name = str(rs.type)
    ls = LieAlgebraStructure(labels, table, name=name, root_system=rs)
    ls.constants = n_const
    return ls


_CACHE: dict = {}


def chevalley_algebra(t, extraspecial_sign: int = EXTRASPECIAL_SIGN) -> LieAlgebraStructure:
    """Cached :func:`build_chevalley` keyed by type name and sign."""
    rs = build_root_system(t)
    key = (str(rs.type), extraspecial_sign)
    if key not in _CACHE:
        _CACHE[key] = build_chevalley(rs, extraspecial_sign)
    return _CACHE[key]


def structure_constant(ls: LieAlgebraStructure, a, b) -> Optional[int]:
    """``R_{a,b}``: ``None`` when ``b = -a`` and 0 when ``a + b`` is not a root."""
    a, b = tuple(a), tuple(b)
    if b == _neg(a):
        return None
    return ls.constants.get((a, b), 0)


def rescale(ls: LieAlgebraStructure, signs: dict) -> LieAlgebraStructure:
    """Rescale root vectors ``x_a -> signs[a] x_a`` (missing roots keep sign +1)."""
    rs = ls.root_system
    new = {}
    for (a, b), v in ls.constants.items():
        c = _add(a, b)
        new[(a, b)] = v * signs.get(a, 1) * signs.get(b, 1) * signs.get(c, 1)
    for a in rs.roots:
        if signs.get(a, 1) != signs.get(_neg(a), 1):
            raise ValueError("rescaling must treat a and -a alike to keep [x_a, x_-a] = h_a")
    return build_chevalley(rs, constants=new)


def calibrate_g2(reference: dict, extraspecial_sign: int = 1) -> list:
    """Diagonal sign changes taking the G2 table to ``reference``.

    ``reference`` maps ``(a, b)`` to ``R_{a,b}`` (``None`` for ``b = -a``).
    Returns every ``{positive root: sign}`` with ``sign(alpha) = sign(beta) = +1``
    that works; torus characters make signs on the simple roots irrelevant.
    """
    rs = build_root_system("G2")
    base = structure_constants(rs, extraspecial_sign)
    nonsimple = rs.positive[rs.rank:]
    hits = []
    for choice in itertools.product((1, -1), repeat=len(nonsimple)):
        sgn = {r: 1 for r in rs.positive[: rs.rank]}
        sgn.update(zip(nonsimple, choice))
        for r in list(sgn):
            sgn[_neg(r)] = sgn[r]
        ok = True
        for a in rs.roots:
            for b in rs.roots:
                ref = reference[(a, b)]
                if b == _neg(a):
                    ok = ref is None
                else:
                    v = base.get((a, b), 0)
                    if v:
                        v *= sgn[a] * sgn[b] * sgn[_add(a, b)]
                    ok = ref == v
                if not ok:
                    break
            if not ok:
                break
        if ok:
            hits.append({r: s for r, s in sgn.items() if rs.is_positive(r)})
    return hits


# ---------------------------------------------------------------------------
# sub-diagram package


@dataclass(frozen=True)
class SubalgebraPackage:
    delta_prime: tuple
    roots_prime: tuple
    L_prime: Subspace
    H: Subspace
    H_prime: Subspace
    H_1: Subspace


def cartan_subspace(ls: LieAlgebraStructure) -> Subspace:
    l = ls.root_system.rank
    return span([{ls.index[("h", i)]: 1} for i in range(l)], ls.dim)


def subalgebra_package(ls: LieAlgebraStructure, delta_prime: Iterable[int]) -> SubalgebraPackage:
    """``L' = H' + sum L_a`` over the sub-diagram, ``H'`` and ``H_1 = C_H(L')``."""
    rs = ls.root_system
    sub = sub_system(rs, delta_prime)
    if not sub.irreducible:
        raise ValueError("delta_prime %s spans a disconnected sub-diagram" % (sub.delta_prime,))
    dp = sub.delta_prime
    n = ls.dim
    H = cartan_subspace(ls)
    H_prime = span([{ls.index[("h", i)]: 1} for i in dp], n)
    L_prime = span([{ls.index[("h", i)]: 1} for i in dp]
                   + [{ls.index[("x", r)]: 1} for r in sub.roots], n)
    # h = sum c_i h_i is killed by alpha_j iff sum_i c_i <alpha_j, alpha_i^vee> = 0.
    pair_rows = [{i: rs.cartan[j][i] for i in range(rs.rank) if rs.cartan[j][i]} for j in dp]
    h1_coords = kernel_sparse(pair_rows, rs.rank)
    H_1 = span([{ls.index[("h", i)]: c for i, c in v.items()} for v in h1_coords.sparse_vectors()], n)

    pkg = SubalgebraPackage(dp, sub.roots, L_prime, H, H_prime, H_1)
    _check_package(ls, pkg)
    return pkg


def _check_package(ls: LieAlgebraStructure, pkg: SubalgebraPackage) -> None:
    rs = ls.root_system
    if pkg.H_1.dim + pkg.H_prime.dim != pkg.H.dim:
        raise AssertionError("dim H_1 + dim H' != dim H")
    if (pkg.H_1 & pkg.H_prime).dim != 0:
        raise AssertionError("H_1 and H' intersect")
    if pkg.H_1.dim != rs.rank - len(pkg.delta_prime):
        raise AssertionError("dim H_1 != |Delta| - |Delta'|")
    for h in pkg.H_1.sparse_vectors():
        for v in pkg.L_prime.sparse_vectors():
            if ls.bracket_sparse(h, v):
                raise AssertionError("H_1 does not centralize L'")


def random_element(ls: LieAlgebraStructure, rng: random.Random, density: float = 1.0,
                   bound: int = 3) -> LieElement:
    coeffs = {}
    for i in range(ls.dim):
        if rng.random() < density:
            coeffs[i] = rng.randint(-bound, bound)
    return ls.element(coeffs)
