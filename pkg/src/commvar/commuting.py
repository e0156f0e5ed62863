"""Centralizers, normalizers, T-spaces and dimension counts for commuting varieties.

Every space here is a :class:`~commvar.exactla.Subspace` of coefficient
vectors over the algebra's fixed basis.  Group-level objects (stabilizers,
normalizers in G) never appear; their Lie algebras are used instead.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chevalley import LieAlgebraStructure, LieElement, SubalgebraPackage
from .exactla import RationalMatrix, Subspace, as_fraction, intersect, kernel_sparse, span

__all__ = [
    "TSpaceReport",
    "RegularHCertificate",
    "centralizer",
    "joint_centralizer",
    "normalizer",
    "generated_subalgebra",
    "tspace",
    "tspace_padded",
    "find_regular_h",
    "lie_rank",
    "reg_dim",
    "orbit_dim",
    "adding_diagonals_dim",
    "ad_stability_check",
    "so_commutator_form",
    "so_pair_matrix",
    "commutation_residual",
    "restricted_centralizer",
]

_ZERO = Fraction(0)


def _sparse(x) -> dict:
    if isinstance(x, LieElement):
        return x.support
    if isinstance(x, dict):
        return {k: as_fraction(v) for k, v in x.items() if v}
    return {k: as_fraction(v) for k, v in enumerate(x) if v}


def centralizer(ls: LieAlgebraStructure, x) -> Subspace:
    """``C_L(x) = ker(ad x)``."""
    return kernel_sparse(ls.ad_rows(_sparse(x)), ls.dim)


def joint_centralizer(ls: LieAlgebraStructure, xs: Sequence) -> Subspace:
    """Common centralizer of all elements in ``xs`` (stacked kernels)."""
    rows = []
    for x in xs:
        rows.extend(ls.ad_rows(_sparse(x)))
    return kernel_sparse(rows, ls.dim)


def restricted_centralizer(ls: LieAlgebraStructure, x, sub: Subspace) -> Subspace:
    """``C_sub(x) = C_L(x) ∩ sub``."""
    return intersect(centralizer(ls, x), sub)


def normalizer(ls: LieAlgebraStructure, W: Subspace) -> Subspace:
    """``N_L(W) = {x : [x, w] in W for all w in W}``.

    With ``Q`` a basis of the annihilator of ``W`` the condition reads
    ``q . ad(w) x = 0`` for every ``q`` in ``Q`` and basis vector ``w``.
    """
    if W.ambient_dim != ls.dim:
        raise ValueError("subspace is not in this algebra")
    ann = W.annihilator().sparse_vectors()
    if not ann:
        return Subspace.full(ls.dim)
    rows = []
    for w in W.sparse_vectors():
        ad_w = ls.ad_rows(w)
        for q in ann:
            acc: dict = {}
            for k, qk in q.items():
                for j, v in ad_w[k].items():
                    acc[j] = acc.get(j, _ZERO) + qk * v
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows.append(acc)
    return kernel_sparse(rows, ls.dim)


def generated_subalgebra(ls: LieAlgebraStructure, xs: Sequence) -> Subspace:
    """Smallest bracket-closed subspace containing ``xs``."""
    S = span([_sparse(x) for x in xs], ls.dim)
    while True:
        vecs = S.sparse_vectors()
        new = [ls.bracket_sparse(a, b) for a, b in itertools.combinations(vecs, 2)]
        T = S + span([v for v in new if v], ls.dim)
        if T.dim == S.dim:
            return S
        S = T


def commutation_residual(ls: LieAlgebraStructure, point: Sequence) -> list:
    """All ``[x_r, x_l]`` with ``r < l``; the point commutes iff every entry is zero."""
    out = []
    for a, b in itertools.combinations(point, 2):
        out.append(ls.element(ls.bracket_sparse(_sparse(a), _sparse(b))))
    return out


@dataclass(frozen=True)
class TSpaceReport:
    point: tuple
    dim: int
    basis: Subspace

    @property
    def m(self) -> int:
        return len(self.point)


def tspace(ls: LieAlgebraStructure, point: Sequence) -> TSpaceReport:
    """``{(z_1..z_m) : [x_i, z_j] = [x_j, z_i]}`` at a commuting tuple ``(x_i)``."""
    point = tuple(point)
    if any(not r.is_zero() for r in commutation_residual(ls, point)):
        raise ValueError("T-space requested at a tuple that does not commute")
    n = ls.dim
    ads = [ls.ad_rows(_sparse(x)) for x in point]
    rows = []
    for i, j in itertools.combinations(range(len(point)), 2):
        # ad(x_i) z_j - ad(x_j) z_i = 0
        for k in range(n):
            r = {}
            for c, v in ads[i][k].items():
                r[j * n + c] = v
            for c, v in ads[j][k].items():
                r[i * n + c] = r.get(i * n + c, _ZERO) - v
            r = {key: v for key, v in r.items() if v}
            if r:
                rows.append(r)
    sol = kernel_sparse(rows, n * len(point))
    return TSpaceReport(point, sol.dim, sol)


def tspace_padded(ls: LieAlgebraStructure, point: Sequence, m: int) -> int:
    """T-space dimension at ``point`` followed by ``m - len(point)`` zeros."""
    point = tuple(point)
    if m < len(point):
        raise ValueError("m=%d is smaller than the tuple length %d" % (m, len(point)))
    padded = point + tuple(ls.zero() for _ in range(m - len(point)))
    return tspace(ls, padded).dim


# ---------------------------------------------------------------------------
# regular semisimple element of H_1


@dataclass(frozen=True)
class RegularHCertificate:
    h: LieElement
    coordinates: tuple
    centralizer_dim: int
    expected_dim: int
    centralizer_equals: bool

    @property
    def ok(self) -> bool:
        return self.centralizer_dim == self.expected_dim and self.centralizer_equals


def _shell(norm: int, d: int):
    """Integer vectors of max-norm exactly ``norm`` in a fixed order."""
    if norm == 0:
        yield (0,) * d
        return
    values = [0]
    for k in range(1, norm + 1):
        values += [k, -k]
    for v in itertools.product(values, repeat=d):
        if max(abs(c) for c in v) == norm:
            yield v


def default_max_norm(ls: LieAlgebraStructure) -> int:
    env = os.environ.get("COMMVAR_MAX_NORM")
    if env:
        return int(env)
    return 10 * len(ls.root_system.roots)


def find_regular_h(ls: LieAlgebraStructure, pkg: SubalgebraPackage,
                   max_norm: Optional[int] = None) -> RegularHCertificate:
    """First integer point of ``H_1`` (by max-norm) vanishing on exactly ``Phi'``."""
    rs = ls.root_system
    if max_norm is None:
        max_norm = default_max_norm(ls)
    h_index = [ls.index[("h", i)] for i in range(rs.rank)]
    basis = [[v.get(hi, _ZERO) for hi in h_index] for v in pkg.H_1.sparse_vectors()]
    prime = set(pkg.roots_prime)
    outside = [b for b in rs.positive if b not in prime]
    # beta(h_i) = <beta, alpha_i^vee>
    pair = {b: [rs.pairing(b, rs.simple_roots[i]) for i in range(rs.rank)] for b in rs.positive}
    d = len(basis)
    for norm in range(max_norm + 1):
        for coeffs in _shell(norm, d):
            c = [sum((k * row[i] for k, row in zip(coeffs, basis)), _ZERO) for i in range(rs.rank)]
            if all(sum(ci * pi for ci, pi in zip(c, pair[b])) != 0 for b in outside):
                h = ls.element({hi: ci for hi, ci in zip(h_index, c) if ci})
                C = centralizer(ls, h)
                target = pkg.H + pkg.L_prime
                expected = pkg.H.dim + pkg.L_prime.dim - pkg.H_prime.dim
                return RegularHCertificate(h, coeffs, C.dim, expected, C == target)
    raise RuntimeError("no regular element of H_1 found up to max-norm %d; "
                       "the sub-diagram package is inconsistent" % max_norm)


# ---------------------------------------------------------------------------
# dimension formulas


def lie_rank(ls: LieAlgebraStructure) -> int:
    if ls.root_system is not None:
        return ls.root_system.rank
    r = getattr(ls, "rank", None)
    if r is None:
        raise ValueError("algebra %r carries no rank information" % ls)
    return r


def reg_dim(ls, m: int) -> int:
    """``dim L + (m - 1) rank L``: dimension of the regular component of C_m(L)."""
    if m < 1:
        raise ValueError("m must be positive")
    if isinstance(ls, LieAlgebraStructure):
        return ls.dim + (m - 1) * lie_rank(ls)
    dim, rank = ls
    return dim + (m - 1) * rank


def orbit_dim(dim_Gp: int, dim_Sp, dim_centralizer: int):
    """``dim G' + dim S' - dim C_{L'}(x_1)`` for ``C' = G' . ({x_1} x S')``."""
    return dim_Gp + dim_Sp - dim_centralizer


def adding_diagonals_dim(dim_Cp: int, dim_G: int, dim_Gp: int, m: int, delta_sizes) -> int:
    """``dim C' + dim G - dim G' + (m - 1)(|Delta| - |Delta'|)``."""
    n_delta, n_delta_prime = delta_sizes
    return dim_Cp + dim_G - dim_Gp + (m - 1) * (n_delta - n_delta_prime)


def ad_stability_check(ls: LieAlgebraStructure, W: Subspace, stab: Subspace) -> bool:
    """True iff ``[c, w]`` lies in ``W`` for all basis vectors ``c`` of ``stab``, ``w`` of ``W``."""
    if W.ambient_dim != stab.ambient_dim or W.ambient_dim != ls.dim:
        raise ValueError("subspaces must live in the same algebra")
    for c in stab.sparse_vectors():
        for w in W.sparse_vectors():
            if W.reduce(ls.bracket_sparse(c, w)):
                return False
    return True


# ---------------------------------------------------------------------------
# the so_{4s} pair shape


def _check_so_blocks(s: int, blocks) -> tuple:
    A2, A5, A6 = blocks
    for M in blocks:
        if not isinstance(M, RationalMatrix) or M.shape != (s, s):
            raise ValueError("blocks must be %dx%d RationalMatrix instances" % (s, s))
    if A5.transpose() != -A5:
        raise ValueError("A5 block must be antisymmetric")
    S = A2 + A6
    if S.transpose() != S:
        raise ValueError("A2 + A6 must be symmetric")
    return A2, A5, A6


def so_pair_matrix(s: int, blocks) -> RationalMatrix:
    """The 4s x 4s matrix with blocks (1,2)=A2, (1,3)=A5, (1,4)=A6, (2,3)=-A6^T, (4,3)=-A2^T."""
    A2, A5, A6 = _check_so_blocks(s, blocks)
    full = [[_ZERO] * (4 * s) for _ in range(4 * s)]

    def put(bi, bj, M):
        for r in range(s):
            for c in range(s):
                full[bi * s + r][bj * s + c] = M[r, c]

    put(0, 1, A2)
    put(0, 2, A5)
    put(0, 3, A6)
    put(1, 2, -A6.transpose())
    put(3, 2, -A2.transpose())
    return RationalMatrix(full)


def so_commutator_form(s: int, a_blocks, b_blocks) -> RationalMatrix:
    """Commutator of two S'-shaped matrices via its closed block form.

    Only the (1,3) block survives:
    ``-A2 B6^T - A6 B2^T + B2 A6^T + B6 A2^T``.
    """
    A2, A5, A6 = _check_so_blocks(s, a_blocks)
    B2, B5, B6 = _check_so_blocks(s, b_blocks)
    block = (-(A2 @ B6.transpose()) - (A6 @ B2.transpose())
             + (B2 @ A6.transpose()) + (B6 @ A2.transpose()))
    full = [[_ZERO] * (4 * s) for _ in range(4 * s)]
    for r in range(s):
        for c in range(s):
            full[r][2 * s + c] = block[r, c]
    return RationalMatrix(full)
