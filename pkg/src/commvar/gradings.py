"""sl2-triples, the integer grading by ``ad h``, and the E7 dimension certificate."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import refdata
from .chevalley import LieAlgebraStructure, LieElement, chevalley_algebra, rescale
from .commuting import centralizer, reg_dim
from .exactla import RationalMatrix, Subspace, intersect, kernel_sparse, solve, span

__all__ = [
    "Sl2Triple",
    "GradingReport",
    "sl2_complete",
    "grade_by",
    "graded_centralizer_dims",
    "grading_compatible",
    "CertificateStage",
    "E7Certificate",
    "e7_reducibility_certificate",
    "PrintedBasisReport",
    "e7_printed_basis_check",
    "SoThreshold",
    "so_reducibility_threshold",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Sl2Triple:
    x: LieElement
    h: LieElement
    y: LieElement

    def relations_hold(self) -> bool:
        x, h, y = self.x, self.h, self.y
        return h.bracket(x) == 2 * x and h.bracket(y) == -2 * y and x.bracket(y) == h


def sl2_complete(ls: LieAlgebraStructure, x: LieElement, h: LieElement) -> Sl2Triple:
    """Find ``y`` with ``[x, y] = h`` and ``[h, y] = -2y`` given ``[h, x] = 2x``."""
    if h.bracket(x) != 2 * x:
        raise ValueError("[h, x] != 2x; h is not a neutral element for x")
    n = ls.dim
    rows = ls.ad_rows(x.support)
    for k, r in enumerate(ls.ad_rows(h.support)):
        r = dict(r)
        r[k] = r.get(k, _ZERO) + 2
        rows.append({j: v for j, v in r.items() if v})
    rhs = list(h.coeffs) + [_ZERO] * n
    y = solve(RationalMatrix.from_sparse(rows, n), rhs)
    if y is None:
        raise ValueError("no y completes (x, h) to an sl2-triple; the neutral element or the "
                         "structure-constant sign convention is wrong and needs manual investigation")
    triple = Sl2Triple(x, h, ls.element(y))
    assert triple.relations_hold()
    return triple


@dataclass(frozen=True)
class GradingReport:
    d: int
    pieces: dict
    graded_centralizer: dict = field(default_factory=dict)

    def dims(self) -> dict:
        return {i: p.dim for i, p in sorted(self.pieces.items())}

    def piece(self, i: int) -> Subspace:
        n = next(iter(self.pieces.values())).ambient_dim
        return self.pieces.get(i, Subspace.zero(n))


def _eigenvalue_bound(ls: LieAlgebraStructure, h: LieElement) -> int:
    rs = ls.root_system
    support = h.support
    cartan_labels = {ls.index.get(("h", i)) for i in range(rs.rank)} if rs else set()
    if rs is not None and set(support) <= cartan_labels:
        c = [h.coeffs[ls.index[("h", i)]] for i in range(rs.rank)]
        vals = [abs(sum(ci * rs.pairing(b, rs.simple_roots[i]) for i, ci in enumerate(c)))
                for b in rs.positive]
        return int(max(vals, default=0))
    # Gershgorin: every eigenvalue lies within the largest absolute row sum.
    rows = ls.ad_rows(support)
    return int(max((sum(abs(v) for v in r.values()) for r in rows), default=0))


def grade_by(ls: LieAlgebraStructure, h: LieElement) -> GradingReport:
    """``L_i = ker(ad h - i)`` for every integer ``i`` in the eigenvalue range."""
    bound = _eigenvalue_bound(ls, h)
    base = ls.ad_rows(h.support)
    pieces = {}
    for i in range(-bound, bound + 1):
        rows = []
        for k, r in enumerate(base):
            r = dict(r)
            v = r.get(k, _ZERO) - i
            if v:
                r[k] = v
            else:
                r.pop(k, None)
            rows.append(r)
        piece = kernel_sparse(rows, ls.dim)
        if piece.dim:
            pieces[i] = piece
    if sum(p.dim for p in pieces.values()) != ls.dim:
        raise ValueError("ad h is not diagonalizable with integer eigenvalues")
    d = max(pieces)
    return GradingReport(d, pieces)


def grading_compatible(ls: LieAlgebraStructure, report: GradingReport) -> bool:
    """Check ``[L_i, L_j] <= L_{i+j}`` on all pairs of piece basis vectors."""
    vecs = {i: p.sparse_vectors() for i, p in report.pieces.items()}
    for i, j in itertools.combinations_with_replacement(sorted(vecs), 2):
        target = report.pieces.get(i + j)
        for u in vecs[i]:
            for v in vecs[j]:
                br = ls.bracket_sparse(u, v)
                if br and (target is None or target.reduce(br)):
                    return False
    return True


def graded_centralizer_dims(ls: LieAlgebraStructure, x: LieElement, h: LieElement,
                            grading: Optional[GradingReport] = None) -> dict:
    """``{i: dim(L_i ∩ C(x))}`` for every degree ``-d <= i <= d``."""
    grading = grading or grade_by(ls, h)
    C = centralizer(ls, x)
    return {i: intersect(grading.piece(i), C).dim for i in range(-grading.d, grading.d + 1)}


# ---------------------------------------------------------------------------
# printed graded basis of the E7 centralizer


def _combination(ls: LieAlgebraStructure, terms) -> dict:
    out = {}
    for sign, root in terms:
        out[ls.index[("x", tuple(root))]] = Fraction(sign)
    return out


def _gf2_solve(equations: list, nvars: int):
    """Solve ``sum_{v in vars} e_v = rhs`` over GF(2); free variables are 0."""
    pivots = {}
    for mask, rhs in equations:
        for p, (pm, pr) in pivots.items():
            if mask >> p & 1:
                mask ^= pm
                rhs ^= pr
        if not mask:
            if rhs:
                return None
            continue
        p = mask.bit_length() - 1
        for q, (qm, qr) in list(pivots.items()):
            if qm >> p & 1:
                pivots[q] = (qm ^ mask, qr ^ rhs)
        pivots[p] = (mask, rhs)
    return [pivots[v][1] if v in pivots else 0 for v in range(nvars)], len(pivots)


@dataclass(frozen=True)
class PrintedBasisReport:
    degree2_rank: int
    degree4_rank: int
    degree2_in_piece: bool
    degree4_in_piece: bool
    default_membership: tuple   # (degree, position, in C(x)) per printed element
    residuals: tuple            # (degree, position, positions of terms whose sign flips)
    sign_equations: int
    sign_rank: int
    rescaling: dict             # positive root -> -1 (roots not listed keep +1)
    calibrated_membership: bool

    @property
    def passed(self) -> bool:
        return (self.degree2_rank == len(refdata.E7_DEGREE2_CENTRALIZER)
                and self.degree4_rank == len(refdata.E7_DEGREE4_CENTRALIZER)
                and self.degree2_in_piece and self.degree4_in_piece
                and self.calibrated_membership)

    def to_dict(self) -> dict:
        return {
            "degree2_rank": self.degree2_rank,
            "degree4_rank": self.degree4_rank,
            "degree2_in_piece": self.degree2_in_piece,
            "degree4_in_piece": self.degree4_in_piece,
            "default_convention_members": sum(1 for *_, ok in self.default_membership if ok),
            "residuals": [{"degree": d, "element": p + 1, "flipped_terms": [t + 1 for t in ts]}
                          for d, p, ts in self.residuals],
            "sign_equations": self.sign_equations,
            "sign_rank": self.sign_rank,
            "rescaling": [list(r) for r in sorted(self.rescaling)],
            "calibrated_membership": self.calibrated_membership,
            "pass": self.passed,
        }


def _sign_equations(ls: LieAlgebraStructure, rep_roots, elements, var):
    """GF(2) conditions for a rescaled ``x`` to commute with each rescaled printed element.

    Returns ``(equations, obstructions)``; an obstruction is a bracket
    coefficient that no sign choice can cancel.
    """
    eqs, bad = [], []
    for terms in elements:
        coeff: dict = {}
        for q in rep_roots:
            for sign, r in terms:
                n = ls.constants.get((tuple(q), tuple(r)), 0)
                if n:
                    c = tuple(a + b for a, b in zip(q, r))
                    coeff.setdefault(c, []).append((q, r, sign * n))
        for c, contrib in coeff.items():
            if len(contrib) == 2:
                (q1, r1, v1), (q2, r2, v2) = contrib
                if abs(v1) != abs(v2):
                    bad.append(c)
                    continue
                mask = 0
                for root in (q1, r1, q2, r2):
                    mask ^= 1 << var[tuple(root)]
                # eps-product must equal -sign(v1 v2)
                eqs.append((mask, 0 if v1 * v2 < 0 else 1))
            else:
                bad.append(c)
    return eqs, bad


def e7_printed_basis_check(ls: Optional[LieAlgebraStructure] = None,
                           grading: Optional[GradingReport] = None) -> PrintedBasisReport:
    """Compare the printed 28 + 7 graded centralizer elements with the computed spaces.

    Independence and membership in ``L_2``/``L_4`` do not depend on signs.
    Membership in ``C(x)`` does, so it is checked twice: as printed in the
    default convention (failures become per-term residuals) and after the
    diagonal +-1 rescaling of root vectors solved for over GF(2).
    """
    ls = ls or chevalley_algebra("E7")
    rep = refdata.E7_ORBIT_REPRESENTATIVE
    h = ls.element({ls.index[("h", i)]: c for i, c in enumerate(refdata.E7_NEUTRAL)})
    grading = grading or grade_by(ls, h)
    x = ls.element(_combination(ls, [(1, r) for r in rep]))
    C = centralizer(ls, x)

    blocks = ((2, refdata.E7_DEGREE2_CENTRALIZER), (4, refdata.E7_DEGREE4_CENTRALIZER))
    ranks, in_piece, membership, residuals = {}, {}, [], []
    for deg, elements in blocks:
        vecs = [_combination(ls, t) for t in elements]
        ranks[deg] = span(vecs, ls.dim).dim
        in_piece[deg] = all(not grading.piece(deg).reduce(v) for v in vecs)
        for pos, terms in enumerate(elements):
            ok = not C.reduce(_combination(ls, terms))
            membership.append((deg, pos, ok))
            if ok:
                continue
            flips = None
            for k in range(1, len(terms)):
                for chosen in itertools.combinations(range(1, len(terms)), k):
                    trial = [(-s if i in chosen else s, r) for i, (s, r) in enumerate(terms)]
                    if not C.reduce(_combination(ls, trial)):
                        flips = chosen
                        break
                if flips:
                    break
            residuals.append((deg, pos, tuple(flips) if flips else ()))

    roots = sorted({tuple(r) for r in rep} | {tuple(r) for _, els in blocks for t in els for _, r in t})
    var = {r: i for i, r in enumerate(roots)}
    all_elements = [t for _, els in blocks for t in els]
    eqs, bad = _sign_equations(ls, rep, all_elements, var)
    solved = None if bad else _gf2_solve(eqs, len(roots))
    rescaling: dict = {}
    sign_rank = 0
    calibrated = False
    if solved is not None:
        bits, sign_rank = solved
        rescaling = {r: -1 for r, b in zip(roots, bits) if b}
        signs = {}
        for r, s in rescaling.items():
            signs[r] = s
            signs[tuple(-c for c in r)] = s
        ls2 = rescale(ls, signs)
        x2 = ls2.element(_combination(ls2, [(1, r) for r in rep]))
        C2 = centralizer(ls2, x2)
        calibrated = all(not C2.reduce(_combination(ls2, t)) for t in all_elements)
    return PrintedBasisReport(
        ranks[2], ranks[4], in_piece[2], in_piece[4], tuple(membership), tuple(residuals),
        len(eqs), sign_rank, rescaling, calibrated)


# ---------------------------------------------------------------------------
# E7 certificate


@dataclass(frozen=True)
class CertificateStage:
    name: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class E7Certificate:
    stages: tuple
    printed_basis: Optional[PrintedBasisReport]

    @property
    def passed(self) -> bool:
        ok = all(s.passed for s in self.stages)
        return ok and (self.printed_basis is None or self.printed_basis.passed)

    def failed_stage(self) -> Optional[str]:
        for s in self.stages:
            if not s.passed:
                return s.name
        if self.printed_basis is not None and not self.printed_basis.passed:
            return "printed-basis"
        return None

    def value(self, name: str):
        for s in self.stages:
            if s.name == name:
                return s.computed
        raise KeyError(name)

    @property
    def chain(self) -> tuple:
        names = ("graded-centralizer-2+4", "constraint-budget", "S-bound", "C-bound", "reg-dim")
        return tuple(self.value(n) for n in names) + ("pass" if self.passed else "fail",)

    def to_dict(self) -> dict:
        return {
            "stages": [{"stage": s.name, "expected": s.expected, "computed": s.computed,
                        "pass": s.passed} for s in self.stages],
            "printed_basis": self.printed_basis.to_dict() if self.printed_basis else None,
            "pass": self.passed,
        }


def e7_reducibility_certificate(ls: Optional[LieAlgebraStructure] = None,
                                check_printed_basis: bool = True) -> E7Certificate:
    """Chain every dimension behind the E7 lower bound ``133 + 63 - 49 = 147``."""
    ls = ls or chevalley_algebra("E7")
    if ls.root_system is None or str(ls.root_system.type) != "E7":
        raise ValueError("the certificate needs the E7 Chevalley algebra")
    rep = refdata.E7_ORBIT_REPRESENTATIVE
    x = ls.element(_combination(ls, [(1, r) for r in rep]))
    h = ls.element({ls.index[("h", i)]: c for i, c in enumerate(refdata.E7_NEUTRAL)})
    stages = []

    def stage(name, expected, computed):
        stages.append(CertificateStage(name, expected, computed))

    C = centralizer(ls, x)
    stage("centralizer", 49, C.dim)
    triple = sl2_complete(ls, x, h)
    stage("sl2-triple", True, triple.relations_hold())
    grading = grade_by(ls, h)
    stage("top-degree", 4, grading.d)
    graded = {i: intersect(grading.piece(i), C).dim for i in range(-grading.d, grading.d + 1)}
    for i in range(1, 5):
        stage("graded-centralizer-%d" % i, {1: 0, 2: 28, 3: 0, 4: 7}[i], graded[i])
    stage("negative-degrees-vanish", 0, sum(graded[i] for i in range(-grading.d, 0)))
    stage("graded-sum", C.dim, sum(graded.values()))

    upper = intersect(grading.piece(2) + grading.piece(4), C)
    stage("graded-centralizer-2+4", 35, upper.dim)
    # Commutators inside (L_2 + L_4) ∩ C(x) land in L_4 ∩ C(x); its dimension caps the equations.
    top = intersect(grading.piece(4), C)
    closed = all(not top.reduce(ls.bracket_sparse(u, v))
                 for u, v in itertools.combinations(upper.sparse_vectors(), 2))
    stage("brackets-land-in-top", True, closed)
    stage("top-piece-dim", 7, grading.piece(4).dim)
    budget = top.dim
    stage("constraint-budget", 7, budget)
    s_bound = 2 * upper.dim - budget
    stage("S-bound", 63, s_bound)
    c_bound = ls.dim + s_bound - C.dim
    stage("C-bound", 147, c_bound)
    stage("reg-dim", 147, reg_dim(ls, 3))
    stage("bound-meets-regular", True, c_bound >= reg_dim(ls, 3))

    printed = e7_printed_basis_check(ls, grading) if check_printed_basis else None
    return E7Certificate(tuple(stages), printed)


# ---------------------------------------------------------------------------
# so_{4s} threshold


@dataclass(frozen=True)
class SoThreshold:
    s: int
    lower_bound: int     # (s^2 + 3s)/2 + dim SO_{4s}
    regular: int         # 4s + dim SO_{4s}
    met: bool
    reducible: bool


def so_reducibility_threshold(s: int) -> SoThreshold:
    """Compare the so_{4s} component bound with the regular component for ``m = 3``."""
    if s < 2:
        raise ValueError("s must be at least 2")
    dim_so = 2 * (2 * s) ** 2 - 2 * s
    lower = s * (s + 3) // 2 + dim_so
    regular = 4 * s + dim_so
    met = lower >= regular
    # a closed irreducible set of full dimension outside the regular component
    return SoThreshold(s, lower, regular, met, met)
