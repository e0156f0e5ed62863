"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line with its wall time; the lines are printed
in the terminal summary (see conftest.py) and when this file is run directly.
"""

import itertools
import random
import sys
import time

import pytest

from commvar.chevalley import chevalley_algebra, jacobi_defect
from commvar.commuting import joint_centralizer, tspace, tspace_padded
from commvar.exactla import intersect, span
from commvar.gradings import grade_by, grading_compatible
from commvar.matrixreal import example_point
from commvar.reproduction import run_checks

RESULTS = {}


def _judge(number, title, budget, body):
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    if elapsed > budget:
        failures.append("took %.1fs, budget %ds" % (elapsed, budget))
    status = "PASS" if not failures else "FAIL"
    line = "criterion %d %-44s %s  %6.2fs" % (number, title, status, elapsed)
    if failures:
        line += "  (" + "; ".join(map(str, failures[:5])) + ")"
    RESULTS[number] = line
    print(line)
    assert not failures, failures


def _failed_records(groups, m_values=None):
    return [r.check_id for r in run_checks(groups, m_values) if not r.passed]


def test_criterion_1_g2_signs():
    _judge(1, "G2 structure-constant table", 1, lambda: _failed_records(["g2-signs"]))


def test_criterion_2_sl4():
    _judge(2, "sl4 quadruple", 1, lambda: _failed_records(["sl4"], [4, 5, 6, 8]))


def test_criterion_3_sp4():
    _judge(3, "sp4 triple", 1, lambda: _failed_records(["sp4"], [3, 4, 5]))


def test_criterion_4_g2():
    _judge(4, "G2 triple", 1, lambda: _failed_records(["g2"], [3, 4, 5]))


def test_criterion_5_so4s():
    _judge(5, "so4s family and threshold", 10, lambda: _failed_records(["so4s"]))


def test_criterion_6_e7():
    _judge(6, "E7 certificate and printed basis", 60, lambda: _failed_records(["e7"]))


def test_criterion_7_lemmas():
    _judge(7, "sub-diagram lemma suite", 120, lambda: _failed_records(["lemmas"]))


def _properties():
    bad = []
    # Jacobi: every basis triple up to dim 52, 1000 random triples for E types
    for name in ("A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"):
        ls = chevalley_algebra(name)
        if any(jacobi_defect(ls, *t) for t in itertools.combinations(range(ls.dim), 3)):
            bad.append("jacobi " + name)
    for name in ("E6", "E7", "E8"):
        ls = chevalley_algebra(name)
        rng = random.Random(name)
        if any(jacobi_defect(ls, *rng.sample(range(ls.dim), 3)) for _ in range(1000)):
            bad.append("jacobi " + name)
    # grading completeness, symmetry, compatibility
    cases = [("G2", None), ("B3", None), ("E7", (4, 7, 8, 12, 9, 6, 3))]
    for name, coeffs in cases:
        ls = chevalley_algebra(name)
        coeffs = coeffs or (1,) * ls.root_system.rank
        h = ls.zero()
        for i, c in enumerate(coeffs):
            h = h + ls.h(i) * c
        g = grade_by(ls, h)
        dims = g.dims()
        if sum(dims.values()) != ls.dim or any(dims.get(i, 0) != dims.get(-i, 0) for i in dims):
            bad.append("grading dims " + name)
        if not grading_compatible(ls, g):
            bad.append("grading compatibility " + name)
    # padding law
    for label in ("sl4-guralnick", "sp4-triple", "g2-triple"):
        p = example_point(label)
        base = tspace(p.algebra, p.tuple).dim
        joint = joint_centralizer(p.algebra, p.tuple).dim
        for extra in range(4):
            if tspace_padded(p.algebra, p.tuple, len(p.tuple) + extra) != base + extra * joint:
                bad.append("padding %s +%d" % (label, extra))
    # subspace laws
    rng = random.Random(0)
    for _ in range(200):
        u, v, w = (span([[rng.randint(-2, 2) for _ in range(5)] for _ in range(rng.randint(0, 4))], 5)
                   for _ in range(3))
        uv = intersect(u, v)
        if not (uv == intersect(v, u) and intersect(uv, w) == intersect(u, intersect(v, w))
                and uv.dim == u.dim + v.dim - (u + v).dim and uv <= u and uv <= v
                and u.annihilator().dim == 5 - u.dim):
            bad.append("subspace laws")
            break
    return bad


def test_criterion_8_properties():
    _judge(8, "property suites", 120, _properties)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    ok = True
    for t in tests:
        try:
            t()
        except AssertionError:
            ok = False
    sys.exit(0 if ok else 1)
