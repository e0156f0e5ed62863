import itertools
import random
from fractions import Fraction

import pytest

from commvar.chevalley import (ad_matrix, bracket, build_chevalley, calibrate_g2, chevalley_algebra,
                               jacobi_defect, random_element, rescale, structure_constant,
                               subalgebra_package)
from commvar.exactla import kernel, rank
from commvar.refdata import g2_sign_table
from commvar.rootsys import build_root_system

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def test_g2_examples():
    ls = chevalley_algebra("G2")
    a, b = (1, 0), (0, 1)
    assert structure_constant(ls, a, b) == -1
    assert structure_constant(ls, b, a) == 1
    assert structure_constant(ls, a, (1, 1)) == -2
    assert structure_constant(ls, (-1, 0), (1, 1)) == -3
    assert structure_constant(ls, a, (-1, 0)) is None
    assert structure_constant(ls, (3, 1), (2, 1)) == 0


def test_g2_table_matches_reference_entry_for_entry():
    ls = chevalley_algebra("G2")
    ref = g2_sign_table()
    assert len(ref) == 144
    for (a, b), v in ref.items():
        assert structure_constant(ls, a, b) == v, (a, b)


def test_g2_calibration_is_unique_up_to_torus():
    ref = g2_sign_table()
    hits = calibrate_g2(ref, extraspecial_sign=1)
    assert len(hits) == 1
    flipped = sorted(r for r, s in hits[0].items() if s == -1)
    assert flipped == [(1, 1), (3, 1)]
    assert calibrate_g2(ref, extraspecial_sign=-1) == [{r: 1 for r in build_root_system("G2").positive}]


def test_a1_table():
    ls = chevalley_algebra("A1")
    x, y, h = ls.x((1,)), ls.x((-1,)), ls.h(0)
    assert bracket(h, x) == 2 * x
    assert bracket(h, y) == -2 * y
    assert bracket(x, y) == h


def test_sl2_relation_for_every_root():
    for name in ("B3", "G2", "F4"):
        ls = chevalley_algebra(name)
        for r in ls.root_system.roots:
            x = ls.x(r)
            hr = bracket(x, ls.x(tuple(-c for c in r)))
            assert bracket(hr, x) == 2 * x


def test_bracket_examples():
    ls = chevalley_algebra("G2")
    x = ls.x((1, 0)) + ls.x((0, 1))
    assert bracket(x, x).is_zero()
    assert bracket(ls.h(0), ls.x((0, 1))) == -3 * ls.x((0, 1))
    assert bracket(x, ls.x((-1, 0))) == ls.h(0)


def test_bracket_algebra_mismatch():
    with pytest.raises(ValueError):
        bracket(chevalley_algebra("A1").h(0), chevalley_algebra("A2").h(0))


def test_ad_matrix_examples():
    ls = chevalley_algebra("A1")
    assert ad_matrix(ls.zero()).is_zero()
    m = ad_matrix(ls.h(0))
    assert [m[i, i] for i in range(3)] == [2, -2, 0]
    g2 = chevalley_algebra("G2")
    top = ad_matrix(g2.x((3, 2)))
    assert rank(top) == 6 and kernel(top).dim == 8


@pytest.mark.parametrize("name", SMALL)
def test_antisymmetry_and_integrality(name):
    ls = chevalley_algebra(name)
    for i in range(ls.dim):
        for j in range(ls.dim):
            a = ls.structure(i, j)
            b = ls.structure(j, i)
            assert a == {k: -v for k, v in b.items()}
            assert all(v.denominator == 1 for v in a.values())


@pytest.mark.parametrize("name", SMALL)
def test_jacobi_on_all_basis_triples(name):
    ls = chevalley_algebra(name)
    for i, j, k in itertools.combinations(range(ls.dim), 3):
        assert not jacobi_defect(ls, i, j, k), (i, j, k)


@pytest.mark.parametrize("name", ["E6", "E7", "E8"])
def test_jacobi_on_random_triples(name):
    ls = chevalley_algebra(name)
    rng = random.Random(7)
    for _ in range(1000):
        i, j, k = rng.sample(range(ls.dim), 3)
        assert not jacobi_defect(ls, i, j, k)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_constant_zero_pattern_and_magnitudes(name):
    ls = chevalley_algebra(name)
    rs = ls.root_system
    seen = set()
    for a in rs.roots:
        for b in rs.roots:
            v = structure_constant(ls, a, b)
            if b == tuple(-c for c in a):
                assert v is None
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs:
                p, _ = rs.string(a, b)
                assert abs(v) == p + 1
                seen.add(abs(v))
            else:
                assert v == 0
    assert seen <= {1, 2, 3}
    assert (3 in seen) == (name == "G2")


@pytest.mark.parametrize("name", ["B3", "G2"])
def test_root_spaces_bracket_into_sum(name):
    ls = chevalley_algebra(name)
    rs = ls.root_system
    for a in rs.roots:
        for b in rs.roots:
            br = bracket(ls.x(a), ls.x(b)).support
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs:
                assert set(br) <= {ls.index[("x", s)]}
            elif any(s):
                assert not br
            else:
                assert all(ls.basis_labels[k][0] == "h" for k in br)


def test_rescaled_algebra_still_lie():
    ls = chevalley_algebra("B3")
    rng = random.Random(3)
    signs = {}
    for r in ls.root_system.positive:
        s = rng.choice((1, -1))
        signs[r] = s
        signs[tuple(-c for c in r)] = s
    ls2 = rescale(ls, signs)
    for i, j, k in itertools.combinations(range(ls2.dim), 3):
        assert not jacobi_defect(ls2, i, j, k)
    with pytest.raises(ValueError):
        rescale(ls, {(1, 0, 0): -1})


def test_subalgebra_package_examples():
    e8 = chevalley_algebra("E8")
    pkg = subalgebra_package(e8, range(7))
    assert pkg.L_prime.dim == 133 and pkg.H_1.dim == 1
    c2 = chevalley_algebra("C2")
    pkg = subalgebra_package(c2, [1])
    assert pkg.L_prime.dim == 3 and pkg.H_1.dim == 1
    full = subalgebra_package(c2, [0, 1])
    assert full.L_prime.dim == c2.dim and full.H_1.dim == 0


def test_subalgebra_package_rejects_disconnected():
    with pytest.raises(ValueError):
        subalgebra_package(chevalley_algebra("A3"), [0, 2])


def test_constants_csv_header_and_rows():
    text = chevalley_algebra("A1").to_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "i,j,k,gamma"
    assert "0,1,2,1" in lines


def test_random_element_deterministic():
    ls = chevalley_algebra("A2")
    a = random_element(ls, random.Random(1))
    b = random_element(ls, random.Random(1))
    assert a == b and isinstance(a.coeffs[0], Fraction)


def test_build_from_root_system_object():
    rs = build_root_system("A2")
    assert build_chevalley(rs).dim == 8
