import json

import pytest

from commvar.rootsys import (SimpleType, build_root_system, cartan_matrix, classify_cartan,
                             embeddings, parse_type, precedes, root_sum, sub_system)

ALL_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "D6",
             "E6", "E7", "E8", "F4", "G2"]


def expected_root_count(t: SimpleType) -> int:
    return t.dimension - t.rank


@pytest.mark.parametrize("name", ALL_TYPES)
def test_root_count_matches_dimension(name):
    rs = build_root_system(name)
    assert len(rs.roots) == expected_root_count(rs.type)
    assert len(set(rs.roots)) == len(rs.roots)


def test_named_counts():
    assert len(build_root_system("G2").roots) == 12
    assert len(build_root_system("A1").roots) == 2
    assert len(build_root_system("E7").roots) == 126
    assert len(build_root_system("F4").roots) == 48
    assert len(build_root_system("E8").roots) == 240


@pytest.mark.parametrize("name", ALL_TYPES)
def test_negation_closed_and_sign_coherent(name):
    rs = build_root_system(name)
    for r in rs.roots:
        assert tuple(-c for c in r) in rs
        assert all(c >= 0 for c in r) or all(c <= 0 for c in r)


@pytest.mark.parametrize("name", ["B3", "C3", "F4", "G2", "D4", "E6"])
def test_strings_unbroken_and_pairing_consistent(name):
    rs = build_root_system(name)
    for a in rs.roots:
        for b in rs.roots:
            if b == a or b == tuple(-c for c in a):
                continue
            p, q = rs.string(a, b)
            for i in range(-p, q + 1):
                assert tuple(x + i * y for x, y in zip(b, a)) in rs
            # p - q = <b, a^vee>
            assert p - q == rs.pairing(b, a)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_cartan_pairing_on_simple_roots(name):
    rs = build_root_system(name)
    for i, ai in enumerate(rs.simple_roots):
        for j, aj in enumerate(rs.simple_roots):
            assert rs.pairing(ai, aj) == rs.cartan[i][j]


def test_ordering_by_height_then_coordinates():
    rs = build_root_system("G2")
    heights = [rs.height(r) for r in rs.positive]
    assert heights == sorted(heights)
    assert rs.simple_roots == ((1, 0), (0, 1))
    assert rs.highest_root() == (3, 2)


def test_g2_orientation():
    # alpha (first) is short, beta long: <beta, alpha^vee> = -3
    rs = build_root_system("G2")
    assert rs.pairing((0, 1), (1, 0)) == -3
    assert rs.pairing((1, 0), (0, 1)) == -1
    assert rs.norm((0, 1)) == 3 * rs.norm((1, 0))


def test_bourbaki_e7_highest_root():
    assert build_root_system("E7").highest_root() == (2, 2, 3, 4, 3, 2, 1)
    assert build_root_system("E8").highest_root() == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 5), ("G", 3), ("Q", 2)])
def test_inadmissible_types(bad):
    with pytest.raises(ValueError):
        SimpleType(*bad)


def test_parse_type_forms():
    assert parse_type("e7") == parse_type(("E", 7)) == SimpleType("E", 7)
    with pytest.raises(ValueError):
        parse_type("nonsense")


def test_sub_system_examples():
    rs = build_root_system("C2")
    full = sub_system(rs, range(2))
    assert set(full.roots) == set(rs.roots) and full.irreducible
    a1 = sub_system(rs, [0])
    assert set(a1.roots) == {(1, 0), (-1, 0)} and a1.type == SimpleType("A", 1)
    e8 = build_root_system("E8")
    e7 = sub_system(e8, range(7))
    assert len(e7.roots) == 126 and e7.type == SimpleType("E", 7)


def test_sub_system_disconnected_flag():
    rs = build_root_system("A3")
    sub = sub_system(rs, [0, 2])
    assert not sub.irreducible and len(sub.roots) == 4
    with pytest.raises(ValueError):
        sub_system(rs, [])


@pytest.mark.parametrize("name,nodes", [("B3", [1, 2]), ("F4", [1, 2]), ("E8", range(7)), ("A3", [0, 1])])
def test_sub_system_closed(name, nodes):
    rs = build_root_system(name)
    sub = sub_system(rs, nodes)
    roots = set(sub.roots)
    for a in roots:
        assert tuple(-c for c in a) in roots
        for b in roots:
            s = root_sum(a, b, rs)
            if s is not None:
                assert s in roots


def test_root_sum_examples():
    rs = build_root_system("G2")
    assert root_sum((1, 0), (0, 1), rs) == (1, 1)
    assert root_sum((0, 1), (0, 1), rs) is None
    assert root_sum((3, 1), (2, 1), rs) is None
    assert root_sum((1, 0), (-1, 0), rs) is None
    with pytest.raises(ValueError):
        root_sum((5, 5), (1, 0), rs)


def test_precedes_examples():
    rs = build_root_system("G2")
    assert precedes((1, 0), (3, 1), rs)
    assert not precedes((1, 0), (1, 0), rs)
    assert not precedes((0, 1), (1, 0), rs)


def test_classify_cartan_all_types():
    for name in ALL_TYPES:
        t = parse_type(name)
        assert classify_cartan(cartan_matrix(t)) == t


def test_embeddings():
    assert embeddings(build_root_system("E8"), "E7") == [tuple(range(7))]
    assert embeddings(build_root_system("B3"), "C2") == [(1, 2)]
    assert embeddings(build_root_system("A3"), "G2") == []


def test_json_dump_round_trip():
    rs = build_root_system("G2")
    doc = json.loads(rs.to_json())
    assert doc["type"] == "G2"
    assert doc["cartan"] == [[2, -1], [-3, 2]]
    assert [tuple(r) for r in doc["roots"]] == list(rs.roots)
