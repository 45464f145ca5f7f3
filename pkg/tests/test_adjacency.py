import json

import numpy as np
import pytest

from oracles import pointed_lift_bruteforce, uce_bruteforce
from tilek.adjacency import (AdjacencyMatrix, Kind, SystemKind, all_checks, build_pair,
                             check_commute, check_no_sources, check_symmetric, check_uce,
                             check_unambiguous_factorization, tile_horizontal, tile_vertical)
from tilek.graph import complete_bipartite, parse_graph
from tilek.tiles import enumerate_pointed, enumerate_unpointed, make_polygon

PATH = parse_graph("bipartite 2 1\n1 1\n2 1\n")


def pair(a, b, kind, t=2):
    return build_pair(complete_bipartite(a, b), SystemKind(kind, t))


def test_kind_constraints():
    with pytest.raises(ValueError):
        SystemKind("pointed-tile", 3)
    with pytest.raises(ValueError):
        SystemKind("unpointed-tile", 4)
    with pytest.raises(ValueError):
        SystemKind("pointed-reflect", 3)
    with pytest.raises(ValueError):
        SystemKind("pointed-star", 0)
    assert SystemKind("pointed-star", 3).kind is Kind.POINTED_STAR


def test_kappa22_pointed_rows():
    m1, m2 = pair(2, 2, "pointed-tile")
    assert m1.dimension == m2.dimension == 16
    assert set(m1.row_sums()) == set(m2.row_sums()) == {1}


def test_kappa34_pointed_rows():
    m1, m2 = pair(3, 4, "pointed-tile")
    assert set(m1.row_sums()) == {2}
    assert set(m2.row_sums()) == {3}


def test_kappa22_unpointed():
    m1, m2 = pair(2, 2, "unpointed-tile")
    assert m1.dimension == 4
    assert set(m1.row_sums()) == set(m2.row_sums()) == {1}


def test_membership_conditions_directly():
    # A_11 -> B_21 horizontally, A_11 -> C_12 vertically, in kappa(2,2)
    a11, b21, c12 = make_polygon("A", 1, 1, 1, 2), make_polygon("B", 2, 1, 1, 2), make_polygon("C", 1, 2, 1, 2)
    assert tile_horizontal(a11, b21) and not tile_vertical(a11, b21)
    assert tile_vertical(a11, c12) and not tile_horizontal(a11, c12)
    assert not tile_horizontal(a11, make_polygon("B", 1, 1, 1, 2))


def test_check_examples():
    assert check_symmetric(np.eye(3, dtype=int))
    assert not check_symmetric(np.array([[0, 1], [0, 0]]))
    m1, _ = pair(4, 5, "pointed-tile")
    assert check_commute(m1, m1)
    assert not check_no_sources(np.zeros((2, 2), int), np.zeros((2, 2), int))
    ones = np.ones((2, 2), int)
    assert not check_unambiguous_factorization(ones, ones)
    with pytest.raises(ValueError):
        check_commute(np.eye(2, dtype=int), np.eye(3, dtype=int))


@pytest.mark.parametrize("a,b,kind,t", [
    (4, 5, "pointed-tile", 2),
    (3, 3, "pointed-reflect", 4),
    (2, 2, "pointed-star", 3),
    (3, 4, "unpointed-tile", 2),
    (5, 5, "unpointed-tile", 2),
    (3, 4, "pointed-tile", 2),
    (2, 3, "unpointed-polygon", 3),
    (3, 3, "pointed-star", 1),
])
def test_all_axioms(a, b, kind, t):
    m1, m2 = pair(a, b, kind, t)
    assert all(all_checks(m1, m2).values())


@pytest.mark.parametrize("a,b,kind,t", [(2, 2, "pointed-tile", 2), (2, 2, "pointed-star", 3),
                                        (3, 3, "unpointed-polygon", 2)])
def test_uce_against_triple_scan(a, b, kind, t):
    m1, m2 = pair(a, b, kind, t)
    assert check_uce(m1, m2) == uce_bruteforce(m1.entries, m2.entries) is True


def test_uce_detects_failure():
    a = np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    assert check_uce(a, a) == uce_bruteforce(a, a)


def test_path_graph_has_sources():
    m1, m2 = build_pair(PATH, SystemKind("pointed-tile"))
    assert m1.row_sums() and set(m1.row_sums()) == {1}
    assert set(m2.row_sums()) == {0}  # no other black vertex: the vertical matrix is empty
    assert not check_no_sources(m1, m2)


@pytest.mark.parametrize("a,b", [(2, 2), (3, 4), (4, 4)])
def test_reflect_at_t2_is_tile_pair(a, b):
    assert pair(a, b, "pointed-reflect", 2) == pair(a, b, "pointed-tile", 2)


@pytest.mark.parametrize("a,b,kind,t,base", [
    (3, 4, "unpointed-tile", 2, "pointed-tile"),
    (3, 3, "unpointed-polygon", 3, "pointed-star"),
    (2, 3, "unpointed-polygon", 1, "pointed-star"),
])
def test_lift_matches_bruteforce(a, b, kind, t, base):
    g = complete_bipartite(a, b)
    classes = enumerate_unpointed(g, t)
    lifted = build_pair(g, SystemKind(kind, t))
    pointed = build_pair(g, SystemKind(base, t))
    for lm, pm in zip(lifted, pointed):
        assert np.array_equal(lm.entries, pointed_lift_bruteforce(pm, classes))


@pytest.mark.parametrize("kind,t", [("pointed-tile", 2), ("unpointed-tile", 2), ("pointed-reflect", 4),
                                    ("pointed-star", 3), ("unpointed-polygon", 1)])
def test_dimensions(kind, t):
    g = complete_bipartite(3, 2)
    m1, _ = build_pair(g, SystemKind(kind, t))
    assert m1.dimension == SystemKind(kind, t).dimension(g)
    assert set(np.unique(m1.entries)) <= {0, 1}


def test_exports():
    m1, _ = pair(2, 2, "pointed-tile")
    rows = m1.to_csv().splitlines()
    assert len(rows) == 16 and all(len(r.split(",")) == 16 for r in rows)
    obj = json.loads(json.dumps(m1.to_json("pointed-tile")))
    assert set(obj) == {"dimension", "kind", "row_sums", "entries"}
    assert sum(count for _, count in obj["entries"]) == 256
    assert AdjacencyMatrix.from_json(obj, m1.index_map) == m1


def test_index_map_is_canonical_order():
    m1, _ = pair(2, 3, "pointed-tile")
    assert list(m1.index_map) == enumerate_pointed(complete_bipartite(2, 3), 2)
