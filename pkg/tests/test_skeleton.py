import numpy as np
import pytest

from tilek.adjacency import SystemKind, build_pair
from tilek.graph import complete_bipartite
from tilek.skeleton import (PathPrefix, PrefixError, Skeleton, aperiodic_prefix, b1_positions,
                            check_no_period, complete_square, component_sizes, components,
                            fill_grid, has_cycle_with_entrance, is_period, is_strongly_connected)


def skeleton(a, b, kind="pointed-tile", t=2):
    return Skeleton.from_pair(*build_pair(complete_bipartite(a, b), SystemKind(kind, t)))


def test_kappa22_components():
    sk = skeleton(2, 2)
    assert components(sk) == 4
    assert component_sizes(sk) == [4, 4, 4, 4]
    assert not is_strongly_connected(sk)
    assert not has_cycle_with_entrance(sk)


def test_kappa33():
    sk = skeleton(3, 3)
    assert components(sk) == 1
    assert is_strongly_connected(sk)
    assert has_cycle_with_entrance(sk)


def test_edge_sets_mirror_matrices():
    m1, m2 = build_pair(complete_bipartite(2, 3), SystemKind("pointed-tile"))
    sk = Skeleton.from_pair(m1, m2)
    assert sk.blue_edges() == {tuple(x) for x in np.argwhere(m1.entries).tolist()}
    assert sk.magenta_edges() == {tuple(x) for x in np.argwhere(m2.entries).tolist()}


def test_trivial_skeletons():
    assert components(Skeleton.from_edges(5)) == 5
    assert is_strongly_connected(Skeleton.from_edges(1))
    fed = Skeleton.from_edges(3, blue_edges=[(0, 1), (1, 0), (2, 0)])
    assert has_cycle_with_entrance(fed)
    assert not has_cycle_with_entrance(Skeleton.from_edges(2, blue_edges=[(0, 1), (1, 0)]))


def test_b1_positions():
    assert b1_positions(25) == [3, 7, 13, 21]


@pytest.mark.parametrize("a,b", [(3, 3), (3, 4)])
def test_prefix_structure(a, b):
    sk = skeleton(a, b)
    p = aperiodic_prefix(sk, 0)
    assert p.grid[0][0] == 0 and p.length == 30
    d = complete_square(sk, p.horizontal_word[3], p.vertical_word[3])
    pos = set(b1_positions(30))
    for m in range(30):
        for n in range(30):
            assert (p.grid[m][n] == d) == (m in pos and n in pos)
    assert [p.grid[m][0] for m in range(30)] == list(p.horizontal_word)
    assert list(p.grid[0]) == list(p.vertical_word)


def test_commuting_squares_and_confluence():
    sk = skeleton(3, 4)
    p = aperiodic_prefix(sk, 5, 12)
    g = p.grid
    for m in range(11):
        for n in range(11):
            assert sk.blue[g[m][n], g[m + 1][n]] and sk.magenta[g[m][n], g[m][n + 1]]
            assert sk.magenta[g[m + 1][n], g[m + 1][n + 1]] and sk.blue[g[m][n + 1], g[m + 1][n + 1]]
    assert fill_grid(sk, p.horizontal_word, p.vertical_word, row_first=False) == g


def test_no_period_kappa33_every_start():
    sk = skeleton(3, 3)
    for v in range(sk.size):
        assert check_no_period(aperiodic_prefix(sk, v, 30), 10)


def test_periodic_grids_detected():
    assert not check_no_period(np.zeros((30, 30), dtype=int), 10)
    shifted = np.array([[m % 2 for _ in range(30)] for m in range(30)])
    assert is_period(shifted, (2, 0)) and not is_period(shifted, (1, 0))
    assert not check_no_period(shifted, 10)
    # eventually periodic: constant beyond row 5
    late = np.array([[min(m, 5) * 7 + n % 1 for n in range(30)] for m in range(30)])
    assert not check_no_period(late, 10)


def test_prefix_needs_two_partners():
    with pytest.raises(PrefixError):
        aperiodic_prefix(skeleton(2, 2), 0)


def test_prefix_json():
    sk = skeleton(3, 3)
    obj = aperiodic_prefix(sk, 0, 8).to_json(sk.vertices)
    assert set(obj) == {"start", "length", "horizontal_word", "vertical_word"}
    assert obj["start"].startswith("[") and len(obj["horizontal_word"]) == 8
    assert isinstance(PathPrefix(0, (0,), (0,), ((0,),)).to_json(), dict)
