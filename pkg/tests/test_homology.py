import pytest

from tilek.graph import complete_bipartite, parse_graph
from tilek.groups import TRIVIAL, free
from tilek.homology import (CellComplex2, HomologyScopeError, contracted_complex,
                            full_complex_homology, homology, homology_groups, predicted_homology)


def test_cell_counts():
    c = contracted_complex(complete_bipartite(2, 2), 2)
    assert len(c.one_cells) == 4 and len(c.two_cells) == 3
    c = contracted_complex(complete_bipartite(3, 4), 2)
    assert len(c.one_cells) == 10 and len(c.two_cells) == 11
    c = contracted_complex(complete_bipartite(2, 2), 1)
    assert all(len(boundary) == 2 for name, boundary in c.two_cells if name.startswith("A'"))


@pytest.mark.parametrize("a,b,h1,h2", [(2, 2, 2, 1), (3, 4, 5, 6), (6, 8, 12, 35)])
def test_tile_complex(a, b, h1, h2):
    assert homology_groups(contracted_complex(complete_bipartite(a, b), 2)) == (TRIVIAL, free(h1), free(h2))


@pytest.mark.parametrize("a,b", [(2, 2), (2, 5), (3, 4), (4, 4)])
@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_contracted_matches_full_complex(a, b, t):
    g = complete_bipartite(a, b)
    h, f = homology(g, t), full_complex_homology(g, t)
    assert h.groups() == f.groups()
    assert f.h0_unreduced == free(1)
    assert h.h1.is_torsion_free and h.h2.is_torsion_free


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_rank_formulas_general_t(t):
    # H1 has rank (t-1)(alpha+beta-2); H2 has rank (alpha-1)(beta-1) for all t
    for a, b in [(2, 3), (4, 5)]:
        h = homology(complete_bipartite(a, b), t)
        assert h.h1 == free((t - 1) * (a + b - 2))
        assert h.h2 == free((a - 1) * (b - 1))


def test_closed_form_at_t2():
    for a in range(2, 6):
        for b in range(2, 6):
            g = complete_bipartite(a, b)
            assert homology(g, 2).groups() == predicted_homology(g)


def test_euler_characteristic():
    for t in (1, 2, 3):
        g = complete_bipartite(3, 5)
        h = homology(g, t)
        assert h.euler_characteristic == 1 - h.h1.free_rank + h.h2.free_rank
        # the full polyhedron has 2t vertices, t(alpha+beta) edges, alpha*beta faces
        assert full_complex_homology(g, t).euler_characteristic == 2 * t - t * 8 + 15 == h.euler_characteristic


def test_scope_and_validation():
    with pytest.raises(HomologyScopeError):
        contracted_complex(parse_graph("bipartite 2 2\n1 1\n1 2\n2 1\n"), 2)
    with pytest.raises(ValueError):
        CellComplex2(("x",), (("f", {"y": 1}),))


def test_json_shape():
    g = complete_bipartite(3, 4)
    obj = homology(g, 2).to_json(g, 2)
    assert set(obj) == {"alpha", "beta", "t", "h0_reduced", "h0_unreduced", "h1", "h2",
                        "euler_characteristic"}
