from __future__ import annotations

import pytest

from ncincidence.catalog import catalog, catalog_names, figure_values, is_tiling, shaded_face
from ncincidence.errors import MapError
from ncincidence.surface import QuadTiling, is_simple, tree_cotree

EXPECTED = {
    # name: (V, E, F, genus)
    "tetrahedron": (4, 6, 4, 0),
    "square_pyramid": (5, 8, 5, 0),
    "octahedron": (6, 12, 8, 0),
    "pappus_torus_triangulation": (3, 9, 6, 1),
    "moebius_torus_quad": (4, 8, 4, 1),
    "cube_tiling": (8, 12, 6, 0),
    "pappus_tiling": (9, 18, 9, 1),
    "tiling_example": (9, 18, 9, 1),
    "mobt2": (8, 16, 8, 1),
    "perm2": (8, 16, 8, 1),
}


@pytest.mark.parametrize("name,counts", sorted(EXPECTED.items()))
def test_cell_counts(name, counts):
    m = catalog(name)
    assert (m.num_vertices, m.num_edges, m.num_faces, m.genus) == counts


def test_every_name_builds():
    for name in catalog_names():
        m = catalog(name)
        assert m.is_connected()
        assert m.num_vertices - m.num_edges + m.num_faces == 2 - 2 * m.genus


@pytest.mark.parametrize("g", [1, 2, 3])
def test_genus_g_pappus(g):
    m = catalog("genus_g_pappus", genus=g)
    assert m.genus == g
    assert m.num_faces == 4 * g + 2
    assert all(len(f) == 3 for f in m.faces)
    p = catalog("genus_g_polygon", genus=g)
    assert p.genus == g and p.num_faces == 1 and p.face_size(0) == 4 * g + 2


def test_genus_two_pappus_matches_pappus_at_genus_one():
    m = catalog("genus_g_pappus", genus=1)
    assert (m.num_vertices, m.num_edges, m.num_faces) == (3, 9, 6)


def test_aliases():
    assert catalog("pappus").name == "pappus_torus_triangulation"
    assert catalog("cube").name == "cube_tiling"


def test_unknown_entry():
    with pytest.raises(MapError):
        catalog("klein_bottle")


def test_tetrahedron_labels():
    m = catalog("tetrahedron")
    assert sorted(str(x) for x in m.vertex_labels) == ["A1", "B1", "C1", "O"]
    assert [str(x) for x in m.face_labels] == ["A1B1O", "B1C1O", "C1A1O", "A1B1C1"]


def test_shaded_tiles():
    for name, label in [("tiling_example", "shaded"), ("mobt2", "D22"), ("perm2", "D22"), ("cube_tiling", "bottom")]:
        t = catalog(name)
        assert str(t.face_labels[shaded_face(t)]) == label


def test_mobt2_leftover_at_shaded_tile():
    t = catalog("mobt2")
    assert len(tree_cotree(t, shaded_face(t)).leftover_edges) == 2


def test_figure_values_cover_black_white_edges():
    for name in ["tiling_example", "mobt2", "perm2"]:
        t = catalog(name)
        vals = figure_values(name)
        labels = {str(x): i for i, x in enumerate(t.vertex_labels)}
        for (b, w) in vals:
            assert t.is_black(labels[b]) and not t.is_black(labels[w])
            t.dart_between(labels[b], labels[w])


def test_tilings_flagged():
    for name in catalog_names():
        m = catalog(name)
        assert is_tiling(m) == isinstance(m, QuadTiling)
        if is_tiling(m) and name != "nonsimple_torus_tiling":
            assert is_simple(m)
