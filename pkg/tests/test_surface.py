from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncincidence.catalog import catalog, catalog_names
from ncincidence.errors import MapError
from ncincidence.surface import (BLACK, WHITE, CombMap, QuadTiling, build_map, from_faces, from_vertex_faces,
                                 is_simple, isomorphism, map_from_json, subdivision_of, tiling_of, tree_cotree)


def square_torus():
    return CombMap([2, 3, 0, 1], [3, 0, 1, 2], name="square_torus")


def test_square_torus_counts():
    m = square_torus()
    assert (m.num_vertices, m.num_edges, m.num_faces, m.genus) == (1, 2, 1, 1)
    assert m.faces == ((0, 1, 2, 3),)


def test_face_successor_is_rotation_after_reversal():
    for name in catalog_names():
        m = catalog(name)
        for d in range(m.num_darts):
            assert m.succ[d] == m.rotation[m.reversal[d]]
            assert m.head(d) == m.tail(m.succ[d])


def test_faces_start_at_least_dart():
    for name in catalog_names():
        m = catalog(name)
        for f in m.faces:
            assert f[0] == min(f)
        firsts = [f[0] for f in m.faces]
        assert firsts == sorted(firsts)


def test_invalid_permutations():
    with pytest.raises(MapError):
        CombMap([0, 1], [1, 0])  # reversal with fixed points
    with pytest.raises(MapError):
        CombMap([1, 0, 3, 2], [0, 1, 2, 3])  # two components
    with pytest.raises(MapError):
        CombMap([1, 1], [0, 1])


def test_from_faces_rejects_unpaired_edges():
    with pytest.raises(MapError):
        from_faces([[("A", "x"), ("B", "y"), ("C", "z")]])


def test_tree_cotree_counts():
    for name in catalog_names():
        m = catalog(name)
        for F0 in range(m.num_faces):
            tc = tree_cotree(m, F0)
            assert len(tc.tree_edges) == m.num_vertices - 1
            assert len(tc.cotree_edges) == m.num_faces - 1
            assert len(tc.leftover_edges) == 2 * m.genus
            assert tc.root_face == F0
            parts = set(tc.tree_edges) | set(tc.cotree_edges) | set(tc.leftover_edges)
            assert parts == set(range(m.num_edges))


def test_square_torus_leftover_is_both_edges():
    tc = tree_cotree(square_torus(), 0)
    assert sorted(tc.leftover_edges) == [0, 1]
    assert not tc.tree_edges and not tc.cotree_edges


def test_tiling_colors_alternate():
    for name in ["cube_tiling", "pappus_tiling", "tiling_example", "mobt2", "perm2", "nonsimple_torus_tiling"]:
        t = catalog(name)
        assert isinstance(t, QuadTiling)
        for d in range(t.num_darts):
            assert t.is_black(t.tail(d)) != t.is_black(t.head(d))
        for f in range(t.num_faces):
            A1, A2, l1, l2 = t.tile(f)
            assert t.is_black(A1) and t.is_black(A2)
            assert not t.is_black(l1) and not t.is_black(l2)
            assert t.face_size(f) == 4


def test_simplicity():
    assert is_simple(catalog("mobt2"))
    assert is_simple(catalog("cube_tiling"))
    assert not is_simple(catalog("nonsimple_torus_tiling"))


def test_tetrahedron_gives_cube():
    t = tiling_of(catalog("tetrahedron"))
    assert isomorphism(t, catalog("cube_tiling")) is not None
    assert (t.num_vertices, t.num_edges, t.num_faces, t.genus) == (8, 12, 6, 0)


def test_pappus_gives_pappus_tiling():
    t = tiling_of(catalog("pappus_torus_triangulation"))
    assert isomorphism(t, catalog("pappus_tiling")) is not None


@pytest.mark.parametrize("name", ["tetrahedron", "square_pyramid", "octahedron", "pappus_torus_triangulation",
                                  "moebius_torus_quad"])
def test_correspondence_round_trip(name):
    p = catalog(name)
    t = tiling_of(p)
    assert t.num_faces == p.num_edges
    assert len(t.black_vertices) == p.num_vertices
    assert len(t.white_vertices) == p.num_faces
    assert t.genus == p.genus
    assert isomorphism(subdivision_of(t), p, match_labels=True) is not None


def test_mobius_tiling_is_mobius_quadrangulation():
    assert isomorphism(subdivision_of(catalog("mobt2")), catalog("moebius_torus_quad")) is not None


def test_isomorphism_detects_difference():
    assert isomorphism(catalog("tetrahedron"), catalog("square_pyramid")) is None
    assert isomorphism(catalog("mobt2"), catalog("perm2")) is None


def test_json_round_trip():
    for name in catalog_names():
        m = catalog(name)
        text = json.dumps(m.to_json())
        m2 = map_from_json(json.loads(text))
        assert type(m2) is type(m)
        assert m2.reversal == m.reversal and m2.rotation == m.rotation
        assert m2.faces == m.faces
        assert [str(x) for x in m2.vertex_labels] == [str(x) for x in m.vertex_labels]


def test_from_vertex_faces_triangle_pair():
    m = from_vertex_faces([["A", "B", "C"], ["A", "C", "B"]])
    assert (m.num_vertices, m.num_edges, m.num_faces, m.genus) == (3, 3, 2, 0)
    assert m.dart_between(m.vertex_index("A"), m.vertex_index("B")) is not None


def test_build_map_matches_constructor():
    m = square_torus()
    m2 = build_map(range(4), m.reversal, m.rotation)
    assert m2.faces == m.faces


@given(st.permutations(range(8)))
def test_relabeling_darts_gives_isomorphic_map(perm):
    m = catalog("moebius_torus_quad")
    n = m.num_darts
    full = list(perm) + list(range(8, n))
    inv = [0] * n
    for i, p in enumerate(full):
        inv[p] = i
    rev = [full[m.reversal[inv[d]]] for d in range(n)]
    rot = [full[m.rotation[inv[d]]] for d in range(n)]
    m2 = CombMap(rev, rot)
    assert m2.genus == m.genus
    assert isomorphism(m, m2) is not None


def test_black_white_constants():
    assert BLACK != WHITE
