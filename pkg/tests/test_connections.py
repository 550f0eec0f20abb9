from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncincidence.catalog import catalog, catalog_names, figure_values, shaded_face
from ncincidence.connections import (Connection, connection_from_labels, defect_connection, face_defects,
                                     face_holonomy, find_nontrivial_defect, gauge, holonomy)
from ncincidence.errors import MapError, NoneFound, NotAUnit
from ncincidence.rings import HH, NormalSubgroup, in_subgroup
from ncincidence.surface import tree_cotree
from strategies import F7, M2F3


def square_torus_connection(x, y):
    m = catalog("square_torus")
    return Connection.from_darts(m, x.ring, {0: x, 1: y})


def test_square_torus_commutator():
    c = square_torus_connection(HH.i, HH.j)
    assert face_holonomy(c, 0) == HH(-1)
    assert face_defects(c).defect_faces == (0,)
    assert face_defects(c, NormalSubgroup.CENTRAL).flat


def test_trivial_connection():
    for name in catalog_names():
        m = catalog(name)
        c = Connection.trivial(m, HH)
        assert face_defects(c).flat
        for d in range(m.num_darts):
            assert c[d] == HH.one


def test_reversal_gives_inverse():
    m = catalog("pappus_torus_triangulation")
    rng = random.Random(3)
    pool = HH.unit_pool()
    c = Connection.from_darts(m, HH, {m.edge_dart(e): rng.choice(pool) for e in range(m.num_edges)})
    for f in range(m.num_faces):
        loop = list(m.faces[f])
        back = [m.reversal[d] for d in reversed(loop)]
        assert holonomy(c, back) == holonomy(c, loop).inverse()


def test_bad_loop_and_values():
    m = catalog("tetrahedron")
    c = Connection.trivial(m, HH)
    with pytest.raises(MapError):
        holonomy(c, [0])
    vals = [HH.one] * m.num_darts
    vals[0] = HH.zero
    with pytest.raises(NotAUnit):
        Connection(m, HH, vals)
    vals[0] = HH(2)
    with pytest.raises(MapError):
        Connection(m, HH, vals)


def test_gauge_identity_and_trivial():
    m = catalog("cube_tiling")
    c = Connection.trivial(m, HH)
    assert gauge(c, [HH.one] * m.num_vertices) == c
    psi = [HH(f"{v}+i") for v in range(m.num_vertices)]
    assert face_defects(gauge(c, psi)).flat


def _random_connection(m, ring, rng):
    pool = ring.unit_pool()
    return Connection.from_darts(m, ring, {m.edge_dart(e): rng.choice(pool) for e in range(m.num_edges)})


@given(st.integers(0, 10 ** 6))
def test_gauge_conjugates_face_holonomy(seed):
    rng = random.Random(seed)
    m = catalog("pappus_torus_triangulation")
    c = _random_connection(m, HH, rng)
    psi = [rng.choice(HH.unit_pool()) for _ in range(m.num_vertices)]
    g = gauge(c, psi)
    for f in range(m.num_faces):
        base = m.tail(m.faces[f][0])
        assert face_holonomy(g, f) == psi[base] * face_holonomy(c, f) * psi[base].inverse()
    for G in NormalSubgroup:
        assert face_defects(c, G).trivial == face_defects(g, G).trivial


def test_figure_connections():
    a, b = HH.i, HH.j
    for name in ["tiling_example", "mobt2", "perm2"]:
        t = catalog(name)
        c = connection_from_labels(t, HH, figure_values(name), {"a": a, "b": b})
        rep = face_defects(c)
        assert rep.defect_faces == (shaded_face(t),)
        assert rep.holonomies[shaded_face(t)] == HH(-1)
        flat = connection_from_labels(t, HH, figure_values(name), {"a": HH.one, "b": HH.one})
        assert face_defects(flat).flat


def test_tiling_example_shaded_word():
    # the face successor walks the shaded tile against the figure's reading
    # direction, so its holonomy is a conjugate of (a b a^-1 b^-1)^-1
    t = catalog("tiling_example")
    for a, b in [(HH.i, HH.k), (HH("1+i"), HH.j), (HH("1+2j"), HH("1+i+k"))]:
        c = connection_from_labels(t, HH, figure_values("tiling_example"), {"a": a, "b": b})
        h = face_holonomy(c, shaded_face(t))
        word = a * b * a.inverse() * b.inverse()
        assert h == (a * b).inverse() * word.inverse() * (a * b)


@pytest.mark.parametrize("name", catalog_names())
def test_defect_connection_flat_away_from_root(name):
    m = catalog(name)
    rng = random.Random(name)
    for F0 in range(m.num_faces):
        tc = tree_cotree(m, F0)
        c = defect_connection(m, F0, {e: rng.choice(HH.unit_pool()) for e in tc.leftover_edges}, HH)
        rep = face_defects(c)
        assert all(rep.trivial[f] for f in range(m.num_faces) if f != F0)
        for e in tc.tree_edges:
            assert c[m.edge_dart(e)] == HH.one


def test_defect_connection_sphere_is_flat():
    m = catalog("octahedron")
    for F0 in range(m.num_faces):
        assert face_defects(defect_connection(m, F0, {}, HH)).flat


def test_defect_connection_commutative_is_flat():
    m = catalog("genus_g_pappus", genus=2)
    tc = tree_cotree(m, 3)
    for seed in range(20):
        rng = random.Random(seed)
        c = defect_connection(m, 3, {e: F7(rng.randrange(1, 7)) for e in tc.leftover_edges}, F7)
        assert face_defects(c).flat


def test_square_torus_defect():
    m = catalog("square_torus")
    c = defect_connection(m, 0, {0: HH.i, 1: HH.j}, HH)
    assert face_holonomy(c, 0) == HH(-1)


def test_missing_assignment():
    m = catalog("pappus_torus_triangulation")
    with pytest.raises(MapError):
        defect_connection(m, 0, {}, HH)


def test_find_nontrivial_defect_torus():
    m = catalog("square_torus")
    c = find_nontrivial_defect(m, 0, [HH.i, HH.j, HH.k])
    assert face_holonomy(c, 0) == HH(-1)


@pytest.mark.parametrize("name", [n for n in catalog_names() if catalog(n).genus > 0])
def test_find_nontrivial_defect_every_face(name):
    m = catalog(name)
    for F0 in range(m.num_faces):
        c = find_nontrivial_defect(m, F0, HH.candidate_units(), NormalSubgroup.CENTRAL)
        rep = face_defects(c, NormalSubgroup.CENTRAL)
        assert rep.defect_faces == (F0,)
        assert not in_subgroup(rep.holonomies[F0], NormalSubgroup.CENTRAL)


def test_find_nontrivial_defect_fails_when_expected():
    with pytest.raises(NoneFound):
        find_nontrivial_defect(catalog("pappus_torus_triangulation"), 0, F7.candidate_units())
    with pytest.raises(NoneFound):
        find_nontrivial_defect(catalog("tetrahedron"), 0, HH.candidate_units())
    with pytest.raises(NoneFound):
        find_nontrivial_defect(catalog("mobt2"), 0, HH.candidate_units(), NormalSubgroup.ALL)


def test_find_nontrivial_defect_matrix_ring():
    m = catalog("pappus_tiling")
    c = find_nontrivial_defect(m, 2, M2F3.candidate_units(), NormalSubgroup.SCALAR)
    assert face_defects(c, NormalSubgroup.SCALAR).defect_faces == (2,)


def test_connection_json_round_trip():
    m = catalog("mobt2")
    c = connection_from_labels(m, HH, figure_values("mobt2"), {"a": HH.i, "b": HH.j})
    assert Connection.from_json(m, HH, c.to_json()) == c
