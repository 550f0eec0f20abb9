from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncincidence.errors import (DegenerateEdge, DependentVertices, FaceTooLarge, NotDivisionRing, NotOnLine,
                                SupplyExhausted)
from ncincidence.linalg import independent, rank
from ncincidence.oracles import coherent_dual_subspace, coherent_subspace, menelaus_rank, module_rank
from ncincidence.projective import (FaceChain, HyperplaneLift, PointLift, basis_points, ceva_geometric,
                                    coherence_ratio, coherent, coherent_dual_geometric, coherent_geometric,
                                    decompose, generic_points, hyperplane_through, intersection_point,
                                    is_point_lift, menelaus_geometric, multiratio_condition, non_neighboring,
                                    pairing)
from ncincidence.rings import DUAL, HH, QQ, MatrixRing, NormalSubgroup, PrimeField
from strategies import M2F3


def P(ring, *xs):
    return PointLift(ring(x) for x in xs)


def L(ring, *xs):
    return HyperplaneLift(ring(x) for x in xs)


A, B, C = P(QQ, 1, 0, 0), P(QQ, 0, 1, 0), P(QQ, 0, 0, 1)


def triangle(b3):
    return FaceChain([A, B, C], [A + B, B + C, b3])


def test_pairing_examples():
    assert pairing(L(QQ, 0, 0, 1), A) == QQ(0)
    assert pairing(L(QQ, 1, 1, 1), A) == QQ(1)
    assert pairing(L(HH, "i", 1, 0), P(HH, 1, 0, 0)) == HH.i


def test_pairing_conventions():
    Lq = L(HH, "i", "j", 0)
    Aq = P(HH, 1, 1, 0)
    u = HH("1+k")
    assert pairing(Lq, Aq.scaled(u)) == u * pairing(Lq, Aq)
    assert pairing(Lq.scaled(u), Aq) == pairing(Lq, Aq) * u


def test_non_neighboring():
    assert not non_neighboring(L(DUAL, 1, 0), P(DUAL, DUAL.eps, 1))
    I = M2F3(1)
    assert non_neighboring(HyperplaneLift([I, M2F3(0)]), PointLift([I, M2F3(0)]))
    assert non_neighboring(L(QQ, 1, 1, 1), A)
    assert not non_neighboring(L(QQ, 0, 1, 1), A)


def test_point_lift_checks():
    assert is_point_lift(P(DUAL, (1, 0), (0, 1)))
    assert not is_point_lift(PointLift([DUAL.eps, DUAL.zero]))
    assert not is_point_lift(P(QQ, 0, 0))


def test_decompose_examples():
    d = decompose(A + B, A, B)
    assert (d.alpha, d.beta) == (QQ(1), QQ(1))
    with pytest.raises(DegenerateEdge):
        decompose(A, A, B)
    assert decompose(A, A, B, strict=False).beta == QQ(0)
    Ah, Bh = P(HH, 1, 0, 1), P(HH, 0, 1, 1)
    X = PointLift(HH.i * x + HH.j * y for x, y in zip(Ah.coords, Bh.coords))
    d = decompose(X, Ah, Bh)
    assert (d.alpha, d.beta) == (HH.i, HH.j)
    with pytest.raises(NotOnLine):
        decompose(C, A, B)


def test_triangle_menelaus():
    good = triangle(C - A)
    r = multiratio_condition(good)
    assert r.flag and r.witness == QQ(1)
    assert menelaus_geometric(good).flag
    assert rank([list(b) for b in good.edges], QQ) == 2
    bad = triangle(C + A)
    r = multiratio_condition(bad)
    assert not r.flag and r.witness == QQ(-1)
    assert not menelaus_geometric(bad).flag
    assert rank([list(b) for b in bad.edges], QQ) == 3


def test_triangle_ceva():
    # Ceva and Menelaus differ by (-1)^m; on a triangle one holds iff the other fails with product -1
    assert multiratio_condition(triangle(C + A), "ceva").flag
    assert ceva_geometric(triangle(C + A)).flag
    assert not ceva_geometric(triangle(C - A)).flag


def test_even_faces_agree_on_both_conditions():
    verts = [P(QQ, *row) for row in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])]
    phis = [QQ(2), QQ(3), QQ("1/2"), QQ("1/3")]
    edges = [PointLift(x - p * y for x, y in zip(verts[i].coords, verts[(i + 1) % 4].coords))
             for i, p in enumerate(phis)]
    f = FaceChain(verts, edges)
    assert multiratio_condition(f).flag == multiratio_condition(f, "ceva").flag


def test_square_pyramid_base_coplanar():
    # base P, Q, R, S edge points of a quadrilateral in P^3 whose cross ratios multiply to 1
    verts = [P(QQ, *row) for row in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])]
    phis = [QQ(2), QQ(3), QQ("1/2"), QQ("1/3")]
    edges = [PointLift(x - p * y for x, y in zip(verts[i].coords, verts[(i + 1) % 4].coords))
             for i, p in enumerate(phis)]
    f = FaceChain(verts, edges)
    assert multiratio_condition(f).flag
    assert menelaus_geometric(f).flag
    assert menelaus_rank([e.coords for e in edges], QQ)


def test_geometric_preconditions():
    with pytest.raises(FaceTooLarge):
        menelaus_geometric(FaceChain([P(QQ, 1, 0), P(QQ, 0, 1), P(QQ, 1, 1)],
                                     [P(QQ, 1, 1), P(QQ, 1, 2), P(QQ, 2, 1)]))
    with pytest.raises(DependentVertices):
        menelaus_geometric(FaceChain([A, B, A + B], [A + P(QQ, 0, 2, 0), B + A + B, A + B + A]))
    with pytest.raises(NotDivisionRing):
        menelaus_geometric(FaceChain([P(DUAL, 1, 0), P(DUAL, 0, 1)], [P(DUAL, 1, 1), P(DUAL, 1, 2)]))


def test_hyperplane_through():
    good = triangle(C - A)
    ell = hyperplane_through(good)
    assert all(pairing(ell, b) == QQ(0) for b in good.edges)
    bad = triangle(C + A)
    ell = hyperplane_through(bad)
    assert pairing(ell, bad.edges[0]) == QQ(0) and pairing(ell, bad.edges[1]) == QQ(0)
    assert pairing(ell, bad.edges[2]) != QQ(0)
    ell0 = hyperplane_through(bad, omit=0)
    assert pairing(ell0, bad.edges[0]) != QQ(0)
    assert pairing(ell0, bad.edges[1]) == pairing(ell0, bad.edges[2]) == QQ(0)


def test_coherence_rational_example():
    c = QQ(5)
    A1, A2 = P(QQ, 1, 0, 0), P(QQ, 0, 1, 0)
    L1, L2 = L(QQ, 1, 1, 1), HyperplaneLift([QQ(1), QQ(1), c])
    assert coherent(A1, A2, L1, L2).flag
    assert coherent_geometric(A1, A2, L1, L2).flag
    assert coherent_dual_geometric(A1, A2, L1, L2).flag
    X = P(QQ, 1, -1, 0)
    assert pairing(L1, X) == QQ(0) and pairing(L2, X) == QQ(0)
    assert intersection_point(A1, A2, L1).normalized() == X


def test_coherence_quaternion_example():
    A1, A2 = P(HH, 1, 0, 0), P(HH, 0, 1, 0)
    L1, L2 = L(HH, 1, 1, 0), L(HH, "i", 1, 0)
    r = coherent(A1, A2, L1, L2)
    assert not r.flag
    assert coherence_ratio(A1, A2, L1, L2) == -HH.i
    assert not coherent_geometric(A1, A2, L1, L2).flag
    assert not coherent_dual_geometric(A1, A2, L1, L2).flag
    assert not coherent_subspace(A1.coords, A2.coords, L1.coords, L2.coords, HH)


def test_relative_coherence():
    A1, A2 = P(HH, 1, 0, 0), P(HH, 0, 1, 0)
    L1, L2 = L(HH, "i", "i", 0), L(HH, "2i", "i", 1)
    assert coherence_ratio(A1, A2, L1, L2) == HH("1/2")
    assert not coherent(A1, A2, L1, L2).flag
    assert coherent(A1, A2, L1, L2, NormalSubgroup.CENTRAL).flag


def test_matrix_ring_equal_hyperplanes():
    I, Z = M2F3(1), M2F3(0)
    a = M2F3([[1, 1], [0, 1]])
    A1, A2 = PointLift([I, Z, I]), PointLift([Z, I, a])
    L1 = HyperplaneLift([I, I, Z])
    assert coherent(A1, A2, L1, L1).flag
    assert coherent_geometric(A1, A2, L1, L1).flag


def test_generic_points_rational():
    pts = generic_points(QQ, 2, 4)
    assert [p.coords for p in pts] == [tuple(QQ(l ** k) for k in range(3)) for l in (1, 2, 3, 4)]
    for sub in itertools.combinations(pts, 3):
        assert independent([p.coords for p in sub])


def test_generic_points_quaternion():
    pts = generic_points(HH, 2, 5)
    for sub in itertools.combinations(pts, 3):
        assert module_rank([p.coords for p in sub], HH) == 3


def test_generic_points_small_field():
    F2 = PrimeField(2)
    pts = generic_points(F2, 2, 4)
    assert len(pts) == 4
    for sub in itertools.combinations(pts, 3):
        assert independent([p.coords for p in sub])
    with pytest.raises(SupplyExhausted):
        generic_points(F2, 2, 5)  # P^2(F_2) has no 5 points in general position


def test_generic_points_matrix_ring():
    R = MatrixRing(2, PrimeField(3))
    pts = generic_points(R, 2, 3)
    assert independent([p.coords for p in pts], R)


def test_basis_points():
    pts = basis_points(HH, 3, 4)
    assert independent([p.coords for p in pts])
    with pytest.raises(SupplyExhausted):
        basis_points(HH, 2, 4)


def test_normalization():
    X = P(HH, 0, "i", "j")
    assert X.normalized().coords[1] == HH.one
    assert X.scaled(HH("1+k")).normalized() == X.normalized()
    Lh = L(HH, 0, "k", 1)
    assert Lh.scaled(HH("2+j")).normalized() == Lh.normalized()


def test_json_round_trip():
    X = P(HH, "1/2", "i", 0)
    assert PointLift.from_json(HH, X.to_json()) == X
    Lh = L(HH, 1, "j", "k")
    assert HyperplaneLift.from_json(HH, Lh.to_json()) == Lh


def _quat():
    n = st.integers(-3, 3)
    return st.tuples(n, n, n, n).map(HH)


@given(st.lists(_quat().filter(lambda q: q.is_unit()), min_size=4, max_size=4))
def test_coherence_oracles_agree_quaternion(xs):
    A1, A2 = P(HH, 1, 0, 1), P(HH, 0, 1, 1)
    L1 = HyperplaneLift([xs[0], xs[1], HH.zero])
    L2 = HyperplaneLift([xs[2], xs[3], HH.zero])
    flag = coherent(A1, A2, L1, L2).flag
    assert coherent_geometric(A1, A2, L1, L2).flag == flag
    assert coherent_dual_geometric(A1, A2, L1, L2).flag == flag
    assert coherent_subspace(A1.coords, A2.coords, L1.coords, L2.coords, HH) == flag
    assert coherent_dual_subspace(A1.coords, A2.coords, L1.coords, L2.coords, HH) == flag
