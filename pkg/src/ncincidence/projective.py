"""Points, hyperplanes and the incidence predicates built from them.

Points of ``P^n(R)`` are represented by lifts: row vectors in ``R^(n+1)``
scaled on the left.  Hyperplanes are represented by covector lifts
``L`` acting by ``l(A) = sum_c A_c * L_c``; they are scaled on the right, so
``l(d A) == d l(A)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (DegenerateEdge, DependentVertices, FaceTooLarge, NoSolution, NotAUnit, NotDivisionRing,
                     NotOnLine, SupplyExhausted)
from .linalg import base_rows, concat_rows, independent, left_kernel, rank, solve_left, solve_right, span_equal
from .rings import NormalSubgroup, Ring, RingValue, in_subgroup


def _vec(x) -> tuple:
    return x.coords if isinstance(x, (PointLift, HyperplaneLift)) else tuple(x)


def _first_unit(coords):
    for x in coords:
        if x.is_unit():
            return x
    return None


@dataclass(frozen=True)
class PointLift:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def ring(self) -> Ring:
        return self.coords[0].ring

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def scaled(self, u: RingValue) -> PointLift:
        return PointLift(u * x for x in self.coords)

    def normalized(self) -> PointLift:
        """Left-scale so the first unit coordinate is 1."""
        u = _first_unit(self.coords)
        return self if u is None else self.scaled(u.inverse())

    def __add__(self, other):
        return PointLift(x + y for x, y in zip(self.coords, _vec(other)))

    def __sub__(self, other):
        return PointLift(x - y for x, y in zip(self.coords, _vec(other)))

    def __rmul__(self, u):
        return self.scaled(u)

    def to_json(self):
        return [x.to_json() for x in self.coords]

    @classmethod
    def from_json(cls, ring: Ring, obj):
        return cls(ring.from_json(x) for x in obj)


@dataclass(frozen=True)
class HyperplaneLift:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def ring(self) -> Ring:
        return self.coords[0].ring

    def scaled(self, u: RingValue) -> HyperplaneLift:
        return HyperplaneLift(x * u for x in self.coords)

    def normalized(self) -> HyperplaneLift:
        """Right-scale so the first unit coefficient is 1."""
        u = _first_unit(self.coords)
        return self if u is None else self.scaled(u.inverse())

    def __call__(self, A) -> RingValue:
        return pairing(self, A)

    def to_json(self):
        return [x.to_json() for x in self.coords]

    @classmethod
    def from_json(cls, ring: Ring, obj):
        return cls(ring.from_json(x) for x in obj)


def pairing(L, A) -> RingValue:
    """``l(A) = sum_c A_c * L_c``."""
    L, A = _vec(L), _vec(A)
    if len(L) != len(A):
        raise ValueError("dimension mismatch")
    out = A[0].ring.zero
    for a, l in zip(A, L):
        out = out + a * l
    return out


def non_neighboring(L, A) -> bool:
    return pairing(L, A).is_unit()


def is_point_lift(A) -> bool:
    """Whether ``A`` generates a free rank-one direct summand (where decidable)."""
    A = _vec(A)
    ring = A[0].ring
    if ring.is_division_ring:
        return any(not x.is_zero() for x in A)
    return independent([A], ring)


@dataclass(frozen=True)
class Decomposition:
    alpha: RingValue
    beta: RingValue

    @property
    def units(self) -> bool:
        return self.alpha.is_unit() and self.beta.is_unit()

    def connection_value(self) -> RingValue:
        """``-alpha^-1 beta``: the edge value of the induced connection."""
        return -(self.alpha.inverse() * self.beta)


def decompose(B, At, Ah, strict: bool = True) -> Decomposition:
    """``(alpha, beta)`` with ``B == alpha At + beta Ah``.

    With ``strict`` a non-unit coefficient raises :class:`DegenerateEdge`.
    """
    B, At, Ah = _vec(B), _vec(At), _vec(Ah)
    ring = B[0].ring
    try:
        alpha, beta = solve_left([At, Ah], B, ring)
    except NoSolution:
        raise NotOnLine("point is not on the line through the endpoints") from None
    dec = Decomposition(alpha, beta)
    if strict and not dec.units:
        raise DegenerateEdge("edge point coincides with an endpoint")
    return dec


@dataclass(frozen=True)
class FaceChain:
    """Vertex lifts ``A_1..A_m`` and edge lifts ``B_1..B_m``, ``B_i`` on ``A_i A_(i+1)``."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(_vec(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(_vec(b) for b in self.edges))
        if len(self.vertices) != len(self.edges) or len(self.vertices) < 2:
            raise ValueError("a face chain needs m >= 2 vertices and m edges")

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def ring(self) -> Ring:
        return self.vertices[0][0].ring

    def decompositions(self) -> list[Decomposition]:
        m = self.m
        return [decompose(self.edges[i], self.vertices[i], self.vertices[(i + 1) % m]) for i in range(m)]

    def rotated(self, k: int) -> FaceChain:
        return FaceChain(self.vertices[k:] + self.vertices[:k], self.edges[k:] + self.edges[:k])


@dataclass(frozen=True)
class ConditionResult:
    flag: bool
    witness: object

    def to_json(self):
        w = self.witness
        return {"flag": self.flag, "witness": w.to_json() if isinstance(w, RingValue) else w}


def multiratio_condition(f: FaceChain, mode: str = "menelaus") -> ConditionResult:
    """Ordered product ``prod(-alpha_i^-1 beta_i)`` (Menelaus) or ``prod(alpha_i^-1 beta_i)`` (Ceva)."""
    sign = {"menelaus": -1, "ceva": 1}[mode]
    prod = f.ring.one
    for dec in f.decompositions():
        prod = prod * (sign * (dec.alpha.inverse() * dec.beta))
    return ConditionResult(prod == f.ring.one, prod)


def _require_independent_vertices(f: FaceChain):
    ring = f.ring
    if not ring.is_division_ring:
        raise NotDivisionRing(f"geometric face conditions need a division ring, not {ring}")
    n1 = len(f.vertices[0])
    if f.m > n1:
        raise FaceTooLarge(f"face with {f.m} vertices in dimension {n1 - 1}")
    if rank(list(f.vertices), ring) != f.m:
        raise DependentVertices("face vertices are dependent")


def menelaus_geometric(f: FaceChain) -> ConditionResult:
    """The edge points are linearly dependent."""
    _require_independent_vertices(f)
    r = rank(list(f.edges), f.ring)
    return ConditionResult(r < f.m, r)


def ceva_geometric(f: FaceChain) -> ConditionResult:
    """The cevian hyperplanes of the face have a common point.

    In coordinates relative to the vertex frame, the hyperplane through
    ``B_i`` and every vertex except ``A_i, A_(i+1)`` is the covector
    ``kappa_i`` with ``kappa_i(A_i) = 1`` and ``kappa_i(A_(i+1)) = -beta_i^-1 alpha_i``.
    They share a point exactly when the matrix of these columns is singular.
    """
    _require_independent_vertices(f)
    ring = f.ring
    m = f.m
    K = [[ring.zero] * m for _ in range(m)]
    for i, dec in enumerate(f.decompositions()):
        K[i][i] = ring.one
        K[(i + 1) % m][i] = K[(i + 1) % m][i] - dec.beta.inverse() * dec.alpha
    r = rank(K, ring)
    return ConditionResult(r < m, r)


def hyperplane_through(f: FaceChain, omit: int | None = None) -> HyperplaneLift:
    """A covector vanishing on every edge point except ``B_omit`` (default: the last).

    Its values on the vertices follow ``lambda = 1`` at the vertex after the
    omitted edge and ``lambda_(i+1) = -beta_i^-1 alpha_i lambda_i`` around the
    face; coefficients outside the span of the vertices are set to zero.
    """
    m = f.m
    omit = m - 1 if omit is None else omit % m
    g = f.rotated((omit + 1) % m)
    ring = f.ring
    decs = g.decompositions()
    lam = [ring.one]
    for i in range(m - 1):
        lam.append(-(decs[i].beta.inverse() * decs[i].alpha) * lam[i])
    try:
        L = solve_right([list(v) for v in g.vertices], lam, ring)
    except NoSolution:
        raise DependentVertices("face vertices are dependent") from None
    return HyperplaneLift(L)


# -- coherence -----------------------------------------------------------

def coherence_ratio(A1, A2, L1, L2) -> RingValue:
    """``l1(A1) l1(A2)^-1 (l2(A1) l2(A2)^-1)^-1``: the holonomy around the tile."""
    p11, p12 = pairing(L1, A1), pairing(L1, A2)
    p21, p22 = pairing(L2, A1), pairing(L2, A2)
    for p in (p11, p12, p21, p22):
        if not p.is_unit():
            raise NotAUnit("a point and a hyperplane of the tile are neighboring")
    return p11 * p12.inverse() * p22 * p21.inverse()


def coherent(A1, A2, L1, L2, G=NormalSubgroup.TRIVIAL) -> ConditionResult:
    r = coherence_ratio(A1, A2, L1, L2)
    return ConditionResult(in_subgroup(r, G), r)


def _subspace_setup(ring: Ring, points, covectors):
    """Base-field rows for points and the matrix of each pairing map, in matching coordinates."""
    if ring.kind == "dual_over_rational":
        raise NotDivisionRing("geometric coherence over dual numbers is not supported; use coherent")
    base = ring.base
    rows = [base_rows(_vec(A), ring) for A in points]
    maps = []
    for L in covectors:
        L = _vec(L)
        P = []
        if ring.kind == "matrix_ring":
            for Lc in L:  # stacked k(n+1) x k block column
                for i in range(ring.k):
                    P.append([RingValue(base, x) for x in Lc.data[i]])
        else:
            for Lc in L:
                for e in ring.basis():
                    P.append(list((e * Lc).coords()))
        maps.append(P)
    return base, rows, maps


def _matmul(A, B, base):
    add, mul, zero = base._add, base._mul, base._zero
    cols = [[row[j].data for row in B] for j in range(len(B[0]))]
    out = []
    for row in A:
        r = [x.data for x in row]
        vals = []
        for col in cols:
            acc = zero
            for x, y in zip(r, col):
                if not base._is_zero(x) and not base._is_zero(y):
                    acc = add(acc, mul(x, y))
            vals.append(RingValue(base, acc))
        out.append(vals)
    return out


def _meet_kernel(U, P, base):
    """Rows spanning ``rowspace(U) ∩ {X : X P = 0}``."""
    Y = left_kernel(_matmul(U, P, base), base)
    return _matmul(Y, U, base) if Y else []


def coherent_geometric(A1, A2, L1, L2) -> ConditionResult:
    """``(A1 + A2) ∩ l1 == (A1 + A2) ∩ l2`` computed on subspaces over the base field."""
    ring = _vec(A1)[0].ring
    base, (R1, R2), (P1, P2) = _subspace_setup(ring, [A1, A2], [L1, L2])
    U = concat_rows(R1, R2)
    K1 = _meet_kernel(U, P1, base)
    K2 = _meet_kernel(U, P2, base)
    same = span_equal(K1, K2, base)
    return ConditionResult(same, rank(K1, base) if K1 else 0)


def coherent_dual_geometric(A1, A2, L1, L2) -> ConditionResult:
    """``A1 + (l1 ∩ l2) == A2 + (l1 ∩ l2)`` computed over the base field."""
    ring = _vec(A1)[0].ring
    base, (R1, R2), (P1, P2) = _subspace_setup(ring, [A1, A2], [L1, L2])
    P = [r1 + r2 for r1, r2 in zip(P1, P2)]
    W = left_kernel(P, base)
    same = span_equal(concat_rows(R1, W), concat_rows(R2, W), base)
    return ConditionResult(same, len(W))


def intersection_point(A1, A2, L1) -> PointLift:
    """The point ``l1(A1)^-1 A1 - l1(A2)^-1 A2`` of the line ``A1 A2`` lying on ``l1``."""
    A1, A2 = _vec(A1), _vec(A2)
    a = pairing(L1, A1).inverse()
    b = pairing(L1, A2).inverse()
    return PointLift(a * x - b * y for x, y in zip(A1, A2))


# -- generic points -------------------------------------------------------

def _general_position(points, n1, ring) -> bool:
    k = min(n1, len(points))
    return all(independent([points[i] for i in sub], ring) for sub in itertools.combinations(range(len(points)), k))


def _extends(points, cand, n1, ring) -> bool:
    k = min(n1, len(points) + 1) - 1
    for sub in itertools.combinations(range(len(points)), k):
        if not independent([points[i] for i in sub] + [cand], ring):
            return False
    return True


def generic_points(ring: Ring, n: int, count: int, exclusions=()) -> list[PointLift]:
    """``count`` point lifts in ``P^n`` with every ``n+1`` of them independent.

    Moment-curve vectors ``(1, lam, ..., lam^n)`` with central ``lam = 1, 2,
    3, ...`` come first; over ``F_p`` the residues run out after ``p`` values,
    the point ``(0, ..., 0, 1)`` is added, and then a greedy exhaustive search
    extends the set.  ``exclusions`` are existing points the result must stay
    in general position with.
    """
    n1 = n + 1
    excl = [tuple(_vec(x)) for x in exclusions]
    chosen: list[tuple] = []

    def offer(v) -> bool:
        if _extends(excl + chosen, v, n1, ring):
            chosen.append(v)
            return True
        return False

    p = ring.characteristic
    # lam = p is the residue 0 over F_p
    lams = range(1, p + 1) if p else range(1, count + 1 + 50 * (len(excl) + 1))
    for lam_i in lams:
        if len(chosen) >= count:
            break
        lam = ring.prime_subfield_element(lam_i)
        v = [ring.one]
        for _ in range(n):
            v.append(v[-1] * lam)
        if excl:
            offer(tuple(v))
        else:
            chosen.append(tuple(v))  # distinct Vandermonde rows are in general position
    if len(chosen) < count and p:
        offer(tuple([ring.zero] * n + [ring.one]))
    if len(chosen) < count and p and ring.is_division_ring and ring.kind == "prime_field":
        for coords in itertools.product(range(p), repeat=n1):
            if len(chosen) >= count:
                break
            nz = [c for c in coords if c]
            if not nz or nz[0] != 1:
                continue  # one representative per projective point
            offer(tuple(ring(c) for c in coords))
    if len(chosen) < count:
        raise SupplyExhausted(f"only {len(chosen)} points in general position found in P^{n}({ring.name})")
    return [PointLift(v) for v in chosen[:count]]


def basis_points(ring: Ring, n: int, count: int) -> list[PointLift]:
    """Standard coordinate vectors ``e_0, ..., e_(count-1)``."""
    if count > n + 1:
        raise SupplyExhausted(f"{count} basis vectors do not fit in dimension {n}")
    return [PointLift(ring.one if c == i else ring.zero for c in range(n + 1)) for i in range(count)]
