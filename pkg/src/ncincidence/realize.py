"""Realizations of subdivisions and tilings, and their synthesis from connections.

A subdivision realization assigns a point to every vertex and a point on
every edge; a tiling realization assigns a point to every black vertex and a
hyperplane to every white vertex.  Connections are read off realizations
(``-alpha^-1 beta`` on subdivision edges, the pairing on tiling edges) and,
conversely, realizations are built from connections so that the face
conditions fail exactly where the connection has holonomy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connections import Connection
from .errors import (DegenerateEdge, FaceTooLarge, IncidenceError, MapError, NotAUnit, NotOnLine,
                     RealizationError)
from .linalg import independent, solve_right
from .projective import (ConditionResult, FaceChain, HyperplaneLift, PointLift, basis_points, ceva_geometric,
                         coherent, coherent_geometric, decompose, generic_points, hyperplane_through,
                         intersection_point, is_point_lift, menelaus_geometric, multiratio_condition,
                         non_neighboring, pairing)
from .rings import NormalSubgroup, Ring, ring_from_json
from .surface import CombMap, QuadTiling, is_simple, map_from_json, subdivision_of, tiling_of


@dataclass(frozen=True)
class SynthesisRecipe:
    method: str
    dim: int
    strategy: str
    seed: object = None
    notes: tuple = ()

    def to_json(self):
        return {"method": self.method, "dim": self.dim, "strategy": self.strategy,
                "seed": self.seed, "notes": list(self.notes)}


@dataclass(frozen=True)
class SubdivisionRealization:
    map: CombMap
    ring: Ring
    dim: int
    vertices: tuple  # PointLift per vertex
    edges: tuple     # PointLift per edge
    mode: str = "geometric"
    recipe: SynthesisRecipe | None = None

    def edge_point(self, d: int) -> PointLift:
        return self.edges[self.map.edge_of(d)]

    def face_chain(self, f: int) -> FaceChain:
        darts = self.map.faces[f]
        return FaceChain([self.vertices[self.map.tail(d)] for d in darts],
                         [self.edge_point(d) for d in darts])

    def to_json(self) -> dict:
        m = self.map
        return {
            "schema": 1,
            "type": "subdivision",
            "ring": self.ring.descriptor(),
            "dim": self.dim,
            "mode": self.mode,
            "map": m.to_json(),
            "vertices": {str(m.vertex_labels[v]): A.to_json() for v, A in enumerate(self.vertices)},
            "edges": {str(m.edge_labels[e]): B.to_json() for e, B in enumerate(self.edges)},
            "recipe": self.recipe.to_json() if self.recipe else None,
        }


@dataclass(frozen=True)
class TilingRealization:
    map: QuadTiling
    ring: Ring
    dim: int
    points: dict       # black vertex -> PointLift
    hyperplanes: dict  # white vertex -> HyperplaneLift
    generic: bool = True
    recipe: SynthesisRecipe | None = None

    def tile_lifts(self, f: int):
        A1, A2, l1, l2 = self.map.tile(f)
        return self.points[A1], self.points[A2], self.hyperplanes[l1], self.hyperplanes[l2]

    def to_json(self) -> dict:
        t = self.map
        return {
            "schema": 1,
            "type": "tiling",
            "ring": self.ring.descriptor(),
            "dim": self.dim,
            "generic": self.generic,
            "map": t.to_json(),
            "points": {str(t.vertex_labels[v]): self.points[v].to_json() for v in t.black_vertices},
            "hyperplanes": {str(t.vertex_labels[w]): self.hyperplanes[w].to_json() for w in t.white_vertices},
            "recipe": self.recipe.to_json() if self.recipe else None,
        }


def realization_from_json(obj: dict):
    ring = ring_from_json(obj["ring"])
    m = map_from_json(obj["map"])
    if obj["type"] == "subdivision":
        verts = tuple(PointLift.from_json(ring, obj["vertices"][str(lab)]) for lab in m.vertex_labels)
        edges = tuple(PointLift.from_json(ring, obj["edges"][str(lab)]) for lab in m.edge_labels)
        return SubdivisionRealization(m, ring, obj["dim"], verts, edges, obj["mode"])
    pts = {v: PointLift.from_json(ring, obj["points"][str(m.vertex_labels[v])]) for v in m.black_vertices}
    hps = {w: HyperplaneLift.from_json(ring, obj["hyperplanes"][str(m.vertex_labels[w])]) for w in m.white_vertices}
    return TilingRealization(m, ring, obj["dim"], pts, hps, obj["generic"])


# -- validation ---------------------------------------------------------------

@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)  # (cell kind, cell label, reason)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, kind, label, reason):
        self.failures.append((kind, str(label), reason))

    def to_json(self):
        return {"ok": self.ok, "failures": [list(f) for f in self.failures]}


def validate(r) -> ValidationReport:
    if isinstance(r, TilingRealization):
        return _validate_tiling(r)
    return _validate_subdivision(r)


def _validate_subdivision(r: SubdivisionRealization) -> ValidationReport:
    m = r.map
    rep = ValidationReport()
    for v, A in enumerate(r.vertices):
        if len(A.coords) != r.dim + 1 or not is_point_lift(A):
            rep.add("vertex", m.vertex_labels[v], "not a point lift")
    for e in range(m.num_edges):
        d = m.edge_dart(e)
        At, Ah = r.vertices[m.tail(d)], r.vertices[m.head(d)]
        if not independent([At.coords, Ah.coords], r.ring):
            rep.add("edge", m.edge_labels[e], "endpoints coincide")
            continue
        try:
            decompose(r.edges[e], At, Ah)
        except NotOnLine:
            rep.add("edge", m.edge_labels[e], "NotOnLine")
        except DegenerateEdge:
            rep.add("edge", m.edge_labels[e], "DegenerateEdge")
    if r.mode == "geometric":
        for f in range(m.num_faces):
            pts = [r.vertices[v].coords for v in m.face_vertices(f)]
            if len(pts) > r.dim + 1:
                rep.add("face", m.face_labels[f], "FaceTooLarge")
            elif not independent(pts, r.ring):
                rep.add("face", m.face_labels[f], "vertices dependent")
    return rep


def _validate_tiling(r: TilingRealization) -> ValidationReport:
    t = r.map
    rep = ValidationReport()
    for v in t.black_vertices:
        if not is_point_lift(r.points[v]):
            rep.add("vertex", t.vertex_labels[v], "not a point lift")
    for e in range(t.num_edges):
        d = t.black_dart(t.edge_dart(e))
        if not non_neighboring(r.hyperplanes[t.head(d)], r.points[t.tail(d)]):
            rep.add("edge", t.edge_labels[e], "incident")
    if r.generic:
        for w in t.white_vertices:
            nbrs = sorted({t.head(d) for d in t.vertex_darts[w]})
            if len(nbrs) > r.dim + 1 or not independent([r.points[b].coords for b in nbrs], r.ring):
                rep.add("vertex", t.vertex_labels[w], "neighbors dependent")
    return rep


def _require_valid(r):
    rep = validate(r)
    if not rep.ok:
        raise RealizationError(f"invalid realization: {rep.failures[:3]}")
    return rep


# -- connections from realizations -----------------------------------------------

def connection_of_subdivision(r: SubdivisionRealization) -> Connection:
    """``phi(d) = -alpha^-1 beta`` where ``B = alpha A_tail + beta A_head``."""
    _require_valid(r)
    m = r.map
    table = {}
    for e in range(m.num_edges):
        d = m.edge_dart(e)
        table[d] = decompose(r.edges[e], r.vertices[m.tail(d)], r.vertices[m.head(d)]).connection_value()
    return Connection.from_darts(m, r.ring, table)


def connection_of_tiling(r: TilingRealization) -> Connection:
    """``phi(black -> white) = l_white(A_black)``."""
    _require_valid(r)
    t = r.map
    table = {}
    for e in range(t.num_edges):
        d = t.black_dart(t.edge_dart(e))
        table[d] = pairing(r.hyperplanes[t.head(d)], r.points[t.tail(d)])
    return Connection.from_darts(t, r.ring, table)


# -- face conditions -------------------------------------------------------------

def face_condition(r: SubdivisionRealization, f: int, mode: str = "menelaus",
                   route: str = "algebraic") -> ConditionResult:
    chain = r.face_chain(f)
    if route == "algebraic":
        return multiratio_condition(chain, mode)
    return menelaus_geometric(chain) if mode == "menelaus" else ceva_geometric(chain)


def tile_condition(r: TilingRealization, f: int, G=NormalSubgroup.TRIVIAL,
                   route: str = "algebraic") -> ConditionResult:
    A1, A2, L1, L2 = r.tile_lifts(f)
    if route == "algebraic":
        return coherent(A1, A2, L1, L2, G)
    return coherent_geometric(A1, A2, L1, L2)


def condition_flags(r, mode: str = "menelaus", G=NormalSubgroup.TRIVIAL, route: str = "algebraic") -> list[bool]:
    if isinstance(r, TilingRealization):
        return [tile_condition(r, f, G, route).flag for f in range(r.map.num_faces)]
    return [face_condition(r, f, mode, route).flag for f in range(r.map.num_faces)]


# -- synthesis ----------------------------------------------------------------

def synthesize_subdivision(m: CombMap, c: Connection, n: int, mode: str = "geometric",
                           ceva: bool = False) -> SubdivisionRealization:
    """Vertex lifts in general position and edge lifts ``B_e = A_t - phi(e) A_h``.

    With ``ceva`` the edge lifts are ``A_t + phi(e) A_h`` so that the Ceva
    product around each face equals the holonomy instead.
    """
    if mode not in ("geometric", "algebraic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "geometric" and m.max_face_size > n + 1:
        raise FaceTooLarge(f"a face has {m.max_face_size} vertices but n + 1 = {n + 1}")
    ring = c.ring
    verts = tuple(generic_points(ring, n, m.num_vertices))
    edges = []
    for e in range(m.num_edges):
        d = m.edge_dart(e)
        At, Ah = verts[m.tail(d)], verts[m.head(d)]
        phi = c[d]
        coef = phi if ceva else -phi
        edges.append(PointLift(x + coef * y for x, y in zip(At.coords, Ah.coords)))
    recipe = SynthesisRecipe("synthesize_subdivision", n, "generic", notes=("ceva",) if ceva else ())
    r = SubdivisionRealization(m, ring, n, verts, tuple(edges), mode, recipe)
    _require_valid(r)
    return r


def synthesize_tiling(t: QuadTiling, c: Connection, n: int, strategy: str = "generic") -> TilingRealization:
    """Black points (generic or basis vectors) and white covectors with ``l_w(A_b) = phi(b -> w)``."""
    ring = c.ring
    blacks = t.black_vertices
    if strategy == "generic":
        if not is_simple(t):
            raise MapError("the generic strategy needs a simple tiling")
        if n < t.max_white_degree - 1:
            raise FaceTooLarge(f"white degree {t.max_white_degree} needs n >= {t.max_white_degree - 1}")
        pts = generic_points(ring, n, len(blacks))
    elif strategy == "basis":
        if n < len(blacks) - 1:
            raise FaceTooLarge(f"{len(blacks)} black vertices need n >= {len(blacks) - 1}")
        pts = basis_points(ring, n, len(blacks))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    points = dict(zip(blacks, pts))
    hyperplanes = {}
    for w in t.white_vertices:
        wanted = {}
        for d in t.vertex_darts[w]:
            bd = t.reversal[d]  # black -> white
            b = t.tail(bd)
            if b in wanted and wanted[b] != c[bd]:
                raise RealizationError("parallel edges carry different values")
            wanted[b] = c[bd]
        nbrs = sorted(wanted)
        L = solve_right([list(points[b].coords) for b in nbrs], [wanted[b] for b in nbrs], ring)
        hyperplanes[w] = HyperplaneLift(L)
    recipe = SynthesisRecipe("synthesize_tiling", n, strategy)
    r = TilingRealization(t, ring, n, points, hyperplanes, generic=strategy == "generic", recipe=recipe)
    _require_valid(r)
    for d in range(t.num_darts):
        if t.is_black(t.tail(d)) and pairing(hyperplanes[t.head(d)], points[t.tail(d)]) != c[d]:
            raise AssertionError("covector fit failed")
    return r


# -- tiling <-> subdivision ---------------------------------------------------------

def _tiling_vertex_maps(p: CombMap, t: QuadTiling):
    """Tiling vertex of each vertex and of each face of ``p`` (``t = tiling_of(p)``)."""
    labels = {str(lab): i for i, lab in enumerate(t.vertex_labels)}
    vl, fl = [str(x) for x in p.vertex_labels], [str(x) for x in p.face_labels]
    if not all(x in labels for x in vl + fl) or set(vl) & set(fl):
        vl, fl = [f"v:{x}" for x in vl], [f"f:{x}" for x in fl]
    return [labels[x] for x in vl], [labels[x] for x in fl]


def upgrade_to_tiling(r: SubdivisionRealization, defect_face: int | None = None) -> tuple[TilingRealization, int | None]:
    """Tiling realization: each face becomes the hyperplane through its edge points.

    On ``defect_face`` the edge with the largest dart id is left out of the
    fit.  Returns the realization and the tile that can then fail (the tile
    of the omitted edge), or ``None``.
    """
    m = r.map
    for f in range(m.num_faces):
        if f != defect_face and not face_condition(r, f).flag:
            raise RealizationError(f"Menelaus fails on face {m.face_labels[f]} outside the defect face")
    t = tiling_of(m)
    vmap, fmap = _tiling_vertex_maps(m, t)
    points = {vmap[v]: A for v, A in enumerate(r.vertices)}
    hyperplanes = {}
    defect_tile = None
    for f in range(m.num_faces):
        chain = r.face_chain(f)
        omit = None
        if f == defect_face:
            d = max(m.faces[f])
            omit = m.position_in_face(d)
            defect_tile = m.edge_of(d)
        hyperplanes[fmap[f]] = hyperplane_through(chain, omit)
    out = TilingRealization(t, r.ring, r.dim, points, hyperplanes, generic=False,
                            recipe=SynthesisRecipe("upgrade_to_tiling", r.dim, "hyperplane_through"))
    _require_valid(out)
    return out, defect_tile


def downgrade_to_subdivision(r: TilingRealization, defect_tile: int | None = None) -> tuple[SubdivisionRealization, int | None]:
    """Subdivision realization: each tile becomes the point of ``A1 A2`` on ``l1``.

    ``l1`` is the white vertex of the tile with the smaller id.  Returns the
    realization and the face that can then fail (the other white vertex of
    the defect tile), or ``None``.
    """
    t = r.map
    if not is_simple(t):
        raise MapError("downgrade needs a simple tiling")
    if not r.generic:
        raise RealizationError("downgrade needs a generic realization")
    for f in range(t.num_faces):
        if f != defect_tile and not tile_condition(r, f).flag:
            raise RealizationError(f"tile {t.face_labels[f]} is incoherent outside the defect tile")
    p = subdivision_of(t)
    bl = {str(t.vertex_labels[v]): v for v in t.black_vertices}
    verts = tuple(r.points[bl[str(lab)]] for lab in p.vertex_labels)
    edges = []
    for e in range(p.num_edges):
        tile = t.face_index(p.edge_labels[e])
        A1, A2, w1, w2 = t.tile(tile)
        edges.append(intersection_point(r.points[A1], r.points[A2], r.hyperplanes[min(w1, w2)]))
    defect_face = None
    if defect_tile is not None:
        _, _, w1, w2 = t.tile(defect_tile)
        defect_face = p.face_index(t.vertex_labels[max(w1, w2)])
    out = SubdivisionRealization(p, r.ring, r.dim, verts, tuple(edges), "geometric",
                                 SynthesisRecipe("downgrade_to_subdivision", r.dim, "intersection"))
    try:
        _require_valid(out)
    except IncidenceError as exc:
        raise RealizationError(str(exc)) from exc
    return out, defect_face
