"""Combinatorial maps on closed orientable surfaces.

A map on ``2E`` darts is given by two permutations:

* ``reversal`` -- a fixed-point-free involution pairing the two darts of an edge;
* ``rotation`` -- the cyclic order of darts leaving each vertex.

A dart leaves its *tail* vertex.  The face successor is
``succ(d) = rotation[reversal[d]]``: walk along ``d`` to its head, then turn to
the next dart leaving the head.  Vertices, edges and faces are the orbits of
``rotation``, ``reversal`` and ``succ``; each is numbered by the order of its
least dart, and a face boundary always starts at its least dart.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import MapError

BLACK = "black"
WHITE = "white"


def _orbits(perm: list[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        if d != start:
            raise MapError("not a permutation")
        out.append(cyc)
    return out


def _check_perm(perm, size, name):
    if len(perm) != size or sorted(perm) != list(range(size)):
        raise MapError(f"{name} is not a permutation of {size} darts")


class CombMap:
    """An immutable combinatorial map, optionally with labels and a coloring."""

    kind = "map"

    def __init__(self, reversal, rotation, vertex_labels=None, edge_labels=None,
                 face_labels=None, name: str = ""):
        reversal = [int(x) for x in reversal]
        rotation = [int(x) for x in rotation]
        n = len(reversal)
        if n == 0 or n % 2:
            raise MapError("a map needs a positive even number of darts")
        _check_perm(reversal, n, "reversal")
        _check_perm(rotation, n, "rotation")
        for d in range(n):
            if reversal[d] == d or reversal[reversal[d]] != d:
                raise MapError("reversal must be a fixed-point-free involution")
        self.reversal = tuple(reversal)
        self.rotation = tuple(rotation)
        self.succ = tuple(rotation[reversal[d]] for d in range(n))
        self.name = name

        self.vertex_darts = tuple(tuple(o) for o in _orbits(rotation))
        self.edge_darts = tuple(tuple(sorted(o)) for o in _orbits(reversal))
        self.faces = tuple(tuple(o) for o in _orbits(list(self.succ)))
        self._dart_vertex = [0] * n
        for v, orb in enumerate(self.vertex_darts):
            for d in orb:
                self._dart_vertex[d] = v
        self._dart_edge = [0] * n
        for e, orb in enumerate(self.edge_darts):
            for d in orb:
                self._dart_edge[d] = e
        self._dart_face = [0] * n
        self._dart_pos = [0] * n
        for f, orb in enumerate(self.faces):
            for i, d in enumerate(orb):
                self._dart_face[d] = f
                self._dart_pos[d] = i

        if not self.is_connected():
            raise MapError("map is disconnected")
        chi = self.num_vertices - self.num_edges + self.num_faces
        if chi > 2 or chi % 2:
            raise MapError(f"Euler characteristic {chi} gives no orientable genus")
        self.genus = (2 - chi) // 2

        self.vertex_labels = tuple(vertex_labels) if vertex_labels else tuple(f"v{i}" for i in range(self.num_vertices))
        self.edge_labels = tuple(edge_labels) if edge_labels else tuple(f"e{i}" for i in range(self.num_edges))
        self.face_labels = tuple(face_labels) if face_labels else tuple(f"F{i}" for i in range(self.num_faces))
        if len(self.vertex_labels) != self.num_vertices or len(self.edge_labels) != self.num_edges \
                or len(self.face_labels) != self.num_faces:
            raise MapError("label count does not match cell count")

    # -- counts and incidence -------------------------------------------
    @property
    def num_darts(self) -> int:
        return len(self.reversal)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_darts)

    @property
    def num_edges(self) -> int:
        return len(self.edge_darts)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def tail(self, d: int) -> int:
        return self._dart_vertex[d]

    def head(self, d: int) -> int:
        return self._dart_vertex[self.reversal[d]]

    def edge_of(self, d: int) -> int:
        return self._dart_edge[d]

    def face_of(self, d: int) -> int:
        return self._dart_face[d]

    def position_in_face(self, d: int) -> int:
        return self._dart_pos[d]

    def face_vertices(self, f: int) -> list[int]:
        return [self.tail(d) for d in self.faces[f]]

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    @property
    def max_face_size(self) -> int:
        return max(len(f) for f in self.faces)

    def edge_dart(self, e: int) -> int:
        """Canonical (least) dart of an edge."""
        return self.edge_darts[e][0]

    def darts_from(self, v: int) -> list[int]:
        return sorted(self.vertex_darts[v])

    def degree(self, v: int) -> int:
        return len(self.vertex_darts[v])

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for d in self.vertex_darts[v]:
                h = self._dart_vertex[self.reversal[d]]
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return len(seen) == self.num_vertices

    def is_closed_walk(self, darts) -> bool:
        darts = list(darts)
        if not darts:
            return False
        return all(self.head(darts[i]) == self.tail(darts[(i + 1) % len(darts)]) for i in range(len(darts)))

    def vertex_index(self, label: str) -> int:
        return self.vertex_labels.index(label)

    def face_index(self, label) -> int:
        if isinstance(label, int):
            return label
        return self.face_labels.index(label)

    def edge_index(self, label) -> int:
        if isinstance(label, int):
            return label
        return self.edge_labels.index(label)

    def dart_between(self, u: int, v: int) -> int:
        """The least dart from vertex ``u`` to vertex ``v``."""
        for d in self.darts_from(u):
            if self.head(d) == v:
                return d
        raise MapError(f"no edge between {u} and {v}")

    def summary(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "vertices": self.num_vertices,
            "edges": self.num_edges,
            "faces": self.num_faces,
            "genus": self.genus,
            "face_sizes": [len(f) for f in self.faces],
        }

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "name": self.name,
            "darts": self.num_darts,
            "reversal": list(self.reversal),
            "rotation": list(self.rotation),
            "vertex_labels": list(self.vertex_labels),
            "edge_labels": list(self.edge_labels),
            "face_labels": list(self.face_labels),
        }

    def __repr__(self):
        return (f"{type(self).__name__}({self.name!r}, V={self.num_vertices}, "
                f"E={self.num_edges}, F={self.num_faces}, g={self.genus})")


class PolygonalSubdivision(CombMap):
    kind = "subdivision"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if any(len(f) < 2 for f in self.faces):
            raise MapError("every face of a subdivision needs at least two vertices")


class QuadTiling(CombMap):
    """A map whose faces are quadrilaterals with a proper two-coloring."""

    kind = "tiling"

    def __init__(self, reversal, rotation, colors, **kwargs):
        super().__init__(reversal, rotation, **kwargs)
        colors = tuple(colors)
        if len(colors) != self.num_vertices or not set(colors) <= {BLACK, WHITE}:
            raise MapError("colors must give black or white for every vertex")
        self.colors = colors
        for d in range(self.num_darts):
            if colors[self.tail(d)] == colors[self.head(d)]:
                raise MapError(f"edge {self.edge_labels[self.edge_of(d)]} joins equal colors")
        if any(len(f) != 4 for f in self.faces):
            raise MapError("every tile must be a quadrilateral")

    @cached_property
    def black_vertices(self) -> tuple:
        return tuple(v for v in range(self.num_vertices) if self.colors[v] == BLACK)

    @cached_property
    def white_vertices(self) -> tuple:
        return tuple(v for v in range(self.num_vertices) if self.colors[v] == WHITE)

    def is_black(self, v: int) -> bool:
        return self.colors[v] == BLACK

    def black_dart(self, d: int) -> int:
        """The dart of ``d``'s edge pointing from black to white."""
        return d if self.is_black(self.tail(d)) else self.reversal[d]

    def tile(self, f: int) -> tuple[int, int, int, int]:
        """Tile as ``(A1, A2, l1, l2)``: the black vertices in boundary order, then the whites."""
        vs = self.face_vertices(f)
        blacks = [v for v in vs if self.is_black(v)]
        whites = [v for v in vs if not self.is_black(v)]
        return blacks[0], blacks[1], whites[0], whites[1]

    @property
    def max_white_degree(self) -> int:
        return max(self.degree(w) for w in self.white_vertices)

    def to_json(self) -> dict:
        out = super().to_json()
        out["colors"] = list(self.colors)
        return out


def map_from_json(obj: dict) -> CombMap:
    kwargs = dict(
        vertex_labels=obj.get("vertex_labels"),
        edge_labels=obj.get("edge_labels"),
        face_labels=obj.get("face_labels"),
        name=obj.get("name", ""),
    )
    kind = obj.get("kind", "map")
    if kind == "tiling" or "colors" in obj:
        return QuadTiling(obj["reversal"], obj["rotation"], obj["colors"], **kwargs)
    if kind == "subdivision":
        return PolygonalSubdivision(obj["reversal"], obj["rotation"], **kwargs)
    return CombMap(obj["reversal"], obj["rotation"], **kwargs)


def build_map(darts, reversal, rotation) -> CombMap:
    """Build a map from explicit permutations; darts must be ``0..2E-1``."""
    if list(darts) != list(range(len(reversal))):
        raise MapError("darts must be numbered 0..2E-1")
    return CombMap(reversal, rotation)


def from_faces(faces, name: str = "", colors: dict | None = None, face_labels=None, cls=None):
    """Build a map from oriented face boundaries.

    ``faces`` is a list of boundaries, each a list of steps
    ``(tail_vertex_label, edge_name)``.  The head of a step is the tail of the
    next step.  Every edge name must occur exactly twice, in opposite
    directions.  Dart ids are assigned in reading order, so face ``i`` of the
    result is ``faces[i]`` starting from its first step.
    """
    steps = []
    succ = []
    for face in faces:
        start = len(steps)
        m = len(face)
        if m == 0:
            raise MapError("empty face")
        for i, (tail, edge) in enumerate(face):
            head = face[(i + 1) % m][0]
            steps.append((tail, head, edge))
            succ.append(start + (i + 1) % m)
    by_edge: dict = {}
    for d, (_, _, e) in enumerate(steps):
        by_edge.setdefault(e, []).append(d)
    reversal = [0] * len(steps)
    edge_order = []
    for e, ds in by_edge.items():
        if len(ds) != 2:
            raise MapError(f"edge {e!r} occurs {len(ds)} times")
        a, b = ds
        if steps[a][0] != steps[b][1] or steps[a][1] != steps[b][0]:
            raise MapError(f"edge {e!r} is not traversed in opposite directions")
        reversal[a], reversal[b] = b, a
        edge_order.append((a, e))
    rotation = [succ[reversal[d]] for d in range(len(steps))]

    orbits = _orbits(rotation)
    vertex_labels = []
    for orb in orbits:
        labels = {steps[d][0] for d in orb}
        if len(labels) != 1:
            raise MapError(f"vertex orbit mixes labels {sorted(map(str, labels))}")
        vertex_labels.append(labels.pop())
    if len(set(vertex_labels)) != len(vertex_labels):
        raise MapError("a vertex label names more than one vertex")
    edge_labels = [e for _, e in sorted(edge_order)]
    kwargs = dict(vertex_labels=vertex_labels, edge_labels=edge_labels,
                  face_labels=face_labels, name=name)
    if colors is not None:
        return QuadTiling(reversal, rotation, [colors[v] for v in vertex_labels], **kwargs)
    cls = cls or PolygonalSubdivision
    return cls(reversal, rotation, **kwargs)


def from_vertex_faces(faces, name="", colors=None, face_labels=None, cls=None):
    """``from_faces`` for maps without parallel edges: faces are vertex cycles."""
    steps = []
    for face in faces:
        m = len(face)
        steps.append([(face[i], "~".join(sorted((str(face[i]), str(face[(i + 1) % m]))))) for i in range(m)])
    return from_faces(steps, name=name, colors=colors, face_labels=face_labels, cls=cls)


# -- tilings and subdivisions --------------------------------------------

def is_simple(t: CombMap) -> bool:
    """No two edges join the same pair of vertices (and no loops)."""
    seen = set()
    for e in range(t.num_edges):
        d = t.edge_dart(e)
        u, v = t.tail(d), t.head(d)
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
    return True


def tiling_of(p: CombMap, name: str = "") -> QuadTiling:
    """Quadrilateral tiling of a subdivision.

    Black vertices are the vertices of ``p``, white vertices its faces, and
    each edge of ``p`` becomes one tile.  Tile ``i`` is edge ``i`` of ``p``.
    """
    vl = list(p.vertex_labels)
    fl = list(p.face_labels)
    if set(map(str, vl)) & set(map(str, fl)):
        vl = [f"v:{x}" for x in vl]
        fl = [f"f:{x}" for x in fl]
    # one tiling edge per corner; a corner is named by its dart in p
    counts: dict = {}
    corner_name = {}
    for d in range(p.num_darts):
        base = f"{vl[p.tail(d)]}|{fl[p.face_of(d)]}"
        counts[base] = counts.get(base, 0) + 1
        corner_name[d] = base if counts[base] == 1 else f"{base}#{counts[base]}"
    tiles = []
    for e in range(p.num_edges):
        x = p.edge_dart(e)
        rx = p.reversal[x]
        u, v = vl[p.tail(x)], vl[p.head(x)]
        wf, wg = fl[p.face_of(x)], fl[p.face_of(rx)]
        tiles.append([
            (v, corner_name[p.succ[x]]),
            (wf, corner_name[x]),
            (u, corner_name[p.succ[rx]]),
            (wg, corner_name[rx]),
        ])
    colors = {x: BLACK for x in vl}
    colors.update({x: WHITE for x in fl})
    return from_faces(tiles, name=name or f"tiling_of({p.name})", colors=colors,
                      face_labels=list(p.edge_labels))


def subdivision_of(t: QuadTiling, name: str = "") -> PolygonalSubdivision:
    """Subdivision of a simple tiling: blacks become vertices, whites faces, tiles edges."""
    if not is_simple(t):
        raise MapError("subdivision_of needs a simple tiling")
    faces = []
    face_labels = []
    for w in t.white_vertices:
        d0 = min(t.vertex_darts[w])
        ds = [d0]
        while t.rotation[ds[-1]] != d0:
            ds.append(t.rotation[ds[-1]])
        r = len(ds)
        steps = []
        for k in range(r - 1, -1, -1):
            tile = t.face_of(t.reversal[ds[k]])
            b_next = t.head(ds[(k + 1) % r])
            steps.append((t.vertex_labels[b_next], t.face_labels[tile]))
        faces.append(steps)
        face_labels.append(t.vertex_labels[w])
    return from_faces(faces, name=name or f"subdivision_of({t.name})", face_labels=face_labels)


def isomorphism(m1: CombMap, m2: CombMap, match_labels: bool = False) -> dict | None:
    """An orientation-preserving dart bijection ``m1 -> m2``, or ``None``.

    With ``match_labels`` the vertex labels (and colors of tilings) must
    be preserved too.
    """
    if (m1.num_darts, m1.num_vertices, m1.num_faces) != (m2.num_darts, m2.num_vertices, m2.num_faces):
        return None
    for target in range(m2.num_darts):
        f = {0: target}
        queue = deque([0])
        ok = True
        while queue and ok:
            d = queue.popleft()
            for nd, ne in ((m1.reversal[d], m2.reversal[f[d]]), (m1.rotation[d], m2.rotation[f[d]])):
                if nd in f:
                    if f[nd] != ne:
                        ok = False
                        break
                else:
                    f[nd] = ne
                    queue.append(nd)
        if not ok or len(set(f.values())) != m1.num_darts:
            continue
        if match_labels:
            if any(str(m1.vertex_labels[m1.tail(d)]) != str(m2.vertex_labels[m2.tail(f[d])]) for d in f):
                continue
            c1 = getattr(m1, "colors", None)
            c2 = getattr(m2, "colors", None)
            if c1 is not None and c2 is not None and any(c1[m1.tail(d)] != c2[m2.tail(f[d])] for d in f):
                continue
        return f
    return None


# -- tree-cotree ------------------------------------------------------------

@dataclass(frozen=True)
class TreeCotree:
    root_face: int
    tree_edges: frozenset
    cotree_edges: frozenset
    leftover_edges: tuple
    # faces in breadth-first order from the root, and for each non-root face
    # the dart of its parent edge that lies on that face
    face_order: tuple
    parent_dart: dict


def tree_cotree(m: CombMap, F0: int = 0) -> TreeCotree:
    """Tree, cotree and leftover edges, deterministic breadth-first by dart id.

    The spanning tree grows from vertex 0; the dual spanning tree grows from
    ``F0`` across edges not in the tree.
    """
    if not (0 <= F0 < m.num_faces):
        raise MapError(f"face {F0} out of range")
    if not m.is_connected():
        raise MapError("map is disconnected")
    tree = set()
    seen_v = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for d in m.darts_from(v):
            h = m.head(d)
            if h not in seen_v:
                seen_v.add(h)
                tree.add(m.edge_of(d))
                queue.append(h)
    cotree = set()
    parent_dart = {}
    order = [F0]
    seen_f = {F0}
    queue = deque([F0])
    while queue:
        f = queue.popleft()
        for d in sorted(m.faces[f]):
            e = m.edge_of(d)
            if e in tree:
                continue
            g = m.face_of(m.reversal[d])
            if g not in seen_f:
                seen_f.add(g)
                cotree.add(e)
                parent_dart[g] = m.reversal[d]
                order.append(g)
                queue.append(g)
    leftover = tuple(e for e in range(m.num_edges) if e not in tree and e not in cotree)
    return TreeCotree(F0, frozenset(tree), frozenset(cotree), leftover, tuple(order), parent_dart)
