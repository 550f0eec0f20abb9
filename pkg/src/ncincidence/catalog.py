"""Named maps and tilings with their figure labels.

Face boundaries are written counterclockwise as ``(tail, edge)`` steps, or as
plain vertex cycles for maps without parallel edges; vertex and
edge labels are the ones printed in the corresponding drawings.

Entries (``catalog_names()`` lists them):

``tetrahedron``
    sphere; Desargues.  Vertices A1 B1 C1 O, edge points A2 B2 C2 (on the
    edges to O) and P Q R (on A1B1, B1C1, C1A1).
``square_pyramid``
    sphere; vertices A1 B1 C1 D1 O, edges A2 B2 C2 D2 to the apex and
    P Q R S around the base.
``octahedron``
    sphere; apexes O1 (top pyramid) and O2 (bottom), equator B B' C C'.
``pappus_torus_triangulation``
    torus; vertices O1 O2 O3, six triangles T1..T6, nine edges.
``genus_g_pappus``
    genus ``g`` (default 2): a ``4g+2``-gon with the ``4g+2`` triangles
    from its center; opposite sides glued.
``genus_g_polygon``
    the same surface with the polygon kept as a single face.
``moebius_torus_quad``
    torus quadrangulation on the half-period lattice (Möbius).
``square_torus``
    one vertex, edges a and b, one face a b a^-1 b^-1.
``cube_tiling``
    tiling of the tetrahedron: blacks A1 B1 C1 O, whites l A2B2 A2C2 B2C2.
``pappus_tiling``
    tiling of the Pappus triangulation; whites T1..T6.
``tiling_example``
    the hexagonal-domain Pappus tiling; blacks A1..A4, whites l1..l5.
``mobt2`` / ``perm2``
    two embeddings of K_{4,4} in the torus.
``nonsimple_torus_tiling``
    2x2 grid on the torus; it has parallel edges.
"""

from __future__ import annotations

from .errors import MapError
from .surface import BLACK, WHITE, CombMap, QuadTiling, from_faces, from_vertex_faces, tiling_of

# -- subdivisions -------------------------------------------------------

TETRAHEDRON_FACES = [
    [("A1", "P"), ("B1", "B2"), ("O", "A2")],
    [("B1", "Q"), ("C1", "C2"), ("O", "B2")],
    [("C1", "R"), ("A1", "A2"), ("O", "C2")],
    [("A1", "R"), ("C1", "Q"), ("B1", "P")],
]

SQUARE_PYRAMID_FACES = [
    [("A1", "A2"), ("O", "B2"), ("B1", "P")],
    [("B1", "B2"), ("O", "C2"), ("C1", "Q")],
    [("C1", "C2"), ("O", "D2"), ("D1", "R")],
    [("D1", "D2"), ("O", "A2"), ("A1", "S")],
    [("A1", "P"), ("B1", "Q"), ("C1", "R"), ("D1", "S")],
]

OCTAHEDRON_FACES = [
    [("B", "A"), ("O1", "A'"), ("B'", "P")],
    [("B'", "A'"), ("O1", "D"), ("C", "Q")],
    [("C", "D"), ("O1", "D'"), ("C'", "P2")],
    [("C'", "D'"), ("O1", "A"), ("B", "Q2")],
    [("B", "P"), ("B'", "C'"), ("O2", "C")],
    [("B'", "Q"), ("C", "B"), ("O2", "C'")],
    [("C", "P2"), ("C'", "B'"), ("O2", "B")],
    [("C'", "Q2"), ("B", "C"), ("O2", "B'")],
]

PAPPUS_FACES = [
    [("O3", "A1"), ("O2", "B3"), ("O1", "C2")],
    [("O3", "C2"), ("O1", "A3"), ("O2", "B1")],
    [("O3", "B1"), ("O2", "C3"), ("O1", "A2")],
    [("O3", "A2"), ("O1", "B3"), ("O2", "C1")],
    [("O3", "C1"), ("O2", "A3"), ("O1", "B2")],
    [("O3", "B2"), ("O1", "C3"), ("O2", "A1")],
]

MOEBIUS_QUAD_FACES = [
    [("v00", "A2"), ("v50", "B1"), ("v55", "B4"), ("v05", "B3")],
    [("v50", "A4"), ("v00", "B3"), ("v05", "B2"), ("v55", "B1")],
    [("v05", "B4"), ("v55", "A3"), ("v50", "A2"), ("v00", "A1")],
    [("v55", "B2"), ("v05", "A1"), ("v00", "A4"), ("v50", "A3")],
]

SQUARE_TORUS_FACES = [[("v", "a"), ("v", "b"), ("v", "a"), ("v", "b")]]


def _genus_pappus_faces(g: int, polygon: bool = False):
    if g < 1:
        raise MapError("genus must be at least 1")
    N = 4 * g + 2
    half = 2 * g + 1

    def P(k):  # polygon corners alternate between two vertex classes
        return "P_odd" if ((k - 1) % N) % 2 == 0 else "P_even"

    def side(k):
        return f"E{k}" if k <= half else f"E{k - half}"

    if polygon:
        return [[(P(k), side(k)) for k in range(1, N + 1)]]
    faces = []
    for k in range(1, N + 1):
        k1 = k % N + 1
        faces.append([("O", f"S{k}"), (P(k), side(k)), (P(k1), f"S{k1}")])
    return faces


# -- tilings ------------------------------------------------------------

CUBE_TILES = [
    ["A1", "l", "B1", "A2B2"],
    ["l", "A1", "A2C2", "C1"],
    ["B1", "l", "C1", "B2C2"],
    ["A2B2", "B1", "B2C2", "O"],
    ["A1", "A2B2", "O", "A2C2"],
    ["A2C2", "O", "B2C2", "C1"],
]
CUBE_FACE_LABELS = ["front", "bottom", "right", "top", "left", "back"]
CUBE_COLORS = {x: BLACK for x in ("A1", "B1", "C1", "O")} | {x: WHITE for x in ("l", "A2B2", "A2C2", "B2C2")}

# hexagonal fundamental domain; node -> (coordinates, label)
TILING_EXAMPLE_NODES = {
    1: ((60, 0), "A1"), 2: ((30, 15), "l2"), 3: ((90, 15), "l1"), 4: ((0, 30), "A2"),
    5: ((120, 30), "A2"), 6: ((0, 50), "l3"), 7: ((40, 50), "l4"), 8: ((80, 50), "l5"),
    9: ((120, 50), "l3"), 10: ((20, 50), "A3"), 11: ((100, 50), "A4"), 12: ((0, 70), "A1"),
    13: ((120, 70), "A1"), 14: ((30, 85), "l1"), 15: ((90, 85), "l2"), 16: ((60, 100), "A2"),
}
TILING_EXAMPLE_TILES = [
    (7, 1, 8, 16), (1, 2, 10, 7), (2, 4, 6, 10), (6, 12, 14, 10), (10, 14, 16, 7),
    (1, 8, 11, 3), (3, 11, 9, 5), (11, 15, 13, 9), (8, 16, 15, 11),
]
# connection values on black -> white darts; unlisted edges carry 1
TILING_EXAMPLE_VALUES = {
    ("A1", "l2"): "b", ("A1", "l1"): "a^-1", ("A1", "l4"): "b", ("A1", "l5"): "a^-1",
    ("A2", "l4"): "a", ("A2", "l5"): "b^-1", ("A3", "l1"): "a^-1", ("A4", "l2"): "b",
}

MOBT2_LABELS = {
    (1, 0): "A1", (3, 0): "A2", (1, 2): "A3", (3, 2): "A4",
    (0, 1): "l3", (0, 3): "l1", (2, 1): "l4", (2, 3): "l2",
}
MOBT2_VALUES = {
    ("A3", "l1"): "a", ("A3", "l2"): "a", ("A3", "l4"): "b", ("A1", "l4"): "b",
    ("A4", "l4"): "a^-1", ("A4", "l2"): "b^-1", ("A2", "l2"): "b^-1", ("A4", "l3"): "a^-1",
}
PERM2_LABELS = {
    (1, 0): "A2", (3, 0): "A1", (1, 2): "A3", (3, 2): "A4",
    (0, 1): "l3", (0, 3): "l1", (2, 1): "l4", (2, 3): "l2",
}
PERM2_VALUES = {
    ("A2", "l3"): "b^-1", ("A1", "l2"): "a", ("A3", "l2"): "a", ("A3", "l4"): "b",
    ("A4", "l4"): "a^-1", ("A4", "l2"): "b^-1", ("A2", "l2"): "b^-1", ("A1", "l3"): "a",
}
SHADED_CENTER = (2, 2)


def _reduce_square(p):
    return (p[0] % 4, p[1] % 4)


def _reduce_sheared(p):
    # lattice generated by (4, 0) and (2, 4)
    x, y = p
    yr = y % 4
    k = (y - yr) // 4
    return ((x - 2 * k) % 4, yr)


def _diamond_tiling(labels, reduce, name):
    centers = [(x, y) for y in range(4) for x in range(4) if (x + y) % 2 == 0]
    faces, face_labels = [], []
    for cx, cy in centers:
        corners = [(cx + 1, cy), (cx, cy + 1), (cx - 1, cy), (cx, cy - 1)]
        faces.append([labels[reduce(p)] for p in corners])
        face_labels.append(f"D{cx}{cy}")
    colors = {lab: (BLACK if lab.startswith("A") else WHITE) for lab in labels.values()}
    return from_vertex_faces(faces, name=name, colors=colors, face_labels=face_labels)


def _tiling_example():
    faces = []
    for tile in TILING_EXAMPLE_TILES:
        pts = [TILING_EXAMPLE_NODES[v][0] for v in tile]
        area = sum(pts[i][0] * pts[(i + 1) % 4][1] - pts[(i + 1) % 4][0] * pts[i][1] for i in range(4))
        order = tile if area > 0 else tile[::-1]
        faces.append([TILING_EXAMPLE_NODES[v][1] for v in order])
    labels = ["shaded"] + [f"t{i}" for i in range(1, len(faces))]
    colors = {lab: (BLACK if lab.startswith("A") else WHITE) for _, lab in TILING_EXAMPLE_NODES.values()}
    return from_vertex_faces(faces, name="tiling_example", colors=colors, face_labels=labels)


def _nonsimple_torus():
    def lab(i, j):
        return f"q{i % 2}{j % 2}"

    faces = []
    for j in range(2):
        for i in range(2):
            faces.append([
                (lab(i, j), f"h{i}{j}"), (lab(i + 1, j), f"v{(i + 1) % 2}{j}"),
                (lab(i + 1, j + 1), f"h{i}{(j + 1) % 2}"), (lab(i, j + 1), f"v{i}{j}"),
            ])
    colors = {"q00": BLACK, "q11": BLACK, "q10": WHITE, "q01": WHITE}
    return from_faces(faces, name="nonsimple_torus_tiling", colors=colors)


_ALIASES = {
    "pappus": "pappus_torus_triangulation",
    "pappust": "pappus_tiling",
    "cube": "cube_tiling",
    "moebius": "moebius_torus_quad",
    "mobius_torus_quad": "moebius_torus_quad",
    "desargues": "tetrahedron",
}


def catalog_names() -> list[str]:
    return [
        "tetrahedron", "square_pyramid", "octahedron", "pappus_torus_triangulation",
        "genus_g_pappus", "genus_g_polygon", "moebius_torus_quad", "square_torus",
        "cube_tiling", "pappus_tiling", "tiling_example", "mobt2", "perm2",
        "nonsimple_torus_tiling",
    ]


def catalog(name: str, genus: int = 2) -> CombMap:
    """Catalog entry by name; ``genus`` applies to the genus-g families."""
    key = _ALIASES.get(name, name)
    if key == "tetrahedron":
        return from_faces(TETRAHEDRON_FACES, name=key, face_labels=["A1B1O", "B1C1O", "C1A1O", "A1B1C1"])
    if key == "square_pyramid":
        return from_faces(SQUARE_PYRAMID_FACES, name=key, face_labels=["A1OB1", "B1OC1", "C1OD1", "D1OA1", "base"])
    if key == "octahedron":
        return from_faces(OCTAHEDRON_FACES, name=key)
    if key == "pappus_torus_triangulation":
        return from_faces(PAPPUS_FACES, name=key, face_labels=[f"T{i}" for i in range(1, 7)])
    if key == "genus_g_pappus":
        return from_faces(_genus_pappus_faces(genus), name=f"genus_{genus}_pappus",
                          face_labels=[f"T{k}" for k in range(1, 4 * genus + 3)])
    if key == "genus_g_polygon":
        return from_faces(_genus_pappus_faces(genus, polygon=True), name=f"genus_{genus}_polygon",
                          face_labels=["polygon"])
    if key == "moebius_torus_quad":
        return from_faces(MOEBIUS_QUAD_FACES, name=key, face_labels=["S_bl", "S_br", "S_tl", "S_tr"])
    if key == "square_torus":
        return from_faces(SQUARE_TORUS_FACES, name=key, cls=CombMap)
    if key == "cube_tiling":
        return from_vertex_faces(CUBE_TILES, name=key, colors=CUBE_COLORS, face_labels=CUBE_FACE_LABELS)
    if key == "pappus_tiling":
        return tiling_of(catalog("pappus_torus_triangulation"), name=key)
    if key == "tiling_example":
        return _tiling_example()
    if key == "mobt2":
        return _diamond_tiling(MOBT2_LABELS, _reduce_square, "mobt2")
    if key == "perm2":
        return _diamond_tiling(PERM2_LABELS, _reduce_sheared, "perm2")
    if key == "nonsimple_torus_tiling":
        return _nonsimple_torus()
    raise MapError(f"unknown catalog entry {name!r}")


def shaded_face(t: CombMap) -> int:
    """Index of the distinguished (shaded) tile of a figure tiling."""
    if t.name == "tiling_example":
        return t.face_index("shaded")
    if t.name in ("mobt2", "perm2"):
        return t.face_index(f"D{SHADED_CENTER[0]}{SHADED_CENTER[1]}")
    if t.name == "cube_tiling":
        return t.face_index("bottom")
    raise MapError(f"{t.name} has no shaded tile")


def figure_values(name: str) -> dict:
    """Symbolic black -> white edge values printed in a figure."""
    return {"tiling_example": TILING_EXAMPLE_VALUES, "mobt2": MOBT2_VALUES, "perm2": PERM2_VALUES}[name]


def is_tiling(m: CombMap) -> bool:
    return isinstance(m, QuadTiling)
