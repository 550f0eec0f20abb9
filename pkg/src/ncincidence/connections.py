"""Unit-group connections on the 1-skeleton of a map.

A connection assigns a unit to every dart with ``phi(rev d) == phi(d)^-1``.
The holonomy of a loop ``d1 ... dn`` is the ordered product
``phi(d1) * ... * phi(dn)``.  Face holonomies start at the face's least dart
and follow the face successor.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import MapError, NoneFound, NotAUnit
from .rings import NormalSubgroup, Ring, RingValue, in_subgroup
from .surface import CombMap, tree_cotree


class Connection:
    """Immutable table dart -> unit."""

    __slots__ = ("map", "ring", "values")

    def __init__(self, m: CombMap, ring: Ring, values):
        values = tuple(values)
        if len(values) != m.num_darts:
            raise MapError("one value per dart is required")
        for d, x in enumerate(values):
            if not x.is_unit():
                raise NotAUnit(f"value on dart {d} is not a unit")
            if x * values[m.reversal[d]] != ring.one:
                raise MapError(f"dart {d} and its reversal are not inverse")
        self.map = m
        self.ring = ring
        self.values = values

    @classmethod
    def from_darts(cls, m: CombMap, ring: Ring, table: dict) -> Connection:
        """Connection from values on some darts; reversals get inverses, the rest 1."""
        vals = [ring.one] * m.num_darts
        for d, x in table.items():
            x = ring(x)
            vals[d] = x
            vals[m.reversal[d]] = x.inverse()
        return cls(m, ring, vals)

    @classmethod
    def trivial(cls, m: CombMap, ring: Ring) -> Connection:
        return cls(m, ring, [ring.one] * m.num_darts)

    def __getitem__(self, d: int) -> RingValue:
        return self.values[d]

    def __eq__(self, other):
        return isinstance(other, Connection) and self.map is other.map and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def to_json(self) -> dict:
        m = self.map
        return {
            "schema": 1,
            "ring": self.ring.descriptor(),
            "map": m.name,
            "edges": {str(m.edge_dart(e)): self.values[m.edge_dart(e)].to_json() for e in range(m.num_edges)},
        }

    @classmethod
    def from_json(cls, m: CombMap, ring: Ring, obj: dict) -> Connection:
        return cls.from_darts(m, ring, {int(d): ring.from_json(v) for d, v in obj["edges"].items()})


def connection_from_labels(m: CombMap, ring: Ring, table: dict, symbols: dict) -> Connection:
    """Connection from symbolic values on labelled edges.

    ``table`` maps ``(tail_label, head_label)`` to a symbol such as ``"a"`` or
    ``"b^-1"``; ``symbols`` maps ``"a"``, ``"b"`` to ring values.
    """
    def value(sym):
        base, _, exp = sym.partition("^")
        x = symbols[base]
        return x.inverse() if exp == "-1" else x

    darts = {}
    for (u, v), sym in table.items():
        darts[m.dart_between(m.vertex_index(u), m.vertex_index(v))] = value(sym)
    return Connection.from_darts(m, ring, darts)


def holonomy(c: Connection, loop) -> RingValue:
    loop = list(loop)
    if not c.map.is_closed_walk(loop):
        raise MapError("darts do not form a closed walk")
    out = c.ring.one
    for d in loop:
        out = out * c.values[d]
    return out


def face_holonomy(c: Connection, f: int) -> RingValue:
    return holonomy(c, c.map.faces[f])


def gauge(c: Connection, psi) -> Connection:
    """``psi(tail) * phi(d) * psi(head)^-1`` for a per-vertex list of units."""
    m = c.map
    inv = [p.inverse() for p in psi]
    return Connection(m, c.ring, [psi[m.tail(d)] * c.values[d] * inv[m.head(d)] for d in range(m.num_darts)])


@dataclass(frozen=True)
class DefectReport:
    holonomies: tuple
    trivial: tuple
    subgroup: str

    @property
    def defect_faces(self) -> tuple:
        return tuple(f for f, ok in enumerate(self.trivial) if not ok)

    @property
    def flat(self) -> bool:
        return all(self.trivial)

    def to_json(self) -> dict:
        return {
            "subgroup": self.subgroup,
            "holonomies": [h.to_json() for h in self.holonomies],
            "trivial": list(self.trivial),
            "defect_faces": list(self.defect_faces),
        }


def face_defects(c: Connection, G=NormalSubgroup.TRIVIAL) -> DefectReport:
    G = NormalSubgroup(G)
    hol = tuple(face_holonomy(c, f) for f in range(c.map.num_faces))
    return DefectReport(hol, tuple(in_subgroup(h, G) for h in hol), G.value)


def defect_connection(m: CombMap, F0: int, assignment: dict, ring: Ring) -> Connection:
    """Connection flat on every face except possibly ``F0``.

    Tree edges get 1, leftover edges the assigned units (on their least
    dart), and each cotree edge is solved from the face below it, leaves
    first, so that face's holonomy becomes 1.
    """
    tc = tree_cotree(m, F0)
    missing = [e for e in tc.leftover_edges if e not in assignment]
    if missing:
        raise MapError(f"no value assigned to leftover edges {missing}")
    vals: list = [None] * m.num_darts

    def put(d, x):
        x = ring(x)
        vals[d] = x
        vals[m.reversal[d]] = x.inverse()

    for e in range(m.num_edges):
        if e in tc.tree_edges:
            put(m.edge_dart(e), ring.one)
    for e in tc.leftover_edges:
        put(m.edge_dart(e), assignment[e])
    for g in reversed(tc.face_order[1:]):
        p = tc.parent_dart[g]
        face = m.faces[g]
        pos = m.position_in_face(p)
        prefix, suffix = ring.one, ring.one
        for d in face[:pos]:
            prefix = prefix * vals[d]
        for d in face[pos + 1:]:
            suffix = suffix * vals[d]
        put(p, prefix.inverse() * suffix.inverse())
    return Connection(m, ring, vals)


def find_nontrivial_defect(m: CombMap, F0: int, candidates, G=NormalSubgroup.TRIVIAL,
                           ring: Ring | None = None, budget: int = 500, seed: int = 0) -> Connection:
    """First defect connection whose ``F0`` holonomy lies outside ``G``.

    Assignments of candidate units to the leftover edges are tried in
    ``itertools.product`` order, then randomly (seeded) until ``budget``
    assignments have been tried.
    """
    G = NormalSubgroup(G)
    candidates = list(candidates)
    if not candidates:
        raise NoneFound("empty candidate list")
    ring = ring or candidates[0].ring
    tc = tree_cotree(m, F0)
    left = tc.leftover_edges
    if not left:
        raise NoneFound("no leftover edges: the map is a sphere")

    def attempts():
        for combo in itertools.islice(itertools.product(candidates, repeat=len(left)), budget):
            yield combo
        tried = min(budget, len(candidates) ** len(left))
        rng = random.Random(f"defect:{seed}")
        pool = candidates + [x * y for x in candidates for y in candidates if x != y]
        for _ in range(budget - tried):
            yield tuple(rng.choice(pool) for _ in left)

    for combo in attempts():
        c = defect_connection(m, F0, dict(zip(left, combo)), ring)
        rep = face_defects(c, G)
        if rep.trivial[F0]:
            continue
        if rep.defect_faces != (F0,):
            raise AssertionError("defect connection is not flat away from F0")
        return c
    raise NoneFound(f"no assignment out of {budget} gives a holonomy outside {G.value}")
