"""Theorem checking, counterexample certificates and fixture sweeps."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from .connections import defect_connection, face_defects, find_nontrivial_defect, gauge
from .errors import CannotRefute, NoneFound
from .linalg import row_reduce
from .projective import coherent_dual_geometric
from .realize import (TilingRealization, connection_of_subdivision, connection_of_tiling,
                      face_condition, realization_from_json, synthesize_subdivision, synthesize_tiling,
                      tile_condition, validate)
from .rings import HH, NormalSubgroup, Ring
from .surface import CombMap, QuadTiling, tree_cotree

MODES = ("menelaus", "ceva", "coherence")


def dumps(obj) -> str:
    """Canonical JSON text used for every report and certificate."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def _default_mode(m: CombMap) -> str:
    return "coherence" if isinstance(m, QuadTiling) else "menelaus"


def _check_mode(m: CombMap, mode: str | None) -> str:
    mode = mode or _default_mode(m)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if (mode == "coherence") != isinstance(m, QuadTiling):
        raise ValueError(f"mode {mode!r} does not apply to a {m.kind}")
    return mode


def _synthesize(m, c, n, mode, realization, strategy):
    if mode == "coherence":
        return synthesize_tiling(m, c, n, strategy)
    return synthesize_subdivision(m, c, n, realization, ceva=mode == "ceva")


def _geometric_supported(r, G) -> bool:
    if isinstance(r, TilingRealization):
        # the subspace route decides plain coherence only
        return r.ring.kind != "dual_over_rational" and G is NormalSubgroup.TRIVIAL
    return r.ring.is_division_ring and r.mode == "geometric"


def face_results(r, mode: str, G=NormalSubgroup.TRIVIAL) -> list[dict]:
    """Per-face condition verdicts by the algebraic and (where defined) geometric routes."""
    m = r.map
    G = NormalSubgroup(G)
    out = []
    geo = _geometric_supported(r, G)
    for f in range(m.num_faces):
        rec = {"face": f, "label": str(m.face_labels[f])}
        if isinstance(r, TilingRealization):
            rec["algebraic"] = tile_condition(r, f, G, "algebraic").to_json()
            rec["geometric"] = tile_condition(r, f, route="geometric").to_json() if geo else None
            rec["geometric_dual"] = coherent_dual_geometric(*r.tile_lifts(f)).to_json() if geo else None
        else:
            rec["algebraic"] = face_condition(r, f, mode, "algebraic").to_json()
            rec["geometric"] = face_condition(r, f, mode, "geometric").to_json() if geo else None
        out.append(rec)
    return out


def _routes_agree(rec) -> bool:
    flag = rec["algebraic"]["flag"]
    return all(rec.get(k) is None or rec[k]["flag"] == flag for k in ("geometric", "geometric_dual"))


# -- check ----------------------------------------------------------------------

@dataclass
class CheckReport:
    map_name: str
    ring: Ring
    dim: int
    mode: str
    subgroup: str
    seed: int
    trials: list
    status: str = "ok"
    reason: str = ""

    @property
    def held(self) -> int:
        return sum(1 for t in self.trials if t["final_holds"])

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "type": "check_report",
            "map": self.map_name,
            "ring": self.ring.descriptor(),
            "dim": self.dim,
            "mode": self.mode,
            "subgroup": self.subgroup,
            "seed": self.seed,
            "status": self.status,
            "reason": self.reason,
            "trials": self.trials,
            "summary": {"held": self.held, "trials": len(self.trials)},
        }


def check_theorem(m: CombMap, ring: Ring, n: int, trials: int = 200, seed: int = 0, mode: str | None = None,
                  G=NormalSubgroup.TRIVIAL, realization: str = "geometric", strategy: str = "generic") -> CheckReport:
    """Sample realizations satisfying every face condition but one and test the last.

    Each trial draws a designated face and units for the leftover edges,
    builds the defect connection, applies a random gauge, synthesizes a
    realization and recomputes every condition from the lifts.
    """
    mode = _check_mode(m, mode)
    G = NormalSubgroup(G)
    pool = ring.unit_pool()
    out = []
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        F = rng.randrange(m.num_faces)
        tc = tree_cotree(m, F)
        assignment = {e: rng.choice(pool) for e in tc.leftover_edges}
        c = defect_connection(m, F, assignment, ring)
        c = gauge(c, [rng.choice(pool) for _ in range(m.num_vertices)])
        r = _synthesize(m, c, n, mode, realization, strategy)
        if not validate(r).ok:
            raise AssertionError("synthesized realization does not validate")
        results = face_results(r, mode, G)
        flags = [x["algebraic"]["flag"] for x in results]
        for x in results:
            if not _routes_agree(x):
                raise AssertionError(f"algebraic and geometric routes disagree on face {x['face']}")
        if not all(flags[f] for f in range(m.num_faces) if f != F):
            raise AssertionError("a face other than the designated one fails")
        out.append({"trial": trial, "face": F, "flags": flags, "final_holds": flags[F]})
    return CheckReport(m.name, ring, n, mode, G.value, seed, out)


# -- refute ---------------------------------------------------------------------

@dataclass
class Certificate:
    data: dict

    def to_json(self) -> dict:
        return self.data

    def dumps(self) -> str:
        return dumps(self.data)


def refute(m: CombMap, ring: Ring, n: int, F0: int = 0, seed: int = 0, mode: str | None = None,
           G=NormalSubgroup.TRIVIAL, realization: str = "geometric", strategy: str = "generic",
           budget: int = 500) -> Certificate:
    """Certified realization in which every face condition holds except at ``F0``."""
    mode = _check_mode(m, mode)
    G = NormalSubgroup(G)
    candidates = ring.candidate_units()
    try:
        c = find_nontrivial_defect(m, F0, candidates, G, ring, budget=budget, seed=seed)
    except NoneFound as exc:
        raise CannotRefute(str(exc)) from exc
    r = _synthesize(m, c, n, mode, realization, strategy)
    rep = validate(r)
    if not rep.ok:
        raise AssertionError(f"synthesized realization is invalid: {rep.failures}")
    results = face_results(r, mode, G)
    for x in results:
        holds = x["algebraic"]["flag"]
        if holds != (x["face"] != F0):
            raise AssertionError(f"unexpected verdict on face {x['face']}")
        if not _routes_agree(x):
            raise AssertionError(f"oracles disagree on face {x['face']}")
    extracted = connection_of_tiling(r) if isinstance(r, TilingRealization) else connection_of_subdivision(r)
    defects = face_defects(extracted, G)
    if defects.defect_faces != (F0,):
        raise AssertionError("extracted connection has the wrong defect pattern")
    tc = tree_cotree(m, F0)
    data = {
        "schema": 1,
        "type": "certificate",
        "map": m.name,
        "ring": ring.descriptor(),
        "dim": n,
        "mode": mode,
        "subgroup": G.value,
        "defect_face": {"index": F0, "label": str(m.face_labels[F0])},
        "defect_invariant": defects.holonomies[F0].to_json(),
        "realization": r.to_json(),
        "faces": results,
        "oracle_agreement": all(_routes_agree(x) for x in results),
        "recipe": {
            "seed": seed,
            "budget": budget,
            "candidates": [u.to_json() for u in candidates],
            "leftover_edges": {str(m.edge_labels[e]): c[m.edge_dart(e)].to_json() for e in tc.leftover_edges},
            "realization": realization if mode != "coherence" else None,
            "strategy": strategy if mode == "coherence" else None,
        },
    }
    return Certificate(data)


@dataclass
class Verification:
    ok: bool
    flags: list
    geometric: list
    messages: list


def verify_certificate(cert) -> Verification:
    """Recheck a certificate from its serialized lifts alone."""
    data = cert.to_json() if isinstance(cert, Certificate) else cert
    r = realization_from_json(data["realization"])
    G = NormalSubgroup(data["subgroup"])
    F0 = data["defect_face"]["index"]
    rep = validate(r)
    if not rep.ok:
        return Verification(False, [], [], [f"realization invalid: {rep.failures}"])
    msgs = []
    results = face_results(r, data["mode"], G)
    flags = [x["algebraic"]["flag"] for x in results]
    geo = [None if x["geometric"] is None else x["geometric"]["flag"] for x in results]
    expected = [f != F0 for f in range(len(flags))]
    if flags != expected:
        msgs.append("algebraic verdicts do not match the certified pattern")
    if not all(_routes_agree(x) for x in results):
        msgs.append("geometric verdicts do not match the certified pattern")
    if results != data["faces"]:
        msgs.append("recomputed face records differ from the certificate")
    return Verification(not msgs, flags, geo, msgs)


# -- fixtures ---------------------------------------------------------------------

def _pappus2(a, b):
    ai = a.inverse()
    one = a.ring.one
    return [[ai, b, one], [one, one, one], [ai, one, one]]


def _k44_mobius(a, b):
    one = a.ring.one
    ai, bi = a.inverse(), b.inverse()
    return [[one, one, one, b], [one, bi, one, one], [a, a, one, b], [one, bi, ai, ai]]


def _k44_perm(a, b):
    one = a.ring.one
    ai, bi = a.inverse(), b.inverse()
    return [[one, a, a, one], [one, bi, bi, one], [one, a, one, b], [one, bi, one, ai]]


FIXTURES = {
    # name: (matrix builder, predicate for invertibility, description of the predicate)
    "pappus2_matrix": (_pappus2, lambda a, b: a != 1 and b != 1, "invertible iff a != 1 and b != 1"),
    "k44_mobius_matrix": (_k44_mobius, lambda a, b: not (a == 1 or b == 1), "singular iff a = 1 or b = 1"),
    "k44_perm_matrix": (_k44_perm, lambda a, b: not (a == b or a == b.inverse()), "singular iff a = b or a = b^-1"),
}


def quaternion_sign_units():
    """``{±1, ±i, ±j, ±k}``."""
    base = [HH.one, HH.i, HH.j, HH.k]
    return [s * u for u in base for s in (1, -1)]


def reproduce_fixture(name: str) -> dict:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    build, predicate, text = FIXTURES[name]
    rows = []
    mismatches = 0
    for a, b in itertools.product(quaternion_sign_units(), repeat=2):
        red = row_reduce(build(a, b))
        expected = predicate(a, b)
        match = red.invertible == expected
        mismatches += not match
        rows.append({"a": str(a), "b": str(b), "rank": red.rank, "invertible": red.invertible,
                     "predicate": expected, "match": match})
    return {"schema": 1, "type": "fixture_report", "fixture": name, "predicate": text,
            "pairs": len(rows), "mismatches": mismatches, "results": rows}
