"""Command-line interface: ``ncincidence {catalog,check,refute,holonomy,fixture}``.

Every subcommand prints one JSON document (``"schema": 1``) to standard
output or to ``--out``.  Exit status is 0 on success, 1 when a refutation is
impossible or a fixture mismatches, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import catalog, catalog_names
from .connections import Connection, face_defects
from .engine import FIXTURES, MODES, check_theorem, dumps, refute, reproduce_fixture
from .errors import CannotRefute, FaceTooLarge, IncidenceError, MapError
from .rings import NormalSubgroup, parse_ring, ring_from_json
from .surface import map_from_json


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_map(name: str, genus: int):
    if os.path.isfile(name):
        with open(name) as fh:
            return map_from_json(json.load(fh))
    try:
        return catalog(name, genus)
    except MapError as exc:
        raise UsageError(f"unknown map {name!r}; run 'catalog' for the list") from exc


def _ring(text: str):
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj, out: str | None):
    text = dumps(obj) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ncincidence", description="Incidence theorems as connections on surface maps.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("catalog", help="list catalog maps with genus and face data")
    c.add_argument("--genus", type=int, default=2, help="genus for the genus-g families")
    c.add_argument("--out")

    def common(q):
        q.add_argument("--map", required=True, help="catalog name or map JSON file")
        q.add_argument("--ring", required=True, help="Q, F7, quat, dual, M2(F3), ...")
        q.add_argument("--dim", type=int, required=True, help="projective dimension n")
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--mode", choices=MODES, help="face condition (default: menelaus, or coherence for tilings)")
        q.add_argument("--subgroup", default="trivial", choices=[g.value for g in NormalSubgroup])
        q.add_argument("--realization", default="geometric", choices=["geometric", "algebraic"],
                       help="subdivision realization kind")
        q.add_argument("--strategy", default="generic", choices=["generic", "basis"],
                       help="tiling point supply")
        q.add_argument("--strict", action="store_true", help="tilings: drop genericity (basis strategy)")
        q.add_argument("--genus", type=int, default=2)
        q.add_argument("--out")

    ch = sub.add_parser("check", help="sample realizations and test the final face")
    common(ch)
    ch.add_argument("--trials", type=int, default=200)

    rf = sub.add_parser("refute", help="build a certified counterexample")
    common(rf)
    rf.add_argument("--face", type=int, default=0, help="index of the face allowed to fail")

    h = sub.add_parser("holonomy", help="face defects of a connection file")
    h.add_argument("--map", required=True)
    h.add_argument("--connection", required=True, help="connection JSON file")
    h.add_argument("--ring", help="override the ring recorded in the file")
    h.add_argument("--subgroup", default="trivial", choices=[g.value for g in NormalSubgroup])
    h.add_argument("--genus", type=int, default=2)
    h.add_argument("--out")

    fx = sub.add_parser("fixture", help="sweep a pairing matrix over quaternion units")
    fx.add_argument("name", choices=sorted(FIXTURES))
    fx.add_argument("--out")
    return p


def _catalog(args) -> int:
    rows = []
    for name in catalog_names():
        m = catalog(name, args.genus)
        rows.append(m.summary())
    _emit({"schema": 1, "type": "catalog", "maps": rows}, args.out)
    return 0


def _strategy(args) -> str:
    return "basis" if args.strict else args.strategy


def _check(args) -> int:
    m = _load_map(args.map, args.genus)
    ring = _ring(args.ring)
    try:
        rep = check_theorem(m, ring, args.dim, args.trials, args.seed, args.mode, args.subgroup,
                            args.realization, _strategy(args))
        obj = rep.to_json()
    except FaceTooLarge as exc:
        obj = {"schema": 1, "type": "check_report", "map": m.name, "ring": ring.descriptor(), "dim": args.dim,
               "status": "vacuous", "reason": f"FaceTooLarge: {exc}", "trials": [],
               "summary": {"held": 0, "trials": 0}}
    _emit(obj, args.out)
    return 0


def _refute(args) -> int:
    m = _load_map(args.map, args.genus)
    ring = _ring(args.ring)
    if not 0 <= args.face < m.num_faces:
        raise UsageError(f"--face must be in 0..{m.num_faces - 1}")
    try:
        cert = refute(m, ring, args.dim, args.face, args.seed, args.mode, args.subgroup,
                      args.realization, _strategy(args))
    except (CannotRefute, FaceTooLarge) as exc:
        status = "cannot_refute" if isinstance(exc, CannotRefute) else "vacuous"
        _emit({"schema": 1, "type": "refutation_failure", "map": m.name, "ring": ring.descriptor(),
               "dim": args.dim, "status": status, "reason": f"{type(exc).__name__}: {exc}"}, args.out)
        return 1
    _emit(cert.to_json(), args.out)
    return 0


def _holonomy(args) -> int:
    m = _load_map(args.map, args.genus)
    with open(args.connection) as fh:
        obj = json.load(fh)
    ring = _ring(args.ring) if args.ring else ring_from_json(obj["ring"])
    c = Connection.from_json(m, ring, obj)
    rep = face_defects(c, args.subgroup)
    out = {"schema": 1, "type": "holonomy_report", "map": m.name, "ring": ring.descriptor()}
    out.update(rep.to_json())
    out["face_labels"] = [str(x) for x in m.face_labels]
    _emit(out, args.out)
    return 0


def _fixture(args) -> int:
    rep = reproduce_fixture(args.name)
    _emit(rep, args.out)
    return 0 if rep["mismatches"] == 0 else 1


COMMANDS = {"catalog": _catalog, "check": _check, "refute": _refute, "holonomy": _holonomy, "fixture": _fixture}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (IncidenceError, ValueError, KeyError, OSError) as exc:
        # bad inputs that parse but are rejected by the library
        sys.stderr.write(f"usage error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
