"""Incidence theorems as connections on surface maps, over exact rings."""

from .rings import DUAL, HH, QQ, MatrixRing, NormalSubgroup, PrimeField, parse_ring
from .catalog import catalog, catalog_names
from .connections import Connection, defect_connection, face_defects, find_nontrivial_defect, gauge, holonomy
from .realize import synthesize_subdivision, synthesize_tiling, validate
from .engine import check_theorem, refute, reproduce_fixture, verify_certificate

__all__ = [
    "DUAL", "HH", "QQ", "MatrixRing", "NormalSubgroup", "PrimeField", "parse_ring",
    "catalog", "catalog_names",
    "Connection", "defect_connection", "face_defects", "find_nontrivial_defect", "gauge", "holonomy",
    "synthesize_subdivision", "synthesize_tiling", "validate",
    "check_theorem", "refute", "reproduce_fixture", "verify_certificate",
]
