"""Combinatorial tools for CAT(0) simplicial complexes: curvature checks,
disk diagrams, basic moves on paths, Gersten-Short geodesics and automata."""
from .complex import Automorphism, SimplicialComplex, build_complex, link
from .cplx import ComplexDocument, parse_complex, serialize_complex
from .curvature import certify_cat0_necessary, check_edge_links, check_systolic, find_empty_ngon, is_flag
from .disks import DiskDiagram, gauss_bonnet_sum, minimal_spanning_disk, validate_disk
from .errors import Cat0Error
from .fixtures import fixture, generate_fixture
from .gs import find_bad_pairs, gs_geodesics, gs_system, is_gs, resolve_bad_pairs
from .moves import Move, apply_move, straighten
from .paths import combinatorial_distance, enumerate_geodesics, is_geodesic, path_distance

__all__ = [
    "Automorphism",
    "Cat0Error",
    "ComplexDocument",
    "DiskDiagram",
    "Move",
    "SimplicialComplex",
    "apply_move",
    "build_complex",
    "certify_cat0_necessary",
    "check_edge_links",
    "check_systolic",
    "combinatorial_distance",
    "enumerate_geodesics",
    "find_bad_pairs",
    "find_empty_ngon",
    "fixture",
    "gauss_bonnet_sum",
    "generate_fixture",
    "gs_geodesics",
    "gs_system",
    "is_flag",
    "is_geodesic",
    "is_gs",
    "link",
    "minimal_spanning_disk",
    "parse_complex",
    "path_distance",
    "resolve_bad_pairs",
    "serialize_complex",
    "straighten",
    "validate_disk",
]
