"""Exact checks and constructive certificates for degree-sequence circumference bounds."""

from __future__ import annotations

from .audit import AuditRecord, audit_graph, enumerate_labeled
from .certificate import certificate_to_dict, check_certificate
from .conditions import bound_targets, condition_verdicts, implication_audit
from .families import Family, FamilySpec, generate, sharpness_audit
from .graph import Graph, build_graph, degree_sequence, emit_graph6, parse_graph6, vertex_connectivity
from .oracles import circumference, is_hamiltonian, longest_path
from .prover import certified_long_cycle, find_minimal_vine, hamilton_via_condition

__all__ = [
    "AuditRecord",
    "Family",
    "FamilySpec",
    "Graph",
    "audit_graph",
    "bound_targets",
    "build_graph",
    "certificate_to_dict",
    "certified_long_cycle",
    "check_certificate",
    "circumference",
    "condition_verdicts",
    "degree_sequence",
    "emit_graph6",
    "enumerate_labeled",
    "find_minimal_vine",
    "generate",
    "hamilton_via_condition",
    "implication_audit",
    "is_hamiltonian",
    "longest_path",
    "parse_graph6",
    "sharpness_audit",
    "vertex_connectivity",
]
