"""Augmented cube AQ_n: construction, two-part regular decompositions and
independent verification of their regularity, connectivity and cycle
structure."""
from .aqcore import (EdgeKind, Graph, Kind, build_aq, complement, degree, graph_difference,
                     graph_union, half_matching, hypercube, is_adjacent, label, parse_label,
                     partner)
from .decomposer import (Decomposition, HamiltonianCycle, base_aq4_hamiltonian, base_aq4_n13,
                         decompose, decompose_any, decompose_n1_2, decompose_n1_3,
                         decompose_n1_4)
from .flow import vertex_connectivity
from .ladder import (LadderCert, cert_edges, core_graph, extract_cycle, lift_c, lift_h, mirror,
                     validate_cert)
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "Check", "Decomposition", "EdgeKind", "Graph", "HamiltonianCycle", "Kind", "LadderCert",
    "Report", "base_aq4_hamiltonian", "base_aq4_n13", "build_aq", "cert_edges", "complement",
    "core_graph", "decompose", "decompose_any", "decompose_n1_2", "decompose_n1_3",
    "decompose_n1_4", "degree", "extract_cycle", "graph_difference", "graph_union",
    "half_matching", "hypercube", "is_adjacent", "label", "lift_c", "lift_h", "mirror",
    "parse_label", "partner", "validate_cert", "vertex_connectivity",
]
