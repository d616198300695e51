"""Exact energies of commuting graphs of finite non-abelian groups."""

from .commgraph import CommutingGraph, clique_decomposition, commuting_graph
from .energies import EnergyReport, ExactOrInterval, energy_report
from .groups import build, parse_descriptor
from .verify import VerificationRecord, verify_all, verify_group

__version__ = "0.1.0"

__all__ = [
    "CommutingGraph",
    "EnergyReport",
    "ExactOrInterval",
    "VerificationRecord",
    "build",
    "clique_decomposition",
    "commuting_graph",
    "energy_report",
    "parse_descriptor",
    "verify_all",
    "verify_group",
]
