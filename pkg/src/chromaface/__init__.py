"""Critical planar graphs and their face-degree parameters.

Exact tools for plane embeddings, edge colouring, the extremal families
G_n, H_n and T_m, discharging ledgers and structural audits.
"""

from .graph import Graph, GraphError
from .embedding import PlaneGraph, avg_face_degree, local_min, max_local_face_average
from .coloring import EdgeColoring, chromatic_index, criticality_report, is_critical
from .families import gen_odd_cycle, gen_prism_G, gen_quartic_H, gen_quintic_T

__all__ = [
    "Graph",
    "GraphError",
    "PlaneGraph",
    "avg_face_degree",
    "local_min",
    "max_local_face_average",
    "EdgeColoring",
    "chromatic_index",
    "criticality_report",
    "is_critical",
    "gen_odd_cycle",
    "gen_prism_G",
    "gen_quartic_H",
    "gen_quintic_T",
]

__version__ = "0.1.0"
