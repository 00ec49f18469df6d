"""Energy of complete multipartite graphs under single-edge deletion."""

from .graphs import (
    EdgeLocus,
    LabeledGraph,
    PartitionSpec,
    QuotientMatrix,
    build_complete_multipartite,
    canonical_edge,
    delete_edge,
    deleted_edge_quotient,
    multipartite_quotient,
    verify_equitable,
)
from .oracle import EnergyComparison, Sign, observe_sign, predict_sign, sweep_theorem
from .poly import Poly, char_poly, largest_real_root, real_roots
from .spectra import eig_quotient, eig_symmetric, graph_energy, perron_components

__version__ = "0.1.0"
