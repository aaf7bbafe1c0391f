"""Djokovic-Winkler relation Theta, its closure Theta*, and full subdivisions."""

from ._accel import backend, set_backend
from .graph import (
    BlockDecomposition,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    blocks,
    build_graph,
    edge_edge_distance,
    is_bipartite,
    is_isometric_subgraph,
    vertex_edge_distance,
)
from .partition import Comparison, EdgePartition, EdgeRelationPairs, compare_partitions
from .relations import (
    bipartite_theta_witness,
    is_partial_cube,
    theta_pairs,
    theta_star,
    wiener_bfs,
    wiener_via_cuts,
)
from .subdivision import SubdivisionMap, lift_partition, subdivide

__version__ = "0.1.0"
