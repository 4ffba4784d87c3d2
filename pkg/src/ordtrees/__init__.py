"""Counting and bijections for vertices of rooted ordered trees by level and degree."""

from .counts import (
    CountTable,
    binomial,
    catalan,
    count_by_degree,
    count_by_level,
    count_class,
    count_cumulative,
    count_outdeg_level,
    half_vertices,
)
from .level_lemma import Decomposition, assemble_P, decompose, ell_set_size, phi_map, phi_map_inv, recompose
from .marked import NotInClassError, classify, map_between
from .path_codec import LatticePath, phi, phi_forest, phi_inv, psi, psi_inv, reflect_suffix
from .tree_core import (
    MalformedInputError,
    MarkedTree,
    Tree,
    VertexStats,
    enumerate_trees,
    parse,
    serialize,
    stats,
    total_vertex_count,
)

__version__ = "0.1.0"
