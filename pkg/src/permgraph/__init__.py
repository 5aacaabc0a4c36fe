"""Permutability graphs of cyclic subgroups of finite groups."""

from .analysis import INF, AnalysisReport, analyze
from .errors import InvalidParameter, PermGraphError, SizeLimitError, SpecParseError, UndefinedGraphError
from .graph import Graph, PermGraph, build_gamma_all, build_gamma_c, universal_vertices
from .group import (
    GroupSpec,
    GroupTable,
    Permutation,
    build_group,
    element_order,
    groups_isomorphic,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_from_generators,
    make_generalized_quaternion,
    make_metacyclic_semidirect,
    make_modular,
    make_symmetric,
    parse_spec,
    tau,
)
from .isomorphism import find_isomorphism, is_isomorphic
from .named import make_named
from .planarity import is_planar
from .subgroups import (
    CyclicCatalog,
    SubgroupSet,
    all_subgroups,
    cyclic_subgroups,
    is_normal,
    permutes,
    set_product,
    subgroup_generated,
)

__version__ = "0.1.0"
