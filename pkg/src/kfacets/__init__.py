"""Exact counting of k-facets and (<=k)-facets of point sets, with the
configurations and structural facts that go with their lower bounds."""

from .bounds import (
    BoundReport,
    lb_planar_basic,
    lb_planar_improved,
    lb_planar_improved_closed,
    lb_simplicial,
    verify_bounds,
)
from .conjecture import explore, random_point_set, search_half_net
from .constructions import (
    ChainedConfig,
    ConstructionReport,
    gen_tight_planar_basic,
    gen_tight_planar_extended,
    gen_tight_simplicial,
    verify_extended_properties,
    verify_ray_config,
)
from .counting import (
    AdjacencyProfile,
    FacetVector,
    OrientedFacet,
    adjacency_profile,
    adjacent_leq_k,
    convex_quadrilaterals,
    count_facets,
    crossing_identity,
    leq_k_facets,
    sweep_count_2d,
)
from .exact import (
    DegenerateError,
    PointSet,
    convex_hull_2d,
    convex_layers_2d,
    find_degeneracy,
    hull_vertices,
    is_general_position,
    orientation,
    side_counts,
)
from .structure import (
    Centerpoint,
    SimplicialNet,
    check_structural_optimality,
    find_centerpoint,
    find_half_net_2d,
    verify_centerpoint,
    verify_eps_net,
)

__version__ = "0.1.0"
