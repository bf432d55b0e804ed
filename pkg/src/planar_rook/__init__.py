"""Exact computations in the planar rook monoid ``P_n`` and its algebra."""
from .diagram import (
    PlanarDiagram,
    apply,
    compose,
    edgeless,
    embed,
    enumerate_diagrams,
    from_matrix,
    from_sets,
    identity,
    p_drop,
    pi,
    subdiagrams,
    to_matrix,
    vertical_edge_count,
)
from .algebra import AlgebraElement, multiply, x_of, x_unit, to_x_coords, from_x_coords
from .reprs import bratteli, rho, rho_algebra, wedderburn_map, wedderburn_inv
from .characters import character_table, chi, center_basis, tensor_multiplicities

__version__ = "0.1.0"
