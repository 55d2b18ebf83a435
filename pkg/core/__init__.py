"""
Core computation modules for f1points
"""

from .errors import BudgetExceededError, RootSystemError
from .polynomial import CountingPolynomial
from .arith import (
    FiniteField,
    IntegersMod,
    PointedAbelianGroup,
    GroupHom,
    Character,
    CyclotomicRing,
    GroupRing,
    RingMonoid,
    AdjoinedZeroMonoid,
    gf_make,
    field_of_order,
    group_make,
    group_from_spec,
    cyclic_test_group,
    hom_set,
    characters,
    reduced_group_ring,
    adjoin_zero,
    monoid_of_ring,
    monoid_from_spec,
)
from .roots import RootSystem, LatticeMap, cartan_matrix, root_system, simply_connected_cover
from .weyl import WeylElement, WeylGroup, weyl_enumerate, inversion_set, coxeter_matrix
from .tits import ExtWeylElement, TitsExtension, amalgamated_check, restricted_torus, induced_map
from .gadgets import (
    GradedSet,
    GPoint,
    gm_points,
    affine_points,
    e_F,
    proj_points,
    spec_points,
    chevalley_points,
    chevalley_census,
    restricted_chevalley_census,
    chevalley_points_monoid,
    counting_polynomial,
    naturality_check,
)
from .matrices import RingMatrix
from .chevalley import (
    TypeARealization,
    BruhatFactors,
    realization_over_group_ring,
    realization_over_character,
    realization_over_monoid,
    realization_over_field,
    bruhat_decompose,
    big_cell_factor,
    monoid_point_of,
    commutator_constants,
    enumerate_group,
)

__all__ = [
    'BudgetExceededError',
    'RootSystemError',
    'CountingPolynomial',
    'FiniteField',
    'IntegersMod',
    'PointedAbelianGroup',
    'GroupHom',
    'Character',
    'CyclotomicRing',
    'GroupRing',
    'RingMonoid',
    'AdjoinedZeroMonoid',
    'gf_make',
    'field_of_order',
    'group_make',
    'group_from_spec',
    'cyclic_test_group',
    'hom_set',
    'characters',
    'reduced_group_ring',
    'adjoin_zero',
    'monoid_of_ring',
    'monoid_from_spec',
    'RootSystem',
    'LatticeMap',
    'cartan_matrix',
    'root_system',
    'simply_connected_cover',
    'WeylElement',
    'WeylGroup',
    'weyl_enumerate',
    'inversion_set',
    'coxeter_matrix',
    'ExtWeylElement',
    'TitsExtension',
    'amalgamated_check',
    'restricted_torus',
    'induced_map',
    'GradedSet',
    'GPoint',
    'gm_points',
    'affine_points',
    'e_F',
    'proj_points',
    'spec_points',
    'chevalley_points',
    'chevalley_census',
    'restricted_chevalley_census',
    'chevalley_points_monoid',
    'counting_polynomial',
    'naturality_check',
    'RingMatrix',
    'TypeARealization',
    'BruhatFactors',
    'realization_over_group_ring',
    'realization_over_character',
    'realization_over_monoid',
    'realization_over_field',
    'bruhat_decompose',
    'big_cell_factor',
    'monoid_point_of',
    'commutator_constants',
    'enumerate_group',
]
