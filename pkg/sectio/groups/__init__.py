"""Finite groups as Cayley tables: construction, homomorphisms and actions."""
from sectio.groups.actions import (ActionTable, action_from_function,
                                   conjugation_action, inversion_action,
                                   trivial_action)
from sectio.groups.constructors import (FiberProduct, GroupFactory,
                                        ProductGroup, SemidirectProduct,
                                        fiber_product, make_alternating,
                                        make_cyclic, make_dihedral,
                                        make_elementary_abelian, make_product,
                                        make_quaternion8, make_semidirect,
                                        make_standard, make_symmetric,
                                        pair_hom, product_hom, quotient,
                                        sum_hom)
from sectio.groups.homs import (Hom, compose, hom_from_images, identity_hom,
                                trivial_hom)
from sectio.groups.structure import (StructureReport, center, element_names,
                                     structure_queries)
from sectio.groups.table import (Element, GroupTable, build_table,
                                 check_order_cap)

__all__ = [
    'ActionTable',
    'Element',
    'FiberProduct',
    'GroupFactory',
    'GroupTable',
    'Hom',
    'ProductGroup',
    'SemidirectProduct',
    'StructureReport',
    'action_from_function',
    'build_table',
    'center',
    'check_order_cap',
    'compose',
    'conjugation_action',
    'element_names',
    'fiber_product',
    'hom_from_images',
    'identity_hom',
    'inversion_action',
    'make_alternating',
    'make_cyclic',
    'make_dihedral',
    'make_elementary_abelian',
    'make_product',
    'make_quaternion8',
    'make_semidirect',
    'make_standard',
    'make_symmetric',
    'pair_hom',
    'product_hom',
    'quotient',
    'structure_queries',
    'sum_hom',
    'trivial_action',
    'trivial_hom',
]
