"""Homomorphism search: enumeration, sections, H-points and isomorphisms."""
from sectio.homsearch.isomorphism import find_isomorphism, is_isomorphic
from sectio.homsearch.points import (HomGroup, evaluation_hom,
                                     h_point_inverse_symmetry, hom_group,
                                     is_h_point)
from sectio.homsearch.search import (HomQuery, all_homs, enumerate_homs,
                                     first_hom, generating_sequence,
                                     iter_homs)
from sectio.homsearch.sections import (Sectionability, exists_fibrewise_morphism,
                                       exists_global_section,
                                       exists_local_section,
                                       is_locally_sectionable,
                                       is_locally_sectionable_by_definition)

__all__ = [
    'HomGroup',
    'HomQuery',
    'Sectionability',
    'all_homs',
    'enumerate_homs',
    'evaluation_hom',
    'exists_fibrewise_morphism',
    'exists_global_section',
    'exists_local_section',
    'find_isomorphism',
    'first_hom',
    'generating_sequence',
    'h_point_inverse_symmetry',
    'hom_group',
    'is_h_point',
    'is_isomorphic',
    'is_locally_sectionable',
    'is_locally_sectionable_by_definition',
    'iter_homs',
]
