"""Subgroups, the subgroup lattice and subgroup maps."""
from sectio.subgroups.lattice import (CyclicSubgroup, SubgroupLattice,
                                      all_subgroups, closure_mask,
                                      cyclic_subgroups, generated_subgroup,
                                      maximal_cyclic_subgroups, subgroup_of)
from sectio.subgroups.maps import (complement_pairs, image, image_subgroup,
                                   kernel, preimage_subgroup, restrict_hom,
                                   restrict_to_preimage)
from sectio.subgroups.subgroup import (EmbeddedGroup, Subgroup, full_subgroup,
                                       mask_of, members_of, trivial_subgroup)

__all__ = [
    'CyclicSubgroup',
    'EmbeddedGroup',
    'Subgroup',
    'SubgroupLattice',
    'all_subgroups',
    'closure_mask',
    'complement_pairs',
    'cyclic_subgroups',
    'full_subgroup',
    'generated_subgroup',
    'image',
    'image_subgroup',
    'kernel',
    'mask_of',
    'maximal_cyclic_subgroups',
    'members_of',
    'preimage_subgroup',
    'restrict_hom',
    'restrict_to_preimage',
    'subgroup_of',
    'trivial_subgroup',
]
