"""Extension cocycles and the cohomological computation of sec."""
from sectio.cohomology.coboundary import (COCHAIN_SEARCH, SECTION_ORACLE,
                                          CoboundaryResult, coboundary_of,
                                          is_coboundary, sec_via_cohomology,
                                          section_from_cochain)
from sectio.cohomology.cocycle import (Cocycle, Transversal, build_cocycle,
                                       difference_cocycle, restrict_cocycle)

__all__ = [
    'COCHAIN_SEARCH',
    'SECTION_ORACLE',
    'CoboundaryResult',
    'Cocycle',
    'Transversal',
    'build_cocycle',
    'coboundary_of',
    'difference_cocycle',
    'is_coboundary',
    'restrict_cocycle',
    'sec_via_cohomology',
    'section_from_cochain',
]
