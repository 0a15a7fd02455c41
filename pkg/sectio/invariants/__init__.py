"""Covering numbers, sectional numbers and the minimum cover engine."""
from sectio.invariants.cover import (CoverSolution, all_min_covers,
                                     min_cover)
from sectio.invariants.covering import (cover_by, enumerate_minimum_covers,
                                        sigma, sigma_cyclic,
                                        sigma_cyclic_over_all_cyclic,
                                        sigma_over_all_subgroups)
from sectio.invariants.homcover import (SplittingIsomorphism, sigma_hom,
                                        splitting_candidates,
                                        splitting_isomorphism)
from sectio.invariants.results import (INFINITE, CoverResult,
                                       CyclicBoundReport, OrderBreakdown,
                                       check_certificate, cyclic_bound)
from sectio.invariants.sectional import (SectionablePoset, sec,
                                         sec_over_all_sectionable,
                                         sectionable_poset)

__all__ = [
    'CoverResult',
    'CoverSolution',
    'CyclicBoundReport',
    'INFINITE',
    'OrderBreakdown',
    'SectionablePoset',
    'SplittingIsomorphism',
    'all_min_covers',
    'check_certificate',
    'cover_by',
    'cyclic_bound',
    'enumerate_minimum_covers',
    'min_cover',
    'sec',
    'sec_over_all_sectionable',
    'sectionable_poset',
    'sigma',
    'sigma_cyclic',
    'sigma_cyclic_over_all_cyclic',
    'sigma_hom',
    'sigma_over_all_subgroups',
    'splitting_candidates',
    'splitting_isomorphism',
]
