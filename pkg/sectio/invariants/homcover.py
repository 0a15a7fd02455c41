"""The covering number of a homomorphism."""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sectio import logger
from sectio.config.constants import InfinityReason
from sectio.groups.actions import conjugation_action
from sectio.groups.constructors import SemidirectProduct, make_semidirect
from sectio.groups.homs import Hom
from sectio.homsearch.sections import exists_local_section
from sectio.invariants.cover import min_cover
from sectio.invariants.results import CoverResult
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.maps import image_subgroup, kernel
from sectio.subgroups.subgroup import Subgroup

# splitting isomorphisms are only built for subgroups up to this order
SPLITTING_MAX_ORDER = 64


@dataclass(frozen=True)
class SplittingIsomorphism:
    """
    Ker(f) ⋊ f(L) -> L, (a, b) -> a·s(b), where s is a section of f over
    f(L) and f(L) acts on Ker(f) by conjugation through s.
    `omega` maps into the domain of f and is injective with image L.
    """
    subgroup: Subgroup
    semidirect: SemidirectProduct
    omega: Hom


def splitting_isomorphism(f: Hom, L: Subgroup, section: Hom) -> SplittingIsomorphism:
    """Build the isomorphism onto L from a section of f over f(L)."""
    G = f.domain
    K = kernel(f).embedded
    M = image_subgroup(f, L).embedded
    action = conjugation_action(
        M.group, G, lambda h: section.images[h], K.inclusion.images, K.group
    )
    sd = make_semidirect(K.group, M.group, action)
    n = M.group.order
    rows = G.rows
    images = tuple(
        rows[K.inclusion.images[x // n]][section.images[x % n]] for x in range(sd.group.order)
    )
    omega = Hom(sd.group, G, images, label="omega")
    assert omega.is_injective and omega.image_mask == L.mask
    assert all(f.images[images[x]] == M.inclusion.images[x % n] for x in range(sd.group.order))
    return SplittingIsomorphism(subgroup=L, semidirect=sd, omega=omega)


def splitting_candidates(f: Hom, budget: Optional[int] = None) -> List[Tuple[Subgroup, Hom]]:
    """
    Maximal proper subgroups L of the domain that strictly contain Ker(f) and
    on which f splits onto f(L), each with a section over f(L).

    Scanned top-down; a subgroup inside a splitting one splits by restriction.
    """
    lattice = all_subgroups(f.domain)
    K = f.kernel_mask
    maxima: List[Tuple[Subgroup, Hom]] = []
    for L in sorted(lattice.proper(), key=lambda s: -s.order):
        if L.mask == K or K & ~L.mask:
            continue
        if any(L.mask & ~M.mask == 0 for M, _ in maxima):
            continue
        s = exists_local_section(f, image_subgroup(f, L), budget=budget)
        if s is not None:
            maxima.append((L, s))
    maxima.sort(key=lambda pair: pair[0].sort_key)
    return maxima


def sigma_hom(f: Hom, budget: Optional[int] = None) -> CoverResult:
    """
    The least number of proper subgroups of the domain, each strictly
    containing Ker(f) and each split by f onto its image, whose union is
    the domain. The witness carries the sections and, for small subgroups,
    the splitting isomorphisms.
    """
    G = f.domain
    if not f.is_surjective:
        return CoverResult.infinite(InfinityReason.NOT_SURJECTIVE)
    if G.is_cyclic:
        return CoverResult.infinite(InfinityReason.DOMAIN_CYCLIC)
    candidates = splitting_candidates(f, budget=budget)
    solution = min_cover(G.full_mask & ~1, [L.mask for L, _ in candidates], budget=budget)
    if solution is None:
        return CoverResult.infinite(InfinityReason.NO_PROPER_COVER)
    chosen = [candidates[i] for i in solution.chosen]
    details = tuple(
        splitting_isomorphism(f, L, s) for L, s in chosen if L.order <= SPLITTING_MAX_ORDER
    )
    result = CoverResult.finite([L for L, _ in chosen], sections=[s for _, s in chosen], details=details)
    logger.info(f"sigma({f.describe()}) = {result.value}")
    return result
