"""Sectional numbers and the poset of sectionable subgroups."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sectio import logger
from sectio.config.constants import InfinityReason
from sectio.groups.homs import Hom
from sectio.homsearch.sections import (exists_local_section,
                                       is_locally_sectionable)
from sectio.invariants.cover import all_min_covers, min_cover
from sectio.invariants.results import INFINITE, CoverResult, Value
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.subgroup import Subgroup


@dataclass(frozen=True)
class SectionablePoset:
    """
    Proper subgroups of the codomain admitting a local section of `hom`,
    in canonical order.

    Attributes:
        hom: the homomorphism
        elements: sectionable proper subgroups
        maximal: positions in `elements` of the maximal ones
        sections: a local section for each maximal element, keyed by position
        cover: minimum cover of the codomain by maximal elements
    """
    hom: Hom
    elements: Tuple[Subgroup, ...]
    maximal: Tuple[int, ...]
    sections: Dict[int, Hom]
    cover: CoverResult

    @property
    def cover_number(self) -> Value:
        return self.cover.value

    def maximal_elements(self) -> List[Subgroup]:
        return [self.elements[i] for i in self.maximal]


@lru_cache(maxsize=256)
def _poset(f: Hom, budget: Optional[int]) -> SectionablePoset:
    H = f.codomain
    lattice = all_subgroups(H)
    proper = sorted(lattice.proper(), key=lambda s: -s.order)
    sectionable: List[Subgroup] = []
    maxima: List[Tuple[Subgroup, Hom]] = []
    for L in proper:
        if any(L.mask & ~M.mask == 0 for M, _ in maxima):
            sectionable.append(L)
            continue
        s = exists_local_section(f, L, budget=budget)
        if s is not None:
            sectionable.append(L)
            maxima.append((L, s))

    elements = tuple(sorted(sectionable, key=lambda s: s.sort_key))
    position = {s.mask: i for i, s in enumerate(elements)}
    ordered = sorted(maxima, key=lambda pair: pair[0].sort_key)
    maximal = tuple(position[M.mask] for M, _ in ordered)
    sections = {position[M.mask]: s for M, s in ordered}

    if H.is_cyclic:
        cover = CoverResult.infinite(InfinityReason.CODOMAIN_CYCLIC)
    else:
        candidates = [M for M, _ in ordered]
        solution = min_cover(H.full_mask & ~1, [M.mask for M in candidates], budget=budget)
        if solution is None:
            cover = CoverResult.infinite(InfinityReason.NO_PROPER_COVER)
        else:
            chosen = [ordered[i] for i in solution.chosen]
            cover = CoverResult.finite([M for M, _ in chosen], sections=[s for _, s in chosen])
    logger.debug(f"{f.describe()}: {len(elements)} sectionable subgroups, {len(maximal)} maximal")
    return SectionablePoset(hom=f, elements=elements, maximal=maximal, sections=sections, cover=cover)


def sectionable_poset(f: Hom, budget: Optional[int] = None) -> SectionablePoset:
    """
    Enumerate the sectionable proper subgroups of the codomain top-down.

    Larger subgroups are tested first; anything inside a known sectionable
    subgroup is sectionable by restriction and is not searched.
    """
    return _poset(f, budget)


def sec(f: Hom, budget: Optional[int] = None) -> CoverResult:
    """
    The sectional number of f: the least number of proper subgroups of the
    codomain, each with a local section, whose union is the codomain.

    Decided in order: surjectivity, cyclic codomain, local sectionability,
    then a minimum cover by the maximal sectionable subgroups.
    """
    H = f.codomain
    if not f.is_surjective:
        return CoverResult.infinite(InfinityReason.NOT_SURJECTIVE)
    if H.is_cyclic:
        return CoverResult.infinite(InfinityReason.CODOMAIN_CYCLIC)
    local = is_locally_sectionable(f)
    if not local:
        return CoverResult.infinite(InfinityReason.NOT_LOCALLY_SECTIONABLE, element=local.witness)
    result = sectionable_poset(f, budget=budget).cover
    logger.info(f"sec({f.describe()}) = {result.display_value()}")
    return result


def sec_over_all_sectionable(f: Hom, budget: Optional[int] = None) -> CoverResult:
    """
    sec(f) by increasing-size search over every proper subgroup that admits
    a local section, each one searched directly.
    """
    H = f.codomain
    candidates: List[Subgroup] = []
    sections: List[Hom] = []
    for L in all_subgroups(H).proper():
        s = exists_local_section(f, L, budget=budget)
        if s is not None:
            candidates.append(L)
            sections.append(s)
    universe = H.full_mask & ~1
    for size in range(1, len(candidates) + 1):
        covers = all_min_covers(universe, [L.mask for L in candidates], size, budget=budget, limit=1)
        if covers:
            chosen = covers[0]
            return CoverResult.finite(
                [candidates[i] for i in chosen],
                sections=[sections[i] for i in chosen],
                method="all candidates",
            )
    return CoverResult(INFINITE, reason=InfinityReason.NO_PROPER_COVER, method="all candidates")
