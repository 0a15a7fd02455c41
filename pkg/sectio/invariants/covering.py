"""Covering numbers of groups by proper and by cyclic subgroups."""
from typing import List, Optional, Sequence, Tuple

from sectio import logger
from sectio.config.constants import InfinityReason
from sectio.config.settings import settings
from sectio.errors import InvalidParameter
from sectio.groups.table import GroupTable
from sectio.invariants.cover import all_min_covers, min_cover
from sectio.invariants.results import (CoverResult, CyclicBoundReport,
                                       cyclic_bound)
from sectio.subgroups.lattice import (all_subgroups, cyclic_subgroups,
                                      maximal_cyclic_subgroups)
from sectio.subgroups.subgroup import Subgroup


def _nonidentity(G: GroupTable) -> int:
    return G.full_mask & ~1


def cover_by(G: GroupTable, candidates: Sequence[Subgroup], budget: Optional[int] = None) -> Optional[CoverResult]:
    """Minimum cover of G by the given subgroups, or None if they miss an element."""
    solution = min_cover(_nonidentity(G), [s.mask for s in candidates], budget=budget)
    if solution is None:
        return None
    return CoverResult.finite([candidates[i] for i in solution.chosen])


def sigma(G: GroupTable, budget: Optional[int] = None) -> CoverResult:
    """
    The least number of proper subgroups whose union is G.

    Infinite for cyclic G; otherwise a minimum cover by maximal subgroups.
    """
    if G.is_cyclic:
        return CoverResult.infinite(InfinityReason.CODOMAIN_CYCLIC)
    result = cover_by(G, all_subgroups(G).maximal(), budget=budget)
    # noncyclic groups are covered by their maximal subgroups
    assert result is not None and result.value >= 3, f"{G.label}: impossible covering number"
    logger.info(f"sigma({G.label}) = {result.value}")
    return result


def sigma_cyclic(G: GroupTable, budget: Optional[int] = None) -> Tuple[CoverResult, CyclicBoundReport]:
    """
    The least number of proper cyclic subgroups whose union is G, with the
    totient bound.
    """
    report = cyclic_bound(G)
    if G.is_cyclic:
        return CoverResult.infinite(InfinityReason.CODOMAIN_CYCLIC), report
    result = cover_by(G, maximal_cyclic_subgroups(G), budget=budget)
    assert result is not None
    logger.info(f"sigma_c({G.label}) = {result.value} (bound {report.bound})")
    return result, report


def _brute_force(G: GroupTable, candidates: List[Subgroup], budget: Optional[int]) -> CoverResult:
    for size in range(1, len(candidates) + 1):
        covers = all_min_covers(_nonidentity(G), [s.mask for s in candidates], size, budget=budget, limit=1)
        if covers:
            return CoverResult.finite([candidates[i] for i in covers[0]], method="all candidates")
    return CoverResult.infinite(InfinityReason.NO_PROPER_COVER, method="all candidates")


def sigma_over_all_subgroups(G: GroupTable, budget: Optional[int] = None) -> CoverResult:
    """sigma(G) by increasing-size search over every proper subgroup."""
    return _brute_force(G, all_subgroups(G).proper(), budget)


def sigma_cyclic_over_all_cyclic(G: GroupTable, budget: Optional[int] = None) -> CoverResult:
    """sigma_c(G) by increasing-size search over every proper cyclic subgroup."""
    candidates = [c.subgroup for c in cyclic_subgroups(G) if c.subgroup.is_proper]
    return _brute_force(G, candidates, budget)


def enumerate_minimum_covers(H: GroupTable, budget: Optional[int] = None) -> List[Tuple[Subgroup, ...]]:
    """
    Every cover of H by sigma(H) proper subgroups, taken from all proper
    subgroups rather than the maximal ones only.

    Raises:
        InvalidParameter: If sigma(H) is infinite or H is larger than settings.COVERS_MAX_ORDER
    """
    if H.order > settings.COVERS_MAX_ORDER:
        raise InvalidParameter(
            f"{H.label} has order {H.order}; covers are enumerated up to order {settings.COVERS_MAX_ORDER}"
        )
    value = sigma(H, budget=budget)
    if value.is_infinite:
        raise InvalidParameter(f"{H.label} is cyclic and has no cover by proper subgroups")
    proper = [s for s in all_subgroups(H).proper() if not s.is_trivial]
    covers = all_min_covers(_nonidentity(H), [s.mask for s in proper], value.value, budget=budget)
    return [tuple(proper[i] for i in cover) for cover in covers]
