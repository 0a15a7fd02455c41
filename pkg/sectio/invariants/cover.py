"""Exact minimum set cover over bit masks."""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sectio import logger
from sectio.config.settings import settings
from sectio.errors import SearchBudgetExceeded

SetLike = Union[int, Iterable[int]]


def _to_mask(s: SetLike) -> int:
    if isinstance(s, int):
        return s
    mask = 0
    for x in s:
        mask |= 1 << x
    return mask


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CoverSolution:
    """A minimum cover: its size and the chosen candidate indices, ascending."""
    size: int
    chosen: Tuple[int, ...]


class _Budget:
    def __init__(self, budget: int, name: str):
        self.budget = budget
        self.name = name
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.name, self.budget)


def _non_dominated(masks: Sequence[int]) -> List[int]:
    """Indices of candidates not contained in another (duplicates keep the lowest index)."""
    kept = []
    for i, m in enumerate(masks):
        if m == 0:
            continue
        dominated = False
        for j, o in enumerate(masks):
            if j == i or m & ~o:
                continue
            if m != o or j < i:
                dominated = True
                break
        if not dominated:
            kept.append(i)
    return kept


def _greedy(universe: int, masks: Dict[int, int]) -> int:
    uncovered = universe
    used = 0
    while uncovered:
        best = max(masks, key=lambda i: (_popcount(masks[i] & uncovered), -i))
        uncovered &= ~masks[best]
        used += 1
    return used


def _optimum_size(universe: int, masks: Dict[int, int], budget: _Budget) -> int:
    """Branch and bound on the least-covered uncovered element."""
    covering: Dict[int, List[int]] = {}
    for e in _bits(universe):
        covering[e] = sorted(
            (i for i, m in masks.items() if m >> e & 1),
            key=lambda i: -_popcount(masks[i]),
        )
    largest = max(_popcount(m) for m in masks.values())
    best = _greedy(universe, masks)
    seen: Dict[int, int] = {}

    def branch(uncovered: int, depth: int) -> None:
        nonlocal best
        budget.tick()
        if not uncovered:
            best = min(best, depth)
            return
        lower = -(-_popcount(uncovered) // largest)
        if depth + lower >= best:
            return
        if seen.get(uncovered, best + 1) <= depth:
            return
        seen[uncovered] = depth
        pivot = min(_bits(uncovered), key=lambda e: (len(covering[e]), e))
        for i in covering[pivot]:
            branch(uncovered & ~masks[i], depth + 1)

    branch(universe, 0)
    return best


def _covers_of_size(
    universe: int, order: Sequence[int], masks: Dict[int, int], size: int, budget: _Budget
) -> Iterator[Tuple[int, ...]]:
    """Index tuples (ascending in `order`) of exactly `size` candidates covering the universe."""
    n = len(order)
    suffix = [0] * (n + 1)
    for pos in range(n - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] | masks[order[pos]]
    largest = max((_popcount(m) for m in masks.values()), default=0)
    chosen: List[int] = []

    def descend(start: int, uncovered: int) -> Iterator[Tuple[int, ...]]:
        budget.tick()
        remaining = size - len(chosen)
        if not uncovered:
            if remaining == 0:
                yield tuple(chosen)
            return
        if remaining == 0 or uncovered & ~suffix[start]:
            return
        if _popcount(uncovered) > remaining * largest:
            return
        for pos in range(start, n - remaining + 1):
            if uncovered & ~suffix[pos]:
                return
            i = order[pos]
            if not masks[i] & uncovered:
                continue
            chosen.append(i)
            yield from descend(pos + 1, uncovered & ~masks[i])
            chosen.pop()

    yield from descend(0, universe)


def min_cover(
    universe: SetLike, candidates: Sequence[SetLike], budget: Optional[int] = None
) -> Optional[CoverSolution]:
    """
    Exact minimum number of candidates whose union contains the universe.

    Candidates contained in another candidate are dropped first; among the
    minimum covers of the remaining candidates the lexicographically least
    index tuple is returned.

    Args:
        universe: set or bit mask to cover
        candidates: sets or bit masks
        budget: branch node budget, defaults to settings.COVER_BUDGET_NODES

    Returns:
        The solution, or None when all candidates together miss part of the universe

    Raises:
        SearchBudgetExceeded: If the budget runs out
    """
    U = _to_mask(universe)
    raw = [_to_mask(c) & U for c in candidates]
    union = 0
    for m in raw:
        union |= m
    if U & ~union:
        return None
    if not U:
        return CoverSolution(0, ())
    kept = _non_dominated(raw)
    masks = {i: raw[i] for i in kept}
    counter = _Budget(budget if budget is not None else settings.COVER_BUDGET_NODES, "minimum cover")
    size = _optimum_size(U, masks, counter)
    witness = next(_covers_of_size(U, kept, masks, size, counter))
    logger.debug(f"Minimum cover of {len(kept)} candidates: size {size}, {counter.nodes} nodes")
    return CoverSolution(size, witness)


def all_min_covers(
    universe: SetLike,
    candidates: Sequence[SetLike],
    size: int,
    budget: Optional[int] = None,
    limit: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """Sets of exactly `size` candidates covering the universe, without dominance reduction."""
    U = _to_mask(universe)
    raw = [_to_mask(c) & U for c in candidates]
    order = list(range(len(raw)))
    masks = dict(enumerate(raw))
    counter = _Budget(budget if budget is not None else settings.COVER_BUDGET_NODES, "cover enumeration")
    found = []
    for cover in _covers_of_size(U, order, masks, size, counter):
        found.append(cover)
        if limit is not None and len(found) >= limit:
            break
    return found
