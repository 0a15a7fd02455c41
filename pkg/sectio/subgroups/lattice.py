"""Subgroup enumeration and the inclusion lattice."""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sectio import logger
from sectio.groups.table import GroupTable, check_order_cap
from sectio.errors import InvalidParameter
from sectio.subgroups.subgroup import Subgroup, mask_of


def closure_mask(group: GroupTable, gens: Sequence[int], start: int = 1) -> int:
    """Bit mask of the subgroup generated by `gens` together with the subgroup `start`."""
    rows = group.rows
    mask = start
    frontier = [x for x in range(group.order) if start >> x & 1]
    for g in gens:
        if not mask >> g & 1:
            mask |= 1 << g
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        row = rows[x]
        for g in gens:
            y = row[g]
            if not mask >> y & 1:
                mask |= 1 << y
                frontier.append(y)
    return mask


def generated_subgroup(group: GroupTable, seed: Iterable[int]) -> Subgroup:
    """The smallest subgroup of `group` containing every index in `seed`."""
    gens = sorted(set(seed))
    for x in gens:
        if not 0 <= x < group.order:
            raise InvalidParameter(f"Element {x} is not in {group.label}")
    return Subgroup(group, closure_mask(group, gens))


def cyclic_mask(group: GroupTable, x: int) -> int:
    rows = group.rows
    mask = 1
    y = x
    while y != 0:
        mask |= 1 << y
        y = rows[y][x]
    return mask


@dataclass(frozen=True)
class CyclicSubgroup:
    subgroup: Subgroup
    generator: int
    is_maximal_cyclic: bool


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """
    Every subgroup of `parent`, sorted by size then member list.

    Attributes:
        parent: the ambient group
        subgroups: all subgroups, trivial first and the full group last
        maximal_proper: positions of the maximal proper subgroups
    """
    parent: GroupTable
    subgroups: Tuple[Subgroup, ...]
    maximal_proper: Tuple[int, ...] = field(init=False)
    _position: Dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_position", {s.mask: i for i, s in enumerate(self.subgroups)})
        maxima: List[int] = []
        for i in sorted(range(len(self.subgroups)), key=lambda i: -self.subgroups[i].order):
            s = self.subgroups[i]
            if not s.is_proper:
                continue
            if not any(s.mask & ~self.subgroups[j].mask == 0 for j in maxima):
                maxima.append(i)
        object.__setattr__(self, "maximal_proper", tuple(sorted(maxima)))

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def position(self, subgroup: Subgroup) -> int:
        subgroup.require_parent(self.parent)
        return self._position[subgroup.mask]

    def find(self, mask: int) -> Optional[Subgroup]:
        i = self._position.get(mask)
        return None if i is None else self.subgroups[i]

    def leq(self, i: int, j: int) -> bool:
        """Whether subgroup i is contained in subgroup j."""
        return self.subgroups[i].mask & ~self.subgroups[j].mask == 0

    def hasse_edges(self) -> List[Tuple[int, int]]:
        """Covering pairs (i, j): i < j with nothing strictly between."""
        edges = []
        n = len(self.subgroups)
        for j in range(n):
            below = [i for i in range(n) if i != j and self.leq(i, j)]
            for i in below:
                if not any(k != i and self.leq(i, k) for k in below):
                    edges.append((i, j))
        return edges

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def full(self) -> Subgroup:
        return self.subgroups[-1]

    def proper(self) -> List[Subgroup]:
        return [s for s in self.subgroups if s.is_proper]

    def maximal(self) -> List[Subgroup]:
        return [self.subgroups[i] for i in self.maximal_proper]

    def normal(self) -> List[Subgroup]:
        return [s for s in self.subgroups if s.is_normal]

    def containing(self, mask: int) -> List[Subgroup]:
        return [s for s in self.subgroups if mask & ~s.mask == 0]


@lru_cache(maxsize=512)
def all_subgroups(group: GroupTable) -> SubgroupLattice:
    """
    Enumerate every subgroup of `group`.

    Starts from the cyclic subgroups and joins each known subgroup with each
    cyclic subgroup until nothing new appears. Every subgroup is a join of
    the cyclic subgroups it contains, so the fixpoint is complete.
    """
    check_order_cap(group.order)
    cyclic: Dict[int, int] = {}
    for x in range(group.order):
        cyclic.setdefault(cyclic_mask(group, x), x)

    found: Dict[int, Tuple[int, ...]] = {m: (g,) if g else () for m, g in cyclic.items()}
    queue = list(found)
    cyclic_items = sorted(cyclic.items(), key=lambda kv: kv[1])
    while queue:
        mask = queue.pop()
        gens = found[mask]
        for cmask, g in cyclic_items:
            if cmask & ~mask == 0:
                continue
            joined = closure_mask(group, gens + (g,), start=mask)
            if joined not in found:
                found[joined] = gens + (g,)
                queue.append(joined)

    subgroups = sorted((Subgroup(group, m) for m in found), key=lambda s: s.sort_key)
    logger.debug(f"{group.label}: {len(subgroups)} subgroups")
    return SubgroupLattice(group, tuple(subgroups))


@lru_cache(maxsize=512)
def cyclic_subgroups(group: GroupTable) -> Tuple[CyclicSubgroup, ...]:
    """
    Every cyclic subgroup ⟨x⟩, deduplicated and sorted like the lattice,
    flagged when no strictly larger cyclic subgroup contains it.
    """
    generators: Dict[int, int] = {}
    for x in range(group.order):
        m = cyclic_mask(group, x)
        best = generators.get(m)
        if best is None or group.orders[x] > group.orders[best]:
            generators[m] = x
    masks = list(generators)
    out = []
    for m in masks:
        maximal = not any(o != m and m & ~o == 0 for o in masks)
        out.append(CyclicSubgroup(Subgroup(group, m), generators[m], maximal))
    out.sort(key=lambda c: c.subgroup.sort_key)
    return tuple(out)


def maximal_cyclic_subgroups(group: GroupTable) -> List[Subgroup]:
    return [c.subgroup for c in cyclic_subgroups(group) if c.is_maximal_cyclic]


def subgroup_of(group: GroupTable, members: Iterable[int]) -> Subgroup:
    """The subgroup with exactly these members (closure is checked)."""
    return Subgroup(group, mask_of(members))
