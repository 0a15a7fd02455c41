"""Structural queries on a group."""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sectio.groups.table import GroupTable
from sectio.subgroups.subgroup import Subgroup


@dataclass(frozen=True)
class StructureReport:
    """Summary of a group's basic structure."""
    label: str
    order: int
    is_abelian: bool
    is_cyclic: bool
    center: Subgroup
    element_orders: Tuple[int, ...]
    exponent: int

    def order_profile(self) -> Dict[int, int]:
        """Element order -> number of elements of that order."""
        profile: Dict[int, int] = {}
        for o in self.element_orders:
            profile[o] = profile.get(o, 0) + 1
        return dict(sorted(profile.items()))


def center(G: GroupTable) -> Subgroup:
    rows = G.rows
    mask = 0
    for x in range(G.order):
        if all(rows[x][y] == rows[y][x] for y in range(G.order)):
            mask |= 1 << x
    return Subgroup(G, mask)


def structure_queries(G: GroupTable) -> StructureReport:
    return StructureReport(
        label=G.label,
        order=G.order,
        is_abelian=G.is_abelian,
        is_cyclic=G.is_cyclic,
        center=center(G),
        element_orders=G.orders,
        exponent=G.exponent,
    )


def element_names(G: GroupTable) -> List[Tuple[int, str, int]]:
    """(index, descriptive name, element order) for every element."""
    return [(x, G.element_name(x), G.orders[x]) for x in range(G.order)]
