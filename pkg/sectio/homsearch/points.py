"""The abelian group Hom(G, A), evaluation maps and H-points."""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

import numpy as np

from sectio.errors import InvalidParameter, NotAbelian, OrderCapExceeded
from sectio.groups.homs import Hom
from sectio.groups.table import Element, GroupTable, check_order_cap
from sectio.homsearch.search import HomQuery, all_homs, first_hom


@dataclass(frozen=True, eq=False)
class HomGroup:
    """
    Hom(G, A) under the pointwise operation.

    element_homs[i] is the homomorphism at index i of `base`; index 0 is the
    trivial homomorphism.
    """
    base: GroupTable
    element_homs: Tuple[Hom, ...]
    source: GroupTable
    target: GroupTable

    def index_of(self, hom: Hom) -> int:
        for i, h in enumerate(self.element_homs):
            if h.images == hom.images:
                return i
        raise InvalidParameter(f"{hom!r} is not in Hom({self.source.label}, {self.target.label})")


def hom_group(G: GroupTable, A: GroupTable, budget: Optional[int] = None) -> HomGroup:
    """
    Enumerate Hom(G, A) and tabulate the pointwise product.

    Raises:
        NotAbelian: If A is not abelian
        OrderCapExceeded: If there are more homomorphisms than the order cap
    """
    if not A.is_abelian:
        raise NotAbelian(f"Hom({G.label}, {A.label}) needs an abelian target")
    homs = all_homs(G, A, budget=budget)
    check_order_cap(len(homs))
    position: Dict[Tuple[int, ...], int] = {h.images: i for i, h in enumerate(homs)}
    images = np.asarray([h.images for h in homs], dtype=np.int64)
    n = len(homs)
    mul = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        pointwise = A.mul[images[i], images]  # row j: pointwise product of homs i and j
        for j in range(n):
            mul[i, j] = position[tuple(int(v) for v in pointwise[j])]
    names = tuple(f"f{i}" for i in range(n))
    base = GroupTable(mul, label=f"Hom({G.label},{A.label})", names=names).validate()
    return HomGroup(base=base, element_homs=tuple(homs), source=G, target=A)


def evaluation_hom(hg: HomGroup, a: Union[Element, int]) -> Hom:
    """ev_a : Hom(G, A) -> A, f -> f(a)."""
    index = a.index if isinstance(a, Element) else a
    if isinstance(a, Element) and a.group is not hg.source:
        raise InvalidParameter(f"Element is not in {hg.source.label}")
    images = tuple(h.images[index] for h in hg.element_homs)
    return Hom(hg.base, hg.target, images, label=f"ev_{hg.source.element_name(index)}")


def is_h_point(G: GroupTable, H: GroupTable, a: Union[Element, int], budget: Optional[int] = None) -> bool:
    """
    Whether every b in H is f(a) for some homomorphism f: G -> H.

    Uses o(b) | o(a) when a generates G, surjectivity of ev_a when H is
    abelian and small enough to tabulate Hom(G, H), and a pinned search per
    b otherwise.
    """
    index = a.index if isinstance(a, Element) else a
    if H.order == 1:
        return True
    if index == 0:
        return False
    if G.orders[index] == G.order:
        return all(G.orders[index] % o == 0 for o in H.orders)
    if any(G.orders[index] % o for o in H.orders):
        return False
    if H.is_abelian:
        try:
            return evaluation_hom(hom_group(G, H, budget=budget), index).is_surjective
        except OrderCapExceeded:
            # Hom(G, H) too large to tabulate
            pass
    for b in range(1, H.order):
        if first_hom(HomQuery(G, H, pinned={index: b}, budget=budget)) is None:
            return False
    return True


def h_point_inverse_symmetry(G: GroupTable, H: GroupTable, a: int, budget: Optional[int] = None) -> bool:
    """For abelian H, a is an H-point exactly when a^-1 is."""
    return is_h_point(G, H, a, budget=budget) == is_h_point(G, H, G.inverse(a), budget=budget)
