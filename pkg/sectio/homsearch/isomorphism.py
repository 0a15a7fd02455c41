"""Isomorphism testing by backtracking on generator images."""
from collections import Counter
from typing import Optional

from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable
from sectio.homsearch.search import HomQuery, first_hom


def find_isomorphism(G: GroupTable, H: GroupTable, budget: Optional[int] = None) -> Optional[Hom]:
    """An isomorphism G -> H, or None. Order profiles are compared first."""
    if G.order != H.order or G.is_abelian != H.is_abelian:
        return None
    if Counter(G.orders) != Counter(H.orders):
        return None
    return first_hom(HomQuery(G, H, injective=True, budget=budget))


def is_isomorphic(G: GroupTable, H: GroupTable, budget: Optional[int] = None) -> bool:
    return find_isomorphism(G, H, budget=budget) is not None
