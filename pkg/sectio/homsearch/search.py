"""Backtracking search for homomorphisms with constraints."""
from dataclasses import dataclass, field
from typing import Iterator, List, Mapping, Optional, Tuple

from sectio import logger
from sectio.config.settings import settings
from sectio.errors import (CodomainMismatch, InvalidParameter,
                           SearchBudgetExceeded)
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable, check_order_cap
from sectio.subgroups.lattice import closure_mask


@dataclass(frozen=True)
class HomQuery:
    """
    A homomorphism search problem.

    Attributes:
        domain: source group
        codomain: target group
        pinned: element -> required image
        fiber_map: optional f: codomain -> X; solutions s satisfy f∘s = fiber_target
        fiber_target: the required composite, a Hom domain -> X
        limit: stop after this many solutions
        injective: only return injective homomorphisms
        budget: node budget, defaults to settings.SEARCH_BUDGET_NODES
    """
    domain: GroupTable
    codomain: GroupTable
    pinned: Mapping[int, int] = field(default_factory=dict)
    fiber_map: Optional[Hom] = None
    fiber_target: Optional[Hom] = None
    limit: Optional[int] = None
    injective: bool = False
    budget: Optional[int] = None

    def __post_init__(self):
        if (self.fiber_map is None) != (self.fiber_target is None):
            raise InvalidParameter("fiber_map and fiber_target must be given together")
        if self.fiber_map is not None:
            if self.fiber_map.domain is not self.codomain or self.fiber_target.domain is not self.domain:
                raise CodomainMismatch("Fiber constraint does not match the query's groups")
            if self.fiber_map.codomain is not self.fiber_target.codomain:
                raise CodomainMismatch("Fiber map and fiber target have different codomains")
        for x, y in self.pinned.items():
            if not (0 <= x < self.domain.order and 0 <= y < self.codomain.order):
                raise InvalidParameter(f"Pin {x} -> {y} out of range")
            if self.domain.orders[x] % self.codomain.orders[y]:
                raise InvalidParameter(
                    f"Pin {x} -> {y}: order {self.codomain.orders[y]} does not divide {self.domain.orders[x]}"
                )


def generating_sequence(group: GroupTable) -> Tuple[int, ...]:
    """
    Greedy generating sequence: scan elements by descending order (ties by
    index) and keep each one not already generated.
    """
    gens: List[int] = []
    mask = 1
    for x in sorted(range(1, group.order), key=lambda x: (-group.orders[x], x)):
        if mask == group.full_mask:
            break
        if not mask >> x & 1:
            gens.append(x)
            mask = closure_mask(group, gens)
    return tuple(gens)


class _Search:
    """State of one backtracking run."""

    def __init__(self, query: HomQuery):
        self.q = query
        self.rows = query.domain.rows
        self.crows = query.codomain.rows
        self.gens = generating_sequence(query.domain)
        self.budget = query.budget if query.budget is not None else settings.SEARCH_BUDGET_NODES
        self.nodes = 0
        self.candidates = [self._candidates(g) for g in self.gens]

    def _candidates(self, g: int) -> List[int]:
        q = self.q
        dom, cod = q.domain, q.codomain
        if g in q.pinned:
            pool = [q.pinned[g]]
        else:
            pool = range(cod.order)
        out = []
        for y in pool:
            if dom.orders[g] % cod.orders[y]:
                continue
            if q.injective and cod.orders[y] != dom.orders[g]:
                continue
            if q.fiber_map is not None and q.fiber_map.images[y] != q.fiber_target.images[g]:
                continue
            out.append(y)
        return out

    def _extend(self, phi: List[int], assigned: List[int], depth: int, image: int) -> Optional[Tuple[List[int], List[int]]]:
        """Assign generator `depth` and propagate along right multiplication by generators."""
        rows, crows = self.rows, self.crows
        gens = self.gens[:depth + 1]
        g = self.gens[depth]
        phi = phi.copy()
        assigned = assigned.copy()
        stack: List[int] = []
        previous = list(assigned)

        def settle(z: int, w: int) -> bool:
            current = phi[z]
            if current < 0:
                phi[z] = w
                assigned.append(z)
                stack.append(z)
                return True
            return current == w

        if not settle(g, image):
            return None
        for x in previous:
            if not settle(rows[x][g], crows[phi[x]][image]):
                return None
        while stack:
            x = stack.pop()
            px = phi[x]
            row = rows[x]
            for h in gens:
                if not settle(row[h], crows[px][phi[h]]):
                    return None
        for x, y in self.q.pinned.items():
            if phi[x] >= 0 and phi[x] != y:
                return None
        return phi, assigned

    def run(self) -> Iterator[Tuple[int, ...]]:
        n = self.q.domain.order
        phi = [-1] * n
        phi[0] = 0
        yield from self._descend(phi, [0], 0)

    def _descend(self, phi: List[int], assigned: List[int], depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == len(self.gens):
            if self.q.injective and len(set(phi)) != len(phi):
                return
            yield tuple(phi)
            return
        for y in self.candidates[depth]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded("homomorphism search", self.budget)
            extended = self._extend(phi, assigned, depth, y)
            if extended is not None:
                yield from self._descend(extended[0], extended[1], depth + 1)


def iter_homs(query: HomQuery) -> Iterator[Hom]:
    """Yield solutions in lexicographic order of their generator images."""
    check_order_cap(query.domain.order)
    search = _Search(query)
    count = 0
    for images in search.run():
        yield Hom(query.domain, query.codomain, images)
        count += 1
        if query.limit is not None and count >= query.limit:
            break
    logger.debug(
        f"Hom search {query.domain.label} -> {query.codomain.label}: {count} solutions, {search.nodes} nodes"
    )


def enumerate_homs(query: HomQuery) -> List[Hom]:
    """
    Every homomorphism satisfying the query's pins and fiber constraint.

    Raises:
        SearchBudgetExceeded: If the node budget runs out first
    """
    return list(iter_homs(query))


def first_hom(query: HomQuery) -> Optional[Hom]:
    """The lexicographically least solution, or None."""
    for hom in iter_homs(query):
        return hom
    return None


def all_homs(domain: GroupTable, codomain: GroupTable, budget: Optional[int] = None) -> List[Hom]:
    return enumerate_homs(HomQuery(domain, codomain, budget=budget))

