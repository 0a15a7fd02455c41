"""
The deterministic catalog of small groups and canonical homomorphisms used
by batch verification and by `search`.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from sectio import logger
from sectio.config.constants import HomKind
from sectio.config.settings import settings
from sectio.groups.homs import Hom, trivial_hom
from sectio.groups.table import GroupTable, check_order_cap
from sectio.homsearch.isomorphism import find_isomorphism
from sectio.subgroups.lattice import all_subgroups, closure_mask
from sectio.subgroups.subgroup import Subgroup
from sectio.cli.elaborate import Elaborator
from sectio.cli.grammar import HomSpec, parse_group


@dataclass(frozen=True)
class CatalogCase:
    key: str
    hom: Hom


@dataclass(frozen=True)
class Catalog:
    """Groups keyed by expression and homomorphism cases keyed by spec."""
    max_order: int
    groups: Tuple[Tuple[str, GroupTable], ...]
    cases: Tuple[CatalogCase, ...]

    def group(self, key: str) -> GroupTable:
        return dict(self.groups)[key]

    def case(self, key: str) -> CatalogCase:
        for c in self.cases:
            if c.key == key:
                return c
        raise KeyError(key)

    @property
    def homs(self) -> List[Tuple[str, Hom]]:
        return [(c.key, c.hom) for c in self.cases]


def group_expressions(max_order: int) -> List[str]:
    """Expressions of the catalog groups, in catalog order."""
    atoms = [f"Z({n})" for n in range(1, max_order + 1)]
    atoms += [f"D({n})" for n in range(3, max_order // 2 + 1)]
    named = [("Q8", 8), ("S(3)", 6), ("A(4)", 12), ("S(4)", 24)]
    atoms += [text for text, order in named if order <= max_order]
    atoms += [
        f"E({p},{k})"
        for p in range(2, max_order + 1) if isprime(p)
        for k in range(2, max_order.bit_length()) if p ** k <= max_order
    ]

    factors = [(f"Z({n})", n) for n in range(2, max_order // 2 + 1)]
    factors += [(f"D({n})", 2 * n) for n in range(3, max_order // 4 + 1)]
    factors += [(text, order) for text, order in named[:3] if 2 * order <= max_order]
    products = [
        f"{a}x{b}"
        for i, (a, m) in enumerate(factors)
        for b, n in factors[i:]
        if m * n <= max_order
    ]

    semidirect = [
        f"sd(Z({n}),Z({h}),inv)"
        for h in (2, 4)
        for n in range(3, max_order // h + 1)
    ]
    return atoms + products + semidirect


def _minimal_generators(N: Subgroup) -> Tuple[int, ...]:
    gens: List[int] = []
    mask = 1
    for x in N.members:
        if not mask >> x & 1:
            gens.append(x)
            mask = closure_mask(N.parent, gens)
    return tuple(gens)


def _canonical(q: Hom, key: str, groups: List[GroupTable]) -> Hom:
    """Re-target q to the first isomorphic catalog group, if any."""
    Q = q.codomain
    for G in groups:
        if G.order != Q.order or G.is_abelian != Q.is_abelian:
            continue
        iso = find_isomorphism(Q, G)
        if iso is not None:
            return Hom(q.domain, G, tuple(iso.images[y] for y in q.images), label=key)
    return q


@lru_cache(maxsize=8)
def catalog(max_order: Optional[int] = None) -> Catalog:
    """
    Build the catalog: standard groups, pairwise products and semidirect
    products up to max_order, with every quotient map by a normal subgroup,
    the projections of each product and the trivial map to Z(2).

    Quotient maps are re-targeted to an isomorphic catalog group so cases
    share codomains.

    Raises:
        OrderCapExceeded: If max_order exceeds the order cap
    """
    max_order = max_order or settings.CATALOG_MAX_ORDER
    check_order_cap(max_order)
    elaborator = Elaborator()
    groups: List[Tuple[str, GroupTable]] = []
    seen: Dict[str, GroupTable] = {}
    for text in group_expressions(max_order):
        expr = parse_group(text)
        key = expr.pretty()
        if key not in seen:
            seen[key] = elaborator.group(expr)
            groups.append((key, seen[key]))
    tables = [G for _, G in groups]

    z2 = seen.get("Z(2)")
    cases: List[CatalogCase] = []
    for key, G in groups:
        expr = parse_group(key)
        for N in all_subgroups(G).normal():
            spec = HomSpec(kind=HomKind.QUOTIENT, groups=(expr,), values=_minimal_generators(N))
            q = elaborator.quotient_map(expr, spec.values)
            cases.append(CatalogCase(spec.pretty(), _canonical(q, spec.pretty(), tables)))
        if expr.kind == "product":
            for i in (1, 2):
                spec = HomSpec(kind=HomKind.PROJECTION, groups=(expr,), index=i)
                cases.append(CatalogCase(spec.pretty(), elaborator.hom(spec)))
        if z2 is not None:
            spec = HomSpec(kind=HomKind.TRIVIAL, groups=(expr, parse_group("Z(2)")))
            cases.append(CatalogCase(spec.pretty(), trivial_hom(G, z2)))
    logger.info(f"Catalog up to order {max_order}: {len(groups)} groups, {len(cases)} homomorphisms")
    return Catalog(max_order=max_order, groups=tuple(groups), cases=tuple(cases))
