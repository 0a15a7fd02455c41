"""Covering-number results and their certificates."""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

from sympy import totient

from sectio.config.constants import InfinityReason
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable
from sectio.homsearch.sections import exists_local_section
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.maps import image_subgroup
from sectio.subgroups.subgroup import Subgroup

INFINITE = math.inf

Value = Union[int, float]


@dataclass(frozen=True)
class CoverResult:
    """
    A covering number: a finite value with its witness cover, or a
    certified infinity.

    Attributes:
        value: size of the cover, or INFINITE
        witness: the covering subgroups, in canonical order
        sections: for sectional numbers, a local section per witness subgroup
            (domain: the subgroup realised as a group); for homomorphism
            covering numbers, a global section of each restriction
        reason: why the value is infinite
        reason_element: the offending element for NotLocallySectionable
        method: how the value was obtained
        details: extra witness data (e.g. splitting isomorphisms)
    """
    value: Value
    witness: Tuple[Subgroup, ...] = ()
    sections: Tuple[Hom, ...] = ()
    reason: Optional[InfinityReason] = None
    reason_element: Optional[int] = None
    method: str = "maximal candidates"
    details: Tuple[Any, ...] = field(default=(), compare=False)

    @classmethod
    def finite(cls, witness, sections=(), method: str = "maximal candidates", details=()) -> "CoverResult":
        return cls(len(witness), tuple(witness), tuple(sections), method=method, details=tuple(details))

    @classmethod
    def infinite(cls, reason: InfinityReason, element: Optional[int] = None, method: str = "decision ladder") -> "CoverResult":
        return cls(INFINITE, reason=reason, reason_element=element, method=method)

    @property
    def is_finite(self) -> bool:
        return self.value != INFINITE

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE

    def display_value(self) -> str:
        return str(self.value) if self.is_finite else "infinite"


@dataclass(frozen=True)
class OrderBreakdown:
    order: int
    element_count: int
    totient: int
    subgroup_count: int


@dataclass(frozen=True)
class CyclicBoundReport:
    """
    The bound sum over x != 1 of 1/phi(o(x)), which equals the number of
    distinct nontrivial cyclic subgroups.
    """
    bound: int
    breakdown: Tuple[OrderBreakdown, ...]


def cyclic_bound(G: GroupTable) -> CyclicBoundReport:
    counts = {}
    for o in G.orders[1:]:
        counts[o] = counts.get(o, 0) + 1
    total = Fraction(0)
    rows = []
    for o in sorted(counts):
        phi = int(totient(o))
        total += Fraction(counts[o], phi)
        rows.append(OrderBreakdown(order=o, element_count=counts[o], totient=phi, subgroup_count=counts[o] // phi))
    assert total.denominator == 1
    return CyclicBoundReport(bound=int(total), breakdown=tuple(rows))


def _union_covers(witness: Tuple[Subgroup, ...], group: GroupTable) -> bool:
    union = 0
    for s in witness:
        if s.parent is not group or not s.is_proper:
            return False
        union |= s.mask
    return union == group.full_mask


def _section_ok(f: Hom, L: Subgroup, s: Hom) -> bool:
    members = L.members
    if s.domain.order != len(members) or s.codomain is not f.domain:
        return False
    return all(f.images[s.images[i]] == m for i, m in enumerate(members))


def _proper_union(group: GroupTable) -> int:
    union = 0
    for L in all_subgroups(group).maximal():
        union |= L.mask
    return union


def _sectionable_union(f: Hom) -> int:
    """Union of the proper subgroups of the codomain carrying a local section."""
    union = 0
    for L in all_subgroups(f.codomain).proper():
        # subgroups inside the running union add nothing
        if L.mask & ~union and exists_local_section(f, L) is not None:
            union |= L.mask
    return union


def _splitting_union(f: Hom) -> int:
    """Union of the proper L > Ker f whose image under f carries a local section."""
    K = f.kernel_mask
    union = 0
    for L in all_subgroups(f.domain).proper():
        if L.mask == K or K & ~L.mask or not L.mask & ~union:
            continue
        if exists_local_section(f, image_subgroup(f, L)) is not None:
            union |= L.mask
    return union


def check_certificate(result: CoverResult, group: Optional[GroupTable] = None, hom: Optional[Hom] = None) -> bool:
    """
    Re-verify a result independently of the code that produced it.

    Pass `group` for covering numbers of a group and `hom` alone for
    sectional numbers, where the covered group is the codomain of `hom`.
    For homomorphism covering numbers pass both, with `group` the domain.
    """
    target = group if group is not None else hom.codomain
    if result.is_finite:
        if len(result.witness) != result.value or not _union_covers(result.witness, target):
            return False
        if group is None and result.sections:
            if len(result.sections) != len(result.witness):
                return False
            return all(_section_ok(hom, L, s) for L, s in zip(result.witness, result.sections))
        return True

    reason = result.reason
    if reason == InfinityReason.NOT_SURJECTIVE:
        return hom is not None and not hom.is_surjective
    if reason == InfinityReason.CODOMAIN_CYCLIC:
        return target.is_cyclic
    if reason == InfinityReason.DOMAIN_CYCLIC:
        return hom is not None and hom.domain.is_cyclic
    if reason == InfinityReason.NOT_LOCALLY_SECTIONABLE:
        b = result.reason_element
        if hom is None or b is None or b == 0:
            return False
        G, H = hom.domain, hom.codomain
        return not any(hom.images[a] == b and G.orders[a] == H.orders[b] for a in range(G.order))
    if reason == InfinityReason.NO_PROPER_COVER:
        if group is not None and hom is not None:
            covered = _splitting_union(hom)
        elif group is not None:
            covered = _proper_union(group)
        else:
            covered = _sectionable_union(hom)
        return covered | 1 != target.full_mask
    return False
