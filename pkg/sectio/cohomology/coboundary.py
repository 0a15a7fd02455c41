"""Deciding whether a cocycle is a coboundary, and sec through cohomology."""
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from sectio import logger
from sectio.config.constants import InfinityReason
from sectio.config.settings import settings
from sectio.errors import BudgetExceeded, InvalidParameter
from sectio.groups.homs import Hom
from sectio.homsearch.search import generating_sequence
from sectio.homsearch.sections import exists_local_section
from sectio.invariants.cover import min_cover
from sectio.invariants.results import CoverResult
from sectio.cohomology.cocycle import Cocycle, build_cocycle, restrict_cocycle
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.subgroup import Subgroup, mask_of

COCHAIN_SEARCH = "cochain search"
SECTION_ORACLE = "via section oracle"


@dataclass(frozen=True)
class CoboundaryResult:
    """
    Outcome of a coboundary test.

    `cochain` is a normalized 1-cochain with δc = w when one was found by
    search; `section` is the matching local section when the cocycle comes
    from a homomorphism.
    """
    is_coboundary: bool
    cochain: Optional[Tuple[int, ...]] = None
    section: Optional[Hom] = None
    method: str = COCHAIN_SEARCH

    def __bool__(self) -> bool:
        return self.is_coboundary


def coboundary_of(c: Cocycle, cochain: Tuple[int, ...]) -> np.ndarray:
    """(δc)(x, y) = x·c(y) - c(xy) + c(x) as a table."""
    A = c.coeff
    ch = np.asarray(cochain, dtype=np.int64)
    n = c.base.order
    x = np.arange(n)[:, None]
    moved = c.action.act[x, ch[None, :]]
    return A.mul[A.mul[moved, A.inv[ch[c.base.mul]]], ch[x]]


def _propagate(c: Cocycle, gens: Tuple[int, ...], values: Tuple[int, ...]) -> Optional[List[int]]:
    """Extend generator values along c(xg) = x·c(g) + c(x) - w(x, g)."""
    A = c.coeff.rows
    inv = c.coeff.inv
    act = c.action.rows
    rows = c.base.rows
    w = c.values
    cochain = [-1] * c.base.order
    cochain[0] = 0
    for g, v in zip(gens, values):
        if cochain[g] >= 0 and cochain[g] != v:
            return None
        cochain[g] = v
    stack = [0]
    seen = {0}
    while stack:
        x = stack.pop()
        cx = cochain[x]
        for g in gens:
            z = rows[x][g]
            value = A[A[act[x][cochain[g]]][cx]][int(inv[w[x, g]])]
            if cochain[z] < 0:
                cochain[z] = value
            elif cochain[z] != value:
                return None
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return cochain


def section_from_cochain(c: Cocycle, cochain: Tuple[int, ...]) -> Hom:
    """s(x) = c(x)^-1 · t(x), a local section over the cocycle's base."""
    f = c.hom
    if f is None:
        raise InvalidParameter("Cocycle does not come from a homomorphism")
    rows = f.domain.rows
    inv = c.coeff.inv
    images = tuple(
        rows[c.kernel_members[int(inv[cochain[x]])]][c.lifts[x]] for x in range(c.base.order)
    )
    return Hom(c.base, f.domain, images, label="s")


def is_coboundary(c: Cocycle, budget: Optional[int] = None) -> CoboundaryResult:
    """
    Search the normalized 1-cochains for one with δc = w.

    Values are chosen on a generating sequence of the base and propagated;
    the search space is |A| to the number of generators. Above the budget
    the question goes to the section search over the same subgroup, which
    is equivalent for cocycles of homomorphisms.

    Raises:
        BudgetExceeded: If the space is too large and no homomorphism is attached
    """
    budget = budget if budget is not None else settings.COBOUNDARY_BUDGET
    gens = generating_sequence(c.base)
    space = c.coeff.order ** len(gens)
    if space > budget:
        if c.hom is None:
            raise BudgetExceeded("coboundary search", budget)
        logger.warning(f"Cochain space {space} exceeds {budget}; deciding {SECTION_ORACLE}")
        L = Subgroup(c.hom.codomain, mask_of(c.members))
        s = exists_local_section(c.hom, L)
        return CoboundaryResult(s is not None, section=s, method=SECTION_ORACLE)

    for values in product(range(c.coeff.order), repeat=len(gens)):
        cochain = _propagate(c, gens, values)
        if cochain is None:
            continue
        cochain = tuple(cochain)
        if not np.array_equal(coboundary_of(c, cochain), c.values):
            continue
        section = section_from_cochain(c, cochain) if c.hom is not None and c.lifts else None
        return CoboundaryResult(True, cochain=cochain, section=section)
    return CoboundaryResult(False)


def sec_via_cohomology(f: Hom, budget: Optional[int] = None) -> CoverResult:
    """
    Minimum cover of the codomain by proper subgroups on which the
    extension cocycle restricts to a coboundary.

    Raises:
        KernelNotAbelian: If Ker(f) is not abelian
    """
    H = f.codomain
    if not f.is_surjective:
        return CoverResult.infinite(InfinityReason.NOT_SURJECTIVE, method="cohomology")
    _, w = build_cocycle(f)
    if H.is_cyclic:
        return CoverResult.infinite(InfinityReason.CODOMAIN_CYCLIC, method="cohomology")
    maxima: List[Tuple[Subgroup, CoboundaryResult]] = []
    for L in sorted(all_subgroups(H).proper(), key=lambda s: -s.order):
        if any(L.mask & ~M.mask == 0 for M, _ in maxima):
            continue
        outcome = is_coboundary(restrict_cocycle(w, L), budget=budget)
        if outcome:
            maxima.append((L, outcome))
    maxima.sort(key=lambda pair: pair[0].sort_key)
    oracle = any(o.method == SECTION_ORACLE for _, o in maxima)
    method = f"cohomology {SECTION_ORACLE}" if oracle else "cohomology"
    solution = min_cover(H.full_mask & ~1, [L.mask for L, _ in maxima])
    if solution is None:
        return CoverResult.infinite(InfinityReason.NO_PROPER_COVER, method=method)
    chosen = [maxima[i] for i in solution.chosen]
    return CoverResult.finite([L for L, _ in chosen], sections=[o.section for _, o in chosen], method=method)
