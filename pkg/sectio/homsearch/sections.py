"""Local and global sections, local sectionability and fibrewise morphisms."""
from dataclasses import dataclass, field
from typing import Dict, Optional

from sectio import logger
from sectio.errors import CodomainMismatch
from sectio.groups.homs import Hom, identity_hom
from sectio.homsearch.search import HomQuery, first_hom
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.subgroup import Subgroup


def exists_local_section(f: Hom, L: Subgroup, budget: Optional[int] = None) -> Optional[Hom]:
    """
    A homomorphism s: L -> G with f(s(x)) = x on L, or None.

    The domain of s is L realised as a group (L.as_group()); each generator
    image is restricted to its fiber under f.
    """
    L.require_parent(f.codomain)
    embedded = L.embedded
    query = HomQuery(
        embedded.group, f.domain,
        fiber_map=f, fiber_target=embedded.inclusion, budget=budget,
    )
    return first_hom(query)


def exists_global_section(f: Hom, budget: Optional[int] = None) -> Optional[Hom]:
    """A homomorphism s: H -> G with f∘s = id_H, or None."""
    H = f.codomain
    query = HomQuery(H, f.domain, fiber_map=f, fiber_target=identity_hom(H), budget=budget)
    return first_hom(query)


@dataclass(frozen=True)
class Sectionability:
    """
    Result of the local sectionability test.

    On success `lifts` maps every non-identity b of the codomain to the
    least a with f(a) = b and o(a) = o(b); on failure `witness` is the
    least b without such a lift.
    """
    ok: bool
    lifts: Dict[int, int] = field(default_factory=dict)
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def is_locally_sectionable(f: Hom) -> Sectionability:
    """
    Every b != 1 lies in a subgroup with a local section iff it has a lift
    of the same order; finite groups are torsion, so ⟨b⟩ lifts to ⟨a⟩.
    """
    G, H = f.domain, f.codomain
    lifts: Dict[int, int] = {}
    for a in range(G.order):
        b = f.images[a]
        if b and b not in lifts and G.orders[a] == H.orders[b]:
            lifts[b] = a
    for b in range(1, H.order):
        if b not in lifts:
            logger.debug(f"{f.describe()}: element {H.element_name(b)} has no lift of order {H.orders[b]}")
            return Sectionability(ok=False, witness=b)
    return Sectionability(ok=True, lifts=dict(sorted(lifts.items())))


def is_locally_sectionable_by_definition(f: Hom, budget: Optional[int] = None) -> Sectionability:
    """
    The definitional test: for each b != 1 search for a subgroup containing b
    that carries a local section, smallest subgroups first.
    """
    H = f.codomain
    lattice = all_subgroups(H)
    witnesses: Dict[int, int] = {}
    for b in range(1, H.order):
        found = None
        for L in lattice.containing(1 << b):
            s = exists_local_section(f, L, budget=budget)
            if s is not None:
                found = s.images[L.embedded.local_index(b)]
                break
        if found is None:
            return Sectionability(ok=False, witness=b)
        witnesses[b] = found
    return Sectionability(ok=True, lifts=witnesses)


def exists_fibrewise_morphism(f: Hom, f2: Hom, budget: Optional[int] = None) -> Optional[Hom]:
    """A homomorphism psi: G -> G2 with f2∘psi = f, or None."""
    if f.codomain is not f2.codomain:
        raise CodomainMismatch(f"{f.describe()} and {f2.describe()} have different codomains")
    query = HomQuery(f.domain, f2.domain, fiber_map=f2, fiber_target=f, budget=budget)
    return first_hom(query)
