"""Images, preimages and kernels of subgroups under homomorphisms."""
from functools import lru_cache
from typing import List, Tuple

from sectio.errors import NotAbelian
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable
from sectio.subgroups.lattice import all_subgroups
from sectio.subgroups.subgroup import Subgroup, mask_of


def image_subgroup(f: Hom, L: Subgroup) -> Subgroup:
    L.require_parent(f.domain)
    return Subgroup(f.codomain, mask_of(f.images[x] for x in L.members))


def preimage_subgroup(f: Hom, M: Subgroup) -> Subgroup:
    M.require_parent(f.codomain)
    return Subgroup(f.domain, mask_of(x for x, y in enumerate(f.images) if M.mask >> y & 1))


@lru_cache(maxsize=1024)
def kernel(f: Hom) -> Subgroup:
    """Ker(f), one shared object per homomorphism."""
    K = Subgroup(f.domain, f.kernel_mask)
    # kernels are normal; seed the cached flag
    K.__dict__["is_normal"] = True
    return K


def image(f: Hom) -> Subgroup:
    return Subgroup(f.codomain, f.image_mask)


def restrict_hom(f: Hom, L: Subgroup) -> Hom:
    """f restricted to L, as a Hom from L's group into f's codomain."""
    L.require_parent(f.domain)
    members = L.members
    return Hom(L.as_group(), f.codomain, tuple(f.images[x] for x in members), label=f"{f.label or 'f'}|")


def restrict_to_preimage(f: Hom, A: Subgroup) -> Hom:
    """
    The restriction f| : f^-1(A) -> A, both realised as groups.

    Surjective whenever f is.
    """
    pre = preimage_subgroup(f, A)
    target = A.embedded
    images = tuple(target.local_index(f.images[x]) for x in pre.members)
    return Hom(pre.as_group(), target.group, images, label=f"{f.label or 'f'}|")


def complement_pairs(H: GroupTable) -> List[Tuple[Subgroup, Subgroup]]:
    """
    Internal direct decompositions H = A ⊕ B with A, B nontrivial, listed once
    each with A before B in lattice order.
    """
    if not H.is_abelian:
        raise NotAbelian(f"{H.label} is not abelian")
    lattice = all_subgroups(H)
    subs = [s for s in lattice if s.is_proper and not s.is_trivial]
    pairs = []
    for i, A in enumerate(subs):
        for B in subs[i + 1:]:
            if A.mask & B.mask == 1 and A.order * B.order == H.order:
                pairs.append((A, B))
    return pairs
