"""Constructors for standard groups and group operations."""
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Tuple

import numpy as np
from sympy import isprime
from sympy.combinatorics import Permutation

from sectio import logger
from sectio.config.constants import MAX_PERMUTATION_DEGREE, GroupFamily
from sectio.errors import (CodomainMismatch, InvalidAction, InvalidParameter,
                           NotAbelian, NotNormal)
from sectio.groups.actions import ActionTable
from sectio.groups.homs import Hom
from sectio.groups.table import (GroupTable, build_table, check_order_cap,
                                 check_power_cap)
from sectio.subgroups.subgroup import Subgroup


def _operand(label: str) -> str:
    """Parenthesise a label that is itself a product."""
    depth = 0
    for ch in label:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "x" and depth == 0:
            return f"({label})"
    return label


def make_cyclic(n: int, label: Optional[str] = None) -> GroupTable:
    """Z_n with mul[a][b] = (a + b) mod n."""
    if n < 1:
        raise InvalidParameter(f"Cyclic group order must be positive, got {n}")
    check_order_cap(n)
    ar = np.arange(n)
    mul = (ar[:, None] + ar[None, :]) % n
    return GroupTable(mul, label=label or f"Z({n})", names=tuple(str(a) for a in range(n))).validate()


def make_dihedral(n: int, label: Optional[str] = None) -> GroupTable:
    """
    The dihedral group of order 2n. Index k < n is r^k and index n + k is r^k s.
    """
    if n < 1:
        raise InvalidParameter(f"Dihedral parameter must be positive, got {n}")
    check_order_cap(2 * n)
    elements = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]

    def multiply(x, y):
        a, e = x
        b, f = y
        return ((a + (b if e == 0 else -b)) % n, (e + f) % 2)

    def name(x):
        k, e = x
        rot = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        return (rot + ("s" if e else "")) or "1"

    return build_table(elements, multiply, label or f"D({n})", names=[name(x) for x in elements])


# unit quaternion products: (i, j) -> (sign, unit) with units 0:1 1:i 2:j 3:k
_UNIT_PRODUCTS = {
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def make_quaternion8(label: Optional[str] = None) -> GroupTable:
    """Q8 with indices 0..7 = 1, i, j, k, -1, -i, -j, -k."""
    check_order_cap(8)
    elements = [(1, u) for u in range(4)] + [(-1, u) for u in range(4)]

    def multiply(x, y):
        s, u = x
        t, v = y
        if u == 0 or v == 0:
            return (s * t, u or v)
        sign, w = _UNIT_PRODUCTS[(u, v)]
        return (s * t * sign, w)

    names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    return build_table(elements, multiply, label or "Q8", names=names)


def _permutation_name(p: Permutation) -> str:
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + "".join(str(i + 1) for i in c) + ")" for c in cycles)


def _permutation_group(n: int, even_only: bool, label: str) -> GroupTable:
    if not 1 <= n <= MAX_PERMUTATION_DEGREE:
        raise InvalidParameter(f"Permutation degree must lie in [1, {MAX_PERMUTATION_DEGREE}], got {n}")
    perms = [Permutation(list(p)) for p in permutations(range(n))]
    if even_only:
        perms = [p for p in perms if p.is_even]
    check_order_cap(len(perms))
    elements = [tuple(p.array_form) for p in perms]

    def multiply(x, y):
        # x*y applies y first, then x
        return tuple(x[i] for i in y)

    return build_table(elements, multiply, label, names=[_permutation_name(p) for p in perms])


def make_symmetric(n: int, label: Optional[str] = None) -> GroupTable:
    """S_n on lexicographically ordered permutations of 0..n-1."""
    return _permutation_group(n, False, label or f"S({n})")


def make_alternating(n: int, label: Optional[str] = None) -> GroupTable:
    """A_n: the even permutations, in the same order as in S_n."""
    return _permutation_group(n, True, label or f"A({n})")


def make_elementary_abelian(p: int, k: int, label: Optional[str] = None) -> GroupTable:
    """
    (Z_p)^k with base-p digit indices, first coordinate most significant.
    This matches the left-nested product Z(p)x...xZ(p).
    """
    if k < 1:
        raise InvalidParameter(f"Rank must be positive, got {k}")
    if not isprime(p):
        raise InvalidParameter(f"{p} is not prime")
    n = check_power_cap(p, k)
    digits = np.array([[(x // p ** (k - 1 - i)) % p for i in range(k)] for x in range(n)])
    weights = p ** np.arange(k - 1, -1, -1)
    mul = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    names = tuple("(" + ",".join(str(d) for d in row) + ")" for row in digits)
    return GroupTable(mul, label=label or f"E({p},{k})", names=names).validate()


class GroupFactory:
    """Factory for the standard group families."""

    @staticmethod
    def create_group(family: GroupFamily, *params: int, label: Optional[str] = None) -> GroupTable:
        """
        Build a group of a standard family.

        Args:
            family: which family
            *params: family parameters (n for dihedral/symmetric/alternating,
                p and k for elementary abelian)
            label: optional display label

        Returns:
            The Cayley table of the group

        Raises:
            InvalidParameter: If the family or its parameters are invalid
            OrderCapExceeded: If the group is larger than the order cap
        """
        logger.info(f"Building {family.value} group {params}")
        if family == GroupFamily.CYCLIC:
            return make_cyclic(*params, label=label)
        elif family == GroupFamily.DIHEDRAL:
            return make_dihedral(*params, label=label)
        elif family == GroupFamily.QUATERNION:
            return make_quaternion8(label=label)
        elif family == GroupFamily.SYMMETRIC:
            return make_symmetric(*params, label=label)
        elif family == GroupFamily.ALTERNATING:
            return make_alternating(*params, label=label)
        elif family == GroupFamily.ELEMENTARY_ABELIAN:
            return make_elementary_abelian(*params, label=label)
        else:
            raise InvalidParameter(f"Unknown group family: {family}")


def make_standard(family: GroupFamily, *params: int) -> GroupTable:
    return GroupFactory.create_group(family, *params)


@dataclass(frozen=True)
class ProductGroup:
    """G x K with its canonical projections and injections."""
    group: GroupTable
    proj1: Hom
    proj2: Hom
    incl1: Hom
    incl2: Hom


def make_product(G: GroupTable, K: GroupTable, label: Optional[str] = None) -> ProductGroup:
    """Direct product with element index g*|K| + k."""
    m, n = G.order, K.order
    check_order_cap(m * n)
    mul = (G.mul[:, None, :, None] * n + K.mul[None, :, None, :]).reshape(m * n, m * n)
    names = tuple(f"({G.element_name(g)},{K.element_name(k)})" for g in range(m) for k in range(n))
    group = GroupTable(mul, label=label or f"{G.label}x{_operand(K.label)}", names=names).validate()
    idx = range(m * n)
    proj1 = Hom(group, G, tuple(x // n for x in idx), label="pr1")
    proj2 = Hom(group, K, tuple(x % n for x in idx), label="pr2")
    incl1 = Hom(G, group, tuple(g * n for g in range(m)), label="in1")
    incl2 = Hom(K, group, tuple(range(n)), label="in2")
    return ProductGroup(group, proj1, proj2, incl1, incl2)


@dataclass(frozen=True)
class SemidirectProduct:
    """
    A ⋊ H with the projection onto H, the injection b -> (1, b) and the
    inclusion of A as a -> (a, 1).
    """
    group: GroupTable
    action: ActionTable
    proj: Hom
    incl: Hom
    kernel_incl: Hom


def make_semidirect(A: GroupTable, H: GroupTable, action: ActionTable, label: Optional[str] = None) -> SemidirectProduct:
    """
    The group on A x H with (a1, b1)(a2, b2) = (a1 * b1·a2, b1 b2).

    Element (a, b) has index a*|H| + b, so a trivial action gives exactly
    the direct product table.
    """
    if action.actor is not H or action.target is not A:
        raise InvalidAction(f"{action!r} is not an action of {H.label} on {A.label}")
    m, n = A.order, H.order
    check_order_cap(m * n)
    act = action.act
    # first[a1, b1, a2] = a1 * (b1·a2)
    first = A.mul[np.arange(m)[:, None, None], act[None, :, :]]
    mul = (first[:, :, :, None] * n + H.mul[None, :, None, :]).reshape(m * n, m * n)
    names = tuple(f"({A.element_name(a)},{H.element_name(b)})" for a in range(m) for b in range(n))
    group = GroupTable(mul, label=label or f"sd({A.label},{H.label})", names=names).validate()
    idx = range(m * n)
    proj = Hom(group, H, tuple(x % n for x in idx), label="pr2")
    incl = Hom(H, group, tuple(range(n)), label="in2")
    kernel_incl = Hom(A, group, tuple(a * n for a in range(m)), label="in1")
    return SemidirectProduct(group, action, proj, incl, kernel_incl)


def quotient(G: GroupTable, N: Subgroup, label: Optional[str] = None) -> Tuple[GroupTable, Hom]:
    """
    G/N with cosets indexed by their minimal representative, ascending,
    and the quotient map.
    """
    N.require_parent(G)
    if not N.is_normal:
        raise NotNormal(f"{N!r} is not normal in {G.label}")
    rows = G.rows
    coset_of = [-1] * G.order
    reps: List[int] = []
    for x in range(G.order):
        if coset_of[x] < 0:
            c = len(reps)
            reps.append(x)
            for k in N.members:
                coset_of[rows[x][k]] = c
    q = len(reps)
    mul = np.asarray([[coset_of[rows[a][b]] for b in reps] for a in reps], dtype=np.int64)
    names = tuple(f"{G.element_name(r)}N" if r else "N" for r in reps)
    Q = GroupTable(mul, label=label or f"{G.label}/{N.order}", names=names).validate()
    hom = Hom(G, Q, tuple(coset_of), label="q")
    logger.debug(f"Quotient of {G.label} by a normal subgroup of order {N.order}: order {q}")
    return Q, hom


@dataclass(frozen=True)
class FiberProduct:
    """
    K x_H G = {(a, b) : g(a) = f(b)} inside K x G, with its projections.
    `square` is the ambient product.
    """
    subgroup: Subgroup
    to_k: Hom
    to_g: Hom
    square: ProductGroup

    @property
    def group(self) -> GroupTable:
        return self.subgroup.as_group()


def fiber_product(f: Hom, g: Hom) -> FiberProduct:
    """The canonical pullback of f: G -> H along g: K -> H."""
    if f.codomain is not g.codomain:
        raise CodomainMismatch(f"{f.describe()} and {g.describe()} have different codomains")
    K, G = g.domain, f.domain
    square = make_product(K, G)
    n = G.order
    mask = 0
    for a in range(K.order):
        for b in range(G.order):
            if g.images[a] == f.images[b]:
                mask |= 1 << (a * n + b)
    sub = Subgroup(square.group, mask)
    members = sub.members
    domain = sub.as_group()
    to_k = Hom(domain, K, tuple(x // n for x in members), label="pr_K")
    to_g = Hom(domain, G, tuple(x % n for x in members), label="pr_G")
    return FiberProduct(sub, to_k, to_g, square)


def product_hom(f1: Hom, f2: Hom, domain: Optional[ProductGroup] = None, codomain: Optional[ProductGroup] = None) -> Hom:
    """f1 x f2 : G1 x G2 -> H1 x H2."""
    dom = domain or make_product(f1.domain, f2.domain)
    cod = codomain or make_product(f1.codomain, f2.codomain)
    n1, n2 = f2.domain.order, f2.codomain.order
    images = tuple(
        f1.images[x // n1] * n2 + f2.images[x % n1] for x in range(dom.group.order)
    )
    return Hom(dom.group, cod.group, images, label=f"{f1.label or 'f1'}x{f2.label or 'f2'}")


def pair_hom(f: Hom, g: Hom, codomain: Optional[ProductGroup] = None) -> Hom:
    """(f, g) : G -> H1 x H2."""
    if f.domain is not g.domain:
        raise CodomainMismatch(f"{f.describe()} and {g.describe()} have different domains")
    cod = codomain or make_product(f.codomain, g.codomain)
    n = g.codomain.order
    images = tuple(f.images[x] * n + g.images[x] for x in range(f.domain.order))
    return Hom(f.domain, cod.group, images, label="pair")


def sum_hom(f: Hom, square: Optional[ProductGroup] = None) -> Hom:
    """f₊ : G x G -> H, (a, b) -> f(a + b); G must be abelian."""
    G = f.domain
    if not G.is_abelian:
        raise NotAbelian(f"{G.label} is not abelian")
    sq = square or make_product(G, G)
    n = G.order
    images = tuple(f.images[G.rows[x // n][x % n]] for x in range(sq.group.order))
    return Hom(sq.group, f.codomain, images, label=f"{f.label or 'f'}+")
