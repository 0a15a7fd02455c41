"""
Normalized 2-cocycles of extensions with abelian kernel.

Conventions, written additively in the kernel A:
    w(x, y) = t(x) t(y) t(xy)^-1
    x·a     = t(x) a t(x)^-1
    (δc)(x, y) = x·c(y) - c(xy) + c(x)
and the cocycle identity reads x·w(y, z) - w(xy, z) + w(x, yz) - w(x, y) = 0.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from sectio.errors import (InvalidParameter, KernelNotAbelian,
                           NotSurjective)
from sectio.groups.actions import ActionTable, conjugation_action
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable
from sectio.subgroups.maps import kernel
from sectio.subgroups.subgroup import Subgroup


@dataclass(frozen=True)
class Transversal:
    """A set map rep: H -> G with f(rep[h]) = h and rep[1] = 1."""
    hom: Hom
    rep: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rep) != self.hom.codomain.order or self.rep[0] != 0:
            raise InvalidParameter("A transversal needs one lift per element and rep[1] = 1")
        if any(self.hom.images[a] != h for h, a in enumerate(self.rep)):
            raise InvalidParameter("Transversal element does not lie over its index")


@dataclass(frozen=True, eq=False)
class Cocycle:
    """
    A normalized 2-cocycle on `base` with values in the abelian group `coeff`.

    values[x, y] is the coeff index of w(x, y). When the cocycle comes from a
    homomorphism, `members` gives the codomain element of each base index,
    `lifts` the transversal element over it and `kernel_members` the domain
    element of each coeff index.
    """
    base: GroupTable
    coeff: GroupTable
    action: ActionTable
    values: np.ndarray
    hom: Optional[Hom] = None
    members: Tuple[int, ...] = ()
    lifts: Tuple[int, ...] = ()
    kernel_members: Tuple[int, ...] = ()

    def __post_init__(self):
        values = np.ascontiguousarray(np.asarray(self.values, dtype=np.int64))
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.action.actor is not self.base or self.action.target is not self.coeff:
            raise InvalidParameter("Cocycle action does not match its groups")
        if not self.coeff.is_abelian:
            raise KernelNotAbelian(f"{self.coeff.label} is not abelian")
        self.verify()

    def verify(self) -> None:
        """Check normalization and the cocycle identity on every triple."""
        w = self.values
        add = self.coeff.mul
        act = self.action.act
        hm = self.base.mul
        n = self.base.order
        if w.shape != (n, n):
            raise InvalidParameter(f"Cocycle table has shape {w.shape}, expected {(n, n)}")
        if np.any(w[0] != 0) or np.any(w[:, 0] != 0):
            raise InvalidParameter("Cocycle is not normalized")
        x = np.arange(n)[:, None, None]
        x_w_yz = act[x, w[None, :, :]]
        w_xy_z = w[hm[:, :, None], np.arange(n)[None, None, :]]
        w_x_yz = w[x, hm[None, :, :]]
        w_x_y = np.broadcast_to(w[:, :, None], (n, n, n))
        if not np.array_equal(add[x_w_yz, w_x_yz], add[w_xy_z, w_x_y]):
            raise InvalidParameter("Cocycle identity fails")

    def value(self, x: int, y: int) -> int:
        return int(self.values[x, y])

    @property
    def is_zero(self) -> bool:
        return not self.values.any()


def build_cocycle(f: Hom, rep: Optional[Sequence[int]] = None) -> Tuple[Transversal, Cocycle]:
    """
    The cocycle of 0 -> Ker(f) -> G -> H -> 1 for the given transversal,
    by default the least element of each fiber.

    Raises:
        NotSurjective: If f is not onto
        KernelNotAbelian: If Ker(f) is not abelian
    """
    if not f.is_surjective:
        raise NotSurjective(f"{f.describe()} is not surjective")
    K = kernel(f)
    if not K.is_abelian:
        raise KernelNotAbelian(f"Kernel of {f.describe()} is not abelian")
    G, H = f.domain, f.codomain
    if rep is None:
        lifts = [-1] * H.order
        for a in range(G.order):
            if lifts[f.images[a]] < 0:
                lifts[f.images[a]] = a
        rep = lifts
    transversal = Transversal(f, tuple(rep))
    t = transversal.rep
    embedded = K.embedded
    rows = G.rows
    values = np.empty((H.order, H.order), dtype=np.int64)
    for x in range(H.order):
        for y in range(H.order):
            k = rows[rows[t[x]][t[y]]][G.inverse(t[H.rows[x][y]])]
            values[x, y] = embedded.local_index(k)
    action = conjugation_action(H, G, lambda h: t[h], K.members, embedded.group)
    cocycle = Cocycle(
        base=H, coeff=embedded.group, action=action, values=values, hom=f,
        members=tuple(range(H.order)), lifts=t, kernel_members=K.members,
    )
    return transversal, cocycle


def restrict_cocycle(c: Cocycle, L: Subgroup) -> Cocycle:
    """The restriction of c to L x L, with the action restricted to L."""
    L.require_parent(c.base)
    embedded = L.embedded
    m = np.asarray(L.members)
    values = c.values[m[:, None], m[None, :]]
    action = ActionTable(embedded.group, c.coeff, c.action.act[m])
    return Cocycle(
        base=embedded.group, coeff=c.coeff, action=action, values=values, hom=c.hom,
        members=tuple(c.members[x] for x in L.members) if c.members else (),
        lifts=tuple(c.lifts[x] for x in L.members) if c.lifts else (),
        kernel_members=c.kernel_members,
    )


def difference_cocycle(c1: Cocycle, c2: Cocycle) -> Cocycle:
    """c1 - c2 for two cocycles with the same groups and action."""
    if c1.base is not c2.base or c1.coeff is not c2.coeff:
        raise InvalidParameter("Cocycles live on different groups")
    if not np.array_equal(c1.action.act, c2.action.act):
        raise InvalidParameter("Cocycles carry different actions")
    A = c1.coeff
    values = A.mul[c1.values, A.inv[c2.values]]
    return Cocycle(base=c1.base, coeff=A, action=c1.action, values=values)
