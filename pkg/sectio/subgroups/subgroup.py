"""Subgroups as element bit-sets inside a parent group."""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Tuple

import numpy as np

from sectio.errors import InvalidParameter, ParentMismatch
from sectio.groups.homs import Hom
from sectio.groups.table import GroupTable


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << x
    return mask


def members_of(mask: int) -> Tuple[int, ...]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


@dataclass(frozen=True)
class EmbeddedGroup:
    """A subgroup realised as a group of its own, with its inclusion."""
    group: GroupTable
    inclusion: Hom
    position: Dict[int, int]

    def local_index(self, x: int) -> int:
        """Index in `group` of the parent element x."""
        return self.position[x]


@dataclass(frozen=True)
class Subgroup:
    """
    A subgroup of `parent`, stored as a bit mask of element indices.

    Closure and Lagrange are checked at construction.
    """
    parent: GroupTable
    mask: int

    def __post_init__(self):
        if self.mask >> self.parent.order:
            raise InvalidParameter(f"Subgroup mask has bits beyond {self.parent.label}")
        if not self.mask & 1:
            raise InvalidParameter("A subgroup must contain the identity")
        rows = self.parent.rows
        for x in self.members:
            if not self.mask >> self.parent.inverse(x) & 1:
                raise InvalidParameter(f"Subset of {self.parent.label} is not closed under inverses")
            row = rows[x]
            for y in self.members:
                if not self.mask >> row[y] & 1:
                    raise InvalidParameter(f"Subset of {self.parent.label} is not closed under multiplication")
        assert self.parent.order % self.order == 0

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.label}, {list(self.members)})"

    @cached_property
    def members(self) -> Tuple[int, ...]:
        return members_of(self.mask)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def is_proper(self) -> bool:
        return self.order < self.parent.order

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.order, self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def issubset(self, other: "Subgroup") -> bool:
        self.require_same_parent(other)
        return self.mask & ~other.mask == 0

    def require_same_parent(self, other: "Subgroup") -> None:
        if self.parent is not other.parent:
            raise ParentMismatch(f"{self!r} and {other!r} live in different groups")

    def require_parent(self, group: GroupTable) -> None:
        if self.parent is not group:
            raise ParentMismatch(f"{self!r} is not a subgroup of {group.label}")

    @cached_property
    def is_normal(self) -> bool:
        G = self.parent
        for g in range(G.order):
            for x in self.members:
                if not self.mask >> G.conjugate(x, g) & 1:
                    return False
        return True

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.parent.orders[x] == self.order for x in self.members)

    @cached_property
    def is_abelian(self) -> bool:
        rows = self.parent.rows
        return all(rows[x][y] == rows[y][x] for x in self.members for y in self.members)

    def name(self) -> str:
        return "{" + ", ".join(self.parent.element_name(x) for x in self.members) + "}"

    @cached_property
    def embedded(self) -> EmbeddedGroup:
        """This subgroup as a GroupTable together with its inclusion Hom."""
        members = self.members
        position = {m: i for i, m in enumerate(members)}
        rows = self.parent.rows
        mul = np.asarray([[position[rows[a][b]] for b in members] for a in members], dtype=np.int64)
        names = tuple(self.parent.element_name(m) for m in members)
        label = f"{self.parent.label}[{len(members)}]" if self.is_proper else self.parent.label
        group = GroupTable(mul, label=label, names=names).validate()
        inclusion = Hom(group, self.parent, members, label="incl")
        return EmbeddedGroup(group=group, inclusion=inclusion, position=position)

    def as_group(self) -> GroupTable:
        return self.embedded.group


def full_subgroup(group: GroupTable) -> Subgroup:
    return Subgroup(group, group.full_mask)


def trivial_subgroup(group: GroupTable) -> Subgroup:
    return Subgroup(group, 1)
