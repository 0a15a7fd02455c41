"""Actions of one group on another by automorphisms."""
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from sectio.errors import InvalidAction
from sectio.groups.table import GroupTable


@dataclass(frozen=True, eq=False)
class ActionTable:
    """
    An action of `actor` on `target` by automorphisms.

    act[h, a] is the index of h·a in target. Rows are automorphisms, row 0
    is the identity map and act[h1*h2] = act[h1] ∘ act[h2].
    """
    actor: GroupTable
    target: GroupTable
    act: np.ndarray
    rows: tuple = field(init=False, repr=False)

    def __post_init__(self):
        act = np.ascontiguousarray(np.asarray(self.act, dtype=np.int64))
        if act.shape != (self.actor.order, self.target.order):
            raise InvalidAction(
                f"Action table has shape {act.shape}, expected {(self.actor.order, self.target.order)}"
            )
        act.setflags(write=False)
        object.__setattr__(self, "act", act)
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in row) for row in act))
        self._validate()

    def _validate(self) -> None:
        act = self.act
        A = self.target
        n = A.order
        if act.min() < 0 or act.max() >= n:
            raise InvalidAction("Action table entries out of range")
        if not np.array_equal(act[0], np.arange(n)):
            raise InvalidAction("The identity does not act trivially")
        for h in range(self.actor.order):
            row = act[h]
            if len(np.unique(row)) != n:
                raise InvalidAction(f"Actor element {h} does not act bijectively")
            if not np.array_equal(row[A.mul], A.mul[row[:, None], row[None, :]]):
                raise InvalidAction(f"Actor element {h} does not act by a homomorphism")
        # act[h1*h2] == act[h1][act[h2]]
        composed = act[:, act]  # composed[h1, h2, a] = act[h1, act[h2, a]]
        product = act[self.actor.mul]
        if not np.array_equal(composed, product):
            raise InvalidAction("Action is not compatible with the actor's multiplication")

    def __repr__(self) -> str:
        return f"ActionTable({self.actor.label} on {self.target.label})"

    def apply(self, h: int, a: int) -> int:
        return self.rows[h][a]

    @property
    def is_trivial(self) -> bool:
        return bool(np.all(self.act == np.arange(self.target.order)))


def action_from_function(actor: GroupTable, target: GroupTable, fn: Callable[[int, int], int]) -> ActionTable:
    table = [[fn(h, a) for a in range(target.order)] for h in range(actor.order)]
    return ActionTable(actor, target, np.asarray(table, dtype=np.int64))


def trivial_action(actor: GroupTable, target: GroupTable) -> ActionTable:
    act = np.tile(np.arange(target.order), (actor.order, 1))
    return ActionTable(actor, target, act)


def inversion_action(actor: GroupTable, target: GroupTable, kernel_mask: int) -> ActionTable:
    """
    Elements of the index-2 subgroup `kernel_mask` of actor act trivially,
    the others by inversion. Requires an abelian target.
    """
    if not target.is_abelian:
        raise InvalidAction(f"Inversion is not an automorphism of nonabelian {target.label}")
    ident = np.arange(target.order)
    rows = [ident if kernel_mask >> h & 1 else target.inv for h in range(actor.order)]
    return ActionTable(actor, target, np.stack(rows))


def conjugation_action(actor: GroupTable, ambient: GroupTable, lift, target_members, target: GroupTable) -> ActionTable:
    """
    The action h·a = lift(h)·a·lift(h)^-1 on a normal subgroup of `ambient`.

    Args:
        actor: the acting group
        ambient: group containing both the lifts and the target members
        lift: actor index -> ambient index
        target_members: ambient index of each target index
        target: the normal subgroup realised as a group
    """
    position = {m: i for i, m in enumerate(target_members)}
    table = np.empty((actor.order, target.order), dtype=np.int64)
    for h in range(actor.order):
        t = lift(h)
        for i, m in enumerate(target_members):
            table[h, i] = position[ambient.conjugate(m, t)]
    return ActionTable(actor, target, table)
