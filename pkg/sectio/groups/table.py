"""Finite groups as Cayley tables."""
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Optional, Sequence, Tuple

import numpy as np

from sectio import logger
from sectio.config.settings import settings
from sectio.errors import InvalidGroupTable, InvalidParameter, OrderCapExceeded


def check_order_cap(order: int, max_order: Optional[int] = None) -> None:
    """Raise OrderCapExceeded when a group of this order may not be built."""
    cap = max_order if max_order is not None else settings.MAX_ORDER
    if order > cap:
        raise OrderCapExceeded(order, cap)


def check_power_cap(p: int, k: int, max_order: Optional[int] = None) -> int:
    """
    p**k, raising OrderCapExceeded as soon as a partial power passes the cap,
    so huge exponents never get expanded.
    """
    cap = max_order if max_order is not None else settings.MAX_ORDER
    if p < 2:
        return p ** k
    n = 1
    for _ in range(k):
        n *= p
        if n > cap:
            raise OrderCapExceeded(f"{p}^{k}", cap)
    return n


@dataclass(frozen=True, eq=False)
class GroupTable:
    """
    A finite group given by its Cayley table on element indices 0..order-1.

    The identity is always index 0. Equality is identity: two tables built
    separately are different groups even when they coincide entrywise, which
    keeps homomorphism domains and codomains unambiguous.

    Attributes:
        mul: order x order table, mul[x, y] is the index of x*y
        label: display string
        names: optional descriptive name per element index
        inv: inverse of every element
        elem_order: order of every element
    """
    mul: np.ndarray
    label: str = "G"
    names: Optional[Tuple[str, ...]] = None
    inv: np.ndarray = field(init=False, repr=False)
    elem_order: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        mul = np.ascontiguousarray(np.asarray(self.mul, dtype=np.int64))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise InvalidGroupTable(f"{self.label}: Cayley table must be a non-empty square array")
        n = mul.shape[0]
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidGroupTable(f"{self.label}: table entries out of range")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        if self.names is not None and len(self.names) != n:
            raise InvalidGroupTable(f"{self.label}: {len(self.names)} names for {n} elements")

        inv = np.argmin(mul, axis=1)
        inv.setflags(write=False)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "elem_order", _element_orders(mul))

    def __repr__(self) -> str:
        return f"GroupTable({self.label}, order={self.order})"

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """The Cayley table as nested tuples, for fast scalar lookups in searches."""
        return tuple(tuple(int(v) for v in row) for row in self.mul)

    @cached_property
    def orders(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.elem_order)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def is_cyclic(self) -> bool:
        return int(self.elem_order.max()) == self.order

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.orders)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def multiply(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def power(self, x: int, k: int) -> int:
        """x**k for any integer k."""
        if k < 0:
            x, k = self.inverse(x), -k
        result = 0
        for _ in range(k % self.orders[x]):
            result = self.rows[result][x]
        return result

    def conjugate(self, x: int, by: int) -> int:
        """by * x * by^-1."""
        return self.rows[self.rows[by][x]][self.inverse(by)]

    def element_name(self, x: int) -> str:
        if self.names is None:
            return str(x)
        return self.names[x]

    def element(self, index: int) -> "Element":
        return Element(self, index)

    def validate(self, seed: Optional[int] = None) -> "GroupTable":
        """
        Check the group axioms.

        Associativity is checked on every triple up to
        settings.EXHAUSTIVE_CHECK_ORDER and on settings.ASSOCIATIVITY_SAMPLES
        random triples above it.

        Returns:
            self, so construction can be chained

        Raises:
            InvalidGroupTable: if an axiom fails
        """
        mul = self.mul
        n = self.order
        ar = np.arange(n)
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise InvalidGroupTable(f"{self.label}: index 0 is not a two-sided identity")
        if not np.all(mul[ar, self.inv] == 0) or not np.all(mul[self.inv, ar] == 0):
            raise InvalidGroupTable(f"{self.label}: some element has no inverse")

        if n <= settings.EXHAUSTIVE_CHECK_ORDER:
            associative = np.array_equal(mul[mul], mul[:, mul])
        else:
            rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)
            x, y, z = rng.integers(0, n, size=(3, settings.ASSOCIATIVITY_SAMPLES))
            associative = np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]])
            logger.debug(f"{self.label}: associativity sampled on {settings.ASSOCIATIVITY_SAMPLES} triples")
        if not associative:
            raise InvalidGroupTable(f"{self.label}: multiplication is not associative")
        return self


@dataclass(frozen=True)
class Element:
    """An element of a group, referenced by canonical index."""
    group: GroupTable
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise InvalidParameter(
                f"Element index {self.index} out of range for {self.group.label} of order {self.group.order}"
            )

    @property
    def order(self) -> int:
        return self.group.orders[self.index]

    @property
    def name(self) -> str:
        return self.group.element_name(self.index)


def _element_orders(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    ar = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = ar.copy()
    for k in range(1, n + 1):
        hit = (power == 0) & (orders == 0)
        orders[hit] = k
        if orders.all():
            break
        power = mul[power, ar]
    if not orders.all():
        raise InvalidGroupTable("Some element has no finite order; table is not a group")
    orders.setflags(write=False)
    return orders


def build_table(
    elements: Sequence,
    multiply,
    label: str,
    names: Optional[Sequence[str]] = None,
    check: bool = True,
) -> GroupTable:
    """
    Build a GroupTable from an explicit element list and a multiplication function.

    The first element of `elements` must be the identity.

    Args:
        elements: hashable element representations, identity first
        multiply: function (a, b) -> element
        label: display label
        names: optional element names (defaults to str of each element)
        check: validate the group axioms

    Returns:
        GroupTable on indices of `elements`
    """
    check_order_cap(len(elements))
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = index[multiply(a, b)]
    group = GroupTable(
        mul,
        label=label,
        names=tuple(names) if names is not None else tuple(str(e) for e in elements),
    )
    return group.validate() if check else group
