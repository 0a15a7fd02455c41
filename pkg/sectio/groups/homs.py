"""Homomorphisms between finite groups."""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from sectio.errors import CodomainMismatch, InvalidHomomorphism
from sectio.groups.table import GroupTable


@dataclass(frozen=True, eq=False)
class Hom:
    """
    A homomorphism recorded as the image of every domain element.

    The image array is validated at construction: identity to identity,
    multiplicativity on all pairs and order divisibility.
    """
    domain: GroupTable
    codomain: GroupTable
    images: Tuple[int, ...]
    label: str = ""
    array: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.order:
            raise InvalidHomomorphism(
                f"{self.describe()}: {len(images)} images for a domain of order {self.domain.order}"
            )
        array = np.asarray(images, dtype=np.int64)
        if array.min() < 0 or array.max() >= self.codomain.order:
            raise InvalidHomomorphism(f"{self.describe()}: image index out of range")
        array.setflags(write=False)
        object.__setattr__(self, "array", array)
        self._validate()

    def _validate(self) -> None:
        imgs = self.array
        if imgs[0] != 0:
            raise InvalidHomomorphism(f"{self.describe()}: identity is not sent to the identity")
        lhs = imgs[self.domain.mul]
        rhs = self.codomain.mul[imgs[:, None], imgs[None, :]]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise InvalidHomomorphism(
                f"{self.describe()}: f({bad[0]}*{bad[1]}) != f({bad[0]})*f({bad[1]})"
            )
        if np.any(self.domain.elem_order % self.codomain.elem_order[imgs] != 0):
            raise InvalidHomomorphism(f"{self.describe()}: an image order does not divide its source order")

    def describe(self) -> str:
        name = self.label or "hom"
        return f"{name}: {self.domain.label} -> {self.codomain.label}"

    def __repr__(self) -> str:
        return f"Hom({self.describe()})"

    def __call__(self, x: int) -> int:
        return self.images[x]

    @cached_property
    def image_mask(self) -> int:
        mask = 0
        for y in self.images:
            mask |= 1 << y
        return mask

    @cached_property
    def kernel_mask(self) -> int:
        mask = 0
        for x, y in enumerate(self.images):
            if y == 0:
                mask |= 1 << x
        return mask

    @property
    def is_surjective(self) -> bool:
        return self.image_mask == self.codomain.full_mask

    @property
    def is_injective(self) -> bool:
        return self.kernel_mask == 1

    @property
    def is_trivial(self) -> bool:
        return self.kernel_mask == self.domain.full_mask

    def fiber(self, y: int) -> Tuple[int, ...]:
        """All domain elements mapped to y, ascending."""
        return tuple(x for x, v in enumerate(self.images) if v == y)

    def same_map(self, other: "Hom") -> bool:
        return (
            self.domain is other.domain
            and self.codomain is other.codomain
            and self.images == other.images
        )


def identity_hom(group: GroupTable) -> Hom:
    return Hom(group, group, tuple(range(group.order)), label=f"id_{group.label}")


def trivial_hom(domain: GroupTable, codomain: GroupTable) -> Hom:
    return Hom(domain, codomain, (0,) * domain.order, label="triv")


def compose(g: Hom, f: Hom) -> Hom:
    """The composite g∘f (apply f first)."""
    if f.codomain is not g.domain:
        raise CodomainMismatch(
            f"Cannot compose {g.describe()} after {f.describe()}"
        )
    images = tuple(g.images[y] for y in f.images)
    label = f"{g.label or 'g'}∘{f.label or 'f'}"
    return Hom(f.domain, g.codomain, images, label=label)


def hom_from_images(domain: GroupTable, codomain: GroupTable, images: Sequence[int], label: str = "") -> Hom:
    return Hom(domain, codomain, tuple(images), label=label)
