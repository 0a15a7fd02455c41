"""Common test fixtures for sectio tests."""

import pytest
from sectio.config.settings import settings
from sectio.groups.constructors import (make_cyclic, make_dihedral,
                                        make_elementary_abelian,
                                        make_product, make_quaternion8,
                                        make_symmetric, quotient)
from sectio.groups.homs import Hom
from sectio.groups.structure import center
from sectio.subgroups.lattice import generated_subgroup


@pytest.fixture(autouse=True)
def restore_settings():
    """Undo any settings changes made by a test (the CLI mutates them)."""
    saved = settings.model_dump()
    yield
    for name, value in saved.items():
        if getattr(settings, name) != value:
            setattr(settings, name, value)


@pytest.fixture
def z2():
    return make_cyclic(2)


@pytest.fixture
def z4():
    return make_cyclic(4)


@pytest.fixture
def z6():
    return make_cyclic(6)


@pytest.fixture
def klein():
    """Z2 x Z2 with indices (0,0), (0,1), (1,0), (1,1)."""
    return make_elementary_abelian(2, 2)


@pytest.fixture
def e23():
    return make_elementary_abelian(2, 3)


@pytest.fixture
def q8():
    """Q8 with indices 1, i, j, k, -1, -i, -j, -k."""
    return make_quaternion8()


@pytest.fixture
def s3():
    return make_symmetric(3)


@pytest.fixture
def d4():
    return make_dihedral(4)


@pytest.fixture
def z4_to_z2(z4) -> Hom:
    """The quotient map Z4 -> Z4/{0, 2}."""
    _, q = quotient(z4, generated_subgroup(z4, [2]))
    return q


@pytest.fixture
def q8_to_klein(q8) -> Hom:
    """Q8 -> Q8/{1, -1}, which has no local section over any order-2 subgroup."""
    _, q = quotient(q8, center(q8))
    return q


@pytest.fixture
def e23_to_klein(klein, z2) -> Hom:
    """The projection (Z2 x Z2) x Z2 -> Z2 x Z2."""
    return make_product(klein, z2).proj1
