"""Unit tests for homomorphisms, actions and structure queries."""
import numpy as np
import pytest
from sectio.errors import CodomainMismatch, InvalidAction, InvalidHomomorphism
from sectio.groups.actions import (ActionTable, conjugation_action,
                                   inversion_action, trivial_action)
from sectio.groups.homs import (Hom, compose, hom_from_images, identity_hom,
                                trivial_hom)
from sectio.groups.structure import element_names, structure_queries
from sectio.subgroups.subgroup import Subgroup


class TestHom:
    """Tests for the Hom value type."""

    def test_quotient_map_masks(self, z4_to_z2):
        """Test kernel and image of Z4 -> Z2."""
        assert z4_to_z2.images == (0, 1, 0, 1)
        assert z4_to_z2.kernel_mask == 0b0101
        assert z4_to_z2.is_surjective
        assert not z4_to_z2.is_injective
        assert z4_to_z2.fiber(1) == (1, 3)

    def test_rejects_non_multiplicative(self, z4, z2):
        """Test an image array that breaks multiplicativity."""
        with pytest.raises(InvalidHomomorphism):
            Hom(z4, z2, (0, 1, 1, 1))

    def test_rejects_order_violation(self, z2, z4):
        """Test an element of order 2 cannot map to one of order 4."""
        with pytest.raises(InvalidHomomorphism):
            hom_from_images(z2, z4, (0, 1))

    def test_rejects_wrong_length(self, z2, z4):
        """Test the image array must cover the domain."""
        with pytest.raises(InvalidHomomorphism):
            Hom(z4, z2, (0, 1))

    def test_compose(self, z4_to_z2):
        """Test composition applies the right map first."""
        # Execute
        Q = z4_to_z2.codomain
        composite = compose(identity_hom(Q), z4_to_z2)

        # Verify
        assert composite.same_map(z4_to_z2)
        assert composite.codomain is Q

    def test_compose_mismatch(self, z4_to_z2, z4):
        """Test composing through the wrong group fails."""
        with pytest.raises(CodomainMismatch):
            compose(identity_hom(z4), z4_to_z2)

    def test_trivial(self, klein, z2):
        """Test the trivial map."""
        triv = trivial_hom(klein, z2)
        assert triv.is_trivial
        assert triv.image_mask == 1
        assert triv(3) == 0


class TestActionTable:
    """Tests for actions by automorphisms."""

    def test_trivial_action(self, z2, z4):
        action = trivial_action(z2, z4)
        assert action.is_trivial
        assert action.apply(1, 3) == 3

    def test_rejects_non_automorphism(self, z2, z4):
        """Test rows must be automorphisms of the target."""
        with pytest.raises(InvalidAction):
            ActionTable(z2, z4, np.array([[0, 1, 2, 3], [0, 2, 1, 3]]))

    def test_conjugation_on_rotations(self, z2, d4):
        """Test the reflection acts on the rotations of D(4) by inversion."""
        # Setup
        rotations = Subgroup(d4, 0b1111)
        target = rotations.as_group()

        # Execute
        action = conjugation_action(z2, d4, lambda h: 4 * h, rotations.members, target)

        # Verify
        assert action.rows[1] == (0, 3, 2, 1)
        assert np.array_equal(action.act, inversion_action(z2, target, 1).act)


class TestStructure:
    """Tests for structure queries."""

    def test_quaternion_report(self, q8):
        report = structure_queries(q8)
        assert report.order_profile() == {1: 1, 2: 1, 4: 6}
        assert report.center.members == (0, 4)
        assert report.exponent == 4

    def test_element_names(self, q8):
        names = element_names(q8)
        assert names[4] == (4, "-1", 2)
        assert [n for _, n, _ in names] == ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
