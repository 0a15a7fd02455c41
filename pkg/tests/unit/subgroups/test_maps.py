"""Unit tests for images, preimages and kernels."""
import pytest
from sectio.errors import NotAbelian
from sectio.subgroups.lattice import generated_subgroup
from sectio.subgroups.maps import (complement_pairs, image, image_subgroup,
                                   kernel, preimage_subgroup, restrict_hom,
                                   restrict_to_preimage)


class TestMaps:
    """Tests for subgroup maps."""

    def test_kernel_is_shared(self, z4_to_z2):
        """Test the kernel is one object per homomorphism."""
        assert kernel(z4_to_z2) is kernel(z4_to_z2)
        assert kernel(z4_to_z2).members == (0, 2)
        assert kernel(z4_to_z2).is_normal

    def test_image_and_preimage(self, q8_to_klein):
        # Setup
        Q = q8_to_klein.codomain
        i_sub = generated_subgroup(q8_to_klein.domain, [1])

        # Execute
        img = image_subgroup(q8_to_klein, i_sub)
        pre = preimage_subgroup(q8_to_klein, img)

        # Verify
        assert img.order == 2
        assert pre.mask == i_sub.mask
        assert image(q8_to_klein).mask == Q.full_mask

    def test_restrict_hom(self, e23_to_klein):
        sub = generated_subgroup(e23_to_klein.domain, [1, 2])
        restricted = restrict_hom(e23_to_klein, sub)
        assert restricted.domain.order == 4
        assert restricted.codomain is e23_to_klein.codomain

    def test_restrict_to_preimage(self, e23_to_klein):
        """Test f restricted over an order-2 subgroup is onto it."""
        # Setup
        A = generated_subgroup(e23_to_klein.codomain, [1])

        # Execute
        restricted = restrict_to_preimage(e23_to_klein, A)

        # Verify
        assert restricted.domain.order == 4
        assert restricted.codomain.order == 2
        assert restricted.is_surjective

    def test_complement_pairs(self, z6, klein):
        """Test Z6 = Z2 + Z3 once and Z2 x Z2 in three ways."""
        pairs = complement_pairs(z6)
        assert [(a.members, b.members) for a, b in pairs] == [((0, 3), (0, 2, 4))]
        assert len(complement_pairs(klein)) == 3

    def test_complement_pairs_needs_abelian(self, s3):
        with pytest.raises(NotAbelian):
            complement_pairs(s3)
