"""Unit tests for the covering number of a homomorphism."""
from sectio.config.constants import InfinityReason
from sectio.groups.homs import identity_hom
from sectio.invariants.homcover import sigma_hom, splitting_candidates
from sectio.invariants.results import check_certificate


class TestSigmaHom:
    """Tests for sigma(f)."""

    def test_split_projection(self, e23_to_klein):
        """Test the three order-4 subgroups over the kernel cover (Z2 x Z2) x Z2."""
        # Execute
        result = sigma_hom(e23_to_klein)

        # Verify
        assert result.value == 3
        kernel = e23_to_klein.kernel_mask
        assert all(L.order == 4 and kernel & ~L.mask == 0 for L in result.witness)
        assert check_certificate(result, group=e23_to_klein.domain, hom=e23_to_klein)

    def test_splitting_isomorphisms(self, e23_to_klein):
        result = sigma_hom(e23_to_klein)
        assert len(result.details) == 3
        for split, L in zip(result.details, result.witness):
            assert split.subgroup == L
            assert split.omega.is_injective
            assert split.omega.image_mask == L.mask

    def test_no_candidates(self, q8_to_klein):
        result = sigma_hom(q8_to_klein)
        assert result.reason == InfinityReason.NO_PROPER_COVER
        assert splitting_candidates(q8_to_klein) == []

    def test_cyclic_domain(self, z4_to_z2):
        assert sigma_hom(z4_to_z2).reason == InfinityReason.DOMAIN_CYCLIC

    def test_identity(self, klein):
        """Test the identity on Z2 x Z2 is covered by its three order-2 subgroups."""
        result = sigma_hom(identity_hom(klein))
        assert result.value == 3
