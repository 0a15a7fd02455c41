"""Unit tests for sections and local sectionability."""
from sectio.groups.constructors import quotient
from sectio.groups.homs import identity_hom
from sectio.homsearch.sections import (exists_fibrewise_morphism,
                                       exists_global_section,
                                       exists_local_section,
                                       is_locally_sectionable,
                                       is_locally_sectionable_by_definition)
from sectio.subgroups.lattice import all_subgroups, generated_subgroup


class TestSections:
    """Tests for local and global sections."""

    def test_z4_does_not_split(self, z4_to_z2):
        """Test Z4 -> Z2 has no section: the only involution lies in the kernel."""
        assert exists_global_section(z4_to_z2) is None
        result = is_locally_sectionable(z4_to_z2)
        assert not result
        assert result.witness == 1

    def test_projection_splits(self, e23_to_klein):
        s = exists_global_section(e23_to_klein)
        assert s is not None
        assert s.domain is e23_to_klein.codomain

    def test_sign_map_splits(self, s3):
        """Test S3 -> S3/A3 has a section through a transposition."""
        _, sign = quotient(s3, generated_subgroup(s3, [3]))
        assert exists_global_section(sign) is not None

    def test_quaternion_quotient(self, q8_to_klein):
        """Test no nontrivial subgroup of Q8/{±1} lifts."""
        # Setup
        lattice = all_subgroups(q8_to_klein.codomain)

        # Execute
        lifted = [L for L in lattice if exists_local_section(q8_to_klein, L) is not None]

        # Verify
        assert [L.order for L in lifted] == [1]
        assert not is_locally_sectionable(q8_to_klein)

    def test_local_section_over_subgroup(self, e23_to_klein):
        """Test a local section restricts the projection."""
        L = generated_subgroup(e23_to_klein.codomain, [2])
        s = exists_local_section(e23_to_klein, L)
        assert s is not None
        assert s.domain is L.as_group()
        assert [e23_to_klein.images[x] for x in s.images] == list(L.members)

    def test_definition_agrees(self, z4_to_z2, e23_to_klein, q8_to_klein):
        """Test the order-lift test against the subgroup search."""
        for f in (z4_to_z2, e23_to_klein, q8_to_klein):
            assert bool(is_locally_sectionable(f)) == bool(is_locally_sectionable_by_definition(f))


class TestFibrewise:
    """Tests for fibrewise morphisms."""

    def test_both_directions(self, e23_to_klein):
        # Setup
        H = e23_to_klein.codomain
        ident = identity_hom(H)

        # Execute
        forward = exists_fibrewise_morphism(e23_to_klein, ident)
        backward = exists_fibrewise_morphism(ident, e23_to_klein)

        # Verify
        assert forward is not None and forward.same_map(e23_to_klein)
        assert backward is not None

    def test_no_fibrewise_morphism(self, z4_to_z2):
        """Test id on Z4/{0,2} does not factor through Z4 -> Z2."""
        ident = identity_hom(z4_to_z2.codomain)
        assert exists_fibrewise_morphism(ident, z4_to_z2) is None
