"""Unit tests for subgroups and the subgroup lattice."""
import pytest
from sectio.errors import InvalidParameter
from sectio.subgroups.lattice import (all_subgroups, cyclic_subgroups,
                                      generated_subgroup,
                                      maximal_cyclic_subgroups, subgroup_of)
from sectio.subgroups.subgroup import Subgroup, full_subgroup, trivial_subgroup


class TestSubgroup:
    """Tests for the Subgroup value type."""

    def test_closure_is_checked(self, z4):
        """Test a subset that is not closed is rejected."""
        with pytest.raises(InvalidParameter):
            Subgroup(z4, 0b0011)

    def test_identity_required(self, z4):
        with pytest.raises(InvalidParameter):
            Subgroup(z4, 0b0100)

    def test_properties(self, s3):
        """Test A3 inside S3."""
        # Setup
        a3 = subgroup_of(s3, [0, 3, 4])

        # Verify
        assert a3.order == 3 and a3.index == 2
        assert a3.is_normal and a3.is_cyclic and a3.is_abelian
        assert a3.is_proper and not a3.is_trivial
        assert 3 in a3 and 1 not in a3

    def test_as_group(self, q8):
        """Test a subgroup realised as a group keeps its inclusion."""
        # Setup
        i_sub = generated_subgroup(q8, [1])

        # Execute
        group = i_sub.as_group()

        # Verify
        assert group.order == 4 and group.is_cyclic
        assert i_sub.embedded.inclusion.images == (0, 1, 4, 5)
        assert i_sub.embedded.local_index(5) == 3

    def test_full_and_trivial(self, klein):
        assert full_subgroup(klein).order == 4
        assert trivial_subgroup(klein).members == (0,)


class TestLattice:
    """Tests for subgroup enumeration."""

    @pytest.mark.parametrize("fixture, count", [("klein", 5), ("q8", 6), ("z6", 4), ("s3", 6), ("d4", 10)])
    def test_subgroup_counts(self, request, fixture, count):
        """Test the number of subgroups of small groups."""
        group = request.getfixturevalue(fixture)
        assert len(all_subgroups(group)) == count

    def test_sorted_by_order(self, q8):
        orders = [s.order for s in all_subgroups(q8)]
        assert orders == sorted(orders)

    def test_maximal_subgroups_of_quaternion(self, q8):
        """Test the maximal subgroups of Q8 are <i>, <j>, <k>."""
        maximal = all_subgroups(q8).maximal()
        assert sorted(s.members for s in maximal) == [(0, 1, 4, 5), (0, 2, 4, 6), (0, 3, 4, 7)]

    def test_normal_subgroups(self, s3):
        assert [s.order for s in all_subgroups(s3).normal()] == [1, 3, 6]

    def test_hasse_edges(self, klein):
        """Test the Hasse diagram of Z2 x Z2 has six edges."""
        lattice = all_subgroups(klein)
        edges = lattice.hasse_edges()
        assert len(edges) == 6
        assert all(lattice.leq(i, j) for i, j in edges)

    def test_containing(self, klein):
        assert len(all_subgroups(klein).containing(0b0100)) == 2

    def test_cyclic_subgroups(self, q8):
        """Test Q8 has five cyclic subgroups, three of them maximal."""
        assert len(cyclic_subgroups(q8)) == 5
        assert len(maximal_cyclic_subgroups(q8)) == 3

    def test_generated(self, d4):
        """Test r and s generate D4."""
        assert generated_subgroup(d4, [1, 4]).order == 8
        assert generated_subgroup(d4, [2]).order == 2
