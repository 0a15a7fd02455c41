"""Unit tests for coboundary decisions and sec through cohomology."""
import numpy as np
import pytest
from sectio.config.constants import InfinityReason
from sectio.errors import BudgetExceeded
from sectio.cohomology.coboundary import (SECTION_ORACLE, coboundary_of,
                                          is_coboundary, sec_via_cohomology)
from sectio.cohomology.cocycle import (build_cocycle, difference_cocycle,
                                       restrict_cocycle)
from sectio.invariants.sectional import sec
from sectio.subgroups.subgroup import trivial_subgroup


class TestIsCoboundary:
    """Tests for is_coboundary."""

    def test_z4_does_not_split(self, z4_to_z2):
        _, w = build_cocycle(z4_to_z2)
        assert not is_coboundary(w)

    def test_trivial_restriction(self, z4_to_z2):
        _, w = build_cocycle(z4_to_z2)
        assert is_coboundary(restrict_cocycle(w, trivial_subgroup(z4_to_z2.codomain)))

    def test_projection_gives_a_section(self, e23_to_klein):
        # Setup
        _, w = build_cocycle(e23_to_klein)

        # Execute
        result = is_coboundary(w)

        # Verify
        assert result.is_coboundary
        assert np.array_equal(coboundary_of(w, result.cochain), w.values)
        s = result.section
        assert all(e23_to_klein.images[s.images[b]] == b for b in range(s.domain.order))

    def test_quaternion(self, q8_to_klein):
        _, w = build_cocycle(q8_to_klein)
        assert not is_coboundary(w)

    def test_difference_of_transversals(self, z4_to_z2):
        _, w1 = build_cocycle(z4_to_z2)
        _, w2 = build_cocycle(z4_to_z2, rep=(0, 3))
        result = is_coboundary(difference_cocycle(w1, w2))
        assert result.is_coboundary
        assert result.section is None

    def test_section_oracle_over_budget(self, e23_to_klein):
        """Test a hom-derived cocycle falls back to the section search."""
        _, w = build_cocycle(e23_to_klein)
        result = is_coboundary(w, budget=0)
        assert result.is_coboundary
        assert result.method == SECTION_ORACLE
        assert result.cochain is None

    def test_budget_without_hom(self, z4_to_z2):
        _, w1 = build_cocycle(z4_to_z2)
        _, w2 = build_cocycle(z4_to_z2, rep=(0, 3))
        with pytest.raises(BudgetExceeded):
            is_coboundary(difference_cocycle(w1, w2), budget=0)


class TestSecViaCohomology:
    """Tests for sec_via_cohomology."""

    def test_matches_sec(self, e23_to_klein):
        result = sec_via_cohomology(e23_to_klein)
        assert result.value == sec(e23_to_klein).value == 3
        assert result.method == "cohomology"

    def test_quaternion(self, q8_to_klein):
        result = sec_via_cohomology(q8_to_klein)
        assert result.is_infinite
        assert result.reason == InfinityReason.NO_PROPER_COVER

    def test_cyclic_codomain(self, z4_to_z2):
        assert sec_via_cohomology(z4_to_z2).reason == InfinityReason.CODOMAIN_CYCLIC
