"""Unit tests for sigma, sigma_c and the cyclic bound."""
import pytest
from sectio.config.constants import InfinityReason
from sectio.errors import InvalidParameter
from sectio.groups.constructors import make_elementary_abelian
from sectio.invariants.covering import (enumerate_minimum_covers, sigma,
                                        sigma_cyclic,
                                        sigma_cyclic_over_all_cyclic,
                                        sigma_over_all_subgroups)
from sectio.invariants.homcover import sigma_hom
from sectio.invariants.results import (INFINITE, CoverResult, check_certificate,
                                      cyclic_bound)


class TestSigma:
    """Tests for covering numbers of groups."""

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_elementary_abelian_rank_two(self, p):
        """Test a rank-two elementary abelian p-group needs p + 1 lines."""
        G = make_elementary_abelian(p, 2)
        result = sigma(G)
        assert result.value == p + 1
        assert check_certificate(result, group=G)

    def test_quaternion(self, q8):
        """Test Q8 is the union of <i>, <j> and <k>."""
        # Execute
        result = sigma(q8)

        # Verify
        assert result.value == 3
        assert {1, 2, 3} <= set().union(*(s.members for s in result.witness))
        assert all(s.order == 4 for s in result.witness)

    def test_symmetric_three(self, s3):
        result = sigma(s3)
        assert result.value == 4
        assert check_certificate(result, group=s3)

    @pytest.mark.parametrize("fixture", ["z2", "z4", "z6"])
    def test_cyclic_is_infinite(self, request, fixture):
        result = sigma(request.getfixturevalue(fixture))
        assert result.value == INFINITE
        assert result.reason == InfinityReason.CODOMAIN_CYCLIC
        assert result.display_value() == "infinite"

    @pytest.mark.parametrize("fixture", ["klein", "q8", "s3", "d4", "e23"])
    def test_agrees_with_exhaustive_search(self, request, fixture):
        G = request.getfixturevalue(fixture)
        assert sigma(G).value == sigma_over_all_subgroups(G).value

    def test_exhaustive_search_on_cyclic(self, z4):
        result = sigma_over_all_subgroups(z4)
        assert result.reason == InfinityReason.NO_PROPER_COVER


class TestSigmaCyclic:
    """Tests for covering by cyclic subgroups."""

    @pytest.mark.parametrize("p, k, expected", [(2, 2, 3), (2, 3, 7), (3, 2, 4)])
    def test_elementary_abelian(self, p, k, expected):
        result, report = sigma_cyclic(make_elementary_abelian(p, k))
        assert result.value == expected
        assert report.bound == expected

    def test_quaternion(self, q8):
        """Test sigma_c(Q8) = 3, below the bound 4 which counts {1, -1}."""
        result, report = sigma_cyclic(q8)
        assert result.value == 3
        assert report.bound == 4

    @pytest.mark.parametrize("fixture", ["klein", "q8", "s3", "d4"])
    def test_agrees_with_exhaustive_search(self, request, fixture):
        G = request.getfixturevalue(fixture)
        assert sigma_cyclic(G)[0].value == sigma_cyclic_over_all_cyclic(G).value

    def test_cyclic_bound_breakdown(self, s3):
        """Test S3: three involutions, two elements of order 3."""
        report = cyclic_bound(s3)
        assert report.bound == 4
        assert [(r.order, r.element_count, r.totient, r.subgroup_count) for r in report.breakdown] == [
            (2, 3, 1, 3),
            (3, 2, 2, 1),
        ]

    @pytest.mark.slow
    def test_rank_three_over_three(self):
        G = make_elementary_abelian(3, 3)
        assert sigma(G).value == 4
        assert sigma_cyclic(G)[0].value == 13


class TestMinimumCovers:
    """Tests for enumerate_minimum_covers."""

    def test_symmetric_three_has_one_cover(self, s3):
        """Test the only 4-cover of S3 is A3 with the three transposition subgroups."""
        covers = enumerate_minimum_covers(s3)
        assert len(covers) == 1
        assert {s.members for s in covers[0]} == {(0, 1), (0, 2), (0, 5), (0, 3, 4)}

    def test_klein(self, klein):
        covers = enumerate_minimum_covers(klein)
        assert len(covers) == 1
        assert len(covers[0]) == 3

    def test_cyclic_rejected(self, z4):
        with pytest.raises(InvalidParameter):
            enumerate_minimum_covers(z4)


class TestNoProperCoverCertificate:
    """Tests that a claimed absence of proper covers is re-derived, not trusted."""

    def test_cyclic_group_confirmed(self, z4):
        result = sigma_over_all_subgroups(z4)
        assert check_certificate(result, group=z4)

    def test_noncyclic_group_rejected(self, klein):
        """Test the three lines of Z2 x Z2 refute the claim."""
        # Setup
        forged = CoverResult.infinite(InfinityReason.NO_PROPER_COVER)

        # Execute
        ok = check_certificate(forged, group=klein)

        # Verify
        assert not ok

    def test_sectional_claim_confirmed(self, q8_to_klein):
        """Test only the trivial subgroup of Z2 x Z2 lifts to Q8."""
        claim = CoverResult.infinite(InfinityReason.NO_PROPER_COVER)
        assert check_certificate(claim, hom=q8_to_klein)

    def test_sectional_claim_rejected(self, e23_to_klein):
        forged = CoverResult.infinite(InfinityReason.NO_PROPER_COVER)
        assert not check_certificate(forged, hom=e23_to_klein)

    def test_hom_covering_claim_confirmed(self, q8_to_klein):
        result = sigma_hom(q8_to_klein)
        assert result.reason == InfinityReason.NO_PROPER_COVER
        assert check_certificate(result, group=q8_to_klein.domain, hom=q8_to_klein)

    def test_hom_covering_claim_rejected(self, e23_to_klein):
        """Test the order-4 subgroups over the kernel refute the claim."""
        forged = CoverResult.infinite(InfinityReason.NO_PROPER_COVER)
        assert not check_certificate(forged, group=e23_to_klein.domain, hom=e23_to_klein)
