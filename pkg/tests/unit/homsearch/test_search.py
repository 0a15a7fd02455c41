"""Unit tests for homomorphism search."""
import pytest
from sectio.errors import InvalidParameter, SearchBudgetExceeded
from sectio.groups.constructors import (make_cyclic, make_dihedral,
                                        make_product)
from sectio.groups.homs import identity_hom
from sectio.homsearch.isomorphism import find_isomorphism, is_isomorphic
from sectio.homsearch.search import (HomQuery, all_homs, enumerate_homs,
                                     first_hom, generating_sequence)


class TestHomSearch:
    """Tests for the backtracking search."""

    @pytest.mark.parametrize("source, target, count", [
        ("z2", "z4", 2),
        ("klein", "z2", 4),
        ("q8", "klein", 16),
        ("z4", "z2", 2),
        ("s3", "z2", 2),
        ("s3", "s3", 10),
    ])
    def test_hom_counts(self, request, source, target, count):
        """Test |Hom(G, H)| for small pairs."""
        G = request.getfixturevalue(source)
        H = request.getfixturevalue(target)
        assert len(all_homs(G, H)) == count

    def test_no_homs_between_coprime_groups(self, z2):
        """Test only the trivial map from Z3 to Z2."""
        homs = all_homs(make_cyclic(3), z2)
        assert len(homs) == 1 and homs[0].is_trivial

    def test_generating_sequence(self, z6, q8):
        assert generating_sequence(z6) == (1,)
        assert len(generating_sequence(q8)) == 2

    def test_pinned(self, z4, z2):
        """Test pinning the generator selects one map."""
        homs = enumerate_homs(HomQuery(z4, z2, pinned={1: 1}))
        assert [h.images for h in homs] == [(0, 1, 0, 1)]

    def test_invalid_pin(self, z2, z4):
        """Test a pin that violates element orders is rejected up front."""
        with pytest.raises(InvalidParameter):
            HomQuery(z2, z4, pinned={1: 1})

    def test_injective(self, klein):
        """Test the automorphisms of Z2 x Z2."""
        autos = enumerate_homs(HomQuery(klein, klein, injective=True))
        assert len(autos) == 6

    def test_fiber_constraint(self, e23_to_klein):
        """Test a global section is a fiber-constrained search."""
        H = e23_to_klein.codomain
        query = HomQuery(H, e23_to_klein.domain, fiber_map=e23_to_klein, fiber_target=identity_hom(H))
        s = first_hom(query)
        assert s is not None
        assert all(e23_to_klein.images[s.images[b]] == b for b in range(H.order))

    def test_budget(self, klein):
        """Test the node budget is enforced."""
        with pytest.raises(SearchBudgetExceeded):
            enumerate_homs(HomQuery(klein, klein, budget=1))

    def test_limit(self, klein):
        assert len(enumerate_homs(HomQuery(klein, klein, limit=3))) == 3


class TestIsomorphism:
    """Tests for isomorphism search."""

    def test_product_is_klein(self, z2, klein):
        iso = find_isomorphism(make_product(z2, z2).group, klein)
        assert iso is not None and iso.is_injective and iso.is_surjective

    def test_dihedral_three_is_symmetric(self, s3):
        assert is_isomorphic(make_dihedral(3), s3)

    def test_non_isomorphic(self, z4, klein, d4, q8):
        assert not is_isomorphic(z4, klein)
        assert not is_isomorphic(d4, q8)
