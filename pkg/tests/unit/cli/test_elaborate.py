"""Unit tests for the elaborator."""
import pytest
from sectio.errors import ElaborationError
from sectio.groups.constructors import make_cyclic
from sectio.homsearch.isomorphism import is_isomorphic
from sectio.cli.elaborate import Elaborator, inversion_kernel


class TestElaborator:
    """Tests for building groups and homomorphisms from expressions."""

    @pytest.fixture
    def elab(self):
        return Elaborator()

    def test_groups_are_shared(self, elab):
        assert elab.group("Z(2)xZ(2)") is elab.group("Z(2) x Z(2)")

    def test_product_label(self, elab):
        G = elab.group("Z(2)x(Z(2)xZ(3))")
        assert G.order == 12
        assert G.label == "Z(2)x(Z(2)xZ(3))"

    def test_quotient(self, elab):
        """Test Q8 by {1, -1} has order 4."""
        Q = elab.group("quot(Q8,[4])")
        assert Q.order == 4
        assert not Q.is_cyclic

    def test_not_normal(self, elab):
        with pytest.raises(ElaborationError):
            elab.group("quot(S(3),[1])")

    def test_invalid_parameter(self, elab):
        with pytest.raises(ElaborationError):
            elab.group("E(4,2)")

    def test_semidirect_inversion(self, elab, s3):
        G = elab.group("sd(Z(3),Z(2),inv)")
        assert G.order == 6
        assert is_isomorphic(G, s3)

    def test_semidirect_trivial(self, elab):
        G = elab.group("sd(Z(4),Z(2),trivial)")
        assert G.order == 8 and G.is_abelian

    def test_map(self, elab):
        # Execute
        f = elab.hom("map(Z(4),Z(2),[1])")

        # Verify
        assert f.images == (0, 1, 0, 1)
        assert f.codomain is elab.group("Z(2)")

    def test_map_with_wrong_arity(self, elab):
        with pytest.raises(ElaborationError):
            elab.hom("map(Z(2)xZ(2),Z(2),[1])")

    def test_map_with_impossible_images(self, elab):
        with pytest.raises(ElaborationError):
            elab.hom("map(Z(2),Z(4),[1])")

    def test_projection(self, elab):
        f = elab.hom("proj(Z(2)xZ(3),2)")
        assert f.domain is elab.group("Z(2)xZ(3)")
        assert f.codomain is elab.group("Z(3)")
        assert f.is_surjective

    def test_projection_of_non_product(self, elab):
        with pytest.raises(ElaborationError):
            elab.hom("proj(Z(6),1)")

    def test_evaluation(self, elab):
        f = elab.hom("ev(E(2,2),E(2,2),2)")
        assert f.domain.order == 16
        assert f.is_surjective

    def test_evaluation_needs_abelian_target(self, elab):
        with pytest.raises(ElaborationError):
            elab.hom("ev(Z(2),S(3),1)")

    def test_product_hom(self, elab):
        f = elab.hom("prod(id(Z(2)),quot(Z(4),[2]))")
        assert f.domain.order == 8
        assert f.codomain.order == 4
        assert f.is_surjective

    def test_trivial(self, elab):
        assert elab.hom("triv(S(3),Z(2))").is_trivial


class TestInversionKernel:
    """Tests for the subgroup fixed by the inversion action."""

    def test_z4(self):
        assert inversion_kernel(make_cyclic(4)).members == (0, 2)

    def test_no_index_two_subgroup(self):
        with pytest.raises(ElaborationError):
            inversion_kernel(make_cyclic(3))
