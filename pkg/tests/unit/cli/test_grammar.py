"""Unit tests for the expression grammar."""
import pytest
from sectio.config.constants import ActionName, HomKind
from sectio.errors import ExpressionSyntaxError
from sectio.cli.grammar import parse_group, parse_hom, tokenize


class TestParseGroup:
    """Tests for group expressions."""

    @pytest.mark.parametrize("text, pretty", [
        ("Z(4)", "Z(4)"),
        ("Q8", "Q8"),
        ("E(2, 3)", "E(2,3)"),
        ("Z(2) x Z(3) x Z(4)", "Z(2)xZ(3)xZ(4)"),
        ("Z(2)x(Z(3)xZ(4))", "Z(2)x(Z(3)xZ(4))"),
        ("(Z(2)xZ(3))xZ(4)", "Z(2)xZ(3)xZ(4)"),
        ("sd(Z(3), Z(2), inv)", "sd(Z(3),Z(2),inv)"),
        ("sd(Z(4),Z(2),trivial)", "sd(Z(4),Z(2),trivial)"),
        ("quot(Q8, [4])", "quot(Q8,[4])"),
        ("S(3)xA(4)", "S(3)xA(4)"),
    ])
    def test_pretty_round_trip(self, text, pretty):
        expr = parse_group(text)
        assert expr.pretty() == pretty
        assert parse_group(pretty) == expr

    def test_products_associate_left(self):
        expr = parse_group("Z(2)xZ(3)xZ(4)")
        assert expr.kind == "product"
        assert expr.args[0].kind == "product"
        assert expr.args[1].params == (4,)

    def test_action(self):
        assert parse_group("sd(Z(5),Z(2),inv)").action == ActionName.INVERSION

    @pytest.mark.parametrize("text, offset", [
        ("Z(", 2),
        ("Z(2)xQ", 5),
        ("Z(2)Z(3)", 4),
        ("", 0),
        ("sd(Z(3),Z(2),flip)", 13),
    ])
    def test_error_offsets(self, text, offset):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_group(text)
        assert info.value.offset == offset

    def test_offsets_are_bytes(self):
        """Test a multi-byte character counts by its UTF-8 length."""
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_group("Z(2)xé")
        assert info.value.offset == 5
        assert info.value.found == "é"

    def test_input_limit(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_group("(" * 5000)

    def test_tokenize(self):
        tokens = tokenize(" Z ( 12 )")
        assert [(t.kind, t.text, t.offset) for t in tokens] == [
            ("word", "Z", 1), ("punct", "(", 3), ("int", "12", 5), ("punct", ")", 8), ("end", "", 9),
        ]


class TestParseHom:
    """Tests for homomorphism expressions."""

    @pytest.mark.parametrize("text, kind", [
        ("id(Q8)", HomKind.IDENTITY),
        ("quot(Z(4),[2])", HomKind.QUOTIENT),
        ("proj(Z(2)xZ(2),1)", HomKind.PROJECTION),
        ("incl(Z(2)xZ(3),2)", HomKind.INCLUSION),
        ("map(Z(4),Z(2),[1])", HomKind.MAP),
        ("ev(E(2,2),E(2,2),2)", HomKind.EVALUATION),
        ("triv(S(3),Z(2))", HomKind.TRIVIAL),
        ("prod(id(Z(2)),quot(Z(4),[2]))", HomKind.PRODUCT),
    ])
    def test_kinds(self, text, kind):
        spec = parse_hom(text)
        assert spec.kind == kind
        assert spec.pretty() == text

    def test_error(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_hom("sigma(Q8)")
        assert info.value.offset == 0
