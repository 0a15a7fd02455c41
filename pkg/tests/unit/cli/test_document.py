"""Unit tests for result documents and their re-validation."""
from argparse import Namespace

from sectio.cli.commands import cmd_sec, cmd_sigma, cmd_sigma_hom
from sectio.cli.document import ResultDocument, render_text, revalidate
from sectio.cli.elaborate import Elaborator


class TestRevalidate:
    """Tests for revalidate."""

    def test_sigma_document(self):
        # Setup
        doc, _ = cmd_sigma(Namespace(group="Q8"), Elaborator())
        loaded = ResultDocument.model_validate_json(doc.model_dump_json())

        # Execute / Verify
        assert revalidate(loaded)

    def test_tampered_witness(self):
        doc, _ = cmd_sigma(Namespace(group="Q8"), Elaborator())
        doc.witness[0] = [0, 1]
        assert not revalidate(doc)

    def test_missing_subgroup(self):
        doc, _ = cmd_sigma(Namespace(group="Q8"), Elaborator())
        doc.witness.pop()
        assert not revalidate(doc)

    def test_sec_sections(self):
        doc, _ = cmd_sec(Namespace(hom="proj(E(2,2)xZ(2),1)"), Elaborator())
        assert revalidate(doc)

    def test_tampered_section(self):
        doc, _ = cmd_sec(Namespace(hom="proj(E(2,2)xZ(2),1)"), Elaborator())
        doc.sections[0] = [0] * len(doc.sections[0])
        assert not revalidate(doc)

    def test_sigma_hom_document(self):
        doc, _ = cmd_sigma_hom(Namespace(hom="quot(E(2,3),[1])"), Elaborator())
        assert revalidate(doc)

    def test_infinite_document(self):
        doc, _ = cmd_sec(Namespace(hom="quot(Q8,[4])"), Elaborator())
        assert doc.is_infinite
        assert revalidate(doc)


class TestRenderText:
    """Tests for the text rendering."""

    def test_reason_element_named(self):
        elab = Elaborator()
        doc, names = cmd_sec(Namespace(hom="quot(Q8,[4])"), elab)
        text = render_text(doc, names)
        assert "reason: NotLocallySectionable" in text
        assert "sec = infinite" in text

    def test_deterministic_excludes_timing(self):
        doc = ResultDocument(command="sigma", timing_seconds=1.5)
        assert "timing_seconds" not in doc.deterministic()
