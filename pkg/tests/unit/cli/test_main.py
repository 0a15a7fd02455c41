"""Unit tests for the command line."""
import json

import pytest
from sectio.cli.main import main


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


class TestCommands:
    """End-to-end tests of the commands through main()."""

    def test_sigma(self, capsys):
        # Execute
        code, doc = run_json(capsys, "sigma", "Z(2)xZ(2)")

        # Verify
        assert code == 0
        assert doc["value"] == 3
        assert doc["invariant"] == "sigma"
        assert len(doc["witness"]) == 3
        assert doc["schema_version"] == "sectio/1"

    def test_sigma_of_cyclic(self, capsys):
        code, doc = run_json(capsys, "sigma", "Z(6)")
        assert code == 0
        assert doc["value"] == "infinite"
        assert doc["reason"] == "CodomainCyclic"

    def test_sigma_cyclic(self, capsys):
        _, doc = run_json(capsys, "sigma-cyclic", "Q8")
        assert doc["value"] == 3
        assert doc["data"]["bound"] == 4

    def test_sec_not_locally_sectionable(self, capsys):
        code, doc = run_json(capsys, "sec", "quot(Q8,[4])")
        assert code == 0
        assert doc["value"] == "infinite"
        assert doc["reason"] == "NotLocallySectionable"
        assert doc["reason_element"] == 1
        assert doc["data"]["locally_sectionable"] is False

    def test_sec_of_projection(self, capsys):
        _, doc = run_json(capsys, "sec", "proj(E(2,2)xZ(2),1)")
        assert doc["value"] == 3
        assert len(doc["sections"]) == 3
        assert doc["data"]["global_section"] is True

    def test_sigma_hom(self, capsys):
        _, doc = run_json(capsys, "sigma-hom", "quot(E(2,3),[1])")
        assert doc["value"] == 3
        assert doc["sections"] == []
        assert len(doc["data"]["splittings"]) == 3

    def test_poset(self, capsys):
        _, doc = run_json(capsys, "poset", "id(E(2,2))")
        assert [e["order"] for e in doc["data"]["elements"]] == [1, 2, 2, 2]
        assert doc["data"]["hasse"] == [[0, 1], [0, 2], [0, 3]]

    def test_cocycle(self, capsys):
        _, doc = run_json(capsys, "cocycle", "quot(Z(4),[2])")
        assert doc["data"]["coboundary"] is False
        assert doc["data"]["transversal"] == [0, 1]

    def test_cocycle_restricted(self, capsys):
        _, doc = run_json(capsys, "cocycle", "quot(Z(4),[2])", "--subgroup", "[]")
        assert doc["data"]["coboundary"] is True

    def test_hpoint(self, capsys):
        _, doc = run_json(capsys, "hpoint", "E(2,2)", "E(2,2)", "2")
        assert doc["data"]["h_point"] is True
        assert doc["data"]["sec_evaluation"] == "3"

    def test_hpoint_bad_element(self, capsys):
        code, doc = run_json(capsys, "hpoint", "Z(4)", "Z(2)", "9")
        assert code == 2
        assert doc["error"]

    def test_covers(self, capsys):
        _, doc = run_json(capsys, "covers", "S(3)")
        assert doc["value"] == 4
        assert len(doc["data"]["covers"]) == 1

    def test_describe(self, capsys):
        """Test -1 sits at index 4 of Q8."""
        _, doc = run_json(capsys, "describe", "Q8")
        assert doc["data"]["elements"][4] == {"index": 4, "name": "-1", "order": 2}
        assert doc["data"]["center"] == [0, 4]

    def test_verify(self, capsys):
        code, doc = run_json(capsys, "verify", "id(E(2,2))")
        assert code == 0
        assert doc["data"]["summary"]["FAIL"] == 0

    def test_search(self, capsys):
        _, doc = run_json(capsys, "search", "--predicate", "not-locally-sectionable-epi", "--max-order", "8")
        assert "quot(Z(4),[2])" in doc["data"]["matches"]
        assert "quot(Q8,[4])" in doc["data"]["matches"]


class TestErrors:
    """Tests for exit codes and error documents."""

    def test_syntax_error(self, capsys):
        code, doc = run_json(capsys, "sigma", "Z(")
        assert code == 2
        assert "offset 2" in doc["error"]

    def test_elaboration_error(self, capsys):
        code, _ = run_json(capsys, "sec", "quot(S(3),[1])")
        assert code == 2

    def test_budget_exceeded(self, capsys):
        code, doc = run_json(capsys, "sigma-hom", "quot(E(2,3),[1])", "--budget-nodes", "1")
        assert code == 1
        assert doc["budget_status"] == "exceeded"

    def test_order_cap(self, capsys):
        code, doc = run_json(capsys, "sigma", "Z(64)xZ(2)")
        assert code == 2
        assert "order cap" in doc["error"]

    def test_cyclic_over_cap(self, capsys):
        code, doc = run_json(capsys, "sigma", "Z(100)")
        assert code == 2
        assert "Group order 100" in doc["error"]

    def test_huge_elementary_abelian(self, capsys):
        """Test a huge rank is refused at once instead of expanding the power."""
        code, doc = run_json(capsys, "sigma", "E(2,100000000000)")
        assert code == 2
        assert "2^100000000000" in doc["error"]

    def test_bad_arguments(self, capsys):
        assert main(["sigma"]) == 2

    def test_help(self, capsys):
        assert main(["--help"]) == 0


class TestTextOutput:
    """Tests for the default text rendering."""

    def test_text_then_document(self, capsys):
        # Execute
        code = main(["sigma", "Q8"])

        # Verify
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("sigma: group=Q8")
        assert "sigma = 3" in out
        assert "H1 = {1, i, -1, -i}" in out
        document = json.loads(out[out.index("{\n"):])
        assert document["value"] == 3
