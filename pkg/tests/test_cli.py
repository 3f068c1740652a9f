"""Tests for the command line interface: payloads and exit codes."""

import json
import os

from wes6.cli import (
    EXIT_BUDGET,
    EXIT_HYPOTHESIS,
    EXIT_OK,
    EXIT_PARSE,
    main,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


class TestValidate:
    def test_good_input(self, capsys):
        assert main(["validate", fixture("twofactor_class1.json")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "PASS h3_odd_torsion" in out
        assert "FAIL" not in out

    def test_hypothesis_violation(self, capsys):
        assert main(["validate", fixture("bad_h3.json")]) == EXIT_HYPOTHESIS
        assert "FAIL h3_odd_torsion" in capsys.readouterr().out

    def test_malformed_json(self, capsys):
        assert main(["validate", fixture("malformed.json")]) == EXIT_PARSE
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self):
        assert main(["validate", fixture("nope.json")]) == EXIT_PARSE

    def test_bad_b6_shape(self, capsys):
        assert main(["validate", fixture("bad_shape.json")]) == EXIT_PARSE
        assert "b6" in capsys.readouterr().err


class TestInvariants:
    def test_text_output(self, capsys):
        assert main(["invariants", fixture("twofactor_class1.json")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "gamma5: Z2 + Z2" in out
        assert "coker_b6: Z2" in out
        assert "pi5_order: 16" in out

    def test_json_output(self, capsys):
        assert (
            main(["invariants", "--json", fixture("twofactor_class1.json")]) == EXIT_OK
        )
        payload = json.loads(capsys.readouterr().out)
        assert payload["gamma5"] == "Z2 + Z2"
        assert payload["ext_h5_coker_b6"] == "Z2"
        assert payload["pi5_class_coords"] == [[1]]


class TestGammaGroup:
    def test_units_family(self, capsys):
        assert main(["gamma-group", "--json", fixture("units5.json")]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 8
        assert payload["structure"] == "Z2 + Z4"

    def test_twofactor_payload(self, capsys):
        for name in ("twofactor_class0.json", "twofactor_class1.json"):
            assert main(["gamma-group", "--json", fixture(name)]) == EXIT_OK
            payload = json.loads(capsys.readouterr().out)
            assert payload["f6_f5_projection_order"] == 8
            assert payload["f6_f5_projection_structure"] == "Z2 + Z2 + Z2"
            assert any("Z2 + Z4" in n for n in payload["notes"])

    def test_oracle_flag(self, capsys):
        assert (
            main(["gamma-group", "--json", "--oracle", fixture("units5.json")])
            == EXIT_OK
        )
        payload = json.loads(capsys.readouterr().out)
        assert payload["oracle_disagreements"] == 0
        assert payload["oracle_accepted"] == payload["order"]

    def test_budget_exceeded(self, capsys):
        assert (
            main(["gamma-group", "--budget", "2", fixture("units5.json")])
            == EXIT_BUDGET
        )

    def test_byte_identical_runs(self, capsys):
        main(["gamma-group", "--json", fixture("twofactor_class0.json")])
        first = capsys.readouterr().out
        main(["gamma-group", "--json", fixture("twofactor_class0.json")])
        second = capsys.readouterr().out
        assert first == second


class TestHomology:
    def test_moore_complex(self, capsys):
        assert main(["homology", "--json", fixture("chain_complex.json")]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["H3"] == "Z3"
        assert payload["H4"] == "0"
        template = payload["template"]
        assert template["groups"]["H3"] == {"rank": 0, "torsion": [3]}
        assert "_note" in template

    def test_not_a_complex(self, capsys):
        assert main(["homology", fixture("not_a_complex.json")]) == EXIT_PARSE
        assert "chain complex" in capsys.readouterr().err

    def test_wes_document_rejected(self, capsys):
        assert main(["homology", fixture("units5.json")]) == EXIT_PARSE


class TestTemplateRoundTrip:
    def test_homology_template_feeds_validate(self, tmp_path, capsys):
        assert main(["homology", "--json", fixture("chain_complex.json")]) == EXIT_OK
        template = json.loads(capsys.readouterr().out)["template"]
        template.pop("_note")
        doc = tmp_path / "roundtrip.json"
        doc.write_text(json.dumps(template))
        assert main(["validate", str(doc)]) == EXIT_OK
