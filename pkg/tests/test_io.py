import json

import numpy as np
import pytest

from pignistic import (
    DuplicateFocalSetError,
    MassOutOfRangeError,
    MassSumMismatchError,
    ParseError,
    TransformKind,
    UnknownLabelError,
    ValidationError,
    report_for,
)
from pignistic.io import (
    HUMAN,
    MACHINE,
    parse_bba_document,
    parse_distribution_document,
    parse_report_record,
    parse_threshold_document,
    render_comparison,
    render_report,
    serialize_mass_function,
    serialize_threshold_set,
)


class TestParseBba:
    def test_combat_fixture(self, data_dir):
        m = parse_bba_document((data_dir / "combat_id.json").read_text())
        assert len(m) == 15
        assert m.frame.labels == ("F", "N", "U", "H")

    def test_vacuous(self):
        text = json.dumps(
            {"frame": ["a", "b"], "masses": [{"elements": ["a", "b"], "mass": 1.0}]}
        )
        m = parse_bba_document(text)
        assert m.mass(m.frame.full_set) == 1.0

    def test_malformed_json(self, data_dir):
        with pytest.raises(ParseError) as err:
            parse_bba_document((data_dir / "invalid" / "bad_json.json").read_text())
        assert "line" in str(err.value)

    def test_sum_mismatch_names_deficit(self, data_dir):
        with pytest.raises(MassSumMismatchError) as err:
            parse_bba_document((data_dir / "invalid" / "sum_mismatch.json").read_text())
        assert "0.99" in str(err.value)

    def test_unknown_label(self, data_dir):
        with pytest.raises(UnknownLabelError):
            parse_bba_document(
                (data_dir / "invalid" / "unknown_label.json").read_text()
            )

    def test_duplicate_focal(self, data_dir):
        with pytest.raises(DuplicateFocalSetError):
            parse_bba_document(
                (data_dir / "invalid" / "duplicate_focal.json").read_text()
            )

    def test_mass_out_of_range(self, data_dir):
        with pytest.raises(MassOutOfRangeError):
            parse_bba_document(
                (data_dir / "invalid" / "mass_out_of_range.json").read_text()
            )

    def test_missing_fields(self):
        with pytest.raises(ParseError):
            parse_bba_document('{"masses": []}')
        with pytest.raises(ParseError):
            parse_bba_document('{"frame": ["a"]}')
        with pytest.raises(ParseError):
            parse_bba_document(
                '{"frame": ["a"], "masses": [{"elements": ["a"]}]}'
            )

    def test_round_trip(self, data_dir):
        m = parse_bba_document((data_dir / "combat_id.json").read_text())
        again = parse_bba_document(serialize_mass_function(m))
        assert again.frame == m.frame
        assert {s.bits: v for s, v in again.focal_sets()} == {
            s.bits: v for s, v in m.focal_sets()
        }


class TestParseThresholds:
    def test_valid(self, data_dir):
        t = parse_threshold_document(
            (data_dir / "thresholds_standard.json").read_text()
        )
        assert t.bel_thresholds == (0.3, 0.5, 0.7)
        assert t.pl_thresholds == (1.2, 1.5, 1.8)
        assert t.profile_name == "standard"

    def test_ordering_violation(self, data_dir):
        with pytest.raises(ValidationError):
            parse_threshold_document(
                (data_dir / "invalid" / "thresholds_bad_order.json").read_text()
            )

    def test_missing_pl(self, data_dir):
        with pytest.raises(ParseError):
            parse_threshold_document(
                (data_dir / "invalid" / "thresholds_missing_pl.json").read_text()
            )

    def test_round_trip(self, data_dir):
        t = parse_threshold_document(
            (data_dir / "thresholds_standard.json").read_text()
        )
        assert parse_threshold_document(serialize_threshold_set(t)) == t


class TestParseDistribution:
    def test_valid(self):
        p = parse_distribution_document(
            '{"frame": ["a", "b"], "probabilities": [0.75, 0.25]}'
        )
        assert p["a"] == 0.75

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            parse_distribution_document(
                '{"frame": ["a", "b"], "probabilities": [1.0]}'
            )

    def test_sum_violation(self):
        with pytest.raises(ValidationError):
            parse_distribution_document(
                '{"frame": ["a", "b"], "probabilities": [0.9, 0.9]}'
            )


class TestRenderReport:
    def test_human_six_decimals(self, combat_bba):
        report = report_for(combat_bba, TransformKind.BET_P, 0.0455)
        text = render_report(report, HUMAN)
        for value in ["0.398333", "0.343333", "0.153333", "0.105000"]:
            assert value in text
        assert "BetP" in text

    def test_human_epsilon_line(self, combat_bba):
        report = report_for(combat_bba, TransformKind.PRA_PL, 0.0455)
        text = render_report(report, HUMAN)
        assert "epsilon: 0.331683" in text

    def test_machine_round_trip_bit_exact(self, combat_bba):
        report = report_for(combat_bba, TransformKind.PR_SC_P, 0.0455)
        record = render_report(report, MACHINE)
        again = parse_report_record(record)
        assert np.array_equal(
            again.distribution.probabilities, report.distribution.probabilities
        )
        assert again.method == report.method
        assert again.selected == report.selected
        assert again.iterations == report.iterations

    def test_unknown_format(self, combat_bba):
        report = report_for(combat_bba, TransformKind.BET_P, 0.0)
        with pytest.raises(ValueError):
            render_report(report, "yaml")


class TestRenderComparison:
    def test_contains_all_values(self, combat_bba):
        reports = [report_for(combat_bba, k, 0.0455) for k in TransformKind]
        text = render_comparison(reports, HUMAN)
        expected = [
            "0.398333", "0.343333", "0.153333", "0.105000",
            "0.402129", "0.352277", "0.139356", "0.106238",
            "0.454418", "0.360880", "0.117638", "0.067064",
            "0.517592", "0.405098", "0.030288", "0.047022",
            "0.542030", "0.386953", "0.032397", "0.038620",
        ]
        for value in expected:
            assert value in text

    def test_machine_format_is_json(self, combat_bba):
        reports = [report_for(combat_bba, k, 0.0455) for k in TransformKind]
        parsed = json.loads(render_comparison(reports, MACHINE))
        assert [r["method"] for r in parsed] == [k.value for k in TransformKind]
