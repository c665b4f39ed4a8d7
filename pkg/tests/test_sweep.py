"""Tests for enumeration, sweeping, and hunting."""
import json

import pytest

from degmult import cm2, gor3, sweep
from degmult.errors import UnknownTarget

from bruteforce import brute_cm2, brute_gor3


class TestEnumerateCM2:
    def test_t1_entry2(self):
        got = list(sweep.enumerate_cm2(1, 2))
        assert got == [
            cm2.DegreeMatrixCM2((1,), (1,)),
            cm2.DegreeMatrixCM2((1,), (2,)),
            cm2.DegreeMatrixCM2((2,), (2,)),
        ]

    def test_t1_entry1(self):
        assert list(sweep.enumerate_cm2(1, 1)) == [cm2.DegreeMatrixCM2((1,), (1,))]

    def test_contains_mixed_matrix(self):
        assert cm2.DegreeMatrixCM2((1, 1), (2, 1)) in list(sweep.enumerate_cm2(2, 2))

    def test_matches_brute_force(self):
        got = list(sweep.enumerate_cm2(2, 3))
        expected = brute_cm2(2, 3)
        assert sorted((m.a, m.b) for m in got) == sorted((m.a, m.b) for m in expected)
        assert len(got) == len(expected)

    def test_no_duplicates_and_lex_order(self):
        got = [(m.t, m.a, m.b) for m in sweep.enumerate_cm2(3, 3)]
        assert len(got) == len(set(got))
        assert got == sorted(got)

    def test_zero_width_range(self):
        assert list(sweep.enumerate_cm2(3, 0)) == []


class TestEnumerateGor3:
    def test_t1_entry2(self):
        got = [(g.base.a, g.base.b, g.d) for g in sweep.enumerate_gor3(1, 2)]
        assert got == [
            ((1,), (1,), 1),
            ((1,), (1,), 2),
            ((1,), (2,), 1),
            ((1,), (2,), 2),
            ((2,), (2,), 2),
        ]

    def test_t1_entry1(self):
        assert len(list(sweep.enumerate_gor3(1, 1))) == 1

    def test_counterexample_in_range(self):
        assert gor3.validate([2], [2], 5) in list(sweep.enumerate_gor3(1, 5))

    def test_matches_brute_force(self):
        got = list(sweep.enumerate_gor3(2, 3))
        expected = brute_gor3(2, 3)
        key = lambda g: (g.base.a, g.base.b, g.d)
        assert sorted(map(key, got)) == sorted(map(key, expected))
        assert len(got) == len(expected)


class TestVerifyAll:
    def test_cm2_small_range_clean(self):
        report = sweep.verify_all(sweep.SweepConfig("cm2", 2, 3))
        assert report.instances_checked == len(list(sweep.enumerate_cm2(2, 3)))
        assert report.anomalies == ()
        assert report.ok

    def test_gor3_small_range_clean(self):
        report = sweep.verify_all(sweep.SweepConfig("gor3", 2, 3))
        assert report.anomalies == ()

    def test_prop24_findings_include_known_violation(self):
        report = sweep.verify_all(sweep.SweepConfig("cm2", 3, 2))
        assert report.anomalies == ()
        hits = [
            f
            for f in report.prop24_findings
            if f["instance"] == {"type": "cm2", "a": [2, 2, 1], "b": [2, 2, 1]}
        ]
        assert len(hits) == 1
        f = hits[0]
        assert not f["hyp_i"] and not f["hyp_ii"]
        assert (f["lhs"], f["rhs"]) == (34, 33)

    def test_zero_width_range(self):
        report = sweep.verify_all(sweep.SweepConfig("cm2", 2, 0))
        assert report.instances_checked == 0
        assert report.anomalies == ()

    def test_sharp_cases_are_pure_constant_matrices(self):
        report = sweep.verify_all(sweep.SweepConfig("cm2", 2, 2))
        insts = [c["instance"] for c in report.sharp_cases]
        assert {"type": "cm2", "a": [1], "b": [1]} in insts
        assert {"type": "cm2", "a": [2, 2], "b": [2, 2]} in insts
        for c in report.sharp_cases:
            assert c["instance"]["a"] == c["instance"]["b"]

    def test_check_subset(self):
        cfg = sweep.SweepConfig("cm2", 1, 2, checks=("multiplicity_agreement",))
        report = sweep.verify_all(cfg)
        assert report.ok and report.prop24_findings == ()

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            sweep.SweepConfig("cm2", 1, 2, checks=("self_duality",))

    def test_parallel_report_identical(self):
        seq = sweep.verify_all(sweep.SweepConfig("cm2", 3, 3, jobs=1))
        par = sweep.verify_all(sweep.SweepConfig("cm2", 3, 3, jobs=4))
        assert json.dumps(seq.to_json_dict()) == json.dumps(par.to_json_dict())

    def test_csv_rows_one_per_instance(self, tmp_path):
        cfg = sweep.SweepConfig("gor3", 1, 3)
        out = tmp_path / "rows.csv"
        with open(out, "w") as fh:
            report = sweep.write_sweep_csv(cfg, fh)
        lines = out.read_text().splitlines()
        assert lines[0].split(",")[:4] == ["family", "t", "a", "b"]
        assert len(lines) == report.instances_checked + 1


class TestHunt:
    def test_unknown_target(self):
        with pytest.raises(UnknownTarget):
            sweep.hunt("prop25_bound", sweep.SweepConfig("cm2", 1, 1))

    def test_family_mismatch(self):
        with pytest.raises(ValueError):
            sweep.hunt("prop24_bound", sweep.SweepConfig("gor3", 1, 1))

    def test_srinivasan_upper_no_candidates(self):
        report = sweep.hunt("srinivasan_upper_gor3", sweep.SweepConfig("gor3", 2, 4))
        assert report.candidates == ()
        assert report.instances_checked == len(list(sweep.enumerate_gor3(2, 4)))
        assert report.ok

    def test_prop24_restricted_no_candidates(self):
        report = sweep.hunt(
            "prop24_bound", sweep.SweepConfig("cm2", 2, 4), require_hypotheses=True
        )
        assert report.candidates == ()

    def test_prop24_unrestricted_finds_known_violation(self):
        report = sweep.hunt("prop24_bound", sweep.SweepConfig("cm2", 3, 2))
        insts = [c["instance"] for c in report.candidates]
        assert {"type": "cm2", "a": [2, 2, 1], "b": [2, 2, 1]} in insts
        hit = next(
            c for c in report.candidates
            if c["instance"]["a"] == [2, 2, 1]
        )
        assert (hit["lhs"], hit["rhs"]) == (34, 33)
        assert not report.ok

    def test_parallel_reports_byte_identical(self):
        cfg1 = sweep.SweepConfig("gor3", 2, 4, jobs=1)
        cfg8 = sweep.SweepConfig("gor3", 2, 4, jobs=8)
        r1 = sweep.hunt("srinivasan_upper_gor3", cfg1)
        r8 = sweep.hunt("srinivasan_upper_gor3", cfg8)
        assert json.dumps(r1.to_json_dict()) == json.dumps(r8.to_json_dict())
        assert sweep.hunt_csv(r1) == sweep.hunt_csv(r8)

    def test_csv_header_only_when_empty(self):
        report = sweep.hunt("srinivasan_upper_gor3", sweep.SweepConfig("gor3", 1, 2))
        text = sweep.hunt_csv(report)
        assert text == ",".join(sweep.HUNT_CSV_COLUMNS) + "\n"
