import json

from hypothesis import given
from hypothesis import strategies as st

from translens import experiments
from translens.experiments import (
    classify_all,
    coefficient_rows,
    conjecture1_flags,
    conjecture1_report,
    conjecture3_rows,
    partition_by_gaps,
    ranking_csv,
    render_conjecture3_json,
    render_conjecture3_text,
    report_json_dict,
)

SMALL_N = 6
SMALL_SCHEDULE = (10, 20)


class ConstantSystem:
    def run(self, init, steps):
        return b"0011" * 16


def small_report():
    if not hasattr(small_report, "_cache"):
        small_report._cache = classify_all(SMALL_N, SMALL_SCHEDULE)
    return small_report._cache


def test_partition_all_equal_is_degenerate():
    groups, degenerate = partition_by_gaps([1.0] * 10)
    assert degenerate
    assert groups[0] == list(range(10))
    assert groups[1:] == [[], [], []]


def test_partition_cuts_three_largest_gaps():
    values = [10.0, 9.5, 6.0, 5.9, 3.0, 2.95, 1.0]
    groups, degenerate = partition_by_gaps(values)
    assert not degenerate
    assert groups == [[0, 1], [2, 3], [4, 5], [6]]


def test_partition_earlier_gap_wins_ties():
    values = [4.0, 3.0, 2.0, 1.0, 0.5]
    groups, _ = partition_by_gaps(values)
    # gaps: 1, 1, 1, 0.5 -> cut the three earliest unit gaps
    assert groups == [[0], [1], [2], [3, 4]]


@given(st.lists(st.floats(-50, 50, allow_nan=False), min_size=1, max_size=40))
def test_partition_respects_ordering(raw):
    values = sorted(raw, reverse=True)
    groups, _ = partition_by_gaps(values)
    assert sum(len(g) for g in groups) == len(values)
    flat = [i for group in groups for i in group]
    assert flat == list(range(len(values)))
    for first, second in zip(groups, groups[1:]):
        if first and second:
            assert values[first[-1]] > values[second[0]] or (
                values[first[-1]] == values[second[0]]
            )


def test_classification_report_structure():
    report = small_report()
    assert len(report.entries) == 256
    assert [e.rank for e in report.entries] == list(range(1, 257))
    values = [e.value for e in report.entries]
    assert values == sorted(values, reverse=True)
    rules = sorted(r for cluster in report.partition for r in cluster)
    assert rules == list(range(256))
    assert report.compressor_version
    # every value in cluster k is >= every value in cluster k+1
    by_rule = {e.rule: e.value for e in report.entries}
    for first, second in zip(report.partition, report.partition[1:]):
        if first and second:
            assert min(by_rule[r] for r in first) >= max(by_rule[r] for r in second)


def test_classification_is_deterministic():
    report = small_report()
    again = classify_all(SMALL_N, SMALL_SCHEDULE)
    assert ranking_csv(report) == ranking_csv(again)
    assert json.dumps(report_json_dict(report), sort_keys=True) == json.dumps(
        report_json_dict(again), sort_keys=True
    )


def test_parallel_classification_matches_serial():
    report = small_report()
    threaded = classify_all(SMALL_N, SMALL_SCHEDULE, threads=2)
    assert ranking_csv(report) == ranking_csv(threaded)


def test_ranking_csv_shape():
    lines = ranking_csv(small_report()).splitlines()
    assert lines[0] == "rank,rule,coefficient,c_t10,c_t20"
    assert len(lines) == 257


def test_report_rendering_does_not_mutate():
    report = small_report()
    before = [(e.rule, e.value, e.rank, e.exponents) for e in report.entries]
    ranking_csv(report)
    conjecture1_report(report)
    report_json_dict(report)
    after = [(e.rule, e.value, e.rank, e.exponents) for e in report.entries]
    assert before == after


def test_conjecture1_report_contents():
    report = small_report()
    text = conjecture1_report(report)
    for rule in (110, 124, 137, 193, 54, 0):
        assert f"rule {rule}:" in text
    assert "rank distance between rules 110 and 54" in text
    flags = conjecture1_flags(report)
    assert set(flags) == {
        "rule_110_positive",
        "rule_124_positive",
        "rule_137_positive",
        "rule_193_positive",
        "rule_0_nonpositive",
        "rank_distance_110_54",
    }


def test_constant_system_contributes_zero_row():
    rows = coefficient_rows([("dummy", ConstantSystem())], 4, (5, 10))
    assert rows[0].coefficient == 0.0
    assert rows[0].sign == "zero"


def test_conjecture3_small_run_is_deterministic():
    rows_data = conjecture3_rows(2, n=SMALL_N, schedule=SMALL_SCHEDULE)
    text = render_conjecture3_text(rows_data, SMALL_N, SMALL_SCHEDULE)
    payload = render_conjecture3_json(rows_data, SMALL_N, SMALL_SCHEDULE)
    again = conjecture3_rows(2, n=SMALL_N, schedule=SMALL_SCHEDULE)
    assert text == render_conjecture3_text(again, SMALL_N, SMALL_SCHEDULE)
    assert "sign=" in text and "C=" in text
    states = [c["states"] for c in payload["champions"]]
    assert states == [1, 2]
    for champ in payload["champions"]:
        assert champ["undecided_count"] == 0
        for row in champ["coefficients"]:
            assert row["sign"] in ("positive", "negative", "zero")


def test_default_parameters():
    assert experiments.DEFAULT_N == 64
    assert experiments.DEFAULT_SCHEDULE == (50, 100, 150, 200)
    assert experiments.DEFAULT_BB_CUTOFFS == {1: 10, 2: 100, 3: 10000}
