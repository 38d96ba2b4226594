"""Whole-rule-space classification and the recorded conjecture experiments.

``classify_all`` ranks all 256 elementary rules by transition coefficient
and cuts the sorted values at their three largest gaps, giving a
parameter-free four-way partition.  The two report functions render the
rule-level observations (universal rules positive, trivial rules near
zero, Busy Beaver champions' coefficients) as stable text; they record
outcomes and never assert the conjectures themselves.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from translens import busy_beaver
from translens.coefficient import least_squares_slope, transition_series
from translens.compressor import COMPRESSOR_VERSION
from translens.eca import EcaSystem
from translens.turing import TmSystem, TuringMachine

DEFAULT_N = 64
DEFAULT_SCHEDULE = (50, 100, 150, 200)
# Step cutoffs large enough to settle each exhaustive search exactly.
DEFAULT_BB_CUTOFFS = {1: 10, 2: 100, 3: 10000}

UNIVERSAL_RULE_CLASS = (110, 124, 137, 193)


@dataclass(frozen=True)
class RuleScore:
    rule: int
    value: float
    rank: int
    exponents: tuple[tuple[int, float], ...]


@dataclass
class ClassificationReport:
    entries: list[RuleScore]  # sorted by coefficient, largest first
    partition: list[list[int]]  # four clusters of rule numbers
    n: int
    schedule: tuple[int, ...]
    compressor_version: str
    degenerate: bool

    def score_of(self, rule: int) -> RuleScore:
        for entry in self.entries:
            if entry.rule == rule:
                return entry
        raise KeyError(f"rule {rule} not present in report")


def _rule_job(spec: tuple[int, int, tuple[int, ...]]) -> tuple[int, tuple, float]:
    rule, n, schedule = spec
    series = transition_series(EcaSystem(rule), n, schedule)
    slope = least_squares_slope([(float(t), c) for t, c in series.samples])
    return rule, tuple(series.samples), slope


def partition_by_gaps(values: list[float]) -> tuple[list[list[int]], bool]:
    """Cut positions (as index lists) at the three largest adjacent gaps.

    ``values`` must be sorted descending.  Returns four groups of indices
    into ``values`` plus a degeneracy flag; fewer than three strictly
    positive gaps yield trailing empty groups and a degenerate report.
    """
    if not values:
        return [[], [], [], []], True
    gaps = [
        (values[i] - values[i + 1], i)
        for i in range(len(values) - 1)
        if values[i] > values[i + 1]
    ]
    gaps.sort(key=lambda g: (-g[0], g[1]))
    cuts = sorted(i for _, i in gaps[:3])
    groups: list[list[int]] = []
    start = 0
    for cut in cuts:
        groups.append(list(range(start, cut + 1)))
        start = cut + 1
    groups.append(list(range(start, len(values))))
    while len(groups) < 4:
        groups.append([])
    return groups, len(cuts) < 3


def classify_all(
    n: int = DEFAULT_N,
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE,
    threads: int = 1,
) -> ClassificationReport:
    """Transition coefficients for all 256 rules, ranked and partitioned."""
    specs = [(rule, n, tuple(schedule)) for rule in range(256)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_rule_job, specs, chunksize=8))
    else:
        results = [_rule_job(spec) for spec in specs]
    # Largest coefficient first; rule number breaks exact ties.
    results.sort(key=lambda r: (-r[2], r[0]))
    entries = [
        RuleScore(rule=rule, value=value, rank=position + 1, exponents=samples)
        for position, (rule, samples, value) in enumerate(results)
    ]
    groups, degenerate = partition_by_gaps([e.value for e in entries])
    partition = [[entries[i].rule for i in group] for group in groups]
    return ClassificationReport(
        entries=entries,
        partition=partition,
        n=n,
        schedule=tuple(schedule),
        compressor_version=COMPRESSOR_VERSION,
        degenerate=degenerate,
    )


def ranking_csv(report: ClassificationReport) -> str:
    """One row per rule: rank, rule, coefficient, then the sampled exponents."""
    header_ts = ",".join(f"c_t{t}" for t, _ in report.entries[0].exponents)
    lines = [f"rank,rule,coefficient,{header_ts}"]
    for e in report.entries:
        cs = ",".join(repr(c) for _, c in e.exponents)
        lines.append(f"{e.rank},{e.rule},{e.value!r},{cs}")
    return "\n".join(lines) + "\n"


def report_json_dict(report: ClassificationReport) -> dict:
    return {
        "parameters": {
            "n": report.n,
            "schedule": list(report.schedule),
            "compressor_version": report.compressor_version,
        },
        "degenerate": report.degenerate,
        "partition": report.partition,
        "entries": [
            {
                "rank": e.rank,
                "rule": e.rule,
                "coefficient": e.value,
                "exponents": [[t, c] for t, c in e.exponents],
            }
            for e in report.entries
        ],
        "conjecture1": conjecture1_flags(report),
    }


def conjecture1_flags(report: ClassificationReport) -> dict:
    """Machine-readable outcome of the rule-level positivity observations."""
    flags = {
        f"rule_{rule}_positive": report.score_of(rule).value > 0
        for rule in UNIVERSAL_RULE_CLASS
    }
    flags["rule_0_nonpositive"] = report.score_of(0).value <= 0
    flags["rank_distance_110_54"] = abs(
        report.score_of(110).rank - report.score_of(54).rank
    )
    return flags


def conjecture1_report(report: ClassificationReport) -> str:
    """Positivity of the proven-universal rule class, with rule 54 context."""
    lines = [
        "transition coefficients of the proven-universal rule class",
        f"parameters: n={report.n} schedule={','.join(map(str, report.schedule))}"
        f" compressor={report.compressor_version}",
    ]
    for rule in UNIVERSAL_RULE_CLASS:
        e = report.score_of(rule)
        lines.append(
            f"rule {rule}: C={e.value!r} rank={e.rank}/{len(report.entries)}"
            f" positive={'yes' if e.value > 0 else 'no'}"
        )
    e110 = report.score_of(110)
    e54 = report.score_of(54)
    lines.append(
        f"rule 54: C={e54.value!r} rank={e54.rank}/{len(report.entries)}"
        f" positive={'yes' if e54.value > 0 else 'no'}"
    )
    lines.append(f"rank distance between rules 110 and 54: {abs(e110.rank - e54.rank)}")
    e0 = report.score_of(0)
    lines.append(
        f"rule 0: C={e0.value!r} rank={e0.rank}/{len(report.entries)}"
        f" non-positive={'yes' if e0.value <= 0 else 'no'}"
    )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoefficientRow:
    system_id: str
    coefficient: float
    exponents: tuple[tuple[int, float], ...]

    @property
    def sign(self) -> str:
        if self.coefficient > 0:
            return "positive"
        if self.coefficient < 0:
            return "negative"
        return "zero"


def coefficient_rows(systems, n: int, schedule) -> list[CoefficientRow]:
    """Transition coefficient of each (id, system) pair, in input order."""
    rows = []
    for system_id, system in systems:
        series = transition_series(system, n, schedule)
        slope = least_squares_slope([(float(t), c) for t, c in series.samples])
        rows.append(
            CoefficientRow(
                system_id=system_id,
                coefficient=slope,
                exponents=tuple(series.samples),
            )
        )
    return rows


def conjecture3_rows(
    bb_max: int,
    n: int = DEFAULT_N,
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE,
    cutoffs: dict[int, int] | None = None,
    threads: int = 1,
) -> list[tuple[int, busy_beaver.BusyBeaverRecord, list[CoefficientRow]]]:
    """Coefficient rows for every shift champion at each state count."""
    if not 1 <= bb_max <= 3:
        raise ValueError(f"champion search supports 1..3 states, got {bb_max}")
    cutoffs = dict(DEFAULT_BB_CUTOFFS if cutoffs is None else cutoffs)
    out = []
    for states in range(1, bb_max + 1):
        record = busy_beaver.search(states, cutoffs[states], threads=threads)
        systems = [
            (TmSystem(machine).system_id, TmSystem(machine))
            for machine in record.shift_champions
        ]
        out.append((states, record, coefficient_rows(systems, n, schedule)))
    return out


def render_conjecture3_text(rows_data, n: int, schedule) -> str:
    lines = [
        "transition coefficients of Busy Beaver step champions",
        f"parameters: n={n} schedule={','.join(map(str, schedule))}"
        f" compressor={COMPRESSOR_VERSION}",
    ]
    for states, record, rows in rows_data:
        lines.append(
            f"champions({states} states): steps={record.shift}"
            f" ones={record.sigma} undecided={record.undecided_count}"
        )
        for row in rows:
            lines.append(f"  {row.system_id}: C={row.coefficient!r} sign={row.sign}")
    return "\n".join(lines) + "\n"


def render_conjecture3_json(rows_data, n: int, schedule) -> dict:
    data = {
        "parameters": {
            "n": n,
            "schedule": list(schedule),
            "compressor_version": COMPRESSOR_VERSION,
        },
        "champions": [],
    }
    for states, record, rows in rows_data:
        data["champions"].append(
            {
                "states": states,
                "shift": record.shift,
                "sigma": record.sigma,
                "undecided_count": record.undecided_count,
                "coefficients": [
                    {
                        "machine": row.system_id,
                        "coefficient": row.coefficient,
                        "sign": row.sign,
                        "exponents": [[t, c] for t, c in row.exponents],
                    }
                    for row in rows
                ],
            }
        )
    return data


def conjecture3_report(
    bb_max: int,
    n: int = DEFAULT_N,
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE,
    cutoffs: dict[int, int] | None = None,
    threads: int = 1,
) -> str:
    """Sign and value of the coefficient for each Busy Beaver champion.

    The sign is recorded as an experimental outcome; nothing is asserted.
    """
    rows_data = conjecture3_rows(bb_max, n, schedule, cutoffs, threads)
    return render_conjecture3_text(rows_data, n, schedule)
