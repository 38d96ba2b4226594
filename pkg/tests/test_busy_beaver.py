import itertools

import pytest

from translens.busy_beaver import (
    encoded_table_bits,
    halt_unreachable,
    logical_depth_estimate,
    never_halts_by_refutation,
    nonhalt_detect,
    search,
    search_full,
    verify,
)
from translens._ctl import ctl_certifies_nonhalt
from translens.turing import HALT, LEFT, RIGHT, TapeState, TuringMachine
from translens.turing import run as tm_run

RIGHT_ESCAPER = TuringMachine(
    states=1, transitions={(0, 0): (1, RIGHT, 0), (0, 1): (1, RIGHT, 0)}
)
LEFT_ESCAPER = TuringMachine(
    states=1, transitions={(0, 0): (0, LEFT, 0), (0, 1): (0, LEFT, 0)}
)
BB2 = TuringMachine.from_compact("1RB1LB_1LA1RH")

# Published 4-state champion table; the simulation, not the literature,
# establishes the counts asserted in tests.
BB4 = TuringMachine.from_compact("1RB1LB_1LA0LC_1RH1LD_1RD0RA")


def all_complete_tables(states):
    options = [
        (write, move, nxt)
        for write in (0, 1)
        for move in (RIGHT, LEFT)
        for nxt in list(range(states)) + [HALT]
    ]
    keys = [(q, s) for q in range(states) for s in (0, 1)]
    for combo in itertools.product(options, repeat=len(keys)):
        yield TuringMachine(states, dict(zip(keys, combo)))


def test_search_one_state():
    record = search(1, 10)
    assert (record.sigma, record.shift) == (1, 1)
    assert record.undecided_count == 0
    assert record.exact


def test_search_two_states():
    record = search(2, 100)
    assert (record.sigma, record.shift) == (4, 6)
    assert record.undecided_count == 0
    for machine in record.sigma_champions:
        result = tm_run(machine, TapeState.blank(), 100)
        assert result.halted and result.ones == record.sigma
    for machine in record.shift_champions:
        result = tm_run(machine, TapeState.blank(), 100)
        assert result.halted and result.steps == record.shift


def test_reduction_matches_full_space():
    for states, cutoff in ((1, 10), (2, 100)):
        reduced = search(states, cutoff)
        full = search_full(states, cutoff)
        assert (reduced.sigma, reduced.shift) == (full.sigma, full.shift)
        assert reduced.undecided_count == full.undecided_count == 0


def test_search_rejects_large_spaces():
    with pytest.raises(ValueError):
        search(4, 100)
    with pytest.raises(ValueError):
        search(2, 0)


def test_parallel_search_is_identical():
    serial = search(2, 100)
    parallel = search(2, 100, threads=4)
    assert (serial.sigma, serial.shift) == (parallel.sigma, parallel.shift)
    assert [m.to_compact() for m in serial.sigma_champions] == [
        m.to_compact() for m in parallel.sigma_champions
    ]
    assert [m.to_compact() for m in serial.shift_champions] == [
        m.to_compact() for m in parallel.shift_champions
    ]


def test_verify_champion_counts():
    champion = search(2, 100).sigma_champions[0]
    assert verify(champion, 4, 6)
    assert not verify(champion, 4, 7)


def test_verify_published_four_state_champion():
    assert verify(BB4, 13, 107)
    assert not verify(BB4, 12, 107)


def test_nonhalt_detects_escapers():
    assert nonhalt_detect(RIGHT_ESCAPER, 100)
    assert nonhalt_detect(LEFT_ESCAPER, 100)


def test_nonhalt_false_for_halters():
    assert not nonhalt_detect(BB2, 100)
    assert not nonhalt_detect(BB4, 1000)


def test_nonhalt_soundness_on_full_two_state_space():
    # The detector must never claim non-halt for any machine that halts
    # within ten times the trace window.
    window = 60
    for machine in all_complete_tables(2):
        if tm_run(machine, TapeState.blank(), 10 * window).halted:
            assert not nonhalt_detect(machine, window), machine.to_compact()


def test_sigma_and_shift_monotone():
    records = [search(n, cutoff) for n, cutoff in ((1, 10), (2, 100), (3, 10000))]
    sigmas = [r.sigma for r in records]
    shifts = [r.shift for r in records]
    assert sigmas[0] < sigmas[1] < sigmas[2]
    assert shifts[0] < shifts[1] < shifts[2]


def test_halt_unreachable_certificate():
    assert halt_unreachable(RIGHT_ESCAPER.transitions)
    assert not halt_unreachable(BB2.transitions)
    # Partial table: the undefined entry counts as halt-capable.
    assert not halt_unreachable({(0, 0): (1, RIGHT, 0)})


def test_backward_refutation_certificate():
    # B is only entered rightward onto fresh blank tape, so (B,1) is never
    # read; with no halts among defined entries the machine cannot halt.
    table = {
        (0, 0): (0, RIGHT, 1),
        (0, 1): (0, RIGHT, 1),
        (1, 0): (0, LEFT, 0),
    }
    assert never_halts_by_refutation(table, 2)
    assert not never_halts_by_refutation(BB2.transitions, 2)


def test_ctl_certificate():
    assert ctl_certifies_nonhalt(RIGHT_ESCAPER.transitions, 1)
    assert not ctl_certifies_nonhalt(BB2.transitions, 2)
    assert not ctl_certifies_nonhalt(BB4.transitions, 4)


def test_encoded_table_bits():
    assert encoded_table_bits(1) == 6
    assert encoded_table_bits(2) == 16


def test_depth_of_single_one():
    estimate = logical_depth_estimate("1", 1, 100)
    assert estimate.found
    assert estimate.best_description_bits == 6
    assert estimate.depth_steps == 1


def test_depth_of_all_zero_target_not_found():
    estimate = logical_depth_estimate("0", 2, 100)
    assert not estimate.found
    assert estimate.best_description_bits is None
    assert estimate.depth_steps is None


def test_depth_of_double_one():
    estimate = logical_depth_estimate("11", 2, 1000)
    assert estimate.found
    assert estimate.best_description_bits == 16
    assert estimate.depth_steps == 2


def test_depth_never_below_written_span():
    for target in ("1", "11", "101", "111"):
        estimate = logical_depth_estimate(target, 2, 500)
        if estimate.found:
            assert estimate.depth_steps >= len(target)


def test_depth_validates_arguments():
    with pytest.raises(ValueError):
        logical_depth_estimate("", 2, 100)
    with pytest.raises(ValueError):
        logical_depth_estimate("2", 2, 100)
    with pytest.raises(ValueError):
        logical_depth_estimate("1", 3, 100)
