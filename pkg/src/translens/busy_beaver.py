"""Exhaustive Busy Beaver search, champion verification, depth estimation.

The search walks the space of (n,2) machines as a decision tree: a partial
table is simulated from the blank tape, and the first time an undefined
(state, symbol) pair is read the tree branches over every legal entry.  The
first executed transition is normalized to move Right (mirror symmetry) and
new states are introduced in first-visit order, the standard quotient of
the full (4n+4)^(2n) table space.  Maxima over halters are unaffected; the
quotient is validated against un-reduced full-space search at n <= 2.

Machines that do not halt within the step cutoff are cleared by two sound
certificates evaluated inline during simulation:

* exact cycle: the full configuration (state, head, tape) repeats, checked
  against snapshots taken at doubling step counts (Brent's scheme);
* translated cycle: the head breaks the visited-region record twice in the
  same state and the tape around the two record positions matches after
  shifting, with the head never moving behind the matched window between
  the two events.  The future is then the observed segment repeated with
  the same shift forever.

Two further sound certificates close machines that reach the cutoff,
typically halt-free "bouncers" (aperiodically growing sweeps) that carry
neither dynamic certificate:

* static reachability: if every (state, symbol) entry reachable in the
  state digraph from the current state is defined and none targets halt,
  no completion of the table can ever halt;
* backward refutation: an entry is provably never read if every backward
  predecessor chain from the reading configuration contradicts itself
  before it could have been the blank-tape start.  If all undefined and
  halting entries are refuted, the machine runs forever over its defined
  halt-free entries;
* closed tape language: a pushdown-reachability argument over a small
  left-tape DFA quotient (see ``translens._ctl``), which settles the
  remaining sweeping growers.

A machine with no certificate at all counts as undecided and the record
is flagged inexact.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from translens._ctl import ctl_certifies_nonhalt
from translens.turing import (
    HALT,
    LEFT,
    RIGHT,
    TapeState,
    Transition,
    TuringMachine,
)
from translens.turing import run as tm_run

# Entries never reached from the blank tape are completed with a halting
# write-1 transition so champions are full (n,2) tables.
_FILLER: Transition = (1, RIGHT, HALT)


@dataclass
class BusyBeaverRecord:
    states: int
    sigma: int
    shift: int
    sigma_champions: list[TuringMachine]
    shift_champions: list[TuringMachine]
    cutoff: int
    undecided_count: int
    halted_count: int = 0
    nonhalting_count: int = 0
    total_machines: int = 0

    @property
    def exact(self) -> bool:
        return self.undecided_count == 0


@dataclass
class DepthEstimate:
    target: str
    machine_states_bound: int
    best_description_bits: int | None
    depth_steps: int | None
    found: bool


def encoded_table_bits(states: int) -> int:
    """Bit size of one complete (n,2) table under the fixed field encoding.

    Per entry: 1 write bit + 1 move bit + enough bits to address the n+1
    possible targets (n states plus halt).
    """
    return 2 * states * (2 + states.bit_length())


class _Config:
    """Blank-tape simulation state with inline non-halt detection.

    The tape stores positions of 1s only, so dict equality is configuration
    equality.  Candidate record events are kept per (state, direction) and
    replaced on a doubling schedule, which is enough to catch any eventually
    periodic record pattern well inside the step window.
    """

    __slots__ = (
        "tape", "head", "state", "steps",
        "b_tape", "b_head", "b_state", "b_step", "b_power",
        "rcand", "lcand", "rightmost", "leftmost",
    )

    def __init__(self):
        self.tape: dict[int, int] = {}
        self.head = 0
        self.state = 0
        self.steps = 0
        self.b_tape: dict[int, int] = {}
        self.b_head = 0
        self.b_state = 0
        self.b_step = 0
        self.b_power = 1
        # state -> [event step, record position, tape snapshot, head
        # extreme since the event]
        self.rcand: dict[int, list] = {}
        self.lcand: dict[int, list] = {}
        self.rightmost = 0
        self.leftmost = 0

    def clone(self) -> "_Config":
        c = _Config.__new__(_Config)
        c.tape = dict(self.tape)
        c.head = self.head
        c.state = self.state
        c.steps = self.steps
        c.b_tape = dict(self.b_tape)
        c.b_head = self.b_head
        c.b_state = self.b_state
        c.b_step = self.b_step
        c.b_power = self.b_power
        c.rcand = {q: [e[0], e[1], dict(e[2]), e[3]] for q, e in self.rcand.items()}
        c.lcand = {q: [e[0], e[1], dict(e[2]), e[3]] for q, e in self.lcand.items()}
        c.rightmost = self.rightmost
        c.leftmost = self.leftmost
        return c

    def ones(self) -> int:
        return len(self.tape)

    def pattern(self) -> str:
        """Contents between the outermost final 1s (empty if the tape is)."""
        if not self.tape:
            return ""
        lo, hi = min(self.tape), max(self.tape)
        return "".join("1" if p in self.tape else "0" for p in range(lo, hi + 1))

    def _translation_matches(self, event: list, shift: int, against_right: bool) -> bool:
        """Tape around the old record equals the tape around the new one.

        For a rightward record the relevant window is [extreme, old record
        position]; everything beyond a record position is untouched blank
        tape by definition of a record.
        """
        _, pos, snap, extreme = event
        if against_right:
            span = range(extreme, pos + 1)
        else:
            span = range(pos, extreme + 1)
        tape = self.tape
        for x in span:
            if (x in snap) != ((x + shift) in tape):
                return False
        return True

    def run_until_event(self, table: dict[tuple[int, int], Transition], limit: int) -> str:
        """Advance until "halt", "undefined", "nonhalt" or "timeout"."""
        tape = self.tape
        while self.steps < limit:
            sym = 1 if self.head in tape else 0
            trans = table.get((self.state, sym))
            if trans is None:
                return "undefined"
            write, move, nxt = trans
            if write:
                tape[self.head] = 1
            else:
                tape.pop(self.head, None)
            self.head += move
            self.steps += 1
            if nxt == HALT:
                return "halt"
            self.state = nxt
            head = self.head
            for event in self.rcand.values():
                if head < event[3]:
                    event[3] = head
            for event in self.lcand.values():
                if head > event[3]:
                    event[3] = head
            if head > self.rightmost:
                self.rightmost = head
                event = self.rcand.get(self.state)
                if event is None:
                    self.rcand[self.state] = [self.steps, head, dict(tape), head]
                else:
                    if self._translation_matches(event, head - event[1], True):
                        return "nonhalt"
                    if self.steps >= 2 * event[0]:
                        self.rcand[self.state] = [self.steps, head, dict(tape), head]
            elif head < self.leftmost:
                self.leftmost = head
                event = self.lcand.get(self.state)
                if event is None:
                    self.lcand[self.state] = [self.steps, head, dict(tape), head]
                else:
                    if self._translation_matches(event, head - event[1], False):
                        return "nonhalt"
                    if self.steps >= 2 * event[0]:
                        self.lcand[self.state] = [self.steps, head, dict(tape), head]
            if (
                self.state == self.b_state
                and self.head == self.b_head
                and tape == self.b_tape
            ):
                return "nonhalt"
            if self.steps - self.b_step == self.b_power:
                self.b_tape = dict(tape)
                self.b_head = self.head
                self.b_state = self.state
                self.b_step = self.steps
                self.b_power *= 2
        return "timeout"


def _refute_read(
    table: dict[tuple[int, int], Transition],
    state: int,
    sym: int,
    max_depth: int,
    max_nodes: int,
) -> bool:
    """Prove that no reachable configuration reads ``sym`` in ``state``.

    Walks backward from the reading configuration over the defined
    transitions, tracking the cell values the history fixes.  A branch dies
    when the required just-written value contradicts the window or no
    transition can precede it; if every branch dies before it could have
    been the blank initial configuration, the read never happens.  Depth
    and node limits make failures (False) conservative, never unsound.
    """
    into: dict[int, list[tuple[int, int, int, int]]] = {}
    for (prev_state, read), (write, move, nxt) in table.items():
        if nxt != HALT:
            into.setdefault(nxt, []).append((prev_state, read, write, move))
    # Backward node: control state, head cell, known cell values at the
    # node's point in time.
    stack = [(state, 0, {0: sym})]
    depths = [0]
    nodes = 0
    while stack:
        node_state, head, window = stack.pop()
        depth = depths.pop()
        nodes += 1
        if nodes > max_nodes:
            return False
        if node_state == 0 and all(v == 0 for v in window.values()):
            return False  # consistent with the blank-tape start
        if depth >= max_depth:
            return False
        for prev_state, read, write, move in into.get(node_state, ()):
            prev_head = head - move
            known = window.get(prev_head)
            if known is not None and known != write:
                continue  # the predecessor would have just written `write`
            prev_window = dict(window)
            prev_window[prev_head] = read
            stack.append((prev_state, prev_head, prev_window))
            depths.append(depth + 1)
    return True


def never_halts_by_refutation(
    table: dict[tuple[int, int], Transition],
    states: int,
    max_depth: int = 24,
    max_nodes: int = 20000,
) -> bool:
    """Backward-refute every entry that is undefined or targets halt.

    If the first offending read can be refuted for each of them, the run
    stays inside defined non-halting entries forever.
    """
    for state in range(states):
        for sym in (0, 1):
            trans = table.get((state, sym))
            if trans is not None and trans[2] != HALT:
                continue
            if not _refute_read(table, state, sym, max_depth, max_nodes):
                return False
    return True


def halt_unreachable(table: dict[tuple[int, int], Transition], start: int = 0) -> bool:
    """Sound static non-halt certificate over the state digraph.

    True iff, starting from ``start``, every reachable (state, symbol)
    entry is defined and none targets halt.  Undefined entries count as
    halt-capable, so the certificate stays sound for partial tables.
    """
    seen = {start}
    stack = [start]
    while stack:
        state = stack.pop()
        for sym in (0, 1):
            trans = table.get((state, sym))
            if trans is None or trans[2] == HALT:
                return False
            nxt = trans[2]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return True


@dataclass
class _Tally:
    """Search outcome accumulator; merged deterministically across shards."""

    sigma: int = -1
    sigma_tables: list[str] = field(default_factory=list)
    shift: int = -1
    shift_tables: list[str] = field(default_factory=list)
    undecided: int = 0
    halted: int = 0
    nonhalting: int = 0

    def record_halt(self, compact: str, ones: int, steps: int) -> None:
        self.halted += 1
        if ones > self.sigma:
            self.sigma = ones
            self.sigma_tables = [compact]
        elif ones == self.sigma:
            self.sigma_tables.append(compact)
        if steps > self.shift:
            self.shift = steps
            self.shift_tables = [compact]
        elif steps == self.shift:
            self.shift_tables.append(compact)

    def merge(self, other: "_Tally") -> None:
        if other.sigma > self.sigma:
            self.sigma = other.sigma
            self.sigma_tables = list(other.sigma_tables)
        elif other.sigma == self.sigma:
            self.sigma_tables.extend(other.sigma_tables)
        if other.shift > self.shift:
            self.shift = other.shift
            self.shift_tables = list(other.shift_tables)
        elif other.shift == self.shift:
            self.shift_tables.extend(other.shift_tables)
        self.undecided += other.undecided
        self.halted += other.halted
        self.nonhalting += other.nonhalting


def _certified_nonhalting(
    table: dict[tuple[int, int], Transition], states: int, current_state: int
) -> bool:
    """Static certificates for machines that outlived the step cutoff."""
    return (
        halt_unreachable(table, start=current_state)
        or never_halts_by_refutation(table, states)
        or ctl_certifies_nonhalt(table, states)
    )


def _complete(states: int, table: dict[tuple[int, int], Transition]) -> TuringMachine:
    full = dict(table)
    for state in range(states):
        for sym in (0, 1):
            full.setdefault((state, sym), _FILLER)
    return TuringMachine(states=states, transitions=full)


def _states_used(table: dict[tuple[int, int], Transition]) -> int:
    used = 0
    for (state, _), (_, _, nxt) in table.items():
        used = max(used, state + 1)
        if nxt != HALT:
            used = max(used, nxt + 1)
    return used


def _branch_entries(states: int, used: int) -> list[Transition]:
    targets = list(range(min(used + 1, states))) + [HALT]
    return [
        (write, move, nxt)
        for write in (0, 1)
        for move in (RIGHT, LEFT)
        for nxt in targets
    ]


def _dfs(
    states: int,
    table: dict[tuple[int, int], Transition],
    used: int,
    cfg: _Config,
    cutoff: int,
    tally: _Tally,
) -> None:
    event = cfg.run_until_event(table, cutoff)
    if event == "halt":
        tally.record_halt(_complete(states, table).to_compact(), cfg.ones(), cfg.steps)
        return
    if event == "nonhalt":
        tally.nonhalting += 1
        return
    if event == "timeout":
        if _certified_nonhalting(table, states, cfg.state):
            tally.nonhalting += 1
        else:
            tally.undecided += 1
        return
    # Undefined entry reached: branch over every legal completion.
    key = (cfg.state, 1 if cfg.head in cfg.tape else 0)
    for entry in _branch_entries(states, used):
        table[key] = entry
        nxt = entry[2]
        child_used = used if nxt == HALT else max(used, nxt + 1)
        _dfs(states, table, child_used, cfg.clone(), cutoff, tally)
    del table[key]


def _root_entries(states: int) -> list[Transition]:
    """First executed transition, normalized to move Right."""
    targets = [0] + ([1] if states > 1 else []) + [HALT]
    return [(write, RIGHT, nxt) for write in (0, 1) for nxt in targets]


def _explore_root(spec: tuple[int, int, Transition]) -> _Tally:
    states, cutoff, root = spec
    tally = _Tally()
    table = {(0, 0): root}
    _dfs(states, table, _states_used(table), _Config(), cutoff, tally)
    return tally


def _tally_to_record(states: int, cutoff: int, tally: _Tally, total: int) -> BusyBeaverRecord:
    sigma_tables = sorted(set(tally.sigma_tables))
    shift_tables = sorted(set(tally.shift_tables))
    return BusyBeaverRecord(
        states=states,
        sigma=max(tally.sigma, 0),
        shift=max(tally.shift, 0),
        sigma_champions=[TuringMachine.from_compact(c) for c in sigma_tables],
        shift_champions=[TuringMachine.from_compact(c) for c in shift_tables],
        cutoff=cutoff,
        undecided_count=tally.undecided,
        halted_count=tally.halted,
        nonhalting_count=tally.nonhalting,
        total_machines=total,
    )


def search(states: int, cutoff: int, threads: int = 1) -> BusyBeaverRecord:
    """Exhaustive search of the reduced (n,2) space, n <= 3."""
    if not 1 <= states <= 3:
        raise ValueError(f"exhaustive search supports 1..3 states, got {states}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    specs = [(states, cutoff, root) for root in _root_entries(states)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(specs))) as pool:
            tallies = list(pool.map(_explore_root, specs))
    else:
        tallies = [_explore_root(spec) for spec in specs]
    total = _Tally()
    for tally in tallies:
        total.merge(tally)
    machines = total.halted + total.nonhalting + total.undecided
    return _tally_to_record(states, cutoff, total, machines)


def search_full(states: int, cutoff: int) -> BusyBeaverRecord:
    """Un-reduced search over all (4n+4)^(2n) complete tables.

    Oracle for the reduced search; practical for n <= 2 only.
    """
    if states < 1:
        raise ValueError(f"need at least one state, got {states}")
    options = [
        (write, move, nxt)
        for write in (0, 1)
        for move in (RIGHT, LEFT)
        for nxt in list(range(states)) + [HALT]
    ]
    keys = [(state, sym) for state in range(states) for sym in (0, 1)]
    tally = _Tally()
    total = 0
    for combo in itertools.product(options, repeat=len(keys)):
        total += 1
        table = dict(zip(keys, combo))
        if halt_unreachable(table):
            tally.nonhalting += 1
            continue
        cfg = _Config()
        event = cfg.run_until_event(table, cutoff)
        if event == "halt":
            tally.record_halt(
                TuringMachine(states, table).to_compact(), cfg.ones(), cfg.steps
            )
        elif event == "nonhalt":
            tally.nonhalting += 1
        elif _certified_nonhalting(table, states, cfg.state):
            tally.nonhalting += 1
        else:
            tally.undecided += 1
    return _tally_to_record(states, cutoff, tally, total)


def verify(machine: TuringMachine, expected_ones: int, expected_steps: int) -> bool:
    """True iff the blank-tape run halts with exactly the expected counts."""
    if expected_steps < 1:
        return False
    result = tm_run(machine, TapeState.blank(), max_steps=expected_steps + 1)
    return (
        result.halted
        and result.steps == expected_steps
        and result.ones == expected_ones
    )


def nonhalt_detect(machine: TuringMachine, trace_window: int) -> bool:
    """Sound non-halt check on the blank tape: True only with a certificate.

    False means "unknown" (including machines that halt inside the window);
    it never means "halts".
    """
    if trace_window < 1:
        raise ValueError(f"trace window must be >= 1, got {trace_window}")
    cfg = _Config()
    return cfg.run_until_event(machine.transitions, trace_window) == "nonhalt"


def logical_depth_estimate(target: str, max_states: int, cutoff: int) -> DepthEstimate:
    """Smallest-machine reproduction time of ``target`` on the blank tape.

    Enumerates every complete machine with at most ``max_states`` states,
    keeps those that halt within ``cutoff`` with marked-region contents
    exactly ``target``, and reports the minimal halting time among the
    producers of minimal encoded-table size.  Smaller state counts always
    encode smaller, so the state counts are scanned in increasing order.
    """
    if not target or any(c not in "01" for c in target):
        raise ValueError(f"target must be a non-empty 0/1 string: {target!r}")
    if not 1 <= max_states <= 2:
        raise ValueError(f"depth estimation supports 1..2 states, got {max_states}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    for states in range(1, max_states + 1):
        options = [
            (write, move, nxt)
            for write in (0, 1)
            for move in (RIGHT, LEFT)
            for nxt in list(range(states)) + [HALT]
        ]
        keys = [(state, sym) for state in range(states) for sym in (0, 1)]
        best_steps: int | None = None
        for combo in itertools.product(options, repeat=len(keys)):
            table = dict(zip(keys, combo))
            cfg = _Config()
            if cfg.run_until_event(table, cutoff) != "halt":
                continue
            if cfg.pattern() != target:
                continue
            if best_steps is None or cfg.steps < best_steps:
                best_steps = cfg.steps
        if best_steps is not None:
            return DepthEstimate(
                target=target,
                machine_states_bound=max_states,
                best_description_bits=encoded_table_bits(states),
                depth_steps=best_steps,
                found=True,
            )
    return DepthEstimate(
        target=target,
        machine_states_bound=max_states,
        best_description_bits=None,
        depth_steps=None,
        found=False,
    )
