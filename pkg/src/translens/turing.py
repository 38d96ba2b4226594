"""Exact simulation of (n,2) Turing machines on blank or periodic tapes.

States are integers 0..n-1 (rendered as letters A, B, ... in the text
format) and the halt target is the sentinel ``HALT``.  Every transition
writes a symbol and moves the head, including the halting one, which is
counted as a step.  The tape is a sparse map over an infinite background:
either the blank symbol 0 or a periodic word with a phase anchor.

Two finite regions describe a run.  The spacetime window is the span of
positions that at some point held a symbol different from the background
there (initial input cells included), so the rendered history shows every
cell that was ever visibly touched.  The final content span is the tighter
span of positions whose value still differs from the background when the
run ends; printed-symbol counts, the reported extent and the reproduced
pattern are taken over it, which keeps them finite for periodic
backgrounds and empty for runs that leave no durable mark.
"""

from __future__ import annotations

from dataclasses import dataclass, field

HALT = -1
LEFT = -1
RIGHT = 1

Transition = tuple[int, int, int]  # (write symbol, move, next state)

_MOVE_LETTER = {LEFT: "L", RIGHT: "R"}
_LETTER_MOVE = {"L": LEFT, "R": RIGHT}


def state_letter(state: int) -> str:
    return "H" if state == HALT else chr(ord("A") + state)


def letter_state(letter: str) -> int:
    if letter == "H":
        return HALT
    return ord(letter) - ord("A")


@dataclass(frozen=True)
class TuringMachine:
    """Complete (n,2) transition table with a distinguished halt target."""

    states: int
    transitions: dict[tuple[int, int], Transition] = field(compare=False)

    def __post_init__(self):
        if self.states < 1:
            raise ValueError(f"need at least one state, got {self.states}")
        for state in range(self.states):
            for sym in (0, 1):
                if (state, sym) not in self.transitions:
                    raise ValueError(
                        f"missing transition for ({state_letter(state)}, {sym})"
                    )
        for (state, sym), (write, move, nxt) in self.transitions.items():
            ok = (
                0 <= state < self.states
                and sym in (0, 1)
                and write in (0, 1)
                and move in (LEFT, RIGHT)
                and (nxt == HALT or 0 <= nxt < self.states)
            )
            if not ok:
                raise ValueError(
                    f"bad transition ({state_letter(state)}, {sym}) -> "
                    f"({write}, {move}, {nxt})"
                )

    def to_text(self) -> str:
        """One line per (state, symbol): "A0 -> 1RB", lexicographic order."""
        lines = []
        for state in range(self.states):
            for sym in (0, 1):
                write, move, nxt = self.transitions[(state, sym)]
                lines.append(
                    f"{state_letter(state)}{sym} -> "
                    f"{write}{_MOVE_LETTER[move]}{state_letter(nxt)}"
                )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TuringMachine":
        entries: dict[tuple[int, int], Transition] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                lhs, rhs = line.split("->")
                lhs = lhs.strip()
                rhs = rhs.strip()
                state = letter_state(lhs[0])
                sym = int(lhs[1])
                write = int(rhs[0])
                move = _LETTER_MOVE[rhs[1]]
                nxt = letter_state(rhs[2])
            except (ValueError, KeyError, IndexError) as exc:
                raise ValueError(f"unparseable machine line: {line!r}") from exc
            if (state, sym) in entries:
                raise ValueError(f"duplicate entry for {lhs}")
            entries[(state, sym)] = (write, move, nxt)
        if not entries:
            raise ValueError("machine text contains no transitions")
        states = 1 + max(state for state, _ in entries)
        return cls(states=states, transitions=entries)

    def to_compact(self) -> str:
        """Single-token form, one state per '_'-separated group: 1RB1LB_..."""
        groups = []
        for state in range(self.states):
            triples = []
            for sym in (0, 1):
                write, move, nxt = self.transitions[(state, sym)]
                triples.append(f"{write}{_MOVE_LETTER[move]}{state_letter(nxt)}")
            groups.append("".join(triples))
        return "_".join(groups)

    @classmethod
    def from_compact(cls, compact: str) -> "TuringMachine":
        entries: dict[tuple[int, int], Transition] = {}
        groups = compact.strip().split("_")
        for state, group in enumerate(groups):
            if len(group) != 6:
                raise ValueError(f"bad state group {group!r} in {compact!r}")
            for sym in (0, 1):
                triple = group[3 * sym : 3 * sym + 3]
                entries[(state, sym)] = (
                    int(triple[0]),
                    _LETTER_MOVE[triple[1]],
                    letter_state(triple[2]),
                )
        return cls(states=len(groups), transitions=entries)


@dataclass(frozen=True)
class Background:
    """Infinite periodic tape background; the blank tape is the word "0"."""

    word: str = "0"
    anchor: int = 0

    def __post_init__(self):
        if not self.word or any(c not in "01" for c in self.word):
            raise ValueError(f"background word must be non-empty over 0/1: {self.word!r}")

    def value(self, position: int) -> int:
        return int(self.word[(position - self.anchor) % len(self.word)])

    @property
    def is_blank(self) -> bool:
        return self.word == "0"


BLANK = Background()


@dataclass
class TapeState:
    """Sparse tape contents plus head and control state."""

    cells: dict[int, int] = field(default_factory=dict)
    background: Background = BLANK
    head: int = 0
    state: int = 0

    @classmethod
    def blank(cls) -> "TapeState":
        return cls()

    @classmethod
    def from_input(cls, bits: str, background: Background = BLANK) -> "TapeState":
        """Input convention: bits at positions 0..L-1, head at 0, state A."""
        if any(c not in "01" for c in bits):
            raise ValueError(f"input must be over 0/1: {bits!r}")
        return cls(
            cells={i: int(c) for i, c in enumerate(bits)},
            background=background,
        )

    def read(self, position: int) -> int:
        return self.cells.get(position, self.background.value(position))


@dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int
    ones: int
    visited_extent: tuple[int, int] | None


class _Run:
    """Mutable simulation state; public operations wrap it."""

    __slots__ = (
        "table", "cells", "bg", "head", "state", "steps", "halted",
        "lo", "hi", "writes",
    )

    def __init__(self, machine: TuringMachine, tape: TapeState, log_writes: bool):
        self.table = machine.transitions
        self.cells = dict(tape.cells)
        self.bg = tape.background
        self.head = tape.head
        self.state = tape.state
        self.steps = 0
        self.halted = False
        self.lo: int | None = None
        self.hi: int | None = None
        self.writes: list[tuple[int, int]] | None = [] if log_writes else None
        for pos, value in tape.cells.items():
            if value != self.bg.value(pos):
                self._mark(pos)

    def _mark(self, pos: int) -> None:
        if self.lo is None:
            self.lo = self.hi = pos
        elif pos < self.lo:
            self.lo = pos
        elif pos > self.hi:
            self.hi = pos

    def value(self, pos: int) -> int:
        return self.cells.get(pos, self.bg.value(pos))

    def advance(self, max_steps: int) -> None:
        """Execute until halt or ``max_steps`` total steps."""
        cells = self.cells
        table = self.table
        bg = self.bg
        head = self.head
        state = self.state
        if bg.is_blank:
            while not self.halted and self.steps < max_steps:
                sym = cells.get(head, 0)
                write, move, nxt = table[(state, sym)]
                cells[head] = write
                if write:
                    self._mark(head)
                if self.writes is not None:
                    self.writes.append((head, write))
                head += move
                state = nxt
                self.steps += 1
                if nxt == HALT:
                    self.halted = True
        else:
            while not self.halted and self.steps < max_steps:
                sym = cells.get(head, bg.value(head))
                write, move, nxt = table[(state, sym)]
                cells[head] = write
                if write != bg.value(head):
                    self._mark(head)
                if self.writes is not None:
                    self.writes.append((head, write))
                head += move
                state = nxt
                self.steps += 1
                if nxt == HALT:
                    self.halted = True
        self.head = head
        self.state = state

    def final_span(self) -> tuple[int, int] | None:
        """Span of cells whose final value differs from the background."""
        marked = [p for p, v in self.cells.items() if v != self.bg.value(p)]
        if not marked:
            return None
        return min(marked), max(marked)

    def ones(self) -> int:
        span = self.final_span()
        if span is None:
            return 0
        return sum(1 for p in range(span[0], span[1] + 1) if self.value(p) == 1)

    def pattern(self) -> str:
        """Final-span contents as a '0'/'1' string (empty if nothing marked)."""
        span = self.final_span()
        if span is None:
            return ""
        return "".join(str(self.value(p)) for p in range(span[0], span[1] + 1))


def run(machine: TuringMachine, tape: TapeState, max_steps: int) -> RunResult:
    """Execute until halt or truncation at ``max_steps``; exact counts."""
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    sim = _Run(machine, tape, log_writes=False)
    sim.advance(max_steps)
    return RunResult(
        halted=sim.halted,
        steps=sim.steps,
        ones=sim.ones(),
        visited_extent=sim.final_span(),
    )


def final_pattern(machine: TuringMachine, tape: TapeState, max_steps: int) -> str:
    """Final-span contents after the run (used by the depth estimator)."""
    sim = _Run(machine, tape, log_writes=False)
    sim.advance(max_steps)
    return sim.pattern()


def spacetime(machine: TuringMachine, tape: TapeState, steps: int) -> bytes:
    """Serialized run history: the marked window after each of ``steps`` steps.

    Simulates min(steps, halting time) steps.  The window is the marked
    extent over the whole run, so every row has the same width; after
    halting the final tape row is repeated, so a diagram always has exactly
    ``steps`` rows.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    sim = _Run(machine, tape, log_writes=True)
    sim.advance(steps)
    lo, hi = sim.lo, sim.hi
    if lo is None:
        return b""
    window = range(lo, hi + 1)
    # Replay the write log over a copy of the initial tape, emitting the
    # window after each step.
    working = dict(tape.cells)
    bg = tape.background
    rows: list[str] = []
    for pos, value in sim.writes:
        working[pos] = value
        rows.append("".join(str(working.get(p, bg.value(p))) for p in window))
    while len(rows) < steps:
        rows.append(rows[-1])
    return "".join(rows).encode("ascii")


class TmSystem:
    """Computing-system adapter for the coefficient pipeline."""

    def __init__(self, machine: TuringMachine, background: Background = BLANK):
        self.machine = machine
        self.background = background

    @property
    def system_id(self) -> str:
        return f"tm:{self.machine.to_compact()}"

    def run(self, init: str, steps: int) -> bytes:
        tape = TapeState.from_input(init, background=self.background)
        return spacetime(self.machine, tape, steps)
