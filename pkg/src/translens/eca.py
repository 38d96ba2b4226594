"""Exact elementary cellular automaton simulation on an infinite background.

A configuration is a finite window of cells over a uniform background
symbol.  One update step widens the window by one cell on each side (the
region of influence of a radius-1 rule) and maps the background through the
rule's (b,b,b) entry, so the simulation is exact for the infinite tape: no
wrap-around, no boundary contamination.

Rows are '0'/'1' strings.  Internally a row is converted to an integer and
the update is computed with word-level bit operations, which keeps long
evolutions cheap without changing the cell-by-cell semantics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

NEIGHBORHOODS = [(b2, b1, b0) for b2 in (0, 1) for b1 in (0, 1) for b0 in (0, 1)]


@dataclass(frozen=True)
class EcaRule:
    """One of the 256 elementary CA rules and its neighborhood table."""

    number: int
    table: dict[tuple[int, int, int], int] = field(compare=False)

    @classmethod
    def from_number(cls, number: int) -> "EcaRule":
        if not 0 <= number <= 255:
            raise ValueError(f"rule number must be in [0, 255], got {number}")
        table = {
            (b2, b1, b0): (number >> (4 * b2 + 2 * b1 + b0)) & 1
            for (b2, b1, b0) in NEIGHBORHOODS
        }
        return cls(number=number, table=table)


@dataclass
class SpaceTimeDiagram:
    """Evolution history: row r is the window at time r, widening by 2."""

    rows: list[str]
    window_offsets: list[int]  # leftmost absolute cell position per row
    backgrounds: list[int]  # background symbol per row

    @property
    def steps(self) -> int:
        return len(self.rows) - 1


def step(rule: EcaRule, row: str, background: int) -> tuple[str, int]:
    """One synchronous update of a window over a uniform background.

    Returns the new window (two cells wider) and the new background,
    ``table[(b, b, b)]``.
    """
    w = len(row)
    out_w = w + 2
    x = int(row, 2) if w else 0
    # Pad two background cells on each side; the result covers every cell
    # whose neighborhood intersects the input window.
    if background:
        padded = (0b11 << (w + 2)) | (x << 2) | 0b11
    else:
        padded = x << 2
    mask = (1 << out_w) - 1
    left = (padded >> 2) & mask
    center = (padded >> 1) & mask
    right = padded & mask
    out = 0
    number = rule.number
    for pattern in range(8):
        if not (number >> pattern) & 1:
            continue
        term = left if pattern & 4 else left ^ mask
        term &= center if pattern & 2 else center ^ mask
        term &= right if pattern & 1 else right ^ mask
        out |= term
    new_background = rule.table[(background, background, background)]
    return format(out, f"0{out_w}b"), new_background


def evolve(rule: EcaRule, init: str, steps: int) -> SpaceTimeDiagram:
    """Run ``init`` (background 0) for ``steps`` updates."""
    if not init:
        raise ValueError("initial condition must be non-empty")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    rows = [init]
    offsets = [0]
    backgrounds = [0]
    row, bg = init, 0
    for r in range(steps):
        row, bg = step(rule, row, backgrounds[r])
        rows.append(row)
        offsets.append(-(r + 1))
        backgrounds.append(bg)
    return SpaceTimeDiagram(rows=rows, window_offsets=offsets, backgrounds=backgrounds)


def serialize(diagram: SpaceTimeDiagram) -> bytes:
    """Rows concatenated in time order, one '0'/'1' byte per cell."""
    return "".join(diagram.rows).encode("ascii")


class EcaSystem:
    """Computing-system adapter: run(init, steps) -> serialized evolution."""

    def __init__(self, rule: EcaRule | int):
        self.rule = rule if isinstance(rule, EcaRule) else EcaRule.from_number(rule)

    @property
    def system_id(self) -> str:
        return f"eca:{self.rule.number}"

    def run(self, init: str, steps: int) -> bytes:
        return serialize(evolve(self.rule, init, steps))
