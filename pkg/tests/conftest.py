import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("repo")

PKG_ROOT = Path(__file__).resolve().parent.parent
SRC = PKG_ROOT / "src"


def run_cli(args, env_extra=None, cwd=None):
    """Run the CLI in a subprocess with the package importable."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "translens", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


@pytest.fixture
def cli():
    return run_cli


def naive_eca_evolve(rule_num: int, init: str, steps: int, margin: int = 64):
    """Dense-array ECA simulation: the oracle for the windowed evolver.

    Returns (rows, backgrounds, pad) where rows are full-width dense lists
    and pad is the array index of the initial condition's first cell.
    """
    table = {
        (a, b, c): (rule_num >> (4 * a + 2 * b + c)) & 1
        for a in (0, 1)
        for b in (0, 1)
        for c in (0, 1)
    }
    width = len(init) + 2 * steps + margin
    pad = steps + margin // 2
    row = [0] * pad + [int(c) for c in init] + [0] * (width - pad - len(init))
    bg = 0
    rows = [row[:]]
    bgs = [bg]
    for _ in range(steps):
        new = []
        for i in range(width):
            left = row[i - 1] if i > 0 else bg
            right = row[i + 1] if i < width - 1 else bg
            new.append(table[(left, row[i], right)])
        bg = table[(bg, bg, bg)]
        row = new
        rows.append(row[:])
        bgs.append(bg)
    return rows, bgs, pad


def naive_tm_run(machine, tape, max_steps: int):
    """Dense-tape Turing machine simulation mirroring translens.turing.run.

    Uses an explicit array of width 2*max_steps + |written region| + 3 so a
    head excursion can never leave it.
    """
    from translens.turing import HALT, RunResult

    positions = list(tape.cells)
    lo_cell = min(positions, default=0)
    hi_cell = max(positions, default=0)
    offset = max_steps + 1 - min(lo_cell, tape.head, 0)
    width = offset + max(hi_cell, tape.head, 0) + max_steps + 2
    cells = [tape.background.value(p - offset) for p in range(width)]
    for pos, value in tape.cells.items():
        cells[pos + offset] = value
    head = tape.head + offset
    state = tape.state
    steps = 0
    halted = False
    while steps < max_steps:
        write, move, nxt = machine.transitions[(state, cells[head])]
        cells[head] = write
        head += move
        steps += 1
        if nxt == HALT:
            halted = True
            break
        state = nxt
    marked = [
        p - offset
        for p in range(width)
        if cells[p] != tape.background.value(p - offset)
    ]
    if marked:
        extent = (min(marked), max(marked))
        ones = sum(
            1 for p in range(extent[0], extent[1] + 1) if cells[p + offset] == 1
        )
    else:
        extent = None
        ones = 0
    return RunResult(halted=halted, steps=steps, ones=ones, visited_extent=extent)
