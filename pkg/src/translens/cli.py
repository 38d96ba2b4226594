"""Command-line front end: simulation, measurement, search, reports.

Subcommands::

    eca evolve    render one space-time diagram (CSV rows and/or PPM image)
    coefficient   transition coefficient of one system, as JSON
    classify      rank all 256 elementary rules and cut into four classes
    conjecture3   coefficients of the Busy Beaver step champions
    bb search     exhaustive Busy Beaver search (n <= 3)
    bb verify     check a machine file against expected ones/steps counts
    bb depth      smallest-machine reproduction time of a bit string

Worker parallelism is bounded by ``--threads`` (fallback: the TL_THREADS
environment variable); results are independent of the thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from translens import __version__, busy_beaver, experiments
from translens.coefficient import least_squares_slope, transition_series
from translens.compressor import COMPRESSOR_VERSION
from translens.eca import EcaRule, EcaSystem, SpaceTimeDiagram, evolve, serialize
from translens.manifest import write_manifest
from translens.turing import TmSystem, TuringMachine


def _default_threads() -> int:
    env = os.environ.get("TL_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _parse_schedule(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad schedule {text!r}; expected e.g. 50,100,150,200")


def _rule_number(text: str) -> int:
    value = int(text)
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(f"rule number must be in [0, 255], got {value}")
    return value


def _bits(text: str) -> str:
    if not text or any(c not in "01" for c in text):
        raise argparse.ArgumentTypeError(f"expected a non-empty 0/1 string, got {text!r}")
    return text


def diagram_csv(diagram: SpaceTimeDiagram) -> str:
    """One line per time step, the raw window contents."""
    return "\n".join(diagram.rows) + "\n"


def diagram_ppm(diagram: SpaceTimeDiagram) -> bytes:
    """Binary PPM (P6) rendering; cell 1 is black, cell 0 white."""
    steps = diagram.steps
    width = len(diagram.rows[-1])
    height = steps + 1
    black, white = bytes((0, 0, 0)), bytes((255, 255, 255))
    body = bytearray()
    for row, offset, background in zip(
        diagram.rows, diagram.window_offsets, diagram.backgrounds
    ):
        pad = bytes(width)  # absolute columns -steps .. L-1+steps
        left = offset + steps  # column of the row's first cell
        cells = bytearray(pad[:left])
        cells += bytes(int(c) for c in row)
        cells += pad[: width - left - len(row)]
        if background:
            for i in range(left):
                cells[i] = 1
            for i in range(left + len(row), width):
                cells[i] = 1
        for cell in cells:
            body += black if cell else white
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + bytes(body)


def _load_system(spec: str):
    """Parse --system eca:R or tm:FILE into (id, ComputingSystem)."""
    kind, _, arg = spec.partition(":")
    if kind == "eca" and arg:
        system = EcaSystem(_rule_number(arg))
        return system.system_id, system
    if kind == "tm" and arg:
        path = Path(arg)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise RuntimeError(f"cannot read machine file {path}: {exc.strerror}") from exc
        system = TmSystem(TuringMachine.from_text(text))
        return f"tm:{path}", system
    raise argparse.ArgumentTypeError(
        f"bad system spec {spec!r}; expected eca:RULE or tm:FILE"
    )


def _cmd_eca_evolve(args) -> int:
    rule = EcaRule.from_number(args.rule)
    diagram = evolve(rule, args.init, args.steps)
    data = serialize(diagram)
    print(len(data))
    outputs = []
    if args.csv:
        Path(args.csv).write_text(diagram_csv(diagram), encoding="utf-8")
        outputs.append(Path(args.csv))
    if args.ppm:
        Path(args.ppm).write_bytes(diagram_ppm(diagram))
        outputs.append(Path(args.ppm))
    if outputs:
        write_manifest(
            Path(str(outputs[0]) + ".manifest.json"),
            command=["eca", "evolve"] + _echo_args(args, ("rule", "init", "steps")),
            parameters={"rule": args.rule, "init": args.init, "steps": args.steps},
            outputs=outputs,
            wall_time_seconds=time.time() - args._t0,
        )
    return 0


def _echo_args(args, names) -> list[str]:
    out = []
    for name in names:
        out.append(f"--{name.replace('_', '-')}")
        out.append(str(getattr(args, name)))
    return out


def _cmd_coefficient(args) -> int:
    system_id, system = _load_system(args.system)
    series = transition_series(system, args.n, args.schedule)
    slope = least_squares_slope([(float(t), c) for t, c in series.samples])
    payload = {
        "system": system_id,
        "n": args.n,
        "schedule": list(args.schedule),
        "series": [[t, c] for t, c in series.samples],
        "coefficient": slope,
        "compressor_version": COMPRESSOR_VERSION,
        "tool_version": __version__,
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    outputs = []
    if args.json:
        path = Path(args.json)
        path.write_text(text, encoding="utf-8")
        outputs.append(path)
    if args.csv:
        schedule_txt = ";".join(str(t) for t in args.schedule)
        lines = ["system,n,schedule,t,exponent,coefficient"]
        for t, c in series.samples:
            lines.append(f"{system_id},{args.n},{schedule_txt},{t},{c!r},{slope!r}")
        Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
        outputs.append(Path(args.csv))
    if outputs:
        write_manifest(
            Path(str(outputs[0]) + ".manifest.json"),
            command=["coefficient"] + _echo_args(args, ("system", "n")),
            parameters={
                "system": system_id,
                "n": args.n,
                "schedule": list(args.schedule),
            },
            outputs=outputs,
            wall_time_seconds=time.time() - args._t0,
        )
    else:
        sys.stdout.write(text)
    return 0


def _cmd_classify(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = experiments.classify_all(args.n, args.schedule, threads=args.threads)
    ranking = out_dir / "ranking.csv"
    ranking.write_text(experiments.ranking_csv(report), encoding="utf-8")
    report_path = out_dir / "report.json"
    report_path.write_text(
        json.dumps(experiments.report_json_dict(report), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    conj_path = out_dir / "conjecture1.txt"
    conj_path.write_text(experiments.conjecture1_report(report), encoding="utf-8")
    write_manifest(
        out_dir / "manifest.json",
        command=["classify"] + _echo_args(args, ("n", "out")),
        parameters={"n": args.n, "schedule": list(args.schedule)},
        outputs=[ranking, report_path, conj_path],
        wall_time_seconds=time.time() - args._t0,
    )
    top = report.entries[0]
    print(f"top rule: {top.rule} (coefficient {top.value!r})")
    print(f"outputs written to {out_dir}")
    return 0


def _cmd_conjecture3(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    cutoffs = dict(experiments.DEFAULT_BB_CUTOFFS)
    if args.cutoff is not None:
        cutoffs = {states: args.cutoff for states in cutoffs}
    rows_data = experiments.conjecture3_rows(
        args.bb_states, args.n, args.schedule, cutoffs, threads=args.threads
    )
    text_path = out_dir / "conjecture3.txt"
    text_path.write_text(
        experiments.render_conjecture3_text(rows_data, args.n, args.schedule),
        encoding="utf-8",
    )
    json_path = out_dir / "conjecture3.json"
    json_path.write_text(
        json.dumps(
            experiments.render_conjecture3_json(rows_data, args.n, args.schedule),
            indent=2,
            sort_keys=True,
        )
        + "\n",
        encoding="utf-8",
    )
    write_manifest(
        out_dir / "manifest.json",
        command=["conjecture3"] + _echo_args(args, ("bb_states", "n", "out")),
        parameters={
            "bb_states": args.bb_states,
            "n": args.n,
            "schedule": list(args.schedule),
            "cutoffs": {str(k): v for k, v in sorted(cutoffs.items())},
        },
        outputs=[text_path, json_path],
        wall_time_seconds=time.time() - args._t0,
    )
    sys.stdout.write(text_path.read_text(encoding="utf-8"))
    return 0


def _machine_text_row(machine: TuringMachine) -> str:
    return "; ".join(machine.to_text().splitlines())


def _cmd_bb_search(args) -> int:
    record = busy_beaver.search(args.states, args.cutoff, threads=args.threads)
    summary = {
        "states": record.states,
        "sigma": record.sigma,
        "shift": record.shift,
        "cutoff": record.cutoff,
        "undecided_count": record.undecided_count,
        "halted_count": record.halted_count,
        "nonhalting_count": record.nonhalting_count,
        "total_machines": record.total_machines,
        "exact": record.exact,
        "wall_time_seconds": time.time() - args._t0,
    }
    print(
        f"sigma({record.states}) = {record.sigma}, shift({record.states}) = "
        f"{record.shift}, undecided = {record.undecided_count}"
    )
    outputs = []
    if args.json:
        Path(args.json).write_text(
            json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        outputs.append(Path(args.json))
    if args.csv:
        lines = ["kind,ones,steps,machine"]
        for machine in record.sigma_champions:
            lines.append(f"sigma,{record.sigma},,{_machine_text_row(machine)}")
        for machine in record.shift_champions:
            lines.append(f"shift,,{record.shift},{_machine_text_row(machine)}")
        Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
        outputs.append(Path(args.csv))
    if outputs:
        write_manifest(
            Path(str(outputs[0]) + ".manifest.json"),
            command=["bb", "search"] + _echo_args(args, ("states", "cutoff")),
            parameters={"states": args.states, "cutoff": args.cutoff},
            outputs=outputs,
            wall_time_seconds=time.time() - args._t0,
        )
    return 0


def _cmd_bb_verify(args) -> int:
    path = Path(args.machine)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuntimeError(f"cannot read machine file {path}: {exc.strerror}") from exc
    machine = TuringMachine.from_text(text)
    ok = busy_beaver.verify(machine, args.ones, args.steps)
    print("true" if ok else "false")
    return 0


def _cmd_bb_depth(args) -> int:
    estimate = busy_beaver.logical_depth_estimate(args.target, args.states, args.cutoff)
    payload = {
        "target": estimate.target,
        "machine_states_bound": estimate.machine_states_bound,
        "found": estimate.found,
        "best_description_bits": estimate.best_description_bits,
        "depth_steps": estimate.depth_steps,
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.json:
        path = Path(args.json)
        path.write_text(text, encoding="utf-8")
        write_manifest(
            Path(str(path) + ".manifest.json"),
            command=["bb", "depth"] + _echo_args(args, ("target", "states", "cutoff")),
            parameters={
                "target": args.target,
                "states": args.states,
                "cutoff": args.cutoff,
            },
            outputs=[path],
            wall_time_seconds=time.time() - args._t0,
        )
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translens",
        description="compression-based transition coefficients for automata",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    eca = sub.add_parser("eca", help="elementary cellular automata")
    eca_sub = eca.add_subparsers(dest="eca_command", required=True)
    ev = eca_sub.add_parser("evolve", help="render one space-time diagram")
    ev.add_argument("--rule", type=_rule_number, required=True)
    ev.add_argument("--init", type=_bits, required=True)
    ev.add_argument("--steps", type=int, required=True)
    ev.add_argument("--ppm", type=str, default=None)
    ev.add_argument("--csv", type=str, default=None)
    ev.set_defaults(func=_cmd_eca_evolve)

    coef = sub.add_parser("coefficient", help="transition coefficient of one system")
    coef.add_argument("--system", type=str, required=True, help="eca:RULE or tm:FILE")
    coef.add_argument("--n", type=int, default=experiments.DEFAULT_N)
    coef.add_argument(
        "--schedule", type=_parse_schedule, default=experiments.DEFAULT_SCHEDULE
    )
    coef.add_argument("--json", type=str, default=None)
    coef.add_argument("--csv", type=str, default=None)
    coef.set_defaults(func=_cmd_coefficient)

    cls = sub.add_parser("classify", help="rank and partition all 256 rules")
    cls.add_argument("--n", type=int, default=experiments.DEFAULT_N)
    cls.add_argument(
        "--schedule", type=_parse_schedule, default=experiments.DEFAULT_SCHEDULE
    )
    cls.add_argument("--out", type=str, required=True)
    cls.add_argument("--threads", type=int, default=_default_threads())
    cls.set_defaults(func=_cmd_classify)

    conj = sub.add_parser("conjecture3", help="Busy Beaver champion coefficients")
    conj.add_argument("--bb-states", type=int, default=2)
    conj.add_argument("--n", type=int, default=experiments.DEFAULT_N)
    conj.add_argument(
        "--schedule", type=_parse_schedule, default=experiments.DEFAULT_SCHEDULE
    )
    conj.add_argument("--cutoff", type=int, default=None)
    conj.add_argument("--out", type=str, required=True)
    conj.add_argument("--threads", type=int, default=_default_threads())
    conj.set_defaults(func=_cmd_conjecture3)

    bb = sub.add_parser("bb", help="Busy Beaver search and related estimators")
    bb_sub = bb.add_subparsers(dest="bb_command", required=True)
    se = bb_sub.add_parser("search", help="exhaustive search, n <= 3")
    se.add_argument("--states", type=int, required=True)
    se.add_argument("--cutoff", type=int, required=True)
    se.add_argument("--json", type=str, default=None)
    se.add_argument("--csv", type=str, default=None)
    se.add_argument("--threads", type=int, default=_default_threads())
    se.set_defaults(func=_cmd_bb_search)

    veri = bb_sub.add_parser("verify", help="check a champion machine file")
    veri.add_argument("--machine", type=str, required=True)
    veri.add_argument("--ones", type=int, required=True)
    veri.add_argument("--steps", type=int, required=True)
    veri.set_defaults(func=_cmd_bb_verify)

    dep = bb_sub.add_parser("depth", help="smallest-machine reproduction time")
    dep.add_argument("--target", type=_bits, required=True)
    dep.add_argument("--states", type=int, default=2)
    dep.add_argument("--cutoff", type=int, default=1000)
    dep.add_argument("--json", type=str, default=None)
    dep.set_defaults(func=_cmd_bb_depth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.time()
    try:
        return args.func(args)
    except (RuntimeError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
