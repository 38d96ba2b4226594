"""Run manifests: what was run, with what parameters, producing which bytes.

Every artifact-producing command records its command line, parameter set,
compressor and tool version, wall time, and a sha256 digest of each output
file.  Two runs with identical inputs produce manifests identical except
for the wall-time field.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from translens import __version__
from translens.compressor import COMPRESSOR_VERSION


def file_digest(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def build_manifest(
    command: list[str],
    parameters: dict,
    outputs: list[Path],
    wall_time_seconds: float,
) -> dict:
    return {
        "command": list(command),
        "parameters": parameters,
        "compressor_version": COMPRESSOR_VERSION,
        "tool_version": __version__,
        "wall_time_seconds": wall_time_seconds,
        "outputs": [
            {"path": Path(path).name, "sha256": file_digest(path)}
            for path in sorted(outputs, key=lambda p: Path(p).name)
        ],
    }


def write_manifest(
    manifest_path: Path,
    command: list[str],
    parameters: dict,
    outputs: list[Path],
    wall_time_seconds: float,
) -> Path:
    manifest = build_manifest(command, parameters, outputs, wall_time_seconds)
    text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
    Path(manifest_path).write_text(text, encoding="utf-8")
    return Path(manifest_path)
