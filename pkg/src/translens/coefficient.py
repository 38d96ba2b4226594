"""Characteristic exponent and transition coefficient of a computing system.

The characteristic exponent at (n, t) is the mean absolute difference of
compressed evolution lengths over the first n enumerated initial
conditions, normalized by t*(n-1).  Sampling the exponent over a schedule
of step counts and fitting a least-squares line gives the transition
coefficient: the slope measures how strongly a system's output complexity
reacts to input changes as it runs longer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from translens.compressor import compressed_length
from translens.enumeration import initial_conditions


class ComputingSystem(Protocol):
    """Anything that deterministically maps (init, steps) to output bytes."""

    def run(self, init: str, steps: int) -> bytes: ...


class DegenerateInputError(ValueError):
    """Least-squares fit is undefined: all sample abscissae coincide."""


@dataclass
class TransitionSeries:
    """Sampled (step count, characteristic exponent) pairs for a fixed n."""

    n: int
    samples: list[tuple[int, float]]


@dataclass
class TransitionCoefficient:
    value: float


def characteristic_exponent(system: ComputingSystem, n: int, t: int) -> float:
    """Mean absolute compressed-length difference over consecutive inputs."""
    if n < 2:
        raise ValueError(f"need at least two initial conditions, got n={n}")
    if t < 1:
        raise ValueError(f"step count must be >= 1, got t={t}")
    lengths = [compressed_length(system.run(init, t)) for init in initial_conditions(n)]
    total = sum(abs(lengths[k + 1] - lengths[k]) for k in range(n - 1))
    return total / (t * (n - 1))


def least_squares_slope(points: list[tuple[float, float]]) -> float:
    """Slope of the ordinary least-squares line through ``points``.

    Closed form Σ(x-x̄)(y-ȳ) / Σ(x-x̄)², evaluated in input order so the
    result is bit-stable.
    """
    if len(points) < 2:
        raise ValueError(f"need at least two points, got {len(points)}")
    if all(x == points[0][0] for x, _ in points):
        raise DegenerateInputError("all x values are equal; slope is undefined")
    m = len(points)
    x_mean = sum(x for x, _ in points) / m
    y_mean = sum(y for _, y in points) / m
    num = sum((x - x_mean) * (y - y_mean) for x, y in points)
    den = sum((x - x_mean) ** 2 for x, _ in points)
    return num / den


def _ingest_schedule(schedule: list[int] | tuple[int, ...]) -> list[int]:
    ordered = sorted(schedule)
    if len(ordered) < 2:
        raise ValueError("schedule needs at least two step counts")
    if any(b <= a for a, b in zip(ordered, ordered[1:])):
        raise ValueError(f"schedule entries must be distinct: {list(schedule)}")
    if ordered[0] < 1:
        raise ValueError("step counts must be >= 1")
    return ordered


def transition_series(
    system: ComputingSystem, n: int, schedule: list[int] | tuple[int, ...]
) -> TransitionSeries:
    """Characteristic exponent sampled at each step count of the schedule."""
    steps = _ingest_schedule(schedule)
    samples = [(t, characteristic_exponent(system, n, t)) for t in steps]
    return TransitionSeries(n=n, samples=samples)


def transition_coefficient(
    system: ComputingSystem, n: int, schedule: list[int] | tuple[int, ...]
) -> TransitionCoefficient:
    """Least-squares slope of the exponent series over the schedule."""
    series = transition_series(system, n, schedule)
    slope = least_squares_slope([(float(t), c) for t, c in series.samples])
    return TransitionCoefficient(value=slope)
