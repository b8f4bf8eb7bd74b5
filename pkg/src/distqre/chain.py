"""Aggregation of multi-level distillation chains (shared by EDFs and MSDFs).

Two schedules are modelled:

``sequential``
    Levels run at distance 1 occupy their own physical qubits; all
    surface-code levels time-share one region sized for the largest level.
    Runs execute one after another, so the time per output is the expected
    number of runs of every level times its duration.
``pipelined``
    Every level gets enough dedicated copies to keep the next level fed;
    time is the latency of one pass through the chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .surface_code import cycle_steps, physical_qubits_per_tile

SCHEDULES = ("sequential", "pipelined")


class DivergenceError(ValueError):
    """A level of the chain accepts with probability zero."""


class RegimeError(ValueError):
    """A level fails to reduce the error it is fed."""


@dataclass(frozen=True)
class LevelShape:
    """What the aggregator needs to know about one level."""

    inputs: int
    outputs: int
    tiles: int
    duration_cycles: int
    op_layers: int
    distance: int
    accept: float

    @property
    def physical(self) -> bool:
        return self.distance == 1

    def footprint(self) -> int:
        return self.tiles * physical_qubits_per_tile(self.distance)

    def run_steps(self, c: float) -> float:
        if self.physical:
            return float(self.op_layers)
        return self.duration_cycles * cycle_steps(self.distance, c)


@dataclass(frozen=True)
class ChainTotals:
    qubits: int
    time_steps: float
    raw_inputs: float
    outputs: int
    copies: tuple[int, ...]
    physical_qubits: int
    op_layers: int


def expected_runs(levels: Sequence[LevelShape]) -> list[float]:
    """Expected runs of each level per accepted batch from the last level."""
    runs = [0.0] * len(levels)
    need = 1.0
    for i in range(len(levels) - 1, -1, -1):
        lv = levels[i]
        if lv.accept <= 0:
            raise DivergenceError(f"level {i} never accepts")
        runs[i] = need / lv.accept
        if i:
            need = runs[i] * lv.inputs / levels[i - 1].outputs
    return runs


def aggregate(levels: Sequence[LevelShape], c: float,
              schedule: str = "sequential") -> ChainTotals:
    if schedule not in SCHEDULES:
        raise ValueError(f"unknown schedule {schedule!r}")
    if not levels:
        return ChainTotals(0, 0.0, 1.0, 1, (), 0, 0)
    runs = expected_runs(levels)
    out = levels[-1].outputs
    raw = runs[0] * levels[0].inputs / out
    phys = [lv for lv in levels if lv.physical]
    physical_qubits = sum(lv.tiles for lv in phys)
    op_layers = sum(lv.op_layers for lv in phys)

    if schedule == "sequential":
        surface = [lv.footprint() for lv in levels if not lv.physical]
        qubits = physical_qubits + max(surface, default=0)
        steps = sum(r * lv.run_steps(c) for r, lv in zip(runs, levels))
        copies = tuple(1 for _ in levels)
    else:
        copies_list = [1] * len(levels)
        for i in range(len(levels) - 2, -1, -1):
            lv, nxt = levels[i], levels[i + 1]
            demand = copies_list[i + 1] * nxt.inputs / nxt.run_steps(c)
            supply = lv.outputs * lv.accept / lv.run_steps(c)
            copies_list[i] = max(1, math.ceil(demand / supply - 1e-9))
        copies = tuple(copies_list)
        qubits = sum(k * lv.footprint() for k, lv in zip(copies, levels))
        steps = sum(lv.run_steps(c) for lv in levels)
    return ChainTotals(qubits=qubits, time_steps=steps, raw_inputs=raw,
                       outputs=out, copies=copies,
                       physical_qubits=physical_qubits, op_layers=op_layers)


def pareto_mask(points: Sequence[Sequence[float]]) -> list[bool]:
    """True for points not weakly dominated by a different point (minimisation).

    Exact duplicates keep only their first occurrence.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n == 0:
        return []
    pts = pts.reshape(n, -1)
    # lexicographic order puts every dominator before the points it dominates
    order = np.lexsort(pts.T[::-1])
    keep = np.zeros(n, dtype=bool)
    front = np.empty((0, pts.shape[1]))
    for i in order:
        if len(front) and np.any(np.all(front <= pts[i], axis=1)):
            continue
        keep[i] = True
        front = np.vstack([front, pts[i]])
    return keep.tolist()
