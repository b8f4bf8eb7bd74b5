"""Planar distributed ISA: instruction timing, fast-block layout, gadget demand."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .surface_code import DEFAULT_CYCLE_FACTOR, PhysicalQubitModel, cycle_time


class Instruction(enum.Enum):
    INIT = "Init"
    PAULI = "Pauli"
    HADAMARD = "Hadamard"
    PHASE = "Phase"
    MEASURE = "Measure"
    MOVE = "Move"
    MQPM = "MQPM"
    TSTATE_PREP = "TStatePrep"
    BELL_STATE_PREP = "BellStatePrep"


# (cycles of tau(d), extra physical operation: None, "init" or "meas")
_COSTS: dict[Instruction, tuple[int, str | None]] = {
    Instruction.INIT: (0, "init"),
    Instruction.PAULI: (0, None),  # tracked in the Pauli frame
    Instruction.HADAMARD: (3, None),
    Instruction.PHASE: (2, None),
    Instruction.MEASURE: (0, "meas"),
    Instruction.MOVE: (1, None),
    Instruction.MQPM: (1, None),
    # factory outputs are consumed through one MQPM; production time is
    # charged to the factories, not the instruction
    Instruction.TSTATE_PREP: (1, None),
    Instruction.BELL_STATE_PREP: (1, None),
}


def cycle_cost(i: Instruction) -> int:
    return _COSTS[i][0]


def instruction_time(i: Instruction, d: int, hw: PhysicalQubitModel,
                     c: float = DEFAULT_CYCLE_FACTOR) -> float:
    """Seconds taken by ``i`` on tiles of distance ``d``.

    Initialisation and measurement take one physical operation time.
    """
    cycles, extra = _COSTS[i]
    t = cycles * cycle_time(d, hw, c) if cycles else 0.0
    if extra is not None:
        t += hw.t_op
    return t


@dataclass(frozen=True)
class LayoutPlan:
    data_qubits: int
    tiles: int

    @property
    def ancilla_tiles(self) -> int:
        return self.tiles - self.data_qubits


def layout(q_d: int) -> LayoutPlan:
    """Fast-block layout: Q_L = 2 Q_D + ceil(sqrt(8 Q_D)) + 1 tiles."""
    if q_d < 1:
        raise ValueError("need at least one data qubit")
    return LayoutPlan(q_d, 2 * q_d + math.isqrt(8 * q_d - 1) + 1 + 1)


@dataclass(frozen=True)
class GadgetResourceVector:
    t_states: int
    bell_states: int
    mqpm_per_node: int = 1
    mqpm_cycles: int = 1


def gadget_resources(n_nodes: int) -> GadgetResourceVector:
    """Per-gadget demand when the gadget spans ``n_nodes`` nodes of a line."""
    if n_nodes < 1:
        raise ValueError("need at least one node")
    return GadgetResourceVector(t_states=1, bell_states=n_nodes - 1)
