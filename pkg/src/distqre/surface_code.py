"""Surface-code logical error rate, cycle time and tile footprint."""

from __future__ import annotations

from dataclasses import dataclass

THRESHOLD = 0.01
CROSSING_PREFACTOR = 0.03
D_MAX = 99
# relative slack so that targets computed from the same formula compare equal
_REL_TOL = 1e-12
# Physical op-layers per syndrome round. Calibrated globally against the
# published monolithic and distributed estimates (8 layers of gates plus
# slower readout/reset).
DEFAULT_CYCLE_FACTOR = 10.0


class ThresholdError(ValueError):
    """Physical error rate is at or above the surface-code threshold."""


class UnreachableTargetError(ValueError):
    """No odd distance up to ``d_max`` meets the requested logical error."""


@dataclass(frozen=True)
class PhysicalQubitModel:
    t_op: float
    p: float

    def __post_init__(self):
        if self.t_op <= 0:
            raise ValueError(f"t_op must be positive, got {self.t_op}")
        if not 0 <= self.p < 1:
            raise ValueError(f"p must lie in [0, 1), got {self.p}")


@dataclass(frozen=True)
class CodeParams:
    distance: int
    rounds_per_cycle_factor: float = DEFAULT_CYCLE_FACTOR

    def __post_init__(self):
        _check_distance(self.distance)
        if self.rounds_per_cycle_factor <= 0:
            raise ValueError("rounds_per_cycle_factor must be positive")


def _check_distance(d: int) -> None:
    if d < 1 or d % 2 == 0:
        raise ValueError(f"code distance must be a positive odd integer, got {d}")


def logical_error_rate(d: int, p: float) -> float:
    """Per-tile, per-cycle logical error rate ``0.03 (p/0.01)^((d+1)/2)``."""
    _check_distance(d)
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    return CROSSING_PREFACTOR * (p / THRESHOLD) ** ((d + 1) // 2)


def min_distance(p: float, target: float, d_max: int = D_MAX) -> int:
    """Smallest odd distance whose logical error rate is at most ``target``."""
    if target <= 0:
        raise ValueError(f"target must be positive, got {target}")
    target *= 1 + _REL_TOL
    if logical_error_rate(1, p) <= target:
        return 1
    if p >= THRESHOLD:
        raise ThresholdError(
            f"p={p} is at or above threshold; no distance reaches {target:g}")
    for d in range(3, d_max + 1, 2):
        if logical_error_rate(d, p) <= target:
            return d
    raise UnreachableTargetError(
        f"no odd distance <= {d_max} reaches {target:g} at p={p}")


def cycle_time(d: int, hw: PhysicalQubitModel,
               c: float = DEFAULT_CYCLE_FACTOR) -> float:
    """Duration tau(d) of one logical cycle (d syndrome rounds) in seconds."""
    _check_distance(d)
    return c * d * hw.t_op


def cycle_steps(d: int, c: float = DEFAULT_CYCLE_FACTOR) -> float:
    """tau(d) measured in physical operation steps."""
    _check_distance(d)
    return c * d


def physical_qubits_per_tile(d: int) -> int:
    # d^2 data + d^2 - 1 measurement qubits
    _check_distance(d)
    return 2 * d * d - 1
