"""Entanglement-distillation units and their Pauli error models."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..polynomial import Polynomial, poly


class InvalidRegimeError(ValueError):
    """A unit was evaluated outside the range where its error model is sensible."""


@dataclass(frozen=True)
class PauliErrorRates:
    px: float
    py: float
    pz: float

    def __post_init__(self):
        for name in ("px", "py", "pz"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} is not a probability")
        if self.total > 1.0 + 1e-12:
            raise ValueError(f"error components sum to {self.total} > 1")

    @classmethod
    def depolarizing(cls, total: float) -> "PauliErrorRates":
        return cls(total / 3, total / 3, total / 3)

    @classmethod
    def zero(cls) -> "PauliErrorRates":
        return cls(0.0, 0.0, 0.0)

    @property
    def total(self) -> float:
        return self.px + self.py + self.pz

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.px, self.py, self.pz)

    def dominated_by(self, other: "PauliErrorRates") -> bool:
        """True when every component is at most the matching one of ``other``."""
        return self.px <= other.px and self.py <= other.py and self.pz <= other.pz


class UnitKind(enum.Enum):
    FIVE_QUBIT_PERFECT = "5Q"
    REPETITION_X = "2Q(X)"
    REPETITION_Y = "2Q(Y)"
    REPETITION_Z = "2Q(Z)"

    @property
    def is_repetition(self) -> bool:
        return self is not UnitKind.FIVE_QUBIT_PERFECT


@dataclass(frozen=True)
class UnitErrorModel:
    rejection: Polynomial
    out_x: Polynomial
    out_y: Polynomial
    out_z: Polynomial

    def __post_init__(self):
        for name in ("rejection", "out_x", "out_y", "out_z"):
            pl = getattr(self, name)
            if not pl.has_nonnegative_coefficients():
                raise ValueError(f"{name} has a negative coefficient")
            if pl(0, 0, 0, 0) != 0:
                raise ValueError(f"{name} is non-zero at zero error")

    def polynomials(self) -> dict[str, Polynomial]:
        return {"rejection": self.rejection, "out_x": self.out_x,
                "out_y": self.out_y, "out_z": self.out_z}

    def permute(self, perm: tuple[int, int, int]) -> "UnitErrorModel":
        """Relabel Pauli axes in inputs and outputs (e.g. X<->Z is ``(2, 1, 0)``)."""
        outs = [self.out_x, self.out_y, self.out_z]
        new = [None, None, None]
        for i in range(3):
            new[perm[i]] = outs[i].permute(perm)
        return UnitErrorModel(self.rejection.permute(perm), *new)


# Rows of the published error-model table. The 5Q row prints "++1.7p" twice;
# read as "+1.7p".
TABLE_MODELS: dict[UnitKind, UnitErrorModel] = {
    UnitKind.FIVE_QUBIT_PERFECT: UnitErrorModel(
        rejection=poly("5*pz + 5*py + 5*px + 6.5*p"),
        out_x=poly("5*px*pz^2 + 5*px*py^2 + 3.1*p"),
        out_y=poly("5*py*pz^2 + 5*py*px^2 + 1.7*p"),
        out_z=poly("5*pz*py^2 + 5*pz*px^2 + 1.7*p"),
    ),
    UnitKind.REPETITION_X: UnitErrorModel(
        rejection=poly("2*pz + 2*py + 2*px*pz + 2*px*py + 2.4*p"),
        out_x=poly("2*px + 0.8*p"),
        out_y=poly("2*py*pz + 0.8*p"),
        out_z=poly("py^2 + pz^2 + 0.8*p"),
    ),
    UnitKind.REPETITION_Y: UnitErrorModel(
        rejection=poly("2*pz + 2*px + 2*py*px + 2*py*pz + 2.4*p"),
        out_x=poly("2*px*pz + 0.8*p"),
        out_y=poly("2*py + 0.8*p"),
        out_z=poly("px^2 + pz^2 + 0.8*p"),
    ),
    UnitKind.REPETITION_Z: UnitErrorModel(
        rejection=poly("2*px + 2*py + 2*px*pz + 2*py*pz + 2.4*p"),
        out_x=poly("py^2 + px^2 + 0.8*p"),
        out_y=poly("2*py*px + 0.8*p"),
        out_z=poly("2*pz + 0.8*p"),
    ),
}


@dataclass(frozen=True)
class DistillationUnit:
    """One distillation block.

    ``tiles`` are logical surface-code tiles (physical qubits when run at
    distance 1), ``duration_cycles`` counts tau(d), and ``op_layers`` is the
    physical circuit depth used when the unit runs without a surface code.
    """

    kind: UnitKind
    inputs: int
    outputs: int
    tiles: int
    duration_cycles: int
    op_layers: int
    model: UnitErrorModel

    def __post_init__(self):
        if not self.inputs > self.outputs >= 1:
            raise ValueError("a unit must consume more states than it emits")
        if self.tiles < self.outputs or self.duration_cycles < 1:
            raise ValueError("invalid unit footprint")

    @property
    def name(self) -> str:
        return self.kind.value


def _repetition(kind: UnitKind) -> DistillationUnit:
    # bilateral CNOT layer + measurement layer
    return DistillationUnit(kind, inputs=2, outputs=1, tiles=2,
                            duration_cycles=2, op_layers=2,
                            model=TABLE_MODELS[kind])


# Physical 5Q depth: 4 CNOT layers of the syndrome circuit, basis changes, measure.
UNITS: dict[UnitKind, DistillationUnit] = {
    UnitKind.FIVE_QUBIT_PERFECT: DistillationUnit(
        UnitKind.FIVE_QUBIT_PERFECT, inputs=5, outputs=1, tiles=15,
        duration_cycles=3, op_layers=7,
        model=TABLE_MODELS[UnitKind.FIVE_QUBIT_PERFECT]),
    UnitKind.REPETITION_X: _repetition(UnitKind.REPETITION_X),
    UnitKind.REPETITION_Y: _repetition(UnitKind.REPETITION_Y),
    UnitKind.REPETITION_Z: _repetition(UnitKind.REPETITION_Z),
}


def evaluate_unit(unit: DistillationUnit, in_rates: PauliErrorRates, p: float,
                  renormalize: bool = False
                  ) -> tuple[float, PauliErrorRates]:
    """Acceptance probability and output Pauli rates for one run of ``unit``.

    ``p`` is the Clifford error rate of the operations executing the unit
    (the physical rate at distance 1, the logical rate otherwise). With
    ``renormalize`` the outputs are conditioned on acceptance.
    """
    if not 0 <= p < 0.1:
        raise InvalidRegimeError(f"Clifford error p={p} outside [0, 0.1)")
    args = (*in_rates.as_tuple(), p)
    m = unit.model
    rejection = m.rejection(*args)
    if not 0 <= rejection < 1:
        raise InvalidRegimeError(
            f"{unit.name}: rejection probability {rejection:.4g} not in [0, 1)")
    accept = 1.0 - rejection
    out = [m.out_x(*args), m.out_y(*args), m.out_z(*args)]
    if min(out) < 0:
        raise InvalidRegimeError(f"{unit.name}: negative output error {out}")
    if renormalize:
        out = [o / accept for o in out]
    if sum(out) > 1:
        raise InvalidRegimeError(f"{unit.name}: output error {sum(out):.4g} exceeds 1")
    return accept, PauliErrorRates(*out)
