"""Magic-state distillation factories (15-to-1 and 20-to-4) and their chains."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .chain import (SCHEDULES, DivergenceError, LevelShape, RegimeError,
                    aggregate, pareto_mask)
from .polynomial import Polynomial, poly
from .surface_code import (DEFAULT_CYCLE_FACTOR, THRESHOLD, logical_error_rate,
                           min_distance)

DEFAULT_INJECTION_FACTOR = 5.0
DEFAULT_MAX_LEVELS = 3


class EmptyMsdfCatalogError(ValueError):
    pass


@dataclass(frozen=True)
class MsdfUnit:
    """One distillation block for T states.

    ``output_error_poly`` gives the error of each output state as a
    polynomial in the input error (written ``px``) and the logical error
    rate of the level's tiles (written ``p``). ``rejection_poly`` uses the
    same variables.
    """

    name: str
    inputs: int
    outputs: int
    tiles: int
    duration_cycles: int
    output_error_poly: Polynomial
    rejection_poly: Polynomial

    def __post_init__(self):
        if not self.inputs > self.outputs >= 1:
            raise ValueError(f"{self.name}: inputs must exceed outputs")
        if self.tiles < 1 or self.duration_cycles < 1:
            raise ValueError(f"{self.name}: invalid footprint")

    def evaluate(self, p_in: float, p_logical: float) -> tuple[float, float]:
        """(acceptance probability, output error per state)."""
        rej = self.rejection_poly(p_in, 0.0, 0.0, p_logical)
        if not 0 <= rej < 1:
            raise DivergenceError(f"{self.name}: rejection {rej:.3g} not in [0, 1)")
        out = self.output_error_poly(p_in, 0.0, 0.0, p_logical)
        return 1.0 - rej, min(out, 1.0)

    def to_dict(self) -> dict:
        return {"name": self.name, "inputs": self.inputs, "outputs": self.outputs,
                "tiles": self.tiles, "duration_cycles": self.duration_cycles,
                "output_error": str(self.output_error_poly),
                "rejection": str(self.rejection_poly)}


def make_unit(name: str, inputs: int, outputs: int, tiles: int,
              duration_cycles: int, coeff: float, power: int,
              floor: float | None = None) -> MsdfUnit:
    """Build a unit with output error ``coeff * p_in^power`` plus a Clifford
    floor of ``floor * eps(d)`` per output.

    The floor defaults to the unit's tile-cycle volume shared among its
    outputs: any logical fault inside the factory may corrupt an output.
    """
    if floor is None:
        floor = tiles * duration_cycles / outputs
    out = poly(f"{coeff}*px^{power} + {floor}*p")
    rej = poly(f"{inputs}*px + {tiles * duration_cycles}*p")
    return MsdfUnit(name, inputs, outputs, tiles, duration_cycles, out, rej)


FIFTEEN_TO_ONE = make_unit("15-to-1", 15, 1, tiles=11, duration_cycles=11,
                           coeff=35, power=3)
TWENTY_TO_FOUR = make_unit("20-to-4", 20, 4, tiles=14, duration_cycles=17,
                           coeff=22, power=2)
DEFAULT_UNITS: tuple[MsdfUnit, ...] = (FIFTEEN_TO_ONE, TWENTY_TO_FOUR)


@dataclass(frozen=True)
class MsdfLevel:
    unit: MsdfUnit
    distance: int
    copies: int = 1


@dataclass(frozen=True)
class MsdfFactory:
    """Chained MSDF; ``time_steps`` is per batch of ``outputs`` T states."""

    levels: tuple[MsdfLevel, ...]
    schedule: str
    qubits: int
    time_steps: float
    raw_inputs: float
    outputs: int
    output_error: float
    input_error: float
    accept_probs: tuple[float, ...] = ()

    @property
    def chain(self) -> tuple[tuple[str, int], ...]:
        return tuple((lv.unit.name, lv.distance) for lv in self.levels)

    def key(self) -> tuple:
        return (len(self.levels), self.chain, self.schedule)

    def to_dict(self) -> dict:
        return {
            "family": "msdf",
            "schedule": self.schedule,
            "levels": [{"kind": lv.unit.name, "distance": lv.distance,
                        "copies": lv.copies} for lv in self.levels],
            "qubits": self.qubits,
            "time_steps": self.time_steps,
            "raw_inputs": self.raw_inputs,
            "outputs": self.outputs,
            "output_error": self.output_error,
        }


def compose_msdf(chain: Sequence[tuple[MsdfUnit, int]], raw_error: float,
                 p: float, c: float = DEFAULT_CYCLE_FACTOR,
                 schedule: str = "sequential",
                 check_regime: bool = True) -> MsdfFactory:
    """Chain MSDF units, each level at its own surface-code distance."""
    if not chain:
        raise ValueError("an MSDF chain needs at least one level")
    err = raw_error
    shapes, accepts = [], []
    for i, (unit, d) in enumerate(chain):
        if d < 3 or d % 2 == 0:
            raise ValueError(f"level {i}: MSDF distance {d} must be odd and >= 3")
        accept, out = unit.evaluate(err, logical_error_rate(d, p))
        if check_regime and not (out < err or out == err == 0):
            raise RegimeError(f"level {i} ({unit.name}, d={d}) does not reduce "
                              f"error: {err:.3g} -> {out:.3g}")
        shapes.append(LevelShape(unit.inputs, unit.outputs, unit.tiles,
                                 unit.duration_cycles, 0, d, accept))
        accepts.append(accept)
        err = out
    tot = aggregate(shapes, c, schedule)
    levels = tuple(MsdfLevel(u, d, k) for (u, d), k in zip(chain, tot.copies))
    return MsdfFactory(levels=levels, schedule=schedule, qubits=tot.qubits,
                       time_steps=tot.time_steps, raw_inputs=tot.raw_inputs,
                       outputs=tot.outputs, output_error=err,
                       input_error=raw_error, accept_probs=tuple(accepts))


def tstate_period(f: MsdfFactory, n_factories: int) -> float:
    """Time between T states delivered by ``n_factories`` copies of ``f``
    (same unit as ``f.time_steps``)."""
    if n_factories < 1:
        raise ValueError("need at least one factory")
    return f.time_steps / (n_factories * f.outputs)


def _distances(p: float, target: float, d_cap: int = 99) -> tuple[int, ...]:
    if p <= 0:
        return (3,)
    if p >= THRESHOLD:
        return tuple(range(3, 14, 2))
    try:
        d_hi = min_distance(p, target / 1000)
    except ValueError:
        d_hi = d_cap
    return tuple(range(3, max(d_hi, 5) + 1, 2))


def msdf_catalog(p: float, target_error: float, c: float = DEFAULT_CYCLE_FACTOR,
                 injection_factor: float = DEFAULT_INJECTION_FACTOR,
                 units: Iterable[MsdfUnit] = DEFAULT_UNITS,
                 max_levels: int = DEFAULT_MAX_LEVELS,
                 schedules: Sequence[str] = SCHEDULES,
                 window: int = 2) -> tuple[MsdfFactory, ...]:
    """Pareto set over (qubits, time per state, output error) of chains
    reaching ``target_error``.

    Raw T states carry ``injection_factor * p`` error. For each prefix and
    unit, the ``window`` smallest distances whose Clifford floor stays
    within 2x of the noiseless output are tried, never decreasing along the
    chain.
    """
    if target_error <= 0:
        raise ValueError("target error must be positive")
    units = tuple(units)
    raw = min(injection_factor * p, 0.5)
    dists = _distances(p, target_error)
    found: list[tuple[tuple[MsdfUnit, int], ...]] = []
    frontier: list[tuple[tuple[tuple[MsdfUnit, int], ...], float, int]] = [((), raw, 3)]
    for _ in range(max_levels):
        nxt = []
        for chain, err, d_last in frontier:
            for unit in units:
                ideal = unit.evaluate(err, 0.0)[1] if err < 1 / unit.inputs else None
                if ideal is None:
                    continue
                tried = 0
                for d in dists:
                    if d < d_last or tried >= window:
                        continue
                    try:
                        _, out = unit.evaluate(err, logical_error_rate(d, p))
                    except DivergenceError:
                        continue
                    if not (out < err or out == err == 0):
                        continue
                    if out > 2 * ideal and d != dists[-1]:
                        continue
                    tried += 1
                    new = chain + ((unit, d),)
                    if out <= target_error:
                        found.append(new)
                    else:
                        nxt.append((new, out, d))
        frontier = nxt
        if not frontier:
            break
    if not found:
        raise EmptyMsdfCatalogError(
            f"no MSDF chain of <= {max_levels} levels reaches {target_error:g} at p={p:g}")
    facts = [compose_msdf(ch, raw, p, c, s) for ch in found for s in schedules]
    facts.sort(key=lambda f: (f.qubits, f.time_steps / f.outputs, f.output_error, f.key()))
    keep = pareto_mask([(f.qubits, f.time_steps / f.outputs, f.output_error)
                        for f in facts])
    return tuple(sorted((f for f, k in zip(facts, keep) if k), key=lambda f: f.key()))


def unit_with(unit: MsdfUnit, **changes) -> MsdfUnit:
    """Copy of ``unit`` with footprint fields or error coefficients replaced.

    ``coeff``/``power``/``floor`` rebuild the polynomials; other keys are
    dataclass fields.
    """
    shape = {k: changes.pop(k) for k in ("coeff", "power", "floor") if k in changes}
    unit = replace(unit, **changes)
    if shape or changes.keys() & {"tiles", "duration_cycles", "inputs", "outputs"}:
        lead = [(c, e) for c, e in unit.output_error_poly.terms if e[3] == 0]
        coeff = shape.get("coeff", lead[0][0])
        power = shape.get("power", lead[0][1][0])
        return make_unit(unit.name, unit.inputs, unit.outputs, unit.tiles,
                         unit.duration_cycles, coeff, int(power), shape.get("floor"))
    return unit


def catalog_to_json(entries: Sequence[MsdfFactory], indent: int | None = 2) -> str:
    return json.dumps({"family": "msdf", "entries": [f.to_dict() for f in entries]},
                      indent=indent)
