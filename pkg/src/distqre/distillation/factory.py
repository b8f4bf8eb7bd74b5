"""Multi-level entanglement distillation factories: composition and search."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..chain import (SCHEDULES, DivergenceError, LevelShape, RegimeError,
                     aggregate, pareto_mask)
from ..surface_code import (DEFAULT_CYCLE_FACTOR, THRESHOLD, logical_error_rate,
                            min_distance, physical_qubits_per_tile)
from .units import (UNITS, DistillationUnit, InvalidRegimeError, PauliErrorRates,
                    UnitKind, evaluate_unit)

DEFAULT_MAX_LEVELS = 5
DEFAULT_DISTANCES = tuple(range(1, 14, 2))


class EmptyCatalogError(ValueError):
    """No factory reaches the requested output error."""


def level_error_rate(d: int, p: float) -> float:
    """Clifford error rate for a level run at distance ``d`` (physical at d=1)."""
    return p if d == 1 else logical_error_rate(d, p)


@dataclass(frozen=True)
class FactoryLevel:
    unit: DistillationUnit
    distance: int
    copies: int = 1


@dataclass(frozen=True)
class MultiLevelFactory:
    """A chain of distillation units and its aggregate cost.

    ``time_steps`` is in physical operation steps per batch of ``outputs``
    states and ``raw_inputs`` counts raw Bell pairs per output state.
    """

    levels: tuple[FactoryLevel, ...]
    schedule: str
    qubits: int
    time_steps: float
    raw_inputs: float
    outputs: int
    output_rates: PauliErrorRates
    input_rates: PauliErrorRates
    accept_probs: tuple[float, ...] = ()
    physical_qubits: int = 0
    op_layers: int = 0

    @property
    def output_error(self) -> float:
        return self.output_rates.total

    @property
    def chain(self) -> tuple[tuple[UnitKind, int], ...]:
        return tuple((lv.unit.kind, lv.distance) for lv in self.levels)

    def key(self) -> tuple:
        return (len(self.levels),
                tuple((k.value, d) for k, d in self.chain), self.schedule)

    def is_repetition_only(self) -> bool:
        return all(lv.unit.kind.is_repetition for lv in self.levels)

    def nominal_inputs(self) -> int:
        n = 1
        for lv in self.levels:
            n *= lv.unit.inputs
        return n

    def to_dict(self) -> dict:
        return {
            "family": "edf",
            "schedule": self.schedule,
            "levels": [{"kind": lv.unit.kind.value, "distance": lv.distance,
                        "copies": lv.copies} for lv in self.levels],
            "qubits": self.qubits,
            "time_steps": self.time_steps,
            "raw_inputs": self.raw_inputs,
            "outputs": self.outputs,
            "output_error": self.output_error,
            "output_rates": list(self.output_rates.as_tuple()),
        }


def compose_multilevel(chain: Sequence[tuple[UnitKind, int]],
                       raw: PauliErrorRates, p: float,
                       c: float = DEFAULT_CYCLE_FACTOR,
                       schedule: str = "sequential",
                       renormalize: bool = False,
                       check_regime: bool = True) -> MultiLevelFactory:
    """Thread error rates through ``chain`` and aggregate its footprint.

    Each entry is ``(unit kind, code distance)``; distance 1 means the unit
    runs directly on physical qubits with Clifford error ``p``.
    """
    rates = raw
    shapes, accepts, units = [], [], []
    for i, (kind, d) in enumerate(chain):
        if d < 1 or d % 2 == 0:
            raise ValueError(f"level {i}: distance {d} is not odd")
        unit = UNITS[kind]
        accept, out = evaluate_unit(unit, rates, level_error_rate(d, p), renormalize)
        if accept <= 0:
            raise DivergenceError(f"level {i} ({kind.value}, d={d}) never accepts")
        if check_regime and not (out.total < rates.total
                                 or out.total == rates.total == 0):
            raise RegimeError(
                f"level {i} ({kind.value}, d={d}) does not reduce error: "
                f"{rates.total:.3g} -> {out.total:.3g}")
        shapes.append(LevelShape(unit.inputs, unit.outputs, unit.tiles,
                                 unit.duration_cycles, unit.op_layers, d, accept))
        accepts.append(accept)
        units.append(unit)
        rates = out
    totals = aggregate(shapes, c, schedule)
    levels = tuple(FactoryLevel(u, d, k) for u, (_, d), k
                   in zip(units, chain, totals.copies))
    return MultiLevelFactory(
        levels=levels, schedule=schedule, qubits=totals.qubits,
        time_steps=totals.time_steps, raw_inputs=totals.raw_inputs,
        outputs=totals.outputs, output_rates=rates, input_rates=raw,
        accept_probs=tuple(accepts), physical_qubits=totals.physical_qubits,
        op_layers=totals.op_layers)


@dataclass(frozen=True)
class FactoryCatalog:
    """Pareto-pruned factories for one (raw error, p, c) setting."""

    entries: tuple[MultiLevelFactory, ...]
    target: float
    raw: PauliErrorRates
    p: float
    c: float

    def select(self, target: float) -> list[MultiLevelFactory]:
        return [f for f in self.entries if f.output_error <= target]

    def to_dict(self) -> dict:
        return {
            "family": "edf",
            "target": self.target,
            "raw_rates": list(self.raw.as_tuple()),
            "p": self.p,
            "cycle_factor": self.c,
            "entries": [f.to_dict() for f in self.entries],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, doc: dict) -> "FactoryCatalog":
        raw = PauliErrorRates(*doc["raw_rates"])
        p, c = doc["p"], doc["cycle_factor"]
        entries = []
        for e in doc["entries"]:
            chain = [(UnitKind(lv["kind"]), lv["distance"]) for lv in e["levels"]]
            entries.append(compose_multilevel(chain, raw, p, c, e["schedule"],
                                              check_regime=False))
        return cls(tuple(entries), doc["target"], raw, p, c)

    @classmethod
    def from_json(cls, text: str) -> "FactoryCatalog":
        return cls.from_dict(json.loads(text))


def trivial_factory(raw: PauliErrorRates) -> MultiLevelFactory:
    """Zero-level pass-through: raw pairs are used as they are."""
    return MultiLevelFactory(levels=(), schedule="sequential", qubits=0,
                             time_steps=0.0, raw_inputs=1.0, outputs=1,
                             output_rates=raw, input_rates=raw)


def candidate_distances(p: float, target: float) -> tuple[int, ...]:
    """Odd distances worth trying: 1..13, extended until the logical rate
    sits comfortably below ``target``."""
    if p >= THRESHOLD or p == 0:
        return DEFAULT_DISTANCES
    try:
        d_need = min_distance(p, target / 100)
    except ValueError:
        return DEFAULT_DISTANCES
    return tuple(range(1, max(13, d_need + 2) + 1, 2))


@dataclass
class _Partial:
    chain: tuple[tuple[UnitKind, int], ...]
    rates: PauliErrorRates
    d_last: int
    phys_qubits: int
    surface_max: int
    steps: float          # sequential steps per accepted batch
    raw: float            # raw pairs per accepted batch
    outputs: int = 1
    shapes: tuple[LevelShape, ...] = ()

    def vector(self) -> tuple:
        return (*self.rates.as_tuple(), self.d_last, self.phys_qubits,
                self.surface_max, self.steps, self.raw)


def _extend(state: _Partial, unit: DistillationUnit, d: int, p: float,
            c: float) -> _Partial | None:
    try:
        accept, out = evaluate_unit(unit, state.rates, level_error_rate(d, p))
    except InvalidRegimeError:
        return None
    if accept <= 0 or not out.total < state.rates.total:
        return None
    shape = LevelShape(unit.inputs, unit.outputs, unit.tiles,
                       unit.duration_cycles, unit.op_layers, d, accept)
    batches = unit.inputs / (accept * state.outputs)
    phys, smax = state.phys_qubits, state.surface_max
    if d == 1:
        phys += unit.tiles
    else:
        smax = max(smax, shape.footprint())
    return _Partial(chain=state.chain + ((unit.kind, d),), rates=out,
                    d_last=d, phys_qubits=phys, surface_max=smax,
                    steps=shape.run_steps(c) / accept + batches * state.steps,
                    raw=batches * state.raw, outputs=unit.outputs,
                    shapes=state.shapes + (shape,))


def _prune_dominated(states: list[_Partial]) -> list[_Partial]:
    if len(states) < 2:
        return states
    states.sort(key=lambda s: (s.vector(), tuple((k.value, d) for k, d in s.chain)))
    keep = pareto_mask([s.vector() for s in states])
    return [s for s, k in zip(states, keep) if k]


def explore_chains(raw: PauliErrorRates, p: float, target: float,
                   c: float = DEFAULT_CYCLE_FACTOR,
                   max_levels: int = DEFAULT_MAX_LEVELS,
                   loosest: float | None = None,
                   **kw) -> list[tuple[tuple[UnitKind, int], ...]]:
    """Enumerate chains whose output error is at most ``loosest``.

    Chains keep non-decreasing distances, every level must lower the total
    error, and a chain stops growing once it meets ``target``. For each
    (prefix, unit) distance 1 is tried, plus the ``window`` smallest
    distances whose Clifford floor keeps the output within ``floor_slack``
    of the noiseless-Clifford output (larger distances only add cost).
    Prefixes dominated in (error components, last distance, footprint,
    time, raw inputs) by another prefix of the same depth are dropped.
    """
    return [st.chain for st in _explore(raw, p, target, c, max_levels, loosest, **kw)]


def _explore(raw: PauliErrorRates, p: float, target: float,
                   c: float = DEFAULT_CYCLE_FACTOR,
                   max_levels: int = DEFAULT_MAX_LEVELS,
                   loosest: float | None = None,
                   kinds: Iterable[UnitKind] = tuple(UnitKind),
                   distances: Sequence[int] | None = None,
                   window: int = 2,
                   floor_slack: float = 2.0) -> list[_Partial]:
    loosest = target if loosest is None else max(loosest, target)
    if distances is None:
        distances = candidate_distances(p, target)
    kinds = tuple(kinds)
    found: list[_Partial] = []
    frontier = [_Partial((), raw, 1, 0, 0, 0.0, 1.0)]
    for _ in range(max_levels):
        nxt: list[_Partial] = []
        for st in frontier:
            for kind in kinds:
                unit = UNITS[kind]
                try:
                    _, ideal = evaluate_unit(unit, st.rates, 0.0)
                except InvalidRegimeError:
                    continue
                tried = 0
                for d in distances:
                    if d < st.d_last or tried >= window:
                        continue
                    new = _extend(st, unit, d, p, c)
                    if new is None:
                        continue
                    err = new.rates.total
                    if d > 1:
                        if err > floor_slack * ideal.total:
                            continue
                        tried += 1
                    if err <= loosest:
                        found.append(new)
                    if err > target:
                        nxt.append(new)
        frontier = _prune_dominated(nxt)
        if not frontier:
            break
    return found


def build_catalog(raw: PauliErrorRates, p: float, target: float,
                  c: float = DEFAULT_CYCLE_FACTOR,
                  max_levels: int = DEFAULT_MAX_LEVELS,
                  loosest: float | None = None,
                  schedules: Sequence[str] = SCHEDULES,
                  **explore_kw) -> FactoryCatalog:
    """Pareto set over (qubits, time, raw inputs, output error)."""
    if target <= 0:
        raise ValueError("target error must be positive")
    if raw.total <= (loosest if loosest is not None else target):
        entries = (trivial_factory(raw),)
        return FactoryCatalog(entries, target, raw, p, c)
    found = _explore(raw, p, target, c, max_levels, loosest, **explore_kw)
    if not found:
        raise EmptyCatalogError(
            f"no chain of <= {max_levels} levels reaches {target:g} "
            f"from raw error {raw.total:g} at p={p:g}")
    # cheap aggregate pass first; only Pareto survivors are fully composed
    cands, pts = [], []
    for st in found:
        for sched in schedules:
            tot = aggregate(st.shapes, c, sched)
            cands.append((st.chain, sched))
            pts.append((tot.qubits, tot.time_steps, tot.raw_inputs, st.rates.total))
    order = sorted(range(len(cands)),
                   key=lambda i: (pts[i], len(cands[i][0]),
                                  tuple((k.value, d) for k, d in cands[i][0]),
                                  cands[i][1]))
    keep = pareto_mask([pts[i] for i in order])
    facts = [compose_multilevel(cands[i][0], raw, p, c, cands[i][1])
             for i, k in zip(order, keep) if k]
    facts.sort(key=lambda f: f.key())
    entries = tuple(facts)
    return FactoryCatalog(entries, target, raw, p, c)


def search_factories(raw: PauliErrorRates, p: float, target_error: float,
                     max_levels: int = DEFAULT_MAX_LEVELS,
                     c: float = DEFAULT_CYCLE_FACTOR) -> FactoryCatalog:
    """Factories reaching ``target_error``, pruned to the (Q, T, I) Pareto set."""
    cat = build_catalog(raw, p, target_error, c, max_levels)
    ok = [f for f in cat.entries if f.output_error <= target_error]
    if not ok:
        raise EmptyCatalogError(f"no factory reaches {target_error:g}")
    keep = pareto_mask([(f.qubits, f.time_steps, f.raw_inputs) for f in ok])
    return FactoryCatalog(tuple(f for f, k in zip(ok, keep) if k),
                          target_error, raw, p, c)
