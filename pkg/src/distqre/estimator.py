"""End-to-end estimator: budget split, factory choice, gadget period, code
distance, node count and the Pareto search over factory configurations."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .distillation.factory import (EmptyCatalogError, MultiLevelFactory,
                                   build_catalog)
from .distillation.units import PauliErrorRates
from .isa_model import gadget_resources, layout
from .magic_state import (DEFAULT_INJECTION_FACTOR, DEFAULT_UNITS,
                          EmptyMsdfCatalogError, MsdfFactory, MsdfUnit,
                          msdf_catalog)
from .surface_code import (D_MAX, DEFAULT_CYCLE_FACTOR, PhysicalQubitModel,
                           logical_error_rate, min_distance,
                           physical_qubits_per_tile)

MODES = ("strict", "refined")
MIN_NODE_SIZE = 1000
DEFAULT_EPS_TOTAL = 0.01


class InfeasibleError(ValueError):
    """No configuration satisfies the error budget and node capacity."""


class NodeOverflowError(InfeasibleError):
    """Networking factories leave no room for computation in a node."""


class ConvergenceError(InfeasibleError):
    """The node-count iteration did not settle."""


@dataclass(frozen=True)
class HardwareModel:
    qubit: PhysicalQubitModel
    bell_error_raw: PauliErrorRates
    eta: float
    node_size: int
    cycle_factor: float = DEFAULT_CYCLE_FACTOR
    injection_factor: float = DEFAULT_INJECTION_FACTOR
    msdf_units: tuple[MsdfUnit, ...] = DEFAULT_UNITS

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError("eta must be non-negative")
        if self.node_size < 1:
            raise ValueError("node_size must be positive")
        if self.cycle_factor <= 0:
            raise ValueError("cycle_factor must be positive")

    @property
    def t_op(self) -> float:
        return self.qubit.t_op

    @property
    def p(self) -> float:
        return self.qubit.p

    def tau(self, d: int) -> float:
        return self.cycle_factor * d * self.qubit.t_op

    def with_(self, **changes) -> "HardwareModel":
        return replace(self, **changes)


@dataclass(frozen=True)
class ErrorBudget:
    eps_total: float
    eps_L: float
    eps_M: float
    eps_E: float


def split_budget(eps_total: float,
                 weights: Sequence[float] = (1.0, 1.0, 1.0)) -> ErrorBudget:
    """Split ``eps_total`` among logical, magic-state and Bell-state errors."""
    if not 0 < eps_total < 1:
        raise ValueError("eps_total must lie in (0, 1)")
    w = [float(x) for x in weights]
    if len(w) != 3 or min(w) < 0 or sum(w) <= 0 or w[0] <= 0 or w[1] <= 0:
        raise ValueError(f"bad budget weights {weights}")
    s = sum(w)
    return ErrorBudget(eps_total, eps_total * w[0] / s, eps_total * w[1] / s,
                       eps_total * w[2] / s)


@dataclass(frozen=True)
class ApplicationProfile:
    name: str
    q_d: int
    t_count: float
    eps_total: float = DEFAULT_EPS_TOTAL

    def __post_init__(self):
        if self.q_d < 1 or self.t_count < 1:
            raise ValueError(f"{self.name}: need Q_D >= 1 and T_count >= 1")
        if not 0 < self.eps_total < 1:
            raise ValueError(f"{self.name}: eps_total must lie in (0, 1)")

    @property
    def tiles(self) -> int:
        return layout(self.q_d).tiles


@dataclass(frozen=True)
class EstimateConfig:
    """Factory choice. ``edf=None`` means no network (one node)."""

    msdf: MsdfFactory
    n_m: int
    edf: MultiLevelFactory | None = None
    n_e: int = 0
    d: int | None = None
    n_nodes: int | None = None

    def __post_init__(self):
        if self.n_m < 1:
            raise ValueError("need at least one MSDF")
        if self.edf is not None and self.n_e < 1:
            raise ValueError("need at least one EDF per link")

    def to_dict(self) -> dict:
        return {"msdf": self.msdf.to_dict(), "n_m": self.n_m,
                "edf": self.edf.to_dict() if self.edf is not None else None,
                "n_e": self.n_e}


@dataclass(frozen=True)
class EstimateResult:
    app: str
    nodes: int
    total_physical_qubits: int
    runtime: float
    distance: int
    t_gadget: float
    qubits_edf: int
    qubits_msdf: int
    qubits_data: int
    monolithic: bool
    mode: str
    config: EstimateConfig = field(repr=False)

    @property
    def spacetime_volume(self) -> float:
        return self.total_physical_qubits * self.runtime

    # Fractions are shares of the provisioned qubits. Provisioned but
    # unused qubits sit in the local (compute) region of their node.
    @property
    def qubits_idle(self) -> int:
        return (self.total_physical_qubits - self.qubits_edf - self.qubits_msdf
                - self.qubits_data)

    @property
    def frac_edf(self) -> float:
        return self.qubits_edf / self.total_physical_qubits

    @property
    def frac_msdf(self) -> float:
        return self.qubits_msdf / self.total_physical_qubits

    @property
    def frac_data(self) -> float:
        return 1.0 - self.frac_edf - self.frac_msdf

    @property
    def msdf_share_local(self) -> float:
        """MSDF share of the non-networking qubits."""
        return self.qubits_msdf / (self.total_physical_qubits - self.qubits_edf)

    def to_dict(self) -> dict:
        return {
            "app": self.app, "monolithic": self.monolithic, "mode": self.mode,
            "nodes": self.nodes, "qubits_total": self.total_physical_qubits,
            "runtime_s": self.runtime, "distance": self.distance,
            "t_gadget_s": self.t_gadget, "frac_edf": self.frac_edf,
            "frac_msdf": self.frac_msdf, "frac_data": self.frac_data,
            "msdf_share_local": self.msdf_share_local,
            "volume": self.spacetime_volume,
            "qubits_edf": self.qubits_edf, "qubits_msdf": self.qubits_msdf,
            "qubits_data": self.qubits_data, "qubits_idle": self.qubits_idle,
            "config": self.config.to_dict(),
        }


def overhead(dist: EstimateResult, mono: EstimateResult) -> float:
    return dist.spacetime_volume / mono.spacetime_volume


# ---------------------------------------------------------------- formulas

def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown eta-term mode {mode!r}")


def bell_term(edf: MultiLevelFactory, n_e: int, eta: float, n_nodes: int,
              mode: str = "strict") -> float:
    """Raw-pair supply limit on the gadget period."""
    _check_mode(mode)
    if n_nodes <= 1:
        return 0.0
    if eta <= 0:
        return math.inf
    if mode == "strict":
        return n_e * edf.raw_inputs / eta
    return (n_nodes - 1) * edf.raw_inputs / (edf.outputs * eta)


def gadget_period(d: int, hw: HardwareModel, msdf: MsdfFactory, n_m: int,
                  edf: MultiLevelFactory | None = None, n_e: int = 0,
                  n_nodes: int = 2, mode: str = "strict") -> float:
    """Seconds between Pauli gadgets: the slowest of the surface-code cycle,
    T-state supply, Bell-state supply and raw-pair generation."""
    terms = [hw.tau(d), msdf.time_steps * hw.t_op / (n_m * msdf.outputs)]
    if edf is not None and n_nodes > 1:
        terms.append(edf.time_steps * hw.t_op / (n_e * edf.outputs))
        terms.append(bell_term(edf, n_e, hw.eta, n_nodes, mode))
    return max(terms)


def distance_bound_ok(d: int, eps_L: float, q_l: int, t_count: float,
                      p: float, t_gadget: float, tau: float) -> bool:
    return logical_error_rate(d, p) * q_l * t_count * (t_gadget / tau) <= eps_L


def required_distance(eps_L: float, q_l: int, t_count: float, hw: HardwareModel,
                      period: Callable[[int], float], d_max: int = D_MAX) -> int:
    """Smallest odd d with eps(d) <= eps_L / (Q_L T_count T_gadget(d)/tau(d)).

    Starts at the distance that ignores the T_gadget/tau ratio; the ratio
    only shrinks as d grows, so scanning upward from there reaches the
    smallest self-consistent distance.
    """
    d = min_distance(hw.p, eps_L / (q_l * t_count), d_max)
    while d <= d_max:
        if distance_bound_ok(d, eps_L, q_l, t_count, hw.p, period(d), hw.tau(d)):
            return d
        d += 2
    raise InfeasibleError(f"no distance <= {d_max} meets the logical budget")


def node_count(q_l: int, d: int, msdf: MsdfFactory, n_m: int,
               edf: MultiLevelFactory | None, n_e: int, q_node: int) -> int:
    q_loc = q_node - 2 * (edf.qubits * n_e if edf is not None else 0)
    if q_loc <= 0:
        raise NodeOverflowError(
            f"EDFs need {q_node - q_loc} qubits but a node has {q_node}")
    need = physical_qubits_per_tile(d) * q_l + msdf.qubits * n_m
    return max(1, -(-need // q_loc))


def feasible_factories(app: ApplicationProfile, budget: ErrorBudget, n_nodes: int,
                       edfs: Sequence[MultiLevelFactory],
                       msdfs: Sequence[MsdfFactory]
                       ) -> tuple[list[MultiLevelFactory], list[MsdfFactory]]:
    """Factories whose per-state error fits the budget at ``n_nodes``."""
    ms = [m for m in msdfs if app.t_count * m.output_error <= budget.eps_M]
    if not ms:
        raise InfeasibleError(f"{app.name}: no MSDF meets eps_M={budget.eps_M:g}")
    if n_nodes <= 1:
        return [], ms
    bells = gadget_resources(n_nodes).bell_states
    es = [e for e in edfs if app.t_count * bells * e.output_error <= budget.eps_E]
    if not es:
        raise InfeasibleError(
            f"{app.name}: no EDF meets eps_E={budget.eps_E:g} at {n_nodes} nodes")
    return es, ms


def _check_errors(app, budget, cfg: EstimateConfig, n: int) -> None:
    feasible_factories(app, budget, n,
                       [cfg.edf] if cfg.edf is not None else [], [cfg.msdf])


def estimate(app: ApplicationProfile, hw: HardwareModel, config: EstimateConfig,
             budget: ErrorBudget | None = None, mode: str = "strict",
             monolithic: bool = False, max_iter: int = 10) -> EstimateResult:
    """Resources for one factory configuration.

    Monolithic runs count exactly the qubits used. Otherwise whole nodes are
    provisioned; a config without an EDF must fit in one node.
    """
    _check_mode(mode)
    budget = budget or split_budget(app.eps_total)
    q_l = app.tiles
    cfg = config
    if monolithic or cfg.edf is None:
        period = functools.partial(gadget_period, hw=hw, msdf=cfg.msdf, n_m=cfg.n_m)
        d = cfg.d or required_distance(budget.eps_L, q_l, app.t_count, hw, period)
        _check_errors(app, budget, replace(cfg, edf=None), 1)
        data = physical_qubits_per_tile(d) * q_l
        msdf_q = cfg.msdf.qubits * cfg.n_m
        if monolithic:
            total = data + msdf_q
        else:
            if data + msdf_q > hw.node_size:
                raise NodeOverflowError(
                    f"{data + msdf_q} qubits do not fit one node of {hw.node_size}")
            total = hw.node_size
        tg = period(d)
        return EstimateResult(app.name, 1, total, tg * app.t_count, d, tg,
                              0, msdf_q, data, monolithic, mode,
                              replace(cfg, edf=None, n_e=0, d=d, n_nodes=1))

    if hw.node_size < MIN_NODE_SIZE:
        raise NodeOverflowError(f"node size {hw.node_size} below {MIN_NODE_SIZE}")
    n = cfg.n_nodes or 2
    seen = []
    for _ in range(max_iter):
        def period(x, n=n):
            return gadget_period(x, hw, cfg.msdf, cfg.n_m, cfg.edf, cfg.n_e, n, mode)
        d = cfg.d or required_distance(budget.eps_L, q_l, app.t_count, hw, period)
        n_new = max(2, node_count(q_l, d, cfg.msdf, cfg.n_m, cfg.edf, cfg.n_e,
                                  hw.node_size))
        if n_new == n or cfg.n_nodes is not None:
            break
        if n_new in seen:
            raise ConvergenceError(f"node count oscillates: {seen + [n_new]}")
        seen.append(n)
        n = n_new
    else:
        raise ConvergenceError(f"node count did not settle within {max_iter} rounds")
    _check_errors(app, budget, cfg, n)
    tg = period(d)
    data = physical_qubits_per_tile(d) * q_l
    return EstimateResult(app.name, n, n * hw.node_size, tg * app.t_count, d, tg,
                          2 * cfg.edf.qubits * cfg.n_e * n,
                          cfg.msdf.qubits * cfg.n_m, data, False, mode,
                          replace(cfg, d=d, n_nodes=n))


# ---------------------------------------------------------------- catalogs

def _decade_floor(x: float) -> float:
    return 10.0 ** math.floor(math.log10(x) + 1e-9)


def _decade_ceil(x: float) -> float:
    return 10.0 ** math.ceil(math.log10(x) - 1e-9)


@functools.lru_cache(maxsize=64)
def _edf_catalog(raw: tuple[float, float, float], p: float, target: float,
                 loosest: float, c: float) -> tuple[MultiLevelFactory, ...]:
    try:
        cat = build_catalog(PauliErrorRates(*raw), p, target, c, loosest=loosest)
    except EmptyCatalogError:
        return ()
    return cat.entries


@functools.lru_cache(maxsize=64)
def _msdf_catalog(p: float, target: float, c: float, injection: float,
                  units: tuple[MsdfUnit, ...]) -> tuple[MsdfFactory, ...]:
    return msdf_catalog(p, target, c, injection, units)


def msdf_options(app: ApplicationProfile, hw: HardwareModel,
                 budget: ErrorBudget) -> tuple[MsdfFactory, ...]:
    target = _decade_floor(budget.eps_M / app.t_count)
    try:
        return _msdf_catalog(hw.p, target, hw.cycle_factor, hw.injection_factor,
                             tuple(hw.msdf_units))
    except EmptyMsdfCatalogError as exc:
        raise InfeasibleError(str(exc)) from exc


def edf_options(app: ApplicationProfile, hw: HardwareModel, budget: ErrorBudget,
                n_max: int) -> tuple[MultiLevelFactory, ...]:
    """EDF catalog covering every node count from 2 up to ``n_max``."""
    if budget.eps_E <= 0:
        return ()
    target = _decade_floor(budget.eps_E / (app.t_count * max(1, n_max - 1)))
    loosest = _decade_ceil(budget.eps_E / app.t_count)
    return _edf_catalog(hw.bell_error_raw.as_tuple(), hw.p, target, loosest,
                        hw.cycle_factor)


def count_grid(limit: int, dense: int = 16, growth: float = 1.15) -> list[int]:
    """1..dense then geometrically thinned up to ``limit`` (inclusive)."""
    limit = max(1, int(limit))
    out = list(range(1, min(dense, limit) + 1))
    x = float(dense)
    while out[-1] < limit:
        x *= growth
        out.append(min(limit, max(out[-1] + 1, int(round(x)))))
    return out


# ---------------------------------------------------------------- search

@dataclass(frozen=True)
class SearchResult:
    frontier: tuple[EstimateResult, ...]
    representative: EstimateResult

    def to_dict(self) -> dict:
        return {"representative": self.representative.to_dict(),
                "frontier": [r.to_dict() for r in self.frontier]}


def _pareto_2d(q: np.ndarray, t: np.ndarray, order: np.ndarray) -> np.ndarray:
    """Indices (into q/t) on the (q, t) minimisation frontier; ``order`` is
    a canonical sort used to break exact ties."""
    idx = order[np.lexsort((np.arange(len(order)), t[order], q[order]))]
    best = np.inf
    keep = []
    for i in idx:
        if t[i] < best:
            keep.append(i)
            best = t[i]
    return np.asarray(keep, dtype=int)


def _pareto_nd(cols: Sequence[np.ndarray]) -> np.ndarray:
    from .chain import pareto_mask
    pts = np.column_stack(cols)
    return np.flatnonzero(pareto_mask(pts))


def _distances(hw: HardwareModel, eps_L: float, q_l: int, t_count: float,
               span: int = 24) -> np.ndarray:
    d_lo = min_distance(hw.p, eps_L / (q_l * t_count))
    return np.arange(d_lo, min(D_MAX, d_lo + 2 * span) + 1, 2)


def _scan_distance(ds: np.ndarray, other: np.ndarray, hw: HardwareModel,
                   eps_L: float, q_l: int, t_count: float
                   ) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised required_distance for many 'other-term' maxima.

    Returns (d, T_gadget); d = 0 marks no feasible distance.
    """
    tau = hw.cycle_factor * ds * hw.t_op
    eps = np.array([logical_error_rate(int(d), hw.p) for d in ds])
    tg = np.maximum(tau[None, :], other[:, None])
    ok = eps[None, :] * q_l * t_count * (tg / tau[None, :]) <= eps_L
    first = np.argmax(ok, axis=1)
    has = ok[np.arange(len(other)), first]
    d = np.where(has, ds[first], 0)
    return d, np.where(has, tg[np.arange(len(other)), first], np.inf)


def _msdf_combos(msdfs, hw, d_lo, cap_qubits=None):
    tau_lo = hw.tau(int(d_lo))
    rows = []
    for j, m in enumerate(msdfs):
        period1 = m.time_steps * hw.t_op / m.outputs
        limit = max(1, math.ceil(period1 / tau_lo))
        if cap_qubits is not None:
            limit = min(limit, max(1, cap_qubits // max(1, m.qubits)))
        for k in count_grid(limit):
            rows.append((j, k, m.qubits * k, period1 / k))
    a = np.array(rows, dtype=float)
    keep = _pareto_nd([a[:, 2], a[:, 3]])
    return a[keep]


def _select(candidates: list[EstimateResult]) -> SearchResult:
    if not candidates:
        raise InfeasibleError("no configuration fits")
    q = np.array([r.total_physical_qubits for r in candidates], dtype=float)
    t = np.array([r.runtime for r in candidates])
    keep = _pareto_2d(q, t, np.arange(len(candidates)))
    front = tuple(candidates[i] for i in keep)
    rep = min(front, key=lambda r: (r.spacetime_volume, r.nodes, r.runtime))
    return SearchResult(front, rep)


def search_monolithic(app: ApplicationProfile, hw: HardwareModel,
                      budget: ErrorBudget | None = None) -> SearchResult:
    budget = budget or split_budget(app.eps_total)
    q_l = app.tiles
    msdfs = msdf_options(app, hw, budget)
    ds = _distances(hw, budget.eps_L, q_l, app.t_count)
    combos = _msdf_combos(msdfs, hw, ds[0])
    d, tg = _scan_distance(ds, combos[:, 3], hw, budget.eps_L, q_l, app.t_count)
    ok = d > 0
    combos, d, tg = combos[ok], d[ok], tg[ok]
    if not len(combos):
        raise InfeasibleError(f"{app.name}: no distance meets the logical budget")
    qubits = (2 * d * d - 1) * q_l + combos[:, 2]
    runtime = tg * app.t_count
    keep = _pareto_2d(qubits, runtime, np.arange(len(qubits)))
    results = []
    for i in keep:
        cfg = EstimateConfig(msdfs[int(combos[i, 0])], int(combos[i, 1]))
        results.append(estimate(app, hw, cfg, budget, monolithic=True))
    return _select(results)


def _node_guess(app, hw, budget) -> int:
    d = min_distance(hw.p, budget.eps_L / (app.tiles * app.t_count)) + 2
    data = physical_qubits_per_tile(d) * app.tiles
    return max(2, math.ceil(data / (0.5 * hw.node_size)))


def search_distributed(app: ApplicationProfile, hw: HardwareModel,
                       mode: str = "strict", budget: ErrorBudget | None = None,
                       include_single_node: bool = True) -> SearchResult:
    """Pareto frontier over (total qubits, runtime) for a line of nodes."""
    _check_mode(mode)
    budget = budget or split_budget(app.eps_total)
    if hw.node_size < MIN_NODE_SIZE:
        raise NodeOverflowError(f"node size {hw.node_size} below {MIN_NODE_SIZE}")
    q_l, T = app.tiles, app.t_count
    msdfs = msdf_options(app, hw, budget)
    ds = _distances(hw, budget.eps_L, q_l, T)
    mcomb = _msdf_combos(msdfs, hw, ds[0])

    candidates: list[EstimateResult] = []
    if include_single_node:
        d1, tg1 = _scan_distance(ds, mcomb[:, 3], hw, budget.eps_L, q_l, T)
        fits = (d1 > 0) & ((2 * d1 * d1 - 1) * q_l + mcomb[:, 2] <= hw.node_size)
        if fits.any():
            i = np.flatnonzero(fits)[np.argmin(tg1[fits])]
            cfg = EstimateConfig(msdfs[int(mcomb[i, 0])], int(mcomb[i, 1]))
            candidates.append(estimate(app, hw, cfg, budget, mode))

    n_hi = 2 * _node_guess(app, hw, budget)
    edfs = edf_options(app, hw, budget, n_hi)
    if edfs:
        candidates += _distributed_candidates(app, hw, mode, budget, msdfs, mcomb,
                                              edfs, ds)
    return _select(candidates)


def _edf_combos(edfs, hw, budget, app, d_lo):
    tau_lo = hw.tau(int(d_lo))
    rows = []
    for i, e in enumerate(edfs):
        if e.output_error > 0:
            cap = math.floor(budget.eps_E / (app.t_count * e.output_error)) + 1
        else:
            cap = 10 ** 9
        if cap < 2:
            continue
        period1 = e.time_steps * hw.t_op / e.outputs
        limit = max(1, math.ceil(period1 / tau_lo))
        limit = min(limit, max(1, (hw.node_size - 1) // (2 * e.qubits)) if e.qubits else limit)
        for k in count_grid(limit):
            if 2 * e.qubits * k >= hw.node_size:
                break
            unit = e.raw_inputs / (e.outputs * hw.eta) if hw.eta > 0 else np.inf
            strict = k * e.raw_inputs / hw.eta if hw.eta > 0 else np.inf
            rows.append((i, k, 2 * e.qubits * k, period1 / k, unit, strict,
                         min(cap, 10 ** 9)))
    if not rows:
        return np.empty((0, 7))
    a = np.array(rows, dtype=float)
    keep = _pareto_nd([a[:, 2], a[:, 3], a[:, 4], a[:, 5], -a[:, 6]])
    return a[keep]


def _distributed_candidates(app, hw, mode, budget, msdfs, mcomb, edfs, ds):
    q_l, T = app.tiles, app.t_count
    ecomb = _edf_combos(edfs, hw, budget, app, ds[0])
    if not len(ecomb):
        return []
    ne, nm = len(ecomb), len(mcomb)
    ei = np.repeat(np.arange(ne), nm)
    mi = np.tile(np.arange(nm), ne)
    s, pe, unit, strict, cap = (ecomb[ei, 2], ecomb[ei, 3], ecomb[ei, 4],
                                ecomb[ei, 5], ecomb[ei, 6])
    qm, pm = mcomb[mi, 2], mcomb[mi, 3]
    q_loc = hw.node_size - s
    n = np.full(len(ei), 2.0)
    alive = q_loc > 0
    for _ in range(10):
        bell = strict if mode == "strict" else (n - 1) * unit
        other = np.maximum(np.maximum(pm, pe), bell)
        d, tg = _scan_distance(ds, other, hw, budget.eps_L, q_l, T)
        need = (2.0 * d * d - 1) * q_l + qm
        n_new = np.maximum(2.0, np.ceil(need / np.where(alive, q_loc, 1.0)))
        done = n_new == n
        n = n_new
        if mode == "strict" or done[alive].all():
            break
    else:
        alive &= done
    alive &= (d > 0) & (n <= cap)
    if not alive.any():
        return []
    idx = np.flatnonzero(alive)
    qubits = n[idx] * hw.node_size
    runtime = tg[idx] * T
    keep = idx[_pareto_2d(qubits, runtime, np.arange(len(idx)))]
    out = []
    for k in keep:
        e_row, m_row = ecomb[ei[k]], mcomb[mi[k]]
        cfg = EstimateConfig(msdfs[int(m_row[0])], int(m_row[1]),
                             edfs[int(e_row[0])], int(e_row[1]))
        out.append(estimate(app, hw, cfg, budget, mode))
    return out


def search(app: ApplicationProfile, hw: HardwareModel, mode: str = "strict",
           monolithic: bool = False, budget: ErrorBudget | None = None
           ) -> SearchResult:
    if monolithic:
        return search_monolithic(app, hw, budget)
    return search_distributed(app, hw, mode, budget)
