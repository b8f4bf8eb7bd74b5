"""Built-in benchmark applications, hardware presets and config loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .distillation.units import PauliErrorRates
from .estimator import DEFAULT_EPS_TOTAL, ApplicationProfile, HardwareModel
from .magic_state import DEFAULT_INJECTION_FACTOR, DEFAULT_UNITS, unit_with
from .surface_code import DEFAULT_CYCLE_FACTOR, PhysicalQubitModel

# (key, display name, data qubits, T count)
_APPLICATIONS = (
    ("ising", "Ising 10x10", 100, 9.54e5),
    ("fermi-hubbard", "Fermi-Hubbard 10x10", 241, 7.93e8),
    ("heisenberg", "Heisenberg 10x10", 123, 2.55e10),
    ("zns", "ZnS QPE", 351, 6.12e10),
    ("benzene", "Benzene QPE", 504, 2.86e11),
    ("ruthenium", "Ruthenium QPE", 1318, 2.70e11),
    ("nitrogenase", "Nitrogenase QPE", 1424, 8.63e12),
    ("rsa-2048", "RSA-2048", 12581, 1.50e10),
)

_ALIASES = {"fh": "fermi-hubbard", "rsa": "rsa-2048", "factoring": "rsa-2048",
            "ru": "ruthenium"}

FAST_T_OP = 50e-9
SLOW_T_OP = 100e-6
BELL_ERRORS = {"5%": 0.05, "1%": 0.01, "0.1%": 0.001}
ETA_RANGE = (300.0, 2e8)
NODE_SIZES = (3000, 5000, 15000, 25000, 45000, 60000, 100000)
TABLE4_ETA = 10e6
TABLE4_NODE_SIZE = 45000
DEFAULT_BELL_ERROR = 0.05


class NotFoundError(KeyError):
    pass


class ConfigError(ValueError):
    pass


def builtin_applications(eps_total: float = DEFAULT_EPS_TOTAL
                         ) -> list[ApplicationProfile]:
    return [ApplicationProfile(name, q, t, eps_total)
            for _, name, q, t in _APPLICATIONS]


def application_keys() -> list[str]:
    return [k for k, *_ in _APPLICATIONS]


def lookup(name: str, eps_total: float = DEFAULT_EPS_TOTAL) -> ApplicationProfile:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    for k, display, q, t in _APPLICATIONS:
        if key in (k, display.lower()):
            return ApplicationProfile(display, q, t, eps_total)
    raise NotFoundError(f"unknown application {name!r}")


@dataclass(frozen=True)
class Preset:
    name: str
    t_op: float
    p: float

    def hardware(self, bell_error: float = DEFAULT_BELL_ERROR,
                 eta: float = TABLE4_ETA, node_size: int = TABLE4_NODE_SIZE,
                 **kw) -> HardwareModel:
        return HardwareModel(PhysicalQubitModel(self.t_op, self.p),
                             PauliErrorRates.depolarizing(bell_error), eta,
                             node_size, **kw)


_PRESETS = (
    Preset("fast-optimistic", FAST_T_OP, 1e-4),
    Preset("fast-pessimistic", FAST_T_OP, 1e-3),
    Preset("slow-optimistic", SLOW_T_OP, 1e-4),
    Preset("slow-pessimistic", SLOW_T_OP, 1e-3),
)


def builtin_hardware() -> list[Preset]:
    return list(_PRESETS)


def preset(name: str) -> Preset:
    for pr in _PRESETS:
        if pr.name == name:
            return pr
    raise NotFoundError(f"unknown preset {name!r}")


# ---------------------------------------------------------------- config files

_HW_KEYS = {"preset", "t_op", "p", "bell_error", "bell_rates", "eta", "node_size",
            "cycle_factor", "injection_factor", "msdf_units"}
_APP_KEYS = {"name", "q_d", "t_count", "eps_total"}
_TOP_KEYS = {"application", "hardware", "budget_weights", "mode"}
_UNIT_KEYS = {"tiles", "duration_cycles", "coeff", "power", "floor"}


def _reject_unknown(doc: dict, allowed: set, where: str) -> None:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where} must be an object")
    extra = sorted(set(doc) - allowed)
    if extra:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(extra)}")


def hardware_from_dict(doc: dict) -> HardwareModel:
    _reject_unknown(doc, _HW_KEYS, "hardware")
    base = preset(doc.get("preset", "fast-optimistic"))
    try:
        t_op = float(doc.get("t_op", base.t_op))
        p = float(doc.get("p", base.p))
        if "bell_rates" in doc:
            rates = PauliErrorRates(*map(float, doc["bell_rates"]))
        else:
            rates = PauliErrorRates.depolarizing(
                float(doc.get("bell_error", DEFAULT_BELL_ERROR)))
        units = DEFAULT_UNITS
        if "msdf_units" in doc:
            over = doc["msdf_units"]
            _reject_unknown(over, {u.name for u in DEFAULT_UNITS}, "msdf_units")
            units = []
            for u in DEFAULT_UNITS:
                ch = over.get(u.name, {})
                _reject_unknown(ch, _UNIT_KEYS, f"msdf_units.{u.name}")
                units.append(unit_with(u, **ch) if ch else u)
            units = tuple(units)
        return HardwareModel(
            PhysicalQubitModel(t_op, p), rates,
            float(doc.get("eta", TABLE4_ETA)),
            int(doc.get("node_size", TABLE4_NODE_SIZE)),
            float(doc.get("cycle_factor", DEFAULT_CYCLE_FACTOR)),
            float(doc.get("injection_factor", DEFAULT_INJECTION_FACTOR)),
            units)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad hardware value: {exc}") from exc


def application_from_dict(doc: dict | str) -> ApplicationProfile:
    if isinstance(doc, str):
        return lookup(doc)
    _reject_unknown(doc, _APP_KEYS, "application")
    eps = float(doc.get("eps_total", DEFAULT_EPS_TOTAL))
    if "q_d" not in doc and "name" in doc:
        base = lookup(doc["name"], eps)
        return base
    try:
        return ApplicationProfile(str(doc.get("name", "custom")), int(doc["q_d"]),
                                  float(doc["t_count"]), eps)
    except KeyError as exc:
        raise ConfigError(f"application needs {exc.args[0]}") from exc
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path) -> dict:
    """Parse a JSON run config; unknown keys are errors."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    _reject_unknown(doc, _TOP_KEYS, "config")
    out: dict = {}
    if "application" in doc:
        out["application"] = application_from_dict(doc["application"])
    if "hardware" in doc:
        out["hardware"] = hardware_from_dict(doc["hardware"])
    if "budget_weights" in doc:
        w = doc["budget_weights"]
        if not (isinstance(w, list) and len(w) == 3):
            raise ConfigError("budget_weights must be a list of three numbers")
        out["budget_weights"] = tuple(float(x) for x in w)
    if "mode" in doc:
        if doc["mode"] not in ("strict", "refined"):
            raise ConfigError(f"unknown mode {doc['mode']!r}")
        out["mode"] = doc["mode"]
    return out
