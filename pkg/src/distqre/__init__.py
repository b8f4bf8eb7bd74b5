"""Resource estimation for distributed surface-code quantum computers."""

from .catalog import builtin_applications, builtin_hardware, lookup, preset
from .distillation import PauliErrorRates, UnitKind
from .distillation.factory import compose_multilevel, search_factories
from .estimator import (ApplicationProfile, EstimateConfig, EstimateResult,
                        HardwareModel, InfeasibleError, estimate, overhead,
                        search, split_budget)
from .magic_state import compose_msdf, msdf_catalog
from .surface_code import PhysicalQubitModel, logical_error_rate, min_distance

__version__ = "0.1.0"

__all__ = [
    "ApplicationProfile", "EstimateConfig", "EstimateResult", "HardwareModel",
    "InfeasibleError", "PauliErrorRates", "PhysicalQubitModel", "UnitKind",
    "builtin_applications", "builtin_hardware", "compose_msdf",
    "compose_multilevel", "estimate", "logical_error_rate", "lookup",
    "min_distance", "msdf_catalog", "overhead", "preset", "search",
    "search_factories", "split_budget",
]
