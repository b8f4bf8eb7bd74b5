from .units import (
    UNITS,
    TABLE_MODELS,
    DistillationUnit,
    InvalidRegimeError,
    PauliErrorRates,
    UnitErrorModel,
    UnitKind,
    evaluate_unit,
)
from .oracle import enumerate_unit_model
