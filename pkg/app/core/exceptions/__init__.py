from .base import (
    AppException,
    CalibrationException,
    ConvergenceException,
    DataException,
    EdgeBudgetException,
    EdgeNotFoundException,
    ExitCode,
    InvalidPartitionException,
    NodeSetMismatchException,
    ParseException,
    SynthCapacityException,
    UndefinedMetricException,
    UsageException,
)

__all__ = [
    "AppException",
    "ExitCode",
    "UsageException",
    "EdgeBudgetException",
    "DataException",
    "ParseException",
    "EdgeNotFoundException",
    "NodeSetMismatchException",
    "InvalidPartitionException",
    "UndefinedMetricException",
    "CalibrationException",
    "SynthCapacityException",
    "ConvergenceException",
]
