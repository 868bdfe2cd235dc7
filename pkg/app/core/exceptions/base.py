from __future__ import annotations

from enum import IntEnum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from app.schemas.responses.trace import FilterTrace


class ExitCode(IntEnum):
    SUCCESS = 0
    USAGE_ERROR = 1
    DATA_ERROR = 2
    NON_CONVERGENCE = 3


class AppException(Exception):
    exit_code: int
    code: str
    msg: str
    detail: str
    ex: Exception | None
    stage: str | None
    iteration: int | None

    def __init__(
        self,
        *,
        exit_code: int = ExitCode.DATA_ERROR,
        code: str = "000000",
        msg: str | None = None,
        detail: str | None = None,
        ex: Exception | None = None,
    ):
        self.exit_code = exit_code
        self.code = code
        self.msg = msg
        self.detail = detail
        self.ex = ex
        self.stage = None
        self.iteration = None
        super().__init__(detail or msg)

    def with_context(
        self, stage: str | None = None, iteration: int | None = None
    ) -> AppException:
        # innermost stage wins
        if stage is not None and self.stage is None:
            self.stage = stage
        if iteration is not None and self.iteration is None:
            self.iteration = iteration
        return self

    def describe(self) -> str:
        where = self.stage or "-"
        if self.iteration is not None:
            where = f"{where} (iteration {self.iteration})"
        return f"error[{self.code}] {where}: {self.detail or self.msg}"


class UsageException(AppException):
    def __init__(self, custom_msg: str | None = None, ex: Exception | None = None):
        default_msg = "Invalid usage"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.USAGE_ERROR,
            msg="Invalid usage",
            detail=detail_msg,
            code=f"{ExitCode.USAGE_ERROR}{'1'.zfill(4)}",
            ex=ex,
        )


class EdgeBudgetException(AppException):
    def __init__(self, edges: int, budget: int):
        super().__init__(
            exit_code=ExitCode.USAGE_ERROR,
            msg="Edge budget exceeded",
            detail=(
                f"graph has {edges} edges, above the edge betweenness budget of "
                f"{budget}; raise --eb-edge-budget or drop 'eb' from --algorithms"
            ),
            code=f"{ExitCode.USAGE_ERROR}{'2'.zfill(4)}",
        )


class DataException(AppException):
    def __init__(self, custom_msg: str | None = None, ex: Exception | None = None):
        default_msg = "Invalid data"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Invalid data",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'1'.zfill(4)}",
            ex=ex,
        )


class ParseException(AppException):
    line_number: int

    def __init__(self, line_number: int, custom_msg: str, ex: Exception | None = None):
        self.line_number = line_number
        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Malformed input",
            detail=f"line {line_number}: {custom_msg}",
            code=f"{ExitCode.DATA_ERROR}{'2'.zfill(4)}",
            ex=ex,
        )


class EdgeNotFoundException(AppException):
    def __init__(self, custom_msg: str | None = None):
        default_msg = "Edge not present"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Edge not present",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'3'.zfill(4)}",
        )


class NodeSetMismatchException(AppException):
    def __init__(self, custom_msg: str | None = None):
        default_msg = "Partitions do not cover the same node set"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Node set mismatch",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'4'.zfill(4)}",
        )


class InvalidPartitionException(AppException):
    def __init__(self, custom_msg: str | None = None):
        default_msg = "Communities overlap"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Invalid partition",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'5'.zfill(4)}",
        )


class UndefinedMetricException(AppException):
    def __init__(self, custom_msg: str | None = None):
        default_msg = "Metric undefined for this input"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Undefined metric",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'6'.zfill(4)}",
        )


class CalibrationException(AppException):
    def __init__(self, custom_msg: str | None = None):
        default_msg = "Reference networks contain no edges"
        detail_msg = f"{custom_msg}" if custom_msg else default_msg

        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Calibration failed",
            detail=detail_msg,
            code=f"{ExitCode.DATA_ERROR}{'7'.zfill(4)}",
        )


class SynthCapacityException(AppException):
    def __init__(self, requested: int, available: int):
        super().__init__(
            exit_code=ExitCode.DATA_ERROR,
            msg="Not enough cross-community pairs",
            detail=(
                f"noise_edges={requested} exceeds the {available} available "
                "cross-community pairs"
            ),
            code=f"{ExitCode.DATA_ERROR}{'8'.zfill(4)}",
        )


class ConvergenceException(AppException):
    trace: FilterTrace

    def __init__(self, max_iterations: int, trace: FilterTrace):
        self.trace = trace
        super().__init__(
            exit_code=ExitCode.NON_CONVERGENCE,
            msg="Filter did not converge",
            detail=(
                f"no fixpoint after {max_iterations} iterations; "
                f"last iteration removed {trace.iterations[-1].edges_removed} edges"
            ),
            code=f"{ExitCode.NON_CONVERGENCE}{'1'.zfill(4)}",
        )
