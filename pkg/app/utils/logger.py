import json
import logging
import sys
import traceback
from contextlib import contextmanager
from datetime import datetime, timezone
from time import time
from typing import Any, Iterator

from app.core.exceptions import AppException

logger = logging.getLogger("social_filter")
logger.setLevel(logging.INFO)

TIME_FORMAT = "%Y/%m/%d %H:%M:%S"


def init_logging(level: str = "INFO") -> None:
    if not any(getattr(h, "_social_filter", False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        handler._social_filter = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    logger.setLevel(level.upper())
    logger.propagate = False


def log_event(event: str, level: int = logging.INFO, **fields: Any) -> None:
    log_dict = dict(
        event=event,
        **fields,
        datetimeUTC=datetime.now(timezone.utc).strftime(TIME_FORMAT),
    )
    logger.log(level, json.dumps(log_dict, default=str))


def _error_detail(error: BaseException) -> dict[str, Any]:
    frames = traceback.extract_tb(error.__traceback__)
    if frames:
        frame = frames[-1]
        error_func, error_file, error_line = frame.name, frame.filename, frame.lineno
    else:
        error_func = error_file = error_line = "UNKNOWN"

    return dict(
        errorFunc=error_func,
        location="{} line in {}".format(str(error_line), error_file),
        raised=str(error.__class__.__name__),
        msg=str(error),
    )


@contextmanager
def stage_logger(stage: str, **context: Any) -> Iterator[None]:
    """Time a pipeline stage and log its outcome as one JSON record.

    An ``AppException`` leaving the block is stamped with ``stage`` (and
    ``iteration`` when given in ``context``) before it propagates.
    """
    start = time()
    try:
        yield
    except AppException as error:
        error.with_context(stage=stage, iteration=context.get("iteration"))
        log_event(
            "stage",
            level=logging.ERROR,
            stage=stage,
            status="failed",
            code=error.code,
            errorDetail=_error_detail(error),
            processedTime=str(round((time() - start) * 1000, 5)) + "ms",
            **context,
        )
        raise
    except Exception as error:
        log_event(
            "stage",
            level=logging.ERROR,
            stage=stage,
            status="failed",
            errorDetail=_error_detail(error),
            processedTime=str(round((time() - start) * 1000, 5)) + "ms",
            **context,
        )
        raise
    else:
        log_event(
            "stage",
            stage=stage,
            status="ok",
            processedTime=str(round((time() - start) * 1000, 5)) + "ms",
            **context,
        )
