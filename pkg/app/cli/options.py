import argparse
import json
from pathlib import Path
from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError

from app.core.exceptions import UsageException

SchemaType = TypeVar("SchemaType", bound=BaseModel)


def validated(schema: Type[SchemaType], values: dict[str, Any]) -> SchemaType:
    """Build ``schema`` from CLI values, reporting validation errors as usage errors."""
    try:
        return schema(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
            for error in e.errors()
        )
        raise UsageException(problems, ex=e)


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as file:
            values = json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageException(f"cannot read config file {path}: {e}", ex=e)
    if not isinstance(values, dict):
        raise UsageException(f"config file {path} must hold a JSON object")
    return values


def comma_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def add_windowing_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument(
        "--input", type=Path, required=required, help="event file `timestamp,u,v`"
    )
    parser.add_argument(
        "--window-length", type=int, required=required, help="time units per window"
    )
    parser.add_argument("--origin", type=int, help="start timestamp of window 0")
    parser.add_argument("--horizon", type=int, help="exclusive end timestamp")


def add_calibration_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p-rnd", type=float, help="significance fraction in (0, 1)")
    parser.add_argument("--shuffles", type=int, help="reference networks per calibration")
    parser.add_argument("--seed", type=int, help="root seed of every random stage")


def add_detection_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--eb-edge-budget", type=int, help="edge limit for Girvan-Newman")
    parser.add_argument("--walk-length", type=int, help="walktrap random-walk length")
    parser.add_argument(
        "--weighted",
        action="store_true",
        default=None,
        help="use window-count weights (Girvan-Newman stays unweighted)",
    )
