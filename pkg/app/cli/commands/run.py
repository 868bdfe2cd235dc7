import argparse
import sys
from pathlib import Path

from app.cli.options import (
    add_calibration_arguments,
    add_detection_arguments,
    add_windowing_arguments,
    comma_list,
    read_config_file,
    validated,
)
from app.core.factory import Factory
from app.schemas.requests.experiment import ExperimentConfig

# flag destination -> ExperimentConfig field
FLAG_FIELDS = {
    "input": "input_events",
    "window_length": "window_length",
    "origin": "origin",
    "horizon": "horizon",
    "p_rnd": "p_rnd",
    "shuffles": "shuffles",
    "seed": "seed",
    "algorithms": "algorithms",
    "ground_truth": "ground_truth",
    "out": "output_dir",
    "max_iterations": "max_iterations",
    "eb_edge_budget": "eb_edge_budget",
    "walk_length": "walk_length",
    "weighted": "weighted",
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "run",
        help="filter random relationships and compare communities before and after",
    )
    add_windowing_arguments(parser, required=False)
    add_calibration_arguments(parser)
    add_detection_arguments(parser)
    parser.add_argument(
        "--algorithms", type=comma_list, help="comma list of lp,louvain,cnm,eb,walktrap"
    )
    parser.add_argument("--ground-truth", type=Path, help="`node,community_id` file")
    parser.add_argument("--out", type=Path, help="report directory")
    parser.add_argument("--max-iterations", type=int, help="filter iteration limit")
    parser.add_argument(
        "--config", type=Path, help="JSON file of ExperimentConfig fields; flags win"
    )
    parser.set_defaults(handler=run)


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    """Environment defaults, then the config file, then explicit flags."""
    values = read_config_file(args.config) if args.config else {}
    for flag, field in FLAG_FIELDS.items():
        value = getattr(args, flag)
        if value is not None:
            values[field] = value
    return validated(ExperimentConfig, values)


def run(args: argparse.Namespace) -> None:
    """
    Run the whole experiment.
    - Filters the event network to its fixpoint.
    - Detects communities on the original, null-model, filtered and random graphs.
    - Writes every report into the output directory.
    """
    cfg = build_config(args)
    summary = Factory().get_pipeline_controller().run_pipeline(cfg)
    sys.stdout.write(summary.model_dump_json(indent=2) + "\n")
