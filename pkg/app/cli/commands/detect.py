import argparse
import sys
from pathlib import Path

from app.cli.options import add_detection_arguments
from app.core.config import config
from app.core.factory import Factory
from app.schemas.requests.experiment import Algorithm
from app.utils.logger import stage_logger


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "detect", help="run one community detection algorithm on an edge list"
    )
    parser.add_argument("--edges", type=Path, required=True, help="edge list `u,v[,weight]`")
    parser.add_argument(
        "--algorithm",
        type=Algorithm,
        choices=list(Algorithm),
        required=True,
        help="detection algorithm",
    )
    parser.add_argument("--seed", type=int, help="algorithm seed")
    parser.add_argument("--out", type=Path, required=True, help="partition `node,community_id`")
    add_detection_arguments(parser)
    parser.set_defaults(handler=detect)


def detect(args: argparse.Namespace) -> None:
    """
    Detect communities on a static edge list.
    - Writes the partition to --out.
    - Prints its quality report as JSON.
    """
    factory = Factory()
    tempgraph_controller = factory.get_tempgraph_controller()
    detect_controller = factory.get_detect_controller()
    metrics_controller = factory.get_metrics_controller()

    graph = tempgraph_controller.load(args.edges)
    with stage_logger("detect", algorithm=args.algorithm.value):
        partition = detect_controller.detect(
            graph,
            args.algorithm,
            seed=args.seed if args.seed is not None else config.SEED,
            walk_length=args.walk_length or config.WALK_LENGTH,
            edge_budget=(
                args.eb_edge_budget
                if args.eb_edge_budget is not None
                else config.EB_EDGE_BUDGET
            ),
            weighted=bool(args.weighted),
        )
    detect_controller.write_partition(partition, args.out, graph)

    report = metrics_controller.quality_report(graph, partition)
    sys.stdout.write(report.model_dump_json(indent=2) + "\n")
