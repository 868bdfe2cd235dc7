import argparse
import sys
from pathlib import Path

from app.cli.options import add_windowing_arguments, validated
from app.core.exceptions import UsageException
from app.core.factory import Factory
from app.schemas.requests.windowing import WindowingPolicy


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "characterize", help="node count, edge count and maximum degree of a network"
    )
    add_windowing_arguments(parser, required=False)
    parser.add_argument("--edges", type=Path, help="edge list `u,v[,weight]`")
    parser.set_defaults(handler=characterize)


def characterize(args: argparse.Namespace) -> None:
    factory = Factory()
    tempgraph_controller = factory.get_tempgraph_controller()

    if (args.edges is None) == (args.input is None):
        raise UsageException("pass exactly one of --edges or --input")
    if args.edges is not None:
        graph = tempgraph_controller.load(args.edges)
    else:
        if args.window_length is None:
            raise UsageException("--input needs --window-length")
        policy = validated(
            WindowingPolicy,
            {
                "window_length": args.window_length,
                "origin": args.origin if args.origin is not None else 0,
                "horizon": args.horizon,
            },
        )
        ingest_controller = factory.get_ingest_controller()
        parsed = ingest_controller.read_events(args.input)
        graph = tempgraph_controller.aggregate(
            ingest_controller.build_windows(parsed.events, policy)
        )

    summary = tempgraph_controller.characterize(graph)
    sys.stdout.write(summary.model_dump_json(indent=2) + "\n")
