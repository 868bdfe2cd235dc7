import argparse
import sys
from pathlib import Path

from app.cli.options import comma_list, validated
from app.core.exceptions import UsageException
from app.core.factory import Factory
from app.schemas.requests.synth import SynthParams


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "synth", help="generate a planted-partition network with labelled noise"
    )
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument(
        "--community-sizes", type=comma_list, help="comma list of community sizes"
    )
    parser.add_argument("--windows", type=int, help="number of time windows")
    parser.add_argument("--p-intra", type=float, help="per-window social interaction probability")
    parser.add_argument("--social-density", type=float, help="fraction of social pairs")
    parser.add_argument("--noise-edges", type=int, help="random cross-community pairs")
    parser.add_argument("--noise-repeat", type=int, help="windows per noise pair")
    parser.add_argument("--seed", type=int, help="generator seed")
    parser.set_defaults(handler=synth)


def synth(args: argparse.Namespace) -> None:
    """
    Write a synthetic benchmark.
    - events.csv in the ingest format.
    - ground_truth.csv with the planted communities.
    - noise_labels.csv marking each edge social or noise.
    """
    values = {
        field: getattr(args, field)
        for field in (
            "windows",
            "p_intra",
            "social_density",
            "noise_edges",
            "noise_repeat",
            "seed",
        )
        if getattr(args, field) is not None
    }
    if args.community_sizes is not None:
        try:
            values["community_sizes"] = [int(size) for size in args.community_sizes]
        except ValueError as e:
            raise UsageException("--community-sizes takes integers", ex=e)
    params = validated(SynthParams, values)

    synth_controller = Factory().get_synth_controller()
    paths = synth_controller.write(synth_controller.generate(params), args.out)
    sys.stdout.write("".join(f"{path}\n" for path in paths))
