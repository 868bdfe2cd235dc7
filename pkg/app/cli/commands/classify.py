import argparse
import sys
from pathlib import Path

from app.cli.options import add_calibration_arguments, add_windowing_arguments, validated
from app.core.config import config
from app.core.factory import Factory
from app.schemas.requests.windowing import WindowingPolicy
from app.schemas.responses.reports import ClassificationDocument
from app.utils.logger import stage_logger


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "classify", help="calibrate thresholds once and dump every edge's class"
    )
    add_windowing_arguments(parser, required=True)
    add_calibration_arguments(parser)
    parser.add_argument(
        "--out", type=Path, required=True, help="classification dump `u,v,per,to,class`"
    )
    parser.set_defaults(handler=classify)


def classify(args: argparse.Namespace) -> None:
    """
    One classification pass over an event file.
    - Writes the `u,v,per,to,class` dump to --out.
    - Prints thresholds and class counts as JSON.
    """
    factory = Factory()
    ingest_controller = factory.get_ingest_controller()
    classify_controller = factory.get_classify_controller()

    policy = validated(
        WindowingPolicy,
        {
            "window_length": args.window_length,
            "origin": args.origin if args.origin is not None else 0,
            "horizon": args.horizon,
        },
    )
    with stage_logger("ingest", input=str(args.input)):
        parsed = ingest_controller.read_events(args.input)
        net = ingest_controller.build_windows(parsed.events, policy)

    with stage_logger("classify"):
        thresholds = classify_controller.calibrate_thresholds(
            net,
            args.p_rnd if args.p_rnd is not None else config.P_RND,
            args.seed if args.seed is not None else config.SEED,
            args.shuffles if args.shuffles is not None else config.SHUFFLES,
        )
        assessments = classify_controller.classify_edges(net, thresholds)
        classify_controller.save(assessments, args.out, net.index)

    counts = classify_controller.class_counts(assessments)
    document = ClassificationDocument(
        thresholds=thresholds,
        class_counts={label.value: count for label, count in counts.items()},
    )
    sys.stdout.write(document.model_dump_json(indent=2) + "\n")
