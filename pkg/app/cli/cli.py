import argparse

from app.cli.commands import characterize, classify, detect, run, synth

COMMANDS = [run, synth, classify, detect, characterize]


def register_commands(subparsers: argparse._SubParsersAction) -> None:
    for command in COMMANDS:
        command.register(subparsers)
