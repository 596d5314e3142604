import argparse
import importlib
import logging
import sys
import traceback

import config  # noqa: F401 (loads .env and configures logging)
from errors import JohanssonError

COMMANDS = [
    'commands.validate_command',
    'commands.lift_command',
    'commands.pi1_command',
    'commands.enumerate_command',
    'commands.analyze_command',
    'commands.sieradski_command',
    'commands.render_command',
]


def load_commands(subparsers):
    """
    Register the sub-commands in the order they are listed.
    """
    for name in COMMANDS:
        try:
            module = importlib.import_module(name)
            module.setup(subparsers)
            logging.debug(f"Successfully loaded command: {name}")
        except Exception as e:
            logging.error(f"Failed to load command {name}: {e}")
            logging.error(traceback.format_exc())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='johansson',
        description="Johansson diagrams, branched covers of the trefoil fan and their fundamental groups.",
    )
    parser.add_argument('--format', choices=['text', 'json'], default='text', help="Report format")
    parser.add_argument('--log-level', default=None, help="Override LOG_LEVEL for this run")
    subparsers = parser.add_subparsers(dest='command', required=True)
    load_commands(subparsers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())

    try:
        report = args.handler(args)
    except JohanssonError as e:
        logging.error(f"{args.command} failed: {e.kind}: {e}")
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logging.error(f"Unexpected error in {args.command}: {e}")
        logging.error(traceback.format_exc())
        return 1

    sys.stdout.write(report.render(args.format))
    return report.status


if __name__ == '__main__':
    sys.exit(main())
