# commands/sieradski_command.py

import logging

from commands.report import RunReport, read_input, write_output
from fpgroups import match_sieradski, parse_presentation, sieradski

logger = logging.getLogger(__name__)


def run(args) -> RunReport:
    if args.match:
        report = RunReport(f"sieradski --match {args.match}")
        presentation = parse_presentation(read_input(args.match, report))
        n = match_sieradski(presentation)
        report.results['group'] = presentation.name
        report.results['match'] = n if n is not None else 'none'
        return report

    report = RunReport(f"sieradski -n {args.n}")
    presentation = sieradski(args.n)
    text = presentation.to_text()
    if args.out:
        write_output(args.out, text)
        report.results['out'] = args.out
    else:
        report.results['presentation'] = text
    return report


def setup(subparsers):
    parser = subparsers.add_parser('sieradski', help="Emit or recognise Sieradski presentations")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('-n', type=int, help="Emit the presentation with n generators")
    group.add_argument('--match', metavar='PATH', help="Report n if the presentation file is a Sieradski presentation")
    parser.add_argument('--out', help="Write the emitted presentation here")
    parser.set_defaults(handler=run)
