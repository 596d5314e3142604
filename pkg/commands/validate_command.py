# commands/validate_command.py

import logging

from commands.report import RunReport, input_kind, read_input
from diagram import face_size_histogram, parse_diagram, trace_faces, validate_diagram
from errors import ValidationError
from fan import base_diagram, parse_fan

logger = logging.getLogger(__name__)


def run(args) -> RunReport:
    report = RunReport(f"validate {args.path}")
    text = read_input(args.path, report)
    kind = input_kind(text)
    report.results['kind'] = kind

    if kind == 'fan':
        fan = parse_fan(text)
        report.results['name'] = fan.name
        report.results['seam'] = fan.seam
        report.results['curves'] = len(fan.curve_ids)
        report.results['crossings'] = len(fan.crossings)
        report.results['generators'] = list(fan.generators)
        report.results['relations'] = len(fan.relations)
        diagram = base_diagram(fan)
    else:
        diagram = parse_diagram(text)
        report.results['name'] = diagram.name

    validation = validate_diagram(diagram)
    report.results['counts'] = dict(validation.counts)
    report.results['accepted'] = validation.accepted
    if validation.accepted:
        report.results['face_sizes'] = face_size_histogram(trace_faces(diagram))
    else:
        report.results['failed_checks'] = validation.failed_checks()
        report.results['failures'] = validation.failure_messages()
        report.results['skipped'] = list(validation.skipped)
        report.status = ValidationError.exit_code
        logger.warning(f"'{args.path}' rejected: {', '.join(validation.failed_checks())}")
    return report


def setup(subparsers):
    parser = subparsers.add_parser('validate', help="Parse a fan or diagram file and run every validation")
    parser.add_argument('path', help="Fan (.fan) or diagram (.diagram) file")
    parser.set_defaults(handler=run)
