# commands/lift_command.py

import logging

from commands.report import RunReport, load_fan, write_output
from cover_lift import lift_report
from diagram import serialize_diagram
from errors import ParseError
from monodromy import rep_from_texts

logger = logging.getLogger(__name__)


def collect_assignment(args) -> dict[str, str]:
    """Permutation texts from --m/--c and repeated --assign NAME=PERM."""
    texts = {}
    if args.m is not None:
        texts['m'] = args.m
    if args.c is not None:
        texts['c'] = args.c
    for item in args.assign or []:
        name, sep, perm = item.partition('=')
        if not sep or not name:
            raise ParseError(f"--assign expects NAME=PERM, got '{item}'")
        texts[name.strip()] = perm
    return texts


def run(args) -> RunReport:
    report = RunReport(f"lift {args.fan}")
    fan = load_fan(args.fan, report)
    rep = rep_from_texts(fan, collect_assignment(args), args.n)
    result = lift_report(fan, rep)
    diagram = result.diagram

    report.results['representation'] = rep.describe()
    report.results['degree'] = rep.n
    report.results['classification'] = result.classification.as_dict()
    report.results['components'] = [' '.join(str(sheet) for sheet in cycle) for cycle in result.components]
    report.results['curves'] = len(diagram.curves)
    report.results['crossings'] = len(diagram.crossings)
    report.results['faces'] = result.validation.counts['faces']
    report.results['triplets'] = result.validation.counts['triplets']
    report.results['sisters'] = [f"{alpha} ~ {beta}" for alpha, beta in result.sisters]
    report.results['marked'] = [f"{point.id} {point.curve}:{point.arc} {point.side}" for point in diagram.marked]

    text = serialize_diagram(diagram)
    if args.out:
        write_output(args.out, text)
        report.results['out'] = args.out
    else:
        report.results['diagram'] = text
    return report


def setup(subparsers):
    parser = subparsers.add_parser('lift', help="Lift a fan along a monodromy representation")
    parser.add_argument('fan', help="Fan file")
    parser.add_argument('--m', help="Permutation for the generator named m, in cycle notation")
    parser.add_argument('--c', help="Permutation for the generator named c, in cycle notation")
    parser.add_argument('--assign', action='append', metavar='NAME=PERM', help="Permutation for any generator (repeatable)")
    parser.add_argument('-n', type=int, default=None, help="Degree; defaults to the largest point mentioned")
    parser.add_argument('--out', help="Write the lifted diagram here instead of into the report")
    parser.set_defaults(handler=run)
