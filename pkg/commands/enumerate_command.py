# commands/enumerate_command.py

import logging

from commands.report import RunReport, load_fan
from monodromy import enumerate_reps

logger = logging.getLogger(__name__)


def run(args) -> RunReport:
    report = RunReport(f"enumerate {args.fan} -n {args.n}")
    fan = load_fan(args.fan, report)
    found = enumerate_reps(fan, args.n, up_to_conjugacy=args.conjugacy)
    if args.locally_cyclic:
        found = [item for item in found if item.classification.locally_cyclic]

    report.results['degree'] = args.n
    report.results['up_to_conjugacy'] = args.conjugacy
    report.results['count'] = len(found)
    report.results['representations'] = [
        {
            'assignment': item.rep.describe(),
            'flags': [flag for flag, value in item.classification.as_dict().items() if value],
        }
        for item in found
    ]
    return report


def setup(subparsers):
    parser = subparsers.add_parser('enumerate', help="Transitive representations of a fan's group in degree n")
    parser.add_argument('fan', help="Fan file")
    parser.add_argument('-n', type=int, required=True, help="Degree of the cover")
    parser.add_argument('--conjugacy', action='store_true', help="One representative per conjugacy class")
    parser.add_argument('--locally-cyclic', action='store_true', help="Keep only locally cyclic representations")
    parser.set_defaults(handler=run)
