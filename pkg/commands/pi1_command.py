# commands/pi1_command.py

import logging

from commands.report import RunReport, load_diagram, write_output
from pi1 import TREE_STRATEGIES, build_complex, cell_presentation, dual_presentation

logger = logging.getLogger(__name__)


def run(args) -> RunReport:
    report = RunReport(f"pi1 {args.path} --method {args.method}")
    diagram = load_diagram(args.path, report)

    if args.method == 'dual':
        presentation = dual_presentation(diagram)
    else:
        complex_ = build_complex(diagram)
        punctured = complex_.marked_face_ids() if args.punctured == 'all' else []
        result = cell_presentation(complex_, punctured, tree=args.tree)
        presentation = result.presentation
        report.results['complex'] = complex_.counts()
        report.results['punctured'] = punctured
        report.results['tree'] = result.tree
        report.results['meridians'] = {
            point: presentation.format_word(word) for point, word in result.meridians.items()
        }

    report.results['generators'] = presentation.rank
    report.results['relators'] = len(presentation.relators)
    text = presentation.to_text()
    if args.out:
        write_output(args.out, text)
        report.results['out'] = args.out
    else:
        report.results['presentation'] = text
    return report


def setup(subparsers):
    parser = subparsers.add_parser('pi1', help="Fundamental-group presentation of a diagram")
    parser.add_argument('path', help="Diagram file (a fan file uses its base diagram)")
    parser.add_argument('--method', choices=['cell', 'dual'], default='cell')
    parser.add_argument('--punctured', choices=['all', 'none'], default='none',
                        help="Puncture every marked face (knot complement) or none (closed surface)")
    parser.add_argument('--tree', choices=TREE_STRATEGIES, default='bfs')
    parser.add_argument('--out', help="Write the presentation here instead of into the report")
    parser.set_defaults(handler=run)
