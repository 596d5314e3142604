# commands/render_command.py

from dataclasses import asdict

from commands.report import RunReport, load_diagram
from config import RENDER_SEED
from diagram_drawing import render_diagram


def run(args) -> RunReport:
    report = RunReport(f"render {args.path}")
    diagram = load_diagram(args.path, report)
    summary = render_diagram(diagram, args.out, seed=args.seed)
    report.results.update(asdict(summary))
    report.results['out'] = args.out
    return report


def setup(subparsers):
    parser = subparsers.add_parser('render', help="Schematic SVG drawing of a diagram")
    parser.add_argument('path', help="Diagram file (a fan file draws its base diagram)")
    parser.add_argument('-o', '--out', required=True, help="Output SVG path")
    parser.add_argument('--seed', type=int, default=RENDER_SEED, help="Layout seed")
    parser.set_defaults(handler=run)
