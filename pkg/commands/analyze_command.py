# commands/analyze_command.py

import logging

from commands.report import RunReport, read_input
from config import MAX_COSETS
from errors import CapacityError
from fpgroups import abelianization, hom_count, parse_presentation, tietze_simplify, todd_coxeter

logger = logging.getLogger(__name__)


def run(args) -> RunReport:
    report = RunReport(f"analyze {args.path}")
    presentation = parse_presentation(read_input(args.path, report))
    report.results['group'] = presentation.name
    report.results['generators'] = presentation.rank
    report.results['relators'] = len(presentation.relators)

    everything = not (args.order or args.abelian or args.hom or args.simplify)
    if args.simplify or everything:
        simplified = tietze_simplify(presentation)
        report.results['simplified'] = simplified.to_text()
    if args.order or everything:
        result = todd_coxeter(presentation, args.max_cosets)
        report.results['order'] = str(result)
        if not result.finite:
            logger.warning(f"Coset enumeration of {presentation.name} stopped at {args.max_cosets} cosets")
            report.status = CapacityError.exit_code
    if args.abelian or everything:
        report.results['abelian'] = str(abelianization(presentation))
    for k in args.hom or []:
        report.results[f"hom_S{k}"] = hom_count(presentation, k)
    return report


def setup(subparsers):
    parser = subparsers.add_parser('analyze', help="Invariants of a finitely presented group")
    parser.add_argument('path', help="Presentation file")
    parser.add_argument('--order', action='store_true', help="Coset enumeration over the trivial subgroup")
    parser.add_argument('--abelian', action='store_true', help="Abelian invariants")
    parser.add_argument('--hom', type=int, action='append', metavar='K', help="Count homomorphisms into S_K (repeatable)")
    parser.add_argument('--simplify', action='store_true', help="Tietze-simplified presentation")
    parser.add_argument('--max-cosets', type=int, default=MAX_COSETS)
    parser.set_defaults(handler=run)
