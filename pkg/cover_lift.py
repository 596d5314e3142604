# cover_lift.py

"""
Lifted Johansson diagrams of branched covers.

n copies of the fan are glued with the right edge of copy i attached to the
left edge of copy m(i), where m is the meridian image. Each cycle of m closes
up into one sphere. Base curves lift by following the seam shifts, and
sister curves are matched by lifting the dual paths of every dual generator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from config import MAX_LIFT_DEGREE
from diagram import (
    Crossing,
    Curve,
    Diagram,
    MarkedPoint,
    Passage,
    ValidationReport,
    build_diagram,
    validate_diagram,
)
from errors import DegreeTooLarge, DiagramRejected, RepresentationRejected, SisteringInconsistent, ValidationError
from fan import Fan
from monodromy import MonodromyRep, Permutation, RepClassification, validate_rep

logger = logging.getLogger(__name__)


@dataclass
class LiftedCurve:
    base: str
    component: int
    walk: list[tuple[int, int]]  # (base position, sheet) in traversal order
    arrow_sheets: list[int]
    name: str = ""

    @property
    def length(self) -> int:
        return len(self.walk)

    def rotate(self, start: int) -> None:
        self.walk = self.walk[start:] + self.walk[:start]


@dataclass
class LiftPlan:
    fan: Fan
    rep: MonodromyRep
    components: list[tuple[int, ...]]
    sheet_component: dict[int, int] = field(default_factory=dict)

    @property
    def meridian(self) -> Permutation:
        return self.rep[self.fan.meridian]

    def move(self, sheet: int, shift: int) -> int:
        perm = self.meridian if shift >= 0 else self.meridian.inverse()
        for _ in range(abs(shift)):
            sheet = perm(sheet)
        return sheet


@dataclass
class LiftReport:
    diagram: Diagram
    validation: ValidationReport
    classification: RepClassification
    components: list[tuple[int, ...]]
    sisters: list[tuple[str, str]]
    curve_counts: dict[str, int]


def plan_lift(fan: Fan, rep: MonodromyRep) -> LiftPlan:
    components = rep[fan.meridian].cycles(include_fixed=True)
    plan = LiftPlan(fan, rep, components)
    for index, cycle in enumerate(components, start=1):
        for sheet in cycle:
            plan.sheet_component[sheet] = index
    return plan


def _trace_lifts(plan: LiftPlan, curve_id: str) -> list[LiftedCurve]:
    base = plan.fan.base_curves[curve_id]
    if base.length == 0:
        raise ValidationError(f"curve {curve_id} has no passages")
    lifts = []
    seen = set()
    for start in range(1, plan.rep.n + 1):
        if (0, start) in seen:
            continue
        walk = []
        sheet = start
        while True:
            for position in range(base.length):
                walk.append((position, sheet))
                seen.add((position, sheet))
                sheet = plan.move(sheet, base.arc_shifts[position])
            if sheet == start:
                break
        on_curve = {s for k, s in walk if k == 0}
        arrow_sheets = sorted(u for u in range(1, plan.rep.n + 1) if plan.move(u, base.arrow_shift) in on_curve)
        lifts.append(LiftedCurve(curve_id, plan.sheet_component[start], walk, arrow_sheets))
    return lifts


def _name_lifts(lifts: list[LiftedCurve]) -> None:
    by_component: dict[int, list[LiftedCurve]] = {}
    for lifted in lifts:
        by_component.setdefault(lifted.component, []).append(lifted)
    for component, members in by_component.items():
        members.sort(key=lambda lifted: lifted.arrow_sheets[0])
        for k, lifted in enumerate(members, start=1):
            lifted.name = f"{lifted.base}[{component}.{k}]"


def _match_sisters(plan: LiftPlan, lifts: dict[str, list[LiftedCurve]]) -> list[tuple[LiftedCurve, LiftedCurve, int]]:
    """
    Pair lifted curves along the lifted dual paths.

    Returns (alpha lift, beta lift, offset) where index j on the alpha lift
    corresponds to index j + offset on the beta lift.
    """
    fan, rep = plan.fan, plan.rep
    location = {}
    for members in lifts.values():
        for lifted in members:
            for index, (position, sheet) in enumerate(lifted.walk):
                location[(lifted.base, position, sheet)] = (lifted, index)

    pairing: dict[str, tuple[LiftedCurve, int]] = {}
    reverse: dict[str, str] = {}
    for dual in fan.duals:
        beta = fan.sister_map[dual.alpha]
        position, shift_a = fan.locate_gap(dual.a_end)
        position_b, shift_b = fan.locate_gap(dual.b_end)
        for sheet in range(1, rep.n + 1):
            sheet_a = plan.move(plan.move(sheet, dual.w_a), shift_a)
            sheet_b = plan.move(plan.move(rep[dual.name](sheet), dual.w_b), shift_b)
            alpha_lift, index_a = location[(dual.alpha, position, sheet_a)]
            beta_lift, index_b = location[(beta, position_b, sheet_b)]
            if alpha_lift.length != beta_lift.length:
                raise SisteringInconsistent(
                    f"{alpha_lift.name} ({alpha_lift.length} passages) cannot be sister of "
                    f"{beta_lift.name} ({beta_lift.length} passages)"
                )
            offset = (index_b - index_a) % alpha_lift.length
            known = pairing.get(alpha_lift.name)
            if known is not None and (known[0].name != beta_lift.name or known[1] != offset):
                raise SisteringInconsistent(
                    f"{alpha_lift.name} is matched with {known[0].name} and with {beta_lift.name} (dual {dual.name}, sheet {sheet})"
                )
            if reverse.get(beta_lift.name, alpha_lift.name) != alpha_lift.name:
                raise SisteringInconsistent(f"{beta_lift.name} is matched with two curves")
            pairing[alpha_lift.name] = (beta_lift, offset)
            reverse[beta_lift.name] = alpha_lift.name

    result = []
    for members in lifts.values():
        for lifted in members:
            if lifted.name not in pairing and lifted.name not in reverse:
                raise SisteringInconsistent(f"lifted curve {lifted.name} has no sister")
    for members in lifts.values():
        for lifted in members:
            if lifted.name in pairing:
                beta_lift, offset = pairing[lifted.name]
                result.append((lifted, beta_lift, offset))
    return result


def _place_arrows(plan: LiftPlan, pairs) -> None:
    """Alpha-side lifts start at their smallest-sheet arrow copy; beta-side lifts at the corresponding passage."""
    for alpha_lift, beta_lift, offset in pairs:
        base = plan.fan.base_curves[alpha_lift.base]
        first = (0, plan.move(alpha_lift.arrow_sheets[0], base.arrow_shift))
        start = alpha_lift.walk.index(first)
        alpha_lift.rotate(start)
        beta_lift.rotate((start + offset) % beta_lift.length)


def lift_report(fan: Fan, rep: MonodromyRep, max_degree: int = MAX_LIFT_DEGREE) -> LiftReport:
    if rep.n > max_degree:
        raise DegreeTooLarge(f"degree {rep.n} exceeds the lifting bound {max_degree}")
    classification = validate_rep(fan, rep)
    if not classification.relations_ok:
        raise RepresentationRejected(f"{rep.describe()} does not satisfy the fan relations")
    if not classification.transitive:
        raise RepresentationRejected(f"{rep.describe()} is not transitive; only connected covers are lifted")

    plan = plan_lift(fan, rep)
    lifts = {curve_id: _trace_lifts(plan, curve_id) for curve_id in fan.curve_ids}
    for members in lifts.values():
        _name_lifts(members)
    pairs = _match_sisters(plan, lifts)
    _place_arrows(plan, pairs)

    passage_of = {}
    curves = []
    for members in lifts.values():
        for lifted in members:
            curves.append(Curve(lifted.name, str(lifted.component), lifted.length))
            for index, (position, sheet) in enumerate(lifted.walk):
                passage_of[(lifted.base, position, sheet)] = Passage(lifted.name, index)

    crossings = []
    for sheet in range(1, rep.n + 1):
        for crossing in fan.crossings:
            strand_a = passage_of[fan.position_of(crossing.strand_a) + (sheet,)]
            strand_b = passage_of[fan.position_of(crossing.strand_b) + (sheet,)]
            crossings.append(Crossing(f"{crossing.id}.{sheet}", strand_a, strand_b, crossing.handedness))

    marked = []
    for index, cycle in enumerate(plan.components, start=1):
        marked.append(_pole(plan, passage_of, index, cycle[0], f"A[{index}]", 1, 'L'))
        marked.append(_pole(plan, passage_of, index, cycle[0], f"B[{index}]", fan.seam, 'R'))

    diagram = build_diagram(
        name=f"{fan.name}_n{rep.n}",
        components=[str(index) for index in range(1, len(plan.components) + 1)],
        curves=curves,
        crossings=crossings,
        sisters=[(alpha.name, beta.name) for alpha, beta, _ in pairs],
        marked=marked,
    )
    validation = validate_diagram(diagram)
    if not validation.accepted:
        raise DiagramRejected(validation)

    counts = {curve_id: len(members) for curve_id, members in lifts.items()}
    logger.info(
        f"Lifted '{fan.name}' along {rep.describe()}: {len(plan.components)} components, "
        f"{len(curves)} curves, {len(crossings)} crossings"
    )
    return LiftReport(
        diagram=diagram,
        validation=validation,
        classification=classification,
        components=plan.components,
        sisters=[(alpha.name, beta.name) for alpha, beta, _ in pairs],
        curve_counts=counts,
    )


def _pole(plan: LiftPlan, passage_of, component: int, sheet: int, point_id: str, height: int, side_if_right_exit: str) -> MarkedPoint:
    """
    Marked point over a pole, placed beside the arc through the seam puncture at `height`.

    The puncture joins the right edge of copy `sheet` to the left edge of copy m(sheet).
    Pole A (height 1) lies left of a curve leaving through R; pole B (height K) lies right of it.
    """
    crossing = plan.fan.seam_crossing(height)
    before = sheet if crossing.shift == 1 else plan.move(sheet, 1)
    start_sheet = plan.move(before, -crossing.shift_before)
    passage = passage_of[(crossing.curve, crossing.arc, start_sheet)]
    if crossing.shift == 1:
        side = side_if_right_exit
    else:
        side = 'R' if side_if_right_exit == 'L' else 'L'
    return MarkedPoint(point_id, str(component), passage.curve, passage.position, side)


def lift(fan: Fan, rep: MonodromyRep) -> Diagram:
    return lift_report(fan, rep).diagram
