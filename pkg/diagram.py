# diagram.py

"""
Johansson diagrams as combinatorial maps on a disjoint union of spheres.

A diagram is a set of oriented curves. Every curve is a cyclic sequence of
passages counted from its arrow (position 0), every passage sits on exactly
one crossing, and curves come in sister pairs identified passage by passage.
Faces are not stored: they are traced from the handedness of the crossings.

Text format (version 1), one statement per line, '#' starts a comment:

    format 1
    diagram <name>
    component <id>
    curve <id> <component> <length>
    crossing <id> <curve>:<pos> <curve>:<pos> <+|->
    sister <alpha-side curve> <beta-side curve>
    marked <id> <component> <curve>:<arc> <L|R>

The `marked` line extends the bare `marked <id> <component>` form, which is
rejected: it names the arc the point sits beside, and the marked face is the
one on the given side of that arc.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import networkx as nx

from config import FORMAT_VERSION
from errors import (
    DiagramRejected,
    EmbeddingInconsistent,
    OrientationError,
    ParseError,
    TripletClosureFailed,
)
from utils import iter_lines, natural_key, suggest

logger = logging.getLogger(__name__)

# Counter-clockwise order of the four arc-ends at a crossing, per handedness.
_ROTATION = {
    1: (('a', 'in'), ('b', 'in'), ('a', 'out'), ('b', 'out')),
    -1: (('a', 'in'), ('b', 'out'), ('a', 'out'), ('b', 'in')),
}


########################################
# Domain types
########################################
class Passage(NamedTuple):
    curve: str
    position: int

    def __str__(self) -> str:
        return f"{self.curve}:{self.position}"


class Dart(NamedTuple):
    """Arc `arc` of `curve` (passage arc -> arc+1) traversed forwards (+1) or backwards (-1)."""
    curve: str
    arc: int
    direction: int


@dataclass(frozen=True)
class Crossing:
    id: str
    strand_a: Passage
    strand_b: Passage
    handedness: int

    def strand(self, passage: Passage) -> str:
        return 'a' if passage == self.strand_a else 'b'

    def other(self, passage: Passage) -> Passage:
        return self.strand_b if passage == self.strand_a else self.strand_a


@dataclass(frozen=True)
class Curve:
    id: str
    component: str
    length: int


@dataclass(frozen=True)
class MarkedPoint:
    id: str
    component: str
    curve: str
    arc: int
    side: str  # 'L' or 'R' of the forward arc

    @property
    def dart(self) -> Dart:
        return Dart(self.curve, self.arc, 1 if self.side == 'L' else -1)


@dataclass(frozen=True)
class Face:
    id: str
    component: str
    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Diagram:
    name: str
    components: tuple[str, ...]
    curves: tuple[Curve, ...]
    crossings: tuple[Crossing, ...]
    sisters: tuple[tuple[str, str], ...]
    marked: tuple[MarkedPoint, ...] = ()

    @cached_property
    def curve_map(self) -> dict[str, Curve]:
        return {curve.id: curve for curve in self.curves}

    @cached_property
    def crossing_map(self) -> dict[str, Crossing]:
        return {crossing.id: crossing for crossing in self.crossings}

    @cached_property
    def passage_map(self) -> dict[Passage, Crossing]:
        table = {}
        for crossing in self.crossings:
            table[crossing.strand_a] = crossing
            table[crossing.strand_b] = crossing
        return table

    @cached_property
    def sister_map(self) -> dict[str, str]:
        table = {}
        for first, second in self.sisters:
            table[first] = second
            table[second] = first
        return table

    @cached_property
    def generator_side(self) -> frozenset[str]:
        """Curves listed second in a sister line; dual generators are named after them."""
        return frozenset(second for _, second in self.sisters)

    def curve_key(self, curve_id: str) -> tuple:
        curve = self.curve_map[curve_id]
        return natural_key(curve.component), natural_key(curve.id)

    def passage_key(self, passage: Passage) -> tuple:
        return self.curve_key(passage.curve), passage.position

    def crossing_key(self, crossing: Crossing) -> tuple:
        return min(self.passage_key(crossing.strand_a), self.passage_key(crossing.strand_b))

    def dart_key(self, dart: Dart) -> tuple:
        return self.curve_key(dart.curve), dart.arc, 0 if dart.direction == 1 else 1

    def crossing_at(self, curve_id: str, position: int) -> Crossing:
        length = self.curve_map[curve_id].length
        return self.passage_map[Passage(curve_id, position % length)]

    def curve_sequence(self, curve_id: str) -> list[str]:
        """Crossing ids met by the curve, from its arrow."""
        length = self.curve_map[curve_id].length
        return [self.passage_map[Passage(curve_id, k)].id for k in range(length)]


def build_diagram(name, components, curves, crossings, sisters, marked=()) -> Diagram:
    """Assemble a Diagram with every collection in canonical order."""
    curves = list(curves)
    order = {curve.id: (natural_key(curve.component), natural_key(curve.id)) for curve in curves}

    def passage_key(passage):
        return order.get(passage.curve, ((), ())), passage.position

    return Diagram(
        name=name,
        components=tuple(sorted(components, key=natural_key)),
        curves=tuple(sorted(curves, key=lambda c: order[c.id])),
        crossings=tuple(sorted(crossings, key=lambda x: min(passage_key(x.strand_a), passage_key(x.strand_b)))),
        sisters=tuple(sorted(sisters, key=lambda pair: order.get(pair[0], ((), ())))),
        marked=tuple(sorted(marked, key=lambda m: (natural_key(m.component), natural_key(m.id)))),
    )


########################################
# Parsing / serialization
########################################
def _parse_passage(token: str, lineno: int, column: int) -> Passage:
    curve, sep, position = token.rpartition(':')
    if not sep or not curve:
        raise ParseError(f"expected <curve>:<position>, got '{token}'", lineno, column)
    try:
        value = int(position)
    except ValueError:
        raise ParseError(f"position '{position}' is not an integer", lineno, column) from None
    if value < 0:
        raise ParseError(f"position '{position}' is negative", lineno, column)
    return Passage(curve, value)


def _parse_sign(token: str, lineno: int, column: int) -> int:
    if token not in ('+', '-'):
        raise ParseError(f"handedness must be '+' or '-', got '{token}'", lineno, column)
    return 1 if token == '+' else -1


def parse_diagram(text: str) -> Diagram:
    name = None
    components: list[str] = []
    curves: dict[str, Curve] = {}
    crossings: dict[str, Crossing] = {}
    sisters: list[tuple[str, str]] = []
    marked: list[MarkedPoint] = []
    seen_format = False

    for lineno, tokens in iter_lines(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword == 'format':
            if args != [str(FORMAT_VERSION)]:
                raise ParseError(f"unsupported format {' '.join(args)}", lineno, 2)
            seen_format = True
        elif keyword == 'diagram':
            if len(args) != 1:
                raise ParseError("expected: diagram <name>", lineno)
            name = args[0]
        elif keyword == 'component':
            if len(args) != 1:
                raise ParseError("expected: component <id>", lineno)
            if args[0] in components:
                raise ParseError(f"duplicate component '{args[0]}'", lineno, 2)
            components.append(args[0])
        elif keyword == 'curve':
            if len(args) != 3:
                raise ParseError("expected: curve <id> <component> <length>", lineno)
            curve_id, component, length = args
            if component not in components:
                raise ParseError(f"unknown component '{component}'" + suggest(component, components), lineno, 3)
            if curve_id in curves:
                raise ParseError(f"duplicate curve '{curve_id}'", lineno, 2)
            try:
                curves[curve_id] = Curve(curve_id, component, int(length))
            except ValueError:
                raise ParseError(f"curve length '{length}' is not an integer", lineno, 4) from None
        elif keyword == 'crossing':
            if len(args) != 4:
                raise ParseError("expected: crossing <id> <curve>:<pos> <curve>:<pos> <+|->", lineno)
            crossing_id = args[0]
            if crossing_id in crossings:
                raise ParseError(f"duplicate crossing '{crossing_id}'", lineno, 2)
            strand_a = _parse_passage(args[1], lineno, 3)
            strand_b = _parse_passage(args[2], lineno, 4)
            for column, passage in ((3, strand_a), (4, strand_b)):
                if passage.curve not in curves:
                    raise ParseError(f"unknown curve '{passage.curve}'" + suggest(passage.curve, curves), lineno, column)
            crossings[crossing_id] = Crossing(crossing_id, strand_a, strand_b, _parse_sign(args[3], lineno, 5))
        elif keyword == 'sister':
            if len(args) != 2:
                raise ParseError("expected: sister <curve> <curve>", lineno)
            for column, curve_id in enumerate(args, start=2):
                if curve_id not in curves:
                    raise ParseError(f"unknown curve '{curve_id}'" + suggest(curve_id, curves), lineno, column)
            sisters.append((args[0], args[1]))
        elif keyword == 'marked':
            if len(args) != 4:
                raise ParseError("expected: marked <id> <component> <curve>:<arc> <L|R>", lineno)
            point_id, component, locator, side = args
            if component not in components:
                raise ParseError(f"unknown component '{component}'" + suggest(component, components), lineno, 3)
            passage = _parse_passage(locator, lineno, 4)
            if passage.curve not in curves:
                raise ParseError(f"unknown curve '{passage.curve}'" + suggest(passage.curve, curves), lineno, 4)
            if side not in ('L', 'R'):
                raise ParseError(f"side must be L or R, got '{side}'", lineno, 5)
            marked.append(MarkedPoint(point_id, component, passage.curve, passage.position, side))
        else:
            known = ('format', 'diagram', 'component', 'curve', 'crossing', 'sister', 'marked')
            raise ParseError(f"unknown statement '{keyword}'" + suggest(keyword, known), lineno, 1)

    if name is None:
        raise ParseError("missing 'diagram <name>' header")
    if not seen_format:
        raise ParseError("missing 'format 1' header")

    for first, second in sisters:
        if curves[first].length != curves[second].length:
            raise OrientationError(
                f"sister curves {first} and {second} have lengths "
                f"{curves[first].length} and {curves[second].length}"
            )

    diagram = build_diagram(name, components, curves.values(), crossings.values(), sisters, marked)
    logger.debug(f"Parsed diagram '{name}': {len(curves)} curves, {len(crossings)} crossings")
    return diagram


def serialize_diagram(diagram: Diagram) -> str:
    lines = [f"format {FORMAT_VERSION}", f"diagram {diagram.name}"]
    lines += [f"component {component}" for component in diagram.components]
    lines += [f"curve {curve.id} {curve.component} {curve.length}" for curve in diagram.curves]
    for crossing in diagram.crossings:
        sign = '+' if crossing.handedness == 1 else '-'
        lines.append(f"crossing {crossing.id} {crossing.strand_a} {crossing.strand_b} {sign}")
    lines += [f"sister {first} {second}" for first, second in diagram.sisters]
    for point in diagram.marked:
        lines.append(f"marked {point.id} {point.component} {point.curve}:{point.arc} {point.side}")
    return "\n".join(lines) + "\n"


########################################
# Structural checks
########################################
def structural_failures(diagram: Diagram) -> list[str]:
    """Every violated structural invariant, as messages. Empty means the later checks can run."""
    failures = []
    if not diagram.components:
        failures.append("diagram has no components")

    for curve in diagram.curves:
        if curve.length <= 0:
            failures.append(f"curve {curve.id} has no passages")

    seen: Counter = Counter()
    for crossing in diagram.crossings:
        if crossing.strand_a == crossing.strand_b:
            failures.append(f"crossing {crossing.id} uses passage {crossing.strand_a} twice")
        for passage in (crossing.strand_a, crossing.strand_b):
            curve = diagram.curve_map.get(passage.curve)
            if curve is None:
                failures.append(f"crossing {crossing.id} references unknown curve {passage.curve}")
            elif passage.position >= curve.length:
                failures.append(f"crossing {crossing.id}: position {passage.position} beyond length of {curve.id}")
            seen[passage] += 1
        curve_a = diagram.curve_map.get(crossing.strand_a.curve)
        curve_b = diagram.curve_map.get(crossing.strand_b.curve)
        if curve_a and curve_b and curve_a.component != curve_b.component:
            failures.append(f"crossing {crossing.id} joins components {curve_a.component} and {curve_b.component}")

    for curve in diagram.curves:
        for position in range(max(curve.length, 0)):
            count = seen[Passage(curve.id, position)]
            if count != 1:
                failures.append(f"passage {curve.id}:{position} occurs in {count} crossings")

    paired: Counter = Counter()
    for first, second in diagram.sisters:
        paired[first] += 1
        paired[second] += 1
        if first == second:
            failures.append(f"curve {first} is its own sister")
        elif first in diagram.curve_map and second in diagram.curve_map:
            if diagram.curve_map[first].length != diagram.curve_map[second].length:
                failures.append(f"sister curves {first} and {second} have different lengths")
    for curve in diagram.curves:
        if paired[curve.id] != 1:
            failures.append(f"curve {curve.id} appears in {paired[curve.id]} sister pairs")

    for component in diagram.components:
        members = [curve for curve in diagram.curves if curve.component == component]
        if not members:
            failures.append(f"component {component} carries no curves")
            continue
        if failures:
            continue
        graph = nx.MultiGraph()
        for curve in members:
            sequence = diagram.curve_sequence(curve.id)
            graph.add_nodes_from(sequence)
            for k in range(curve.length):
                graph.add_edge(sequence[k], sequence[(k + 1) % curve.length])
        if not nx.is_connected(graph):
            failures.append(f"curves of component {component} do not form a connected graph")

    for point in diagram.marked:
        curve = diagram.curve_map.get(point.curve)
        if curve is None or not 0 <= point.arc < curve.length:
            failures.append(f"marked point {point.id} has an invalid locator {point.curve}:{point.arc}")
        elif curve.component != point.component:
            failures.append(f"marked point {point.id} is located on a curve of component {curve.component}")
    return failures


########################################
# Faces
########################################
def next_dart(diagram: Diagram, dart: Dart) -> Dart:
    """The dart following `dart` around the face on its left."""
    length = diagram.curve_map[dart.curve].length
    if dart.direction == 1:
        arrival, end = Passage(dart.curve, (dart.arc + 1) % length), 'in'
    else:
        arrival, end = Passage(dart.curve, dart.arc), 'out'
    crossing = diagram.passage_map[arrival]
    rotation = _ROTATION[crossing.handedness]
    strand, leave_end = rotation[rotation.index((crossing.strand(arrival), end)) - 1]
    leave = crossing.strand_a if strand == 'a' else crossing.strand_b
    if leave_end == 'out':
        return Dart(leave.curve, leave.position, 1)
    leave_length = diagram.curve_map[leave.curve].length
    return Dart(leave.curve, (leave.position - 1) % leave_length, -1)


def all_darts(diagram: Diagram) -> list[Dart]:
    darts = []
    for curve in diagram.curves:
        for arc in range(curve.length):
            darts.append(Dart(curve.id, arc, 1))
            darts.append(Dart(curve.id, arc, -1))
    return sorted(darts, key=diagram.dart_key)


def trace_faces(diagram: Diagram) -> list[Face]:
    """
    Trace the faces of every sphere component.

    Faces come out in canonical order, each starting at its smallest dart.
    Raises EmbeddingInconsistent when a component fails V - E + F = 2.
    """
    visited = set()
    faces = []
    for start in all_darts(diagram):
        if start in visited:
            continue
        darts = []
        dart = start
        while dart not in visited:
            visited.add(dart)
            darts.append(dart)
            dart = next_dart(diagram, dart)
        if dart != start:
            raise EmbeddingInconsistent(f"face walk from {start} did not close")
        component = diagram.curve_map[start.curve].component
        faces.append(Face(f"F{len(faces) + 1}", component, tuple(darts)))

    for component in diagram.components:
        vertices = sum(1 for x in diagram.crossings if diagram.curve_map[x.strand_a.curve].component == component)
        edges = sum(curve.length for curve in diagram.curves if curve.component == component)
        count = sum(1 for face in faces if face.component == component)
        if vertices - edges + count != 2:
            raise EmbeddingInconsistent(
                f"component {component}: V - E + F = {vertices} - {edges} + {count} != 2"
            )
    return faces


def face_lookup(faces: list[Face]) -> dict[Dart, Face]:
    return {dart: face for face in faces for dart in face.darts}


def marked_faces(diagram: Diagram, faces: list[Face]) -> dict[str, Face]:
    """Marked point id -> the face containing it."""
    lookup = face_lookup(faces)
    return {point.id: lookup[point.dart] for point in diagram.marked}


########################################
# Triplets and sister arcs
########################################
@dataclass(frozen=True)
class Triplet:
    id: str
    crossings: tuple[str, str, str]
    # passage left at each crossing while walking the chain
    exits: tuple[Passage, Passage, Passage]


def partner(diagram: Diagram, passage: Passage) -> Passage:
    return Passage(diagram.sister_map[passage.curve], passage.position)


def _walk_chain(diagram: Diagram, crossing: Crossing, leave: Passage) -> tuple[list[Crossing], list[Passage]]:
    start = leave
    visited, exits = [], []
    current = crossing
    for _ in range(len(diagram.crossings) + 1):
        visited.append(current)
        exits.append(leave)
        arrival = partner(diagram, leave)
        target = diagram.passage_map.get(arrival)
        if target is None:
            raise TripletClosureFailed(f"partner position {arrival} does not exist")
        leave = target.other(arrival)
        current = target
        if current.id == crossing.id:
            # the closing passage is the other strand of the start crossing
            if arrival != crossing.other(start):
                raise TripletClosureFailed(f"chain from {crossing.id} re-enters it through {arrival}")
            break
    return visited, exits


def _check_orbit(diagram: Diagram, ids: list[str]) -> None:
    """Every member, leaving through either strand, walks the same three crossings."""
    expected = set(ids)
    for crossing_id in ids:
        crossing = diagram.crossing_map[crossing_id]
        for leave in (crossing.strand_a, crossing.strand_b):
            visited, _ = _walk_chain(diagram, crossing, leave)
            found = [x.id for x in visited]
            if len(found) != 3 or set(found) != expected:
                raise TripletClosureFailed(
                    f"chain from {crossing_id} through {leave} visits {found}, expected {sorted(expected)}"
                )


def triplets(diagram: Diagram) -> list[Triplet]:
    """
    Group crossings into triplets by following the sister chain.

    Each chain starts at the canonically smallest crossing of its orbit and
    leaves through that crossing's strand a. Walks from the other members,
    and through strand b, must close on the same three crossings.
    """
    result = []
    assigned = set()
    for crossing in sorted(diagram.crossings, key=diagram.crossing_key):
        if crossing.id in assigned:
            continue
        visited, exits = _walk_chain(diagram, crossing, crossing.strand_a)
        ids = [x.id for x in visited]
        if len(ids) != 3 or len(set(ids)) != 3:
            raise TripletClosureFailed(f"chain from crossing {crossing.id} has {len(set(ids))} crossings: {ids}")
        _check_orbit(diagram, ids)
        if any(x in assigned for x in ids):
            raise TripletClosureFailed(f"crossing {crossing.id} shares a chain with an earlier triplet")
        assigned.update(ids)
        result.append(Triplet(f"T{len(result) + 1}", tuple(ids), tuple(exits)))
    return result


@dataclass(frozen=True)
class ArcPair:
    first: tuple[str, int]
    second: tuple[str, int]


def sister_arc_pairs(diagram: Diagram) -> list[ArcPair]:
    """Arc k of a curve paired with arc k of its sister, one entry per pair."""
    triplets(diagram)
    pairs = []
    for first, second in diagram.sisters:
        for arc in range(diagram.curve_map[first].length):
            pairs.append(ArcPair((first, arc), (second, arc)))
    return pairs


########################################
# Validation report
########################################
CHECKS = ('Structure', 'Embedding', 'TripletClosure', 'MarkedPointRule')


@dataclass
class ValidationReport:
    name: str
    failures: dict[str, list[str]] = field(default_factory=lambda: {check: [] for check in CHECKS})
    skipped: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return not any(self.failures.values()) and not self.skipped

    def failed_checks(self) -> list[str]:
        return [check for check in CHECKS if self.failures[check]]

    def failure_messages(self) -> list[str]:
        return [f"{check}: {message}" for check in CHECKS for message in self.failures[check]]


def validate_diagram(diagram: Diagram) -> ValidationReport:
    report = ValidationReport(diagram.name)
    report.counts = {
        'components': len(diagram.components),
        'curves': len(diagram.curves),
        'crossings': len(diagram.crossings),
        'faces': 0,
        'triplets': 0,
        'marked': len(diagram.marked),
    }

    report.failures['Structure'] = structural_failures(diagram)
    if report.failures['Structure']:
        report.skipped = ['Embedding', 'TripletClosure', 'MarkedPointRule']
        logger.info(f"Diagram '{diagram.name}' failed structural checks")
        return report

    faces = None
    try:
        faces = trace_faces(diagram)
        report.counts['faces'] = len(faces)
    except EmbeddingInconsistent as e:
        report.failures['Embedding'].append(str(e))

    try:
        report.counts['triplets'] = len(triplets(diagram))
    except TripletClosureFailed as e:
        report.failures['TripletClosure'].append(str(e))

    if faces is None:
        report.skipped.append('MarkedPointRule')
    else:
        occupancy: dict[str, list[str]] = {}
        for point_id, face in marked_faces(diagram, faces).items():
            occupancy.setdefault(face.id, []).append(point_id)
        for face_id, points in occupancy.items():
            if len(points) > 1:
                report.failures['MarkedPointRule'].append(f"face {face_id} contains marked points {', '.join(points)}")

    logger.info(f"Validated diagram '{diagram.name}': accepted={report.accepted} counts={report.counts}")
    return report


def require_accepted(diagram: Diagram) -> ValidationReport:
    report = validate_diagram(diagram)
    if not report.accepted:
        raise DiagramRejected(report)
    return report


########################################
# Derived diagrams
########################################
def mirror(diagram: Diagram) -> Diagram:
    crossings = [Crossing(x.id, x.strand_a, x.strand_b, -x.handedness) for x in diagram.crossings]
    marked = [MarkedPoint(p.id, p.component, p.curve, p.arc, 'R' if p.side == 'L' else 'L') for p in diagram.marked]
    return build_diagram(diagram.name, diagram.components, diagram.curves, crossings, diagram.sisters, marked)


def _encode_from(diagram: Diagram, start: str, faces: list[Face]) -> str:
    curve_label: dict[str, int] = {}
    component_label: dict[str, int] = {}
    crossing_label: dict[str, int] = {}
    first_strand: dict[str, Passage] = {}
    order: list[str] = []
    pending = [curve.id for curve in diagram.curves]
    queue = deque([start])

    while len(order) < len(diagram.curves):
        if not queue:
            queue.append(next(c for c in pending if c not in curve_label))
        curve_id = queue.popleft()
        if curve_id in curve_label:
            continue
        curve_label[curve_id] = len(order)
        order.append(curve_id)
        component_label.setdefault(diagram.curve_map[curve_id].component, len(component_label))
        queue.append(diagram.sister_map[curve_id])
        for position in range(diagram.curve_map[curve_id].length):
            passage = Passage(curve_id, position)
            crossing = diagram.passage_map[passage]
            if crossing.id not in crossing_label:
                crossing_label[crossing.id] = len(crossing_label)
                first_strand[crossing.id] = passage
            queue.append(crossing.other(passage).curve)

    lines = []
    for curve_id in order:
        curve = diagram.curve_map[curve_id]
        cells = []
        for position in range(curve.length):
            passage = Passage(curve_id, position)
            crossing = diagram.passage_map[passage]
            role = 'a' if first_strand[crossing.id] == passage else 'b'
            sign = crossing.handedness if first_strand[crossing.id] == crossing.strand_a else -crossing.handedness
            cells.append(f"{crossing_label[crossing.id]}{role}{'+' if sign == 1 else '-'}")
        side = 'g' if curve_id in diagram.generator_side else 'd'
        lines.append(
            f"{curve_label[curve_id]} c{component_label[curve.component]} "
            f"s{curve_label[diagram.sister_map[curve_id]]}{side} : {' '.join(cells)}"
        )

    lookup = face_lookup(faces)
    points = []
    for point in diagram.marked:
        face = lookup[point.dart]
        dart = min((curve_label[d.curve], d.arc, d.direction) for d in face.darts)
        points.append(f"m c{component_label[point.component]} {dart[0]}:{dart[1]}:{dart[2]}")
    lines += sorted(points)
    return "\n".join(lines)


def canonical_form(diagram: Diagram) -> str:
    """Relabeling-invariant encoding: the smallest encoding over all starting curves."""
    faces = trace_faces(diagram)
    return min(_encode_from(diagram, curve.id, faces) for curve in diagram.curves)


def face_size_histogram(faces: list[Face]) -> dict[int, int]:
    return dict(sorted(Counter(len(face) for face in faces).items()))
