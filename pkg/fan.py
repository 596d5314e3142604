# fan.py

"""
The fan: a Johansson diagram cut open along an arc from pole A to pole B.

The cut arc (the seam) meets the curves in K punctures, numbered 1..K from
A to B. Cutting turns the seam into a left edge L and a right edge R, so a
curve crossing the seam ends a segment on one edge and starts the next
segment on the other edge at the same height. Gluing the right edge of a
copy to the left edge of the next copy rebuilds covers (see cover_lift).

Text format (version 1):

    fan <name>
    format 1
    seam <K>
    segment <id> <curve> <L|R><h>|closed -> <L|R><h>|closed : <crossing ids>
    crossing <id> <segment>:<index> <segment>:<index> <+|->
    chain <curve> : <segment ids>
    arrow <curve> <segment>:<gap>
    sister <curve> <curve>
    dual <name> <curve> <segment>:<gap> <w_a> <segment>:<gap> <w_b>
    meridian <name>
    relation <word>
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from config import FORMAT_VERSION
from errors import OrientationError, ParseError, SeamMismatch
from utils import format_letters, iter_lines, parse_word_tokens, suggest

logger = logging.getLogger(__name__)


class SeamEnd(NamedTuple):
    side: str  # 'L' or 'R'
    height: int

    def __str__(self) -> str:
        return f"{self.side}{self.height}"


class SegmentRef(NamedTuple):
    segment: str
    index: int

    def __str__(self) -> str:
        return f"{self.segment}:{self.index}"


@dataclass(frozen=True)
class Segment:
    id: str
    curve: str
    entry: Optional[SeamEnd]
    exit: Optional[SeamEnd]
    passages: tuple[str, ...]

    @property
    def closed(self) -> bool:
        return self.entry is None


@dataclass(frozen=True)
class FanCrossing:
    id: str
    strand_a: SegmentRef
    strand_b: SegmentRef
    handedness: int


@dataclass(frozen=True)
class DualDescriptor:
    name: str
    alpha: str
    a_end: SegmentRef  # index is a gap
    w_a: int
    b_end: SegmentRef
    w_b: int


class SeamEvent(NamedTuple):
    """A curve crossing the seam: shift +1 leaves through R (copy i -> m(i)), -1 through L."""
    height: int
    shift: int


class SeamCrossing(NamedTuple):
    curve: str
    arc: int
    shift_before: int  # net shift accumulated on the arc before this puncture
    shift: int


@dataclass(frozen=True)
class BaseCurve:
    """A base curve unrolled from its arrow."""
    id: str
    crossings: tuple[str, ...]        # crossing id at each position
    refs: tuple[SegmentRef, ...]      # fan location of each position
    arc_shifts: tuple[int, ...]       # net seam shift on arc k (position k -> k+1)
    arc_events: tuple[tuple[SeamEvent, ...], ...]
    arrow_shift: int                  # net seam shift from the arrow to position 0

    @property
    def length(self) -> int:
        return len(self.crossings)

    @property
    def winding(self) -> int:
        return sum(self.arc_shifts)


@dataclass(frozen=True)
class Fan:
    name: str
    seam: int
    segments: tuple[Segment, ...]
    crossings: tuple[FanCrossing, ...]
    chains: tuple[tuple[str, tuple[str, ...]], ...]
    arrows: tuple[tuple[str, SegmentRef], ...]
    sisters: tuple[tuple[str, str], ...]
    duals: tuple[DualDescriptor, ...]
    meridian: str
    relations: tuple[tuple[tuple[str, int], ...], ...]

    @cached_property
    def segment_map(self) -> dict[str, Segment]:
        return {segment.id: segment for segment in self.segments}

    @cached_property
    def chain_map(self) -> dict[str, tuple[str, ...]]:
        return dict(self.chains)

    @cached_property
    def arrow_map(self) -> dict[str, SegmentRef]:
        return dict(self.arrows)

    @cached_property
    def sister_map(self) -> dict[str, str]:
        table = {}
        for first, second in self.sisters:
            table[first] = second
            table[second] = first
        return table

    @cached_property
    def curve_ids(self) -> tuple[str, ...]:
        return tuple(curve for curve, _ in self.chains)

    @property
    def generators(self) -> tuple[str, ...]:
        """Generator names in canonical order: meridian first, then duals."""
        return (self.meridian,) + tuple(dual.name for dual in self.duals)

    @cached_property
    def base_curves(self) -> dict[str, BaseCurve]:
        return {curve: _unroll(self, curve) for curve in self.curve_ids}

    def position_of(self, ref: SegmentRef) -> tuple[str, int]:
        """(curve, position) of a passage given by its fan location."""
        curve = self.segment_map[ref.segment].curve
        return curve, self.base_curves[curve].refs.index(ref)

    def locate_gap(self, ref: SegmentRef) -> tuple[int, int]:
        """Position of the first passage after a gap, and the seam shift accumulated on the way."""
        curve = self.segment_map[ref.segment].curve
        chain = self.chain_map[curve]
        start = chain.index(ref.segment)
        shift = 0
        for step in range(len(chain) + 1):
            segment = self.segment_map[chain[(start + step) % len(chain)]]
            first = ref.index if step == 0 else 0
            if first < len(segment.passages):
                return self.position_of(SegmentRef(segment.id, first))[1], shift
            if segment.exit is not None:
                shift += 1 if segment.exit.side == 'R' else -1
        raise ParseError(f"curve {curve} has no passages after gap {ref}")

    def seam_crossing(self, height: int) -> SeamCrossing:
        for curve_id, curve in self.base_curves.items():
            for arc, events in enumerate(curve.arc_events):
                before = 0
                for event in events:
                    if event.height == height:
                        return SeamCrossing(curve_id, arc, before, event.shift)
                    before += event.shift
        raise SeamMismatch(f"no curve crosses the seam at height {height}")


def _unroll(fan: Fan, curve: str) -> BaseCurve:
    chain = fan.chain_map[curve]
    arrow = fan.arrow_map[curve]
    start = chain.index(arrow.segment)

    # Walk once around the chain from the arrow gap, collecting passages and seam events.
    items: list = []
    for step in range(len(chain) + 1):
        segment = fan.segment_map[chain[(start + step) % len(chain)]]
        if step == 0:
            indices = range(arrow.index, len(segment.passages))
        elif step == len(chain):
            indices = range(0, arrow.index)
        else:
            indices = range(len(segment.passages))
        for index in indices:
            items.append(SegmentRef(segment.id, index))
        if step < len(chain) and segment.exit is not None:
            items.append(SeamEvent(segment.exit.height, 1 if segment.exit.side == 'R' else -1))

    refs = [item for item in items if isinstance(item, SegmentRef)]
    if not refs:
        return BaseCurve(curve, (), (), (), (), 0)

    first = items.index(refs[0])
    arrow_shift = sum(item.shift for item in items[:first] if isinstance(item, SeamEvent))
    # events after the last passage wrap around onto the last arc
    rotated = items[first:] + items[:first]
    arc_events: list[list[SeamEvent]] = []
    for item in rotated:
        if isinstance(item, SegmentRef):
            arc_events.append([])
        else:
            arc_events[-1].append(item)
    crossings = tuple(fan.segment_map[ref.segment].passages[ref.index] for ref in refs)
    return BaseCurve(
        id=curve,
        crossings=crossings,
        refs=tuple(refs),
        arc_shifts=tuple(sum(event.shift for event in events) for events in arc_events),
        arc_events=tuple(tuple(events) for events in arc_events),
        arrow_shift=arrow_shift,
    )


########################################
# Parsing
########################################
def _parse_end(token: str, lineno: int, column: int) -> Optional[SeamEnd]:
    if token == 'closed':
        return None
    side, height = token[:1], token[1:]
    if side not in ('L', 'R') or not height.isdigit():
        raise ParseError(f"seam endpoint must be L<h>, R<h> or closed, got '{token}'", lineno, column)
    return SeamEnd(side, int(height))


def _parse_ref(token: str, lineno: int, column: int) -> SegmentRef:
    segment, sep, index = token.rpartition(':')
    if not sep or not segment or not index.isdigit():
        raise ParseError(f"expected <segment>:<index>, got '{token}'", lineno, column)
    return SegmentRef(segment, int(index))


def _parse_int(token: str, lineno: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got '{token}'", lineno, column) from None


def parse_fan(text: str) -> Fan:
    name = None
    seam = None
    seen_format = False
    segments: dict[str, Segment] = {}
    crossings: dict[str, tuple[FanCrossing, int]] = {}
    chains: dict[str, tuple[str, ...]] = {}
    arrows: dict[str, tuple[SegmentRef, int]] = {}
    sisters: list[tuple[str, str]] = []
    duals: list[tuple[DualDescriptor, int]] = []
    meridian = None
    relations: list[tuple[list[tuple[str, int]], int]] = []

    for lineno, tokens in iter_lines(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword == 'fan':
            if len(args) != 1:
                raise ParseError("expected: fan <name>", lineno)
            name = args[0]
        elif keyword == 'format':
            if args != [str(FORMAT_VERSION)]:
                raise ParseError(f"unsupported format {' '.join(args)}", lineno, 2)
            seen_format = True
        elif keyword == 'seam':
            if len(args) != 1:
                raise ParseError("expected: seam <K>", lineno)
            seam = _parse_int(args[0], lineno, 2)
            if seam < 1:
                raise SeamMismatch(f"line {lineno}: the seam needs at least one puncture")
        elif keyword == 'segment':
            if len(args) < 6 or args[3] != '->' or args[5] != ':':
                raise ParseError("expected: segment <id> <curve> <entry> -> <exit> : <crossings>", lineno)
            segment_id, curve = args[0], args[1]
            if segment_id in segments:
                raise ParseError(f"duplicate segment '{segment_id}'", lineno, 2)
            entry = _parse_end(args[2], lineno, 4)
            exit_ = _parse_end(args[4], lineno, 6)
            if (entry is None) != (exit_ is None):
                raise ParseError(f"segment {segment_id}: closed must be used for both ends", lineno)
            segments[segment_id] = Segment(segment_id, curve, entry, exit_, tuple(args[6:]))
        elif keyword == 'crossing':
            if len(args) != 4:
                raise ParseError("expected: crossing <id> <segment>:<index> <segment>:<index> <+|->", lineno)
            if args[3] not in ('+', '-'):
                raise ParseError(f"handedness must be '+' or '-', got '{args[3]}'", lineno, 5)
            crossing = FanCrossing(
                args[0],
                _parse_ref(args[1], lineno, 3),
                _parse_ref(args[2], lineno, 4),
                1 if args[3] == '+' else -1,
            )
            if crossing.id in crossings:
                raise ParseError(f"duplicate crossing '{crossing.id}'", lineno, 2)
            crossings[crossing.id] = (crossing, lineno)
        elif keyword == 'chain':
            if len(args) < 3 or args[1] != ':':
                raise ParseError("expected: chain <curve> : <segments>", lineno)
            if args[0] in chains:
                raise ParseError(f"duplicate chain for curve '{args[0]}'", lineno, 2)
            chains[args[0]] = tuple(args[2:])
        elif keyword == 'arrow':
            if len(args) != 2:
                raise ParseError("expected: arrow <curve> <segment>:<gap>", lineno)
            arrows[args[0]] = (_parse_ref(args[1], lineno, 3), lineno)
        elif keyword == 'sister':
            if len(args) != 2:
                raise ParseError("expected: sister <curve> <curve>", lineno)
            sisters.append((args[0], args[1]))
        elif keyword == 'dual':
            if len(args) != 6:
                raise ParseError("expected: dual <name> <curve> <segment>:<gap> <w_a> <segment>:<gap> <w_b>", lineno)
            dual = DualDescriptor(
                args[0], args[1],
                _parse_ref(args[2], lineno, 4), _parse_int(args[3], lineno, 5),
                _parse_ref(args[4], lineno, 6), _parse_int(args[5], lineno, 7),
            )
            duals.append((dual, lineno))
        elif keyword == 'meridian':
            if len(args) != 1:
                raise ParseError("expected: meridian <name>", lineno)
            meridian = args[0]
        elif keyword == 'relation':
            relations.append((parse_word_tokens(args, lineno), lineno))
        else:
            known = ('fan', 'format', 'seam', 'segment', 'crossing', 'chain', 'arrow',
                     'sister', 'dual', 'meridian', 'relation')
            raise ParseError(f"unknown statement '{keyword}'" + suggest(keyword, known), lineno, 1)

    if name is None:
        raise ParseError("missing 'fan <name>' header")
    if not seen_format:
        raise ParseError("missing 'format 1' header")
    if seam is None:
        raise ParseError("missing 'seam <K>' statement")
    if meridian is None:
        raise ParseError("missing 'meridian <name>' statement")

    _check_segments(segments, crossings, chains)
    _check_seam(seam, segments, chains)
    _check_arrows(segments, chains, arrows)

    curve_ids = list(chains)
    for first, second in sisters:
        for curve in (first, second):
            if curve not in chains:
                raise ParseError(f"sister names unknown curve '{curve}'" + suggest(curve, curve_ids))

    generator_names = [meridian] + [dual.name for dual, _ in duals]
    if len(set(generator_names)) != len(generator_names):
        raise ParseError(f"generator names must be distinct: {generator_names}")
    for word, lineno in relations:
        for letter, _ in word:
            if letter not in generator_names:
                raise ParseError(f"relation uses unknown generator '{letter}'" + suggest(letter, generator_names), lineno)
    if not relations:
        logger.warning(f"Fan '{name}' declares no relations; representation relation checks will be skipped")

    fan = Fan(
        name=name,
        seam=seam,
        segments=tuple(segments.values()),
        crossings=tuple(crossing for crossing, _ in crossings.values()),
        chains=tuple(chains.items()),
        arrows=tuple((curve, ref) for curve, (ref, _) in arrows.items()),
        sisters=tuple(sisters),
        duals=tuple(dual for dual, _ in duals),
        meridian=meridian,
        relations=tuple(tuple(word) for word, _ in relations),
    )
    _check_sisters(fan)
    _check_duals(fan, duals)
    logger.debug(f"Parsed fan '{name}': K={seam}, {len(segments)} segments, {len(crossings)} crossings")
    return fan


def _check_segments(segments, crossings, chains) -> None:
    used: dict[SegmentRef, str] = {}
    for crossing, lineno in crossings.values():
        for column, ref in ((3, crossing.strand_a), (4, crossing.strand_b)):
            segment = segments.get(ref.segment)
            if segment is None:
                raise ParseError(f"unknown segment '{ref.segment}'" + suggest(ref.segment, segments), lineno, column)
            if ref.index >= len(segment.passages) or segment.passages[ref.index] != crossing.id:
                raise ParseError(f"segment {ref.segment} does not list crossing {crossing.id} at index {ref.index}", lineno, column)
            if ref in used:
                raise ParseError(f"passage {ref} used by crossings {used[ref]} and {crossing.id}", lineno, column)
            used[ref] = crossing.id
    for segment in segments.values():
        for index, crossing_id in enumerate(segment.passages):
            if SegmentRef(segment.id, index) not in used:
                raise ParseError(f"segment {segment.id} lists {crossing_id} at index {index} but no crossing uses it")

    owner: dict[str, str] = {}
    for curve, chain in chains.items():
        for segment_id in chain:
            if segment_id not in segments:
                raise ParseError(f"chain {curve} names unknown segment '{segment_id}'" + suggest(segment_id, segments))
            if segments[segment_id].curve != curve:
                raise ParseError(f"segment {segment_id} belongs to curve {segments[segment_id].curve}, not {curve}")
            if segment_id in owner:
                raise ParseError(f"segment {segment_id} appears in more than one chain position")
            owner[segment_id] = curve
    for segment_id in segments:
        if segment_id not in owner:
            raise ParseError(f"segment {segment_id} is not part of any chain")


def _check_seam(seam: int, segments, chains) -> None:
    ends: dict[int, dict[str, list[str]]] = {h: {'L': [], 'R': []} for h in range(1, seam + 1)}
    roles: dict[tuple[str, int], str] = {}
    for segment in segments.values():
        for role, end in (('entry', segment.entry), ('exit', segment.exit)):
            if end is None:
                continue
            if end.height not in ends:
                raise SeamMismatch(f"segment {segment.id} uses height {end.height} outside 1..{seam}")
            ends[end.height][end.side].append(segment.id)
            roles[(end.side, end.height)] = role
    for height, sides in ends.items():
        if len(sides['L']) != 1 or len(sides['R']) != 1:
            raise SeamMismatch(
                f"height {height} has {len(sides['L'])} left and {len(sides['R'])} right endpoints"
            )
        if roles[('L', height)] == roles[('R', height)]:
            raise SeamMismatch(f"height {height}: both endpoints are {roles[('L', height)]} points")

    for curve, chain in chains.items():
        closed = [segment_id for segment_id in chain if segments[segment_id].closed]
        if closed and len(chain) != 1:
            raise SeamMismatch(f"closed segment {closed[0]} must be alone in the chain of {curve}")
        if closed:
            continue
        for index, segment_id in enumerate(chain):
            current = segments[segment_id]
            following = segments[chain[(index + 1) % len(chain)]]
            if current.exit.height != following.entry.height or current.exit.side == following.entry.side:
                raise SeamMismatch(
                    f"chain {curve}: {current.id} leaves at {current.exit} but {following.id} enters at {following.entry}"
                )


def _check_arrows(segments, chains, arrows) -> None:
    for curve in chains:
        if curve not in arrows:
            raise ParseError(f"curve {curve} has no arrow")
    for curve, (ref, lineno) in arrows.items():
        if curve not in chains:
            raise ParseError(f"arrow names unknown curve '{curve}'" + suggest(curve, chains), lineno, 2)
        segment = segments[ref.segment] if ref.segment in segments else None
        if segment is None or segment.curve != curve:
            raise ParseError(f"arrow of {curve} must sit on one of its segments", lineno, 3)
        if ref.index > len(segment.passages):
            raise ParseError(f"gap {ref.index} beyond segment {ref.segment}", lineno, 3)


def _check_sisters(fan: Fan) -> None:
    paired = [curve for pair in fan.sisters for curve in pair]
    for curve in fan.curve_ids:
        if paired.count(curve) != 1:
            raise OrientationError(f"curve {curve} appears in {paired.count(curve)} sister pairs")
    for first, second in fan.sisters:
        if first == second:
            raise OrientationError(f"curve {first} is its own sister")
        if fan.base_curves[first].length != fan.base_curves[second].length:
            raise OrientationError(
                f"sister curves {first} and {second} have {fan.base_curves[first].length} "
                f"and {fan.base_curves[second].length} passages after gluing"
            )


def _check_duals(fan: Fan, duals) -> None:
    covered: dict[frozenset, str] = {}
    for dual, lineno in duals:
        if dual.alpha not in fan.chain_map:
            raise ParseError(f"dual {dual.name} names unknown curve '{dual.alpha}'" + suggest(dual.alpha, fan.curve_ids), lineno, 3)
        beta = fan.sister_map[dual.alpha]
        for column, ref, curve in ((4, dual.a_end, dual.alpha), (6, dual.b_end, beta)):
            segment = fan.segment_map.get(ref.segment)
            if segment is None or segment.curve != curve:
                raise ParseError(f"dual {dual.name}: endpoint {ref} is not on curve {curve}", lineno, column)
            if ref.index > len(segment.passages):
                raise ParseError(f"dual {dual.name}: gap {ref.index} beyond segment {ref.segment}", lineno, column)
        if fan.base_curves[dual.alpha].length == 0:
            logger.warning(f"Dual {dual.name} sits on curve {dual.alpha}, which has no passages")
        elif fan.locate_gap(dual.a_end)[0] != fan.locate_gap(dual.b_end)[0]:
            raise ParseError(f"dual {dual.name}: endpoints {dual.a_end} and {dual.b_end} are not sister points", lineno)
        pair = frozenset((dual.alpha, beta))
        if pair in covered:
            raise ParseError(f"sister pair {sorted(pair)} already has dual {covered[pair]}", lineno)
        covered[pair] = dual.name
    for first, second in fan.sisters:
        if frozenset((first, second)) not in covered:
            raise ParseError(f"sister pair {first}/{second} has no dual descriptor")


########################################
# Serialization and gluing
########################################
def serialize_fan(fan: Fan) -> str:
    lines = [f"fan {fan.name}", f"format {FORMAT_VERSION}", f"seam {fan.seam}"]
    for segment in fan.segments:
        entry = str(segment.entry) if segment.entry else 'closed'
        exit_ = str(segment.exit) if segment.exit else 'closed'
        passages = (' ' + ' '.join(segment.passages)) if segment.passages else ''
        lines.append(f"segment {segment.id} {segment.curve} {entry} -> {exit_} :{passages}")
    for crossing in fan.crossings:
        sign = '+' if crossing.handedness == 1 else '-'
        lines.append(f"crossing {crossing.id} {crossing.strand_a} {crossing.strand_b} {sign}")
    lines += [f"chain {curve} : {' '.join(chain)}" for curve, chain in fan.chains]
    lines += [f"arrow {curve} {ref}" for curve, ref in fan.arrows]
    lines += [f"sister {first} {second}" for first, second in fan.sisters]
    for dual in fan.duals:
        lines.append(f"dual {dual.name} {dual.alpha} {dual.a_end} {dual.w_a} {dual.b_end} {dual.w_b}")
    lines.append(f"meridian {fan.meridian}")
    lines += [f"relation {format_letters(word)}" for word in fan.relations]
    return "\n".join(lines) + "\n"


def base_diagram(fan: Fan):
    """The diagram the fan was cut from: the one-sheet gluing."""
    from cover_lift import lift
    from monodromy import trivial_rep

    return lift(fan, trivial_rep(fan))
