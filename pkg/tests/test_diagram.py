import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import pytest

from conftest import BANCHOFF_N2
from diagram import (
    _walk_chain,
    Crossing,
    Curve,
    MarkedPoint,
    Passage,
    build_diagram,
    canonical_form,
    face_size_histogram,
    marked_faces,
    mirror,
    parse_diagram,
    serialize_diagram,
    sister_arc_pairs,
    trace_faces,
    triplets,
    validate_diagram,
)
from errors import EmbeddingInconsistent, OrientationError, ParseError, TripletClosureFailed


def test_base_diagram_counts(base):
    report = validate_diagram(base)
    assert report.accepted, f"Base diagram rejected: {report.failure_messages()}"
    assert report.counts == {
        'components': 1,
        'curves': 2,
        'crossings': 6,
        'faces': 8,
        'triplets': 2,
        'marked': 2,
    }


def test_base_face_sizes(base):
    faces = trace_faces(base)
    assert face_size_histogram(faces) == {1: 2, 2: 3, 4: 1, 6: 2}
    assert sum(len(face) for face in faces) == 2 * 12, "Every arc bounds two faces"


def test_poles_sit_in_monogons(base):
    faces = marked_faces(base, trace_faces(base))
    assert set(faces) == {'A[1]', 'B[1]'}
    assert len(faces['A[1]']) == 1 and len(faces['B[1]']) == 1
    assert faces['A[1]'].id != faces['B[1]'].id


def test_triplets_partition_crossings(base):
    found = triplets(base)
    assert len(found) == 2
    covered = sorted(x for triplet in found for x in triplet.crossings)
    assert covered == sorted(x.id for x in base.crossings)


def test_sister_arc_pairs_match_arcs(base):
    pairs = sister_arc_pairs(base)
    assert len(pairs) == 6
    assert all(pair.first[1] == pair.second[1] for pair in pairs)


def test_bundled_lift_parses_and_serializes_verbatim():
    with open(BANCHOFF_N2, encoding='utf-8') as handle:
        text = handle.read()
    diagram = parse_diagram(text)
    assert serialize_diagram(diagram) == text
    report = validate_diagram(diagram)
    assert report.accepted
    assert report.counts['faces'] == 14
    assert report.counts['triplets'] == 4


def test_mirror_keeps_the_face_structure(base):
    mirrored = mirror(base)
    assert validate_diagram(mirrored).accepted
    assert face_size_histogram(trace_faces(mirrored)) == face_size_histogram(trace_faces(base))
    assert all(x.handedness == -y.handedness for x, y in zip(mirrored.crossings, base.crossings))


def test_canonical_form_ignores_labels(base):
    rename = {'alpha[1.1]': 'p', 'beta[1.1]': 'q'}
    crossings = [
        Crossing(f"X{index}", Passage(rename[x.strand_a.curve], x.strand_a.position),
                 Passage(rename[x.strand_b.curve], x.strand_b.position), x.handedness)
        for index, x in enumerate(reversed(base.crossings))
    ]
    relabeled = build_diagram(
        'renamed',
        ['sphere'],
        [Curve(rename[c.id], 'sphere', c.length) for c in base.curves],
        crossings,
        [(rename[a], rename[b]) for a, b in base.sisters],
        [MarkedPoint(p.id, 'sphere', rename[p.curve], p.arc, p.side) for p in base.marked],
    )
    assert canonical_form(relabeled) == canonical_form(base)


def test_missing_passage_is_a_structural_failure(base):
    text = serialize_diagram(base)
    broken = "\n".join(line for line in text.splitlines() if not line.startswith('crossing C6.1'))
    report = validate_diagram(parse_diagram(broken))
    assert not report.accepted
    assert report.failed_checks() == ['Structure']
    assert 'Embedding' in report.skipped


TWO_CROSSINGS = (
    "format 1\ndiagram pinched\ncomponent 1\ncurve a 1 2\ncurve b 1 2\n"
    "crossing X a:0 b:0 +\ncrossing Y a:1 b:1 +\nsister a b\n"
)


def test_euler_failure_is_an_embedding_failure():
    diagram = parse_diagram(TWO_CROSSINGS)
    with pytest.raises(EmbeddingInconsistent) as excinfo:
        trace_faces(diagram)
    assert "2 - 4 + 2" in str(excinfo.value)
    report = validate_diagram(diagram)
    assert not report.accepted
    assert report.failed_checks() == ['Embedding', 'TripletClosure']
    assert report.skipped == ['MarkedPointRule']


def test_chain_closing_on_its_own_crossing_is_rejected():
    # a:0 and its sister passage b:0 share crossing X, so the chain closes after one step
    with pytest.raises(TripletClosureFailed):
        triplets(parse_diagram(TWO_CROSSINGS))


def test_chains_agree_from_every_member_and_strand(cyclic_lift):
    diagram = cyclic_lift(3)
    found = {frozenset(t.crossings) for t in triplets(diagram)}
    for triplet in triplets(diagram):
        for crossing_id in triplet.crossings:
            crossing = diagram.crossing_map[crossing_id]
            for leave in (crossing.strand_a, crossing.strand_b):
                walked, _ = _walk_chain(diagram, crossing, leave)
                assert frozenset(x.id for x in walked) in found, f"chain from {crossing_id} via {leave} left its triplet"


def test_parse_errors_carry_locations():
    with pytest.raises(ParseError) as excinfo:
        parse_diagram("format 1\ndiagram d\ncomponent 1\ncurve a 1 2\ncrossing X a:0 b:1 +\n")
    assert "line 5, column 4" in str(excinfo.value)

    with pytest.raises(ParseError) as excinfo:
        parse_diagram("format 1\ndiagram d\ncomponnt 1\n")
    assert "did you mean 'component'" in str(excinfo.value)


def test_marked_points_need_a_locator():
    with pytest.raises(ParseError) as excinfo:
        parse_diagram(TWO_CROSSINGS + "marked A 1\n")
    assert "<curve>:<arc> <L|R>" in str(excinfo.value)
    diagram = parse_diagram(TWO_CROSSINGS + "marked A 1 a:1 L\n")
    assert [(p.curve, p.arc, p.side) for p in diagram.marked] == [('a', 1, 'L')]


def test_sister_lengths_must_agree():
    text = "format 1\ndiagram d\ncomponent 1\ncurve a 1 2\ncurve b 1 4\nsister a b\n"
    with pytest.raises(OrientationError):
        parse_diagram(text)
