import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import pytest

from conftest import BANCHOFF_N2
from cover_lift import lift, lift_report
from diagram import canonical_form, serialize_diagram, trace_faces, validate_diagram
from errors import DegreeTooLarge, RepresentationRejected
from fpgroups import fingerprint
from monodromy import Permutation, cyclic_rep, enumerate_reps, rep_from_texts, trivial_rep
from pi1 import build_complex, cell_presentation, dual_presentation


def test_trivial_lift_is_the_base_diagram(fan, base):
    assert lift(fan, trivial_rep(fan)) == base
    assert [curve.id for curve in base.curves] == ['alpha[1.1]', 'beta[1.1]']
    assert [(p.id, p.curve, p.arc, p.side) for p in base.marked] == [
        ('A[1]', 'alpha[1.1]', 5, 'R'),
        ('B[1]', 'beta[1.1]', 1, 'L'),
    ]


def test_double_cover_matches_bundled_diagram(cyclic_lift):
    with open(BANCHOFF_N2, encoding='utf-8') as handle:
        expected = handle.read()
    assert serialize_diagram(cyclic_lift(2)) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cyclic_lift_counts(cyclic_lift, n):
    diagram = cyclic_lift(n)
    report = validate_diagram(diagram)
    assert report.accepted
    assert report.counts['components'] == 1
    assert report.counts['curves'] == 2 * n
    assert report.counts['crossings'] == 6 * n
    # six unbranched faces lift n times, the two pole faces once each
    assert report.counts['faces'] == 6 * n + 2
    assert report.counts['triplets'] == 2 * n


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_cyclic_sisters_shift_by_two(cyclic_lift, n):
    diagram = cyclic_lift(n)
    expected = [(f"alpha[1.{i}]", f"beta[1.{(i + 1) % n + 1}]") for i in range(1, n + 1)]
    assert list(diagram.sisters) == expected


def test_irregular_lift_has_two_components(fan, irregular_lift):
    report = validate_diagram(irregular_lift)
    assert report.accepted
    assert irregular_lift.components == ('1', '2')
    faces = trace_faces(irregular_lift)
    per_component = {c: sum(1 for face in faces if face.component == c) for c in irregular_lift.components}
    assert per_component == {'1': 14, '2': 8}
    assert [p.id for p in irregular_lift.marked] == ['A[1]', 'B[1]', 'A[2]', 'B[2]']
    assert _euler_characteristics(irregular_lift) == {'1': 2, '2': 2}
    # sisters may live on different sheets of the domain
    components = {curve.id: curve.component for curve in irregular_lift.curves}
    assert any(components[a] != components[b] for a, b in irregular_lift.sisters)


def test_lift_report_echo(fan):
    report = lift_report(fan, rep_from_texts(fan, {'m': '(1 2)', 'c': '(2 3)'}, 3))
    assert report.components == [(1, 2), (3,)]
    assert report.curve_counts == {'alpha': 3, 'beta': 3}
    assert report.classification.valid
    assert len(report.sisters) == 3


def test_conjugate_reps_give_isomorphic_lifts(fan):
    rep = cyclic_rep(fan, 3)
    relabeled = rep.conjugate(Permutation((1, 0, 2)))
    assert relabeled != rep
    assert canonical_form(lift(fan, relabeled)) == canonical_form(lift(fan, rep))


def _euler_characteristics(diagram):
    faces = trace_faces(diagram)
    component_of = {curve.id: curve.component for curve in diagram.curves}
    chi = {}
    for component in diagram.components:
        vertices = sum(1 for x in diagram.crossings if component_of[x.strand_a.curve] == component)
        edges = sum(curve.length for curve in diagram.curves if curve.component == component)
        chi[component] = vertices - edges + sum(1 for face in faces if face.component == component)
    return chi


def test_every_enumerated_rep_lifts(fan):
    for n in range(1, 6):
        for item in enumerate_reps(fan, n):
            label = item.rep.describe()
            diagram = lift(fan, item.rep)
            report = validate_diagram(diagram)
            assert report.accepted, f"lift of {label} rejected"
            assert len(diagram.components) == len(item.rep['m'].cycles(include_fixed=True)), label
            assert report.counts['triplets'] == 2 * n, label
            assert set(_euler_characteristics(diagram).values()) == {2}, f"lift of {label} is not a union of spheres"
            if len(diagram.components) == 1:
                cell = cell_presentation(build_complex(diagram)).presentation
                dual = dual_presentation(diagram)
                assert fingerprint(cell) == fingerprint(dual), f"cell and dual groups of {label} differ"


def test_invalid_rep_is_rejected(fan):
    with pytest.raises(RepresentationRejected):
        lift(fan, rep_from_texts(fan, {'m': '()', 'c': '(1 2)'}, 2))


def test_intransitive_rep_is_rejected(fan):
    with pytest.raises(RepresentationRejected) as excinfo:
        lift(fan, rep_from_texts(fan, {'m': '(1 2)', 'c': '(1 2)'}, 3))
    assert excinfo.value.exit_code == 4


def test_lift_degree_bound(fan):
    with pytest.raises(DegreeTooLarge):
        lift_report(fan, cyclic_rep(fan, 4), max_degree=3)
