import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import logging

import pytest

from errors import ParseError, SeamMismatch, ValidationError
from fan import SeamCrossing, base_diagram, parse_fan, serialize_fan


def test_bundled_fan_header(fan):
    assert fan.name == 'banchoff'
    assert fan.seam == 4
    assert fan.curve_ids == ('alpha', 'beta')
    assert fan.generators == ('m', 'c')
    assert len(fan.crossings) == 6
    assert len(fan.relations) == 1


def test_unrolled_curves(fan):
    alpha = fan.base_curves['alpha']
    beta = fan.base_curves['beta']
    assert alpha.crossings == ('C4', 'C1', 'C2', 'C5', 'C1', 'C4')
    assert alpha.arc_shifts == (0, 0, 0, 1, 0, -1)
    assert alpha.arrow_shift == 0
    assert beta.crossings == ('C6', 'C3', 'C3', 'C6', 'C2', 'C5')
    assert beta.arc_shifts == (0, -1, 0, 0, 0, 1)
    assert beta.arrow_shift == 1
    assert alpha.winding == 0 and beta.winding == 0, "Closed base curves cross the seam back and forth"


def test_seam_crossings_at_the_poles(fan):
    assert fan.seam_crossing(1) == SeamCrossing('alpha', 5, 0, -1)
    assert fan.seam_crossing(4) == SeamCrossing('beta', 1, 0, -1)


def test_dual_endpoints_are_sister_points(fan):
    (dual,) = fan.duals
    assert dual.name == 'c'
    assert fan.locate_gap(dual.a_end) == (3, 0)
    assert fan.locate_gap(dual.b_end) == (3, 0)


def test_serialize_round_trip(fan):
    assert parse_fan(serialize_fan(fan)) == fan


def test_seam_mismatch_is_rejected(fan_text):
    broken = fan_text.replace('segment s2 alpha L2 -> L1', 'segment s2 alpha L2 -> L3')
    with pytest.raises(SeamMismatch):
        parse_fan(broken)


def test_every_sister_pair_needs_a_dual(fan_text):
    without_dual = "\n".join(line for line in fan_text.splitlines() if not line.startswith(('dual ', 'relation ')))
    with pytest.raises(ParseError) as excinfo:
        parse_fan(without_dual)
    assert "no dual descriptor" in str(excinfo.value)


def test_dual_endpoints_must_be_sister_points(fan_text):
    shifted = fan_text.replace('dual c alpha s1:3 0 s4:1 -1', 'dual c alpha s1:2 0 s4:1 -1')
    with pytest.raises(ParseError) as excinfo:
        parse_fan(shifted)
    assert "not sister points" in str(excinfo.value)


def test_unknown_statement_suggests_a_keyword(fan_text):
    typo = fan_text.replace('segment s1', 'segmnt s1')
    with pytest.raises(ParseError) as excinfo:
        parse_fan(typo)
    assert "did you mean 'segment'" in str(excinfo.value)
    assert excinfo.value.exit_code == 2


def test_fan_without_relations_only_warns(fan_text, caplog):
    text = "\n".join(line for line in fan_text.splitlines() if not line.startswith('relation ')) + "\n"
    with caplog.at_level(logging.WARNING, logger='fan'):
        fan = parse_fan(text)
    assert fan.relations == ()
    assert fan.generators == ('m', 'c')
    assert "declares no relations" in caplog.text


def test_curve_without_crossings_cannot_be_glued(fan_text):
    text = fan_text + (
        "segment s5 gamma closed -> closed :\n"
        "segment s6 delta closed -> closed :\n"
        "chain gamma : s5\n"
        "chain delta : s6\n"
        "arrow gamma s5:0\n"
        "arrow delta s6:0\n"
        "sister gamma delta\n"
        "dual d gamma s5:0 0 s6:0 0\n"
    )
    fan = parse_fan(text)
    assert fan.base_curves['gamma'].length == 0
    with pytest.raises(ValidationError) as excinfo:
        base_diagram(fan)
    assert "gamma has no passages" in str(excinfo.value)
