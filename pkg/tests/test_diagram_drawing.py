import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import numpy as np

from diagram_drawing import arc_points, layout_component, render_diagram


def test_base_render_summary(base, tmp_path):
    out = tmp_path / 'base.svg'
    summary = render_diagram(base, str(out))
    assert summary.curves == 2
    assert summary.colors == 2, "Each sister pair should get two shades"
    assert summary.crossings == 6
    assert summary.marked == 2
    assert summary.components == 1
    assert out.read_text().lstrip().startswith('<?xml')


def test_components_are_drawn_side_by_side(irregular_lift, tmp_path):
    summary = render_diagram(irregular_lift, str(tmp_path / 'irregular.svg'))
    assert summary.components == 2
    assert summary.curves == 6


def test_layout_is_seeded(cyclic_lift):
    diagram = cyclic_lift(3)
    first = layout_component(diagram, '1', seed=3)
    second = layout_component(diagram, '1', seed=3)
    assert set(first) == {x.id for x in diagram.crossings}
    assert all(np.allclose(first[node], second[node]) for node in first)


def test_parallel_arcs_bend_apart():
    start, end = np.array([0.0, 0.0]), np.array([1.0, 0.0])
    straight = arc_points(start, end, 0)
    up = arc_points(start, end, 1)
    down = arc_points(start, end, 2)
    assert np.allclose(straight[1], [0.5, 0.0])
    assert up[1][1] * down[1][1] < 0
    loop = arc_points(start, start, 0)
    assert np.allclose(loop[0], loop[2])
    assert not np.allclose(loop[1], start)
