# diagram_drawing.py

import logging
from collections import defaultdict
from dataclasses import dataclass

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402
import numpy as np  # noqa: E402

from config import RENDER_DPI, RENDER_HASH_SALT, RENDER_SEED  # noqa: E402
from diagram import Diagram, Passage, require_accepted  # noqa: E402

logger = logging.getLogger(__name__)

########################################
# Drawing constants
########################################
COMPONENT_SPACING = 3.0
BEND = 0.18
LOOP_RADIUS = 0.12
MARK_OFFSET = 0.08
PALETTE = matplotlib.colormaps['tab20']  # sister pair k uses shades 2k and 2k+1


@dataclass
class RenderSummary:
    curves: int
    colors: int
    crossings: int
    marked: int
    components: int


def _unit(vector):
    norm = np.hypot(*vector)
    return vector / norm if norm else np.array([1.0, 0.0])


def _left_normal(direction):
    return np.array([-direction[1], direction[0]])


def layout_component(diagram: Diagram, component: str, seed: int = RENDER_SEED) -> dict[str, np.ndarray]:
    """Force-directed positions of the crossings of one sphere component."""
    graph = nx.Graph()
    crossings = [x for x in diagram.crossings if diagram.curve_map[x.strand_a.curve].component == component]
    graph.add_nodes_from(x.id for x in crossings)
    for curve in diagram.curves:
        if curve.component != component:
            continue
        for arc in range(curve.length):
            start = diagram.crossing_at(curve.id, arc).id
            end = diagram.crossing_at(curve.id, arc + 1).id
            if start != end:
                graph.add_edge(start, end)
    positions = nx.spring_layout(graph, seed=seed)
    return {node: np.asarray(xy, dtype=float) for node, xy in positions.items()}


def arc_points(start, end, slot: int):
    """
    Three control points for an arc. Parallel arcs between the same crossings
    get alternating bends; arcs returning to their crossing become loops.
    """
    if np.allclose(start, end):
        angle = 0.6 * slot
        centre = start + LOOP_RADIUS * np.array([np.cos(angle), np.sin(angle)])
        return np.array([start, centre + LOOP_RADIUS * _left_normal(_unit(centre - start)), end])
    direction = _unit(end - start)
    sign = 1 if slot % 2 == 0 else -1
    bend = BEND * ((slot + 1) // 2) * sign
    middle = (start + end) / 2 + bend * _left_normal(direction)
    return np.array([start, middle, end])


def render_diagram(diagram: Diagram, out_path: str, seed: int = RENDER_SEED, dpi: int = RENDER_DPI) -> RenderSummary:
    require_accepted(diagram)
    matplotlib.rcParams['svg.hashsalt'] = RENDER_HASH_SALT
    matplotlib.rcParams['svg.fonttype'] = 'none'

    pair_index = {}
    for index, (first, second) in enumerate(diagram.sisters):
        pair_index[first] = (2 * index, '-')
        pair_index[second] = (2 * index + 1, '--')

    positions = {}
    for offset, component in enumerate(diagram.components):
        for node, xy in layout_component(diagram, component, seed).items():
            positions[node] = xy + np.array([offset * COMPONENT_SPACING, 0.0])

    fig, ax = plt.subplots(figsize=(4 * max(1, len(diagram.components)), 4))
    ax.set_aspect('equal')
    ax.axis('off')

    slots = defaultdict(int)
    midpoints = {}
    for curve in diagram.curves:
        color_index, style = pair_index[curve.id]
        color = PALETTE(color_index % PALETTE.N)
        for arc in range(curve.length):
            start_id = diagram.crossing_at(curve.id, arc).id
            end_id = diagram.crossing_at(curve.id, arc + 1).id
            key = tuple(sorted((start_id, end_id)))
            points = arc_points(positions[start_id], positions[end_id], slots[key])
            slots[key] += 1
            ax.plot(points[:, 0], points[:, 1], linestyle=style, color=color, linewidth=1.2, gid=f"arc-{curve.id}-{arc}")
            midpoints[Passage(curve.id, arc)] = (points[1], _unit(points[2] - points[0]))
            if arc == 0:
                ax.annotate(
                    '', xy=points[1], xytext=points[0],
                    arrowprops=dict(arrowstyle='->', color=color, linewidth=1.2),
                )

    for crossing in diagram.crossings:
        x, y = positions[crossing.id]
        ax.plot([x], [y], 'o', color='black', markersize=3)
        ax.annotate(crossing.id, (x, y), fontsize=5, xytext=(2, 2), textcoords='offset points')

    for point in diagram.marked:
        middle, direction = midpoints[Passage(point.curve, point.arc)]
        side = 1 if point.side == 'L' else -1
        where = middle + side * MARK_OFFSET * _left_normal(direction)
        ax.plot([where[0]], [where[1]], marker='*', color='crimson', markersize=7)
        ax.annotate(point.id, where, fontsize=6, color='crimson', xytext=(3, -6), textcoords='offset points')

    ax.set_title(diagram.name, fontsize=8)
    fig.savefig(out_path, format='svg', dpi=dpi, metadata={'Date': None})
    plt.close(fig)

    summary = RenderSummary(
        curves=len(diagram.curves),
        colors=len({pair_index[curve.id][0] % PALETTE.N for curve in diagram.curves}),
        crossings=len(diagram.crossings),
        marked=len(diagram.marked),
        components=len(diagram.components),
    )
    logger.info(f"Rendered '{diagram.name}' to {out_path}: {summary}")
    return summary
