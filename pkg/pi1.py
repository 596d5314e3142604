# pi1.py

"""
Fundamental-group presentations of filling Johansson surfaces.

The surface is the image of the diagram: triplets are its vertices, sister
arc pairs its edges and the diagram faces its 2-cells. Two presentations are
produced, the cell-complex presentation (any accepted diagram, optionally
with the faces of marked points punctured) and the dual-loop presentation
(single sphere domains only).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx

from diagram import Diagram, Face, Passage, marked_faces, require_accepted, sister_arc_pairs, trace_faces, triplets
from errors import MultiComponentDomain, SkeletonDisconnected, ValidationError
from fpgroups import Presentation, Word, parse_presentation  # noqa: F401 (re-exported)
from utils import natural_key

logger = logging.getLogger(__name__)

TREE_STRATEGIES = ('bfs', 'dfs')


@dataclass(frozen=True)
class Edge:
    id: str
    index: int
    curve: str
    arc: int
    sister: str
    tail: str
    head: str


@dataclass
class CellComplex:
    diagram: Diagram
    vertices: list[str]
    edges: list[Edge]
    faces: list[Face]
    boundaries: dict[str, Word] = field(default_factory=dict)
    marked: dict[str, str] = field(default_factory=dict)  # marked point -> face id

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    @cached_property
    def skeleton(self) -> nx.Graph:
        """1-skeleton with parallel edges collapsed onto the smallest edge index."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            if edge.tail != edge.head and not graph.has_edge(edge.tail, edge.head):
                graph.add_edge(edge.tail, edge.head, index=edge.index)
        return graph

    def marked_face_ids(self) -> list[str]:
        return sorted(set(self.marked.values()), key=natural_key)

    def counts(self) -> dict[str, int]:
        return {
            'vertices': len(self.vertices),
            'edges': len(self.edges),
            'faces': len(self.faces),
            'euler_characteristic': self.euler_characteristic,
        }


class CellPresentation(NamedTuple):
    presentation: Presentation
    meridians: dict[str, Word]
    tree: list[str]


def build_complex(diagram: Diagram) -> CellComplex:
    require_accepted(diagram)
    faces = trace_faces(diagram)
    vertex_of: dict[Passage, str] = {}
    vertices = []
    for triplet in triplets(diagram):
        vertices.append(triplet.id)
        for crossing_id in triplet.crossings:
            crossing = diagram.crossing_map[crossing_id]
            vertex_of[crossing.strand_a] = triplet.id
            vertex_of[crossing.strand_b] = triplet.id

    edges = []
    letter_of: dict[tuple[str, int], int] = {}
    for index, pair in enumerate(sister_arc_pairs(diagram), start=1):
        curve, arc = pair.first
        length = diagram.curve_map[curve].length
        tail = vertex_of[Passage(curve, arc)]
        head = vertex_of[Passage(curve, (arc + 1) % length)]
        edges.append(Edge(f"e{index}", index, curve, arc, pair.second[0], tail, head))
        letter_of[pair.first] = index
        letter_of[pair.second] = index

    boundaries = {
        face.id: tuple(letter_of[(d.curve, d.arc)] * d.direction for d in face.darts)
        for face in faces
    }
    complex_ = CellComplex(
        diagram=diagram,
        vertices=vertices,
        edges=edges,
        faces=faces,
        boundaries=boundaries,
        marked={point: face.id for point, face in marked_faces(diagram, faces).items()},
    )
    if not nx.is_connected(complex_.skeleton):
        parts = nx.number_connected_components(complex_.skeleton)
        raise SkeletonDisconnected(f"1-skeleton of '{diagram.name}' has {parts} components")
    logger.info(f"Built cell complex of '{diagram.name}': {complex_.counts()}")
    return complex_


def spanning_tree(complex_: CellComplex, strategy: str = 'bfs') -> list[int]:
    """Edge indices of a spanning tree grown from the first vertex."""
    if strategy not in TREE_STRATEGIES:
        raise ValueError(f"unknown tree strategy '{strategy}', expected one of {', '.join(TREE_STRATEGIES)}")
    root = complex_.vertices[0]
    grow = nx.bfs_edges if strategy == 'bfs' else nx.dfs_edges
    graph = complex_.skeleton
    return sorted(graph.edges[u, v]['index'] for u, v in grow(graph, root))


def cell_presentation(complex_: CellComplex, punctured: Iterable[str] = (), tree: str = 'bfs') -> CellPresentation:
    """
    Presentation of pi1 of the surface with the given faces removed.

    Generators are the edges off the spanning tree; every face that is not
    punctured contributes its boundary word with the tree edges deleted.
    Meridian words are the boundary words of punctured marked faces.
    """
    punctured = set(punctured)
    known = {face.id for face in complex_.faces}
    unknown = punctured - known
    if unknown:
        raise ValidationError(f"cannot puncture unknown faces {', '.join(sorted(unknown, key=natural_key))}")
    unmarked = punctured - set(complex_.marked_face_ids())
    if unmarked:
        raise ValidationError(f"faces {', '.join(sorted(unmarked, key=natural_key))} carry no marked point")

    tree_edges = set(spanning_tree(complex_, tree))
    generators = [edge for edge in complex_.edges if edge.index not in tree_edges]
    renumber = {edge.index: k for k, edge in enumerate(generators, start=1)}

    def reduce(word: Word) -> Word:
        return tuple(renumber[abs(x)] * (1 if x > 0 else -1) for x in word if abs(x) in renumber)

    relators = []
    for face in complex_.faces:
        if face.id in punctured:
            continue
        word = reduce(complex_.boundaries[face.id])
        if word:
            relators.append(word)

    meridians = {
        point: reduce(complex_.boundaries[face_id])
        for point, face_id in sorted(complex_.marked.items(), key=lambda item: natural_key(item[0]))
        if face_id in punctured
    }
    name = f"{complex_.diagram.name}_cell"
    presentation = Presentation(name, tuple(edge.id for edge in generators), tuple(relators))
    logger.info(
        f"Cell presentation '{name}': {presentation.rank} generators, {len(relators)} relators, "
        f"{len(punctured)} punctured faces, tree={tree}"
    )
    return CellPresentation(presentation, meridians, [f"e{index}" for index in sorted(tree_edges)])


def dual_presentation(diagram: Diagram) -> Presentation:
    """
    Presentation generated by the dual loops of the generator-side curves.

    Each triplet contributes one relator: walking its chain, every jump off
    curve c emits c# when c is generator-side, else the inverse of the
    sister's letter.
    """
    if len(diagram.components) != 1:
        raise MultiComponentDomain(
            f"'{diagram.name}' has {len(diagram.components)} domain components; use the cell presentation"
        )
    require_accepted(diagram)
    names = sorted(diagram.generator_side, key=natural_key)
    index = {curve: k for k, curve in enumerate(names, start=1)}

    relators = []
    for triplet in triplets(diagram):
        word = []
        for exit_passage in triplet.exits:
            curve = exit_passage.curve
            if curve in index:
                word.append(index[curve])
            else:
                word.append(-index[diagram.sister_map[curve]])
        relators.append(tuple(word))

    presentation = Presentation(f"{diagram.name}_dual", tuple(f"{curve}#" for curve in names), tuple(relators))
    logger.info(f"Dual presentation '{presentation.name}': {presentation.rank} generators, {len(relators)} relators")
    return presentation
