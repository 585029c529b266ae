# tridom/gallai/cover.py
"""Covering a Gallai-colored graph by monochromatic components."""
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from tridom.core.bitsets import bits, iter_bits, lowest
from tridom.core.digraph import MultipartiteDigraph, VertexSet
from tridom.core.operations import find_cyclic_triangle
from tridom.gallai.colored_graph import (
    EdgeColoredGraph,
    check_gallai,
    color_subgraph,
    induced_subgraph,
    mono_components,
)
from tridom.oracles.certificates import Violation
from tridom.oracles.independence import alpha_exact
from tridom.solvers.bounds import g_bound
from tridom.solvers.general import dominate_general
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import ColorClash, InternalContradiction, NotGallai
import logging

log = logging.getLogger(__name__)


class CoverPart(NamedTuple):
    color: int | None  # None only for a lone vertex
    vertices: VertexSet


@dataclass(frozen=True)
class MonochromaticCover:
    parts: tuple[CoverPart, ...]

    @property
    def size(self) -> int:
        return len(self.parts)

    def covered(self) -> set[int]:
        return {v for part in self.parts for v in part.vertices}

    def to_dict(self) -> dict:
        return {"parts": [{"color": p.color, "vertices": list(p.vertices)} for p in self.parts]}


class OrientedNeighborhood(NamedTuple):
    digraph: MultipartiteDigraph
    class_colors: tuple[int, ...]


class LargeComponentCheck(NamedTuple):
    holds: bool
    max_component: int
    threshold: float


def _require_gallai(graph: EdgeColoredGraph) -> None:
    witness = check_gallai(graph)
    if witness is not None:
        log.error(f"{graph.label}: rainbow triangle {witness}")
        raise NotGallai(witness)


def orient_around_vertex(graph: EdgeColoredGraph, v: int) -> OrientedNeighborhood:
    """
    Digraph on the neighbors of v: class i holds the neighbors joined to v in the i-th color
    present at v, and an edge of color c between two classes points out of the class of color c.
    Edges inside a class are dropped. Vertex ids follow ascending G ids; `origin_vertex` maps back.

    Raises:
        ColorClash: A cross-class edge colored with neither class color.
        InternalContradiction: The result has a cyclic triangle.
    """
    neighbors = bits(graph.adj_mask[v])
    new_id = {x: i for i, x in enumerate(neighbors)}
    edge_color = {x: graph.color(v, x) for x in neighbors}
    class_colors = tuple(sorted(set(edge_color.values())))
    class_index = {c: i for i, c in enumerate(class_colors)}
    classes = [[] for _ in class_colors]
    for x in neighbors:
        classes[class_index[edge_color[x]]].append(new_id[x])

    arcs = []
    for x in neighbors:
        for y in iter_bits(graph.adj_mask[x] & graph.adj_mask[v] & ~((1 << (x + 1)) - 1)):
            cx, cy = edge_color[x], edge_color[y]
            if cx == cy:
                continue
            c = graph.color(x, y)
            if c == cx:
                arcs.append((new_id[x], new_id[y]))
            elif c == cy:
                arcs.append((new_id[y], new_id[x]))
            else:
                raise ColorClash((x, y), c, (cx, cy))

    digraph = MultipartiteDigraph(len(neighbors), classes, arcs, label=f"{graph.label}@{v}",
                                  origin_vertex=neighbors)
    triangle = find_cyclic_triangle(digraph)
    if triangle is not None:
        raise InternalContradiction(f"{digraph.label}: cyclic triangle {triangle} after orientation")
    return OrientedNeighborhood(digraph, class_colors)


def _spanning_part(graph: EdgeColoredGraph) -> CoverPart:
    for color in graph.palette():
        components = mono_components(graph, color)
        if components and len(components[0]) == graph.num_vertices:
            return CoverPart(color, tuple(range(graph.num_vertices)))
    raise InternalContradiction(f"{graph.label}: complete graph without a spanning monochromatic component")


def _cover(graph: EdgeColoredGraph, settings: Settings, depth: int) -> list[CoverPart]:
    n = graph.num_vertices
    if n == 0:
        return []
    if n == 1:
        return [CoverPart(None, (0,))]
    if graph.is_complete():
        return [_spanning_part(graph)]

    v = 0
    parts = []
    if graph.adj_mask[v] == 0:
        parts.append(CoverPart(None, (v,)))
    else:
        oriented = orient_around_vertex(graph, v)
        h = oriented.digraph
        chosen, _ = dominate_general(h, settings=settings)
        members = {c: {v} | {h.origin_vertex[a] for a in h.classes[c]} for c in chosen}
        chosen_mask = 0
        for c in chosen:
            chosen_mask |= h.class_mask[c]
        for w in iter_bits(h.all_mask & ~chosen_mask):
            owner = next(c for c in chosen if h.in_mask[w] & h.class_mask[c])
            members[owner].add(h.origin_vertex[w])
        parts.extend(CoverPart(oriented.class_colors[c], tuple(sorted(members[c]))) for c in chosen)

    rest = graph.all_mask & ~graph.adj_mask[v] & ~1
    if rest:
        sub = induced_subgraph(graph, bits(rest), label=f"{graph.label}/x")
        for part in _cover(sub, settings, depth + 1):
            parts.append(CoverPart(part.color, tuple(sub.origin_vertex[x] for x in part.vertices)))
    log.debug(f"{'  ' * depth}{graph.label}: {len(parts)} parts")
    return parts


def check_cover(graph: EdgeColoredGraph, cover: MonochromaticCover) -> Violation | None:
    """None when every part is connected in its color and the parts cover every vertex."""
    for index, part in enumerate(cover.parts):
        if part.color is None:
            if len(part.vertices) != 1:
                return Violation(f"part {index} has no color but {len(part.vertices)} vertices",
                                 vertex=part.vertices[0] if part.vertices else None)
            continue
        if not part.vertices:
            return Violation(f"part {index} is empty")
        if not nx.is_connected(color_subgraph(graph, part.color, within=part.vertices)):
            return Violation(f"part {index} is not connected in color {part.color}", vertex=part.vertices[0])
    missing = set(range(graph.num_vertices)) - cover.covered()
    if missing:
        return Violation("uncovered", vertex=min(missing))
    return None


def cover_by_mono_components(graph: EdgeColoredGraph, settings: Settings | None = None) -> MonochromaticCover:
    """
    At most g(alpha) monochromatic components covering a Gallai-colored graph.

    Around the lowest vertex v, the neighbors are oriented into a triangle-free multipartite
    digraph whose dominating classes become parts through v; the non-neighbors are covered
    recursively. A complete graph is covered by one spanning component.

    Raises:
        NotGallai, BudgetExceeded, InternalContradiction.
    """
    settings = resolve(settings)
    _require_gallai(graph)
    cover = MonochromaticCover(tuple(_cover(graph, settings, 0)))
    violation = check_cover(graph, cover)
    if violation is not None:
        raise InternalContradiction(f"{graph.label}: cover fails verification ({violation})")
    alpha = alpha_exact(graph, settings)
    if cover.size > g_bound(alpha):
        raise InternalContradiction(f"{graph.label}: {cover.size} parts exceed g({alpha})")
    log.info(f"{graph.label}: {cover.size} monochromatic parts (alpha={alpha})")
    return cover


def largest_mono_component(graph: EdgeColoredGraph) -> int:
    sizes = [len(c) for color in graph.palette() for c in mono_components(graph, color)]
    return max(sizes, default=1 if graph.num_vertices else 0)


def check_largecomp_bound(graph: EdgeColoredGraph, settings: Settings | None = None) -> LargeComponentCheck:
    """
    Compare the largest monochromatic component with n / (alpha^2 + alpha - 1).

    Raises:
        NotGallai.
    """
    _require_gallai(graph)
    n = graph.num_vertices
    if n == 0:
        return LargeComponentCheck(True, 0, 0.0)
    alpha = alpha_exact(graph, settings)
    threshold = n / (alpha * alpha + alpha - 1)
    largest = largest_mono_component(graph)
    result = LargeComponentCheck(largest >= threshold, largest, threshold)
    if not result.holds:
        log.warning(f"{graph.label}: largest component {largest} below {threshold:.3f}")
    return result
