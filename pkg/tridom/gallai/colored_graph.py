# tridom/gallai/colored_graph.py
from collections.abc import Iterable, Sequence

import networkx as nx

from tridom.core.bitsets import full_mask, iter_bits, mask_of
from tridom.core.digraph import VertexSet
from tridom.utils.errors import DuplicateEdge, InvalidColor, SelfLoop, VertexOutOfRange
import logging

log = logging.getLogger(__name__)

Edge = tuple[int, int]
ColoredEdge = tuple[int, int, int]


class EdgeColoredGraph:
    """Undirected simple graph whose edges carry non-negative integer colors."""

    __slots__ = ("label", "num_vertices", "colors", "adj_mask", "origin_vertex")

    def __init__(self, num_vertices: int, edges: Iterable[ColoredEdge], label: str = "G",
                 origin_vertex: Sequence[int] | None = None):
        """
        Raises:
            VertexOutOfRange, SelfLoop, DuplicateEdge, InvalidColor.
        """
        if num_vertices < 0:
            raise VertexOutOfRange(num_vertices, 0)
        self.label = label
        self.num_vertices = num_vertices
        colors: dict[Edge, int] = {}
        adj = [0] * num_vertices
        for u, v, color in edges:
            u, v, color = int(u), int(v), int(color)
            for w in (u, v):
                if not 0 <= w < num_vertices:
                    raise VertexOutOfRange(w, num_vertices)
            if u == v:
                raise SelfLoop(u)
            key = (min(u, v), max(u, v))
            if key in colors:
                raise DuplicateEdge(key)
            if color < 0:
                raise InvalidColor(key, color)
            colors[key] = color
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.colors: dict[Edge, int] = colors
        self.adj_mask: tuple[int, ...] = tuple(adj)
        self.origin_vertex: tuple[int, ...] = (tuple(origin_vertex) if origin_vertex is not None
                                               else tuple(range(num_vertices)))
        log.debug(f"Built {label}: n={num_vertices}, edges={len(colors)}, colors={self.palette()}")

    @property
    def all_mask(self) -> int:
        return full_mask(self.num_vertices)

    def neighbor_mask(self, v: int) -> int:
        return self.adj_mask[v]

    def color(self, u: int, v: int) -> int | None:
        return self.colors.get((min(u, v), max(u, v)))

    def palette(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors.values())))

    def sorted_edges(self) -> list[ColoredEdge]:
        return [(u, v, c) for (u, v), c in sorted(self.colors.items())]

    def is_complete(self) -> bool:
        return len(self.colors) == self.num_vertices * (self.num_vertices - 1) // 2

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph(label=self.label)
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_edges_from((u, v, {"color": c}) for u, v, c in self.sorted_edges())
        return graph

    def summary_dict(self) -> dict:
        return {
            "label": self.label,
            "n": self.num_vertices,
            "edges": len(self.colors),
            "colors": len(self.palette()),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.colors == other.colors

    def __hash__(self) -> int:
        return hash((self.num_vertices, frozenset(self.colors.items())))

    def __str__(self) -> str:
        return f"EdgeColoredGraph '{self.label}': n={self.num_vertices}, edges={len(self.colors)}"

    __repr__ = __str__


def check_gallai(graph: EdgeColoredGraph) -> tuple[int, int, int] | None:
    """The lexicographically first rainbow triangle (u < v < w), or None."""
    for (u, v), c_uv in sorted(graph.colors.items()):
        later = graph.adj_mask[u] & graph.adj_mask[v] & ~full_mask(v + 1)
        for w in iter_bits(later):
            c_uw, c_vw = graph.colors[(u, w)], graph.colors[(v, w)]
            if len({c_uv, c_uw, c_vw}) == 3:
                log.debug(f"{graph.label}: rainbow triangle {(u, v, w)} colored {(c_uv, c_uw, c_vw)}")
                return (u, v, w)
    return None


def color_subgraph(graph: EdgeColoredGraph, color: int, within: Iterable[int] | None = None) -> nx.Graph:
    """Edges of one color (optionally restricted to a vertex set) as a networkx graph."""
    keep = graph.all_mask if within is None else mask_of(within)
    sub = nx.Graph()
    if within is not None:
        sub.add_nodes_from(iter_bits(keep))
    sub.add_edges_from((u, v) for (u, v), c in graph.colors.items()
                       if c == color and keep >> u & 1 and keep >> v & 1)
    return sub


def mono_components(graph: EdgeColoredGraph, color: int) -> list[VertexSet]:
    """Components of the color class, ordered by lowest vertex; vertices without that color are left out."""
    components = [tuple(sorted(c)) for c in nx.connected_components(color_subgraph(graph, color))]
    return sorted(components)


def induced_subgraph(graph: EdgeColoredGraph, vertices: Iterable[int],
                     label: str | None = None) -> EdgeColoredGraph:
    """G[W] renumbered in ascending order; `origin_vertex` maps back to G's ids."""
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < graph.num_vertices:
            raise VertexOutOfRange(v, graph.num_vertices)
    new_id = {v: i for i, v in enumerate(kept)}
    edges = [(new_id[u], new_id[v], c) for (u, v), c in graph.colors.items()
             if u in new_id and v in new_id]
    name = label if label is not None else f"{graph.label}[{len(kept)}]"
    return EdgeColoredGraph(len(kept), edges, label=name, origin_vertex=kept)
