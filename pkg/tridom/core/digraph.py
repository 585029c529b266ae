# tridom/core/digraph.py
from collections.abc import Iterable, Sequence

import networkx as nx

from tridom.core.bitsets import full_mask, mask_of
from tridom.utils.errors import (
    DuplicateArc,
    DuplicateClassMember,
    EmptyClass,
    IntraClassArc,
    TwoCycle,
    UnassignedVertex,
    VertexOutOfRange,
)
import logging

log = logging.getLogger(__name__)

VertexSet = tuple[int, ...]  # ascending, duplicate-free vertex ids
Arc = tuple[int, int]


class MultipartiteDigraph:
    """An oriented multipartite digraph: independent classes, arcs only between classes."""

    __slots__ = (
        "label", "num_vertices", "classes", "class_of", "arcs",
        "out_lists", "out_mask", "in_mask", "class_mask",
        "origin_vertex", "origin_class",
    )

    def __init__(self, num_vertices: int, classes: Sequence[Iterable[int]], arcs: Iterable[Arc],
                 label: str = "D",
                 origin_vertex: Sequence[int] | None = None,
                 origin_class: Sequence[int] | None = None):
        """
        Build and validate a multipartite digraph. Nothing is mutated afterwards.

        Args:
            num_vertices: Vertices are 0..num_vertices-1.
            classes: Partite classes in index order; each a collection of vertex ids.
            arcs: Ordered pairs (u, v) meaning u sends an arc to v.
            label: Free-form name used in logs and reports.
            origin_vertex: Parent vertex id of each vertex (induced subdigraphs); identity by default.
            origin_class: Parent class index of each class; identity by default.

        Raises:
            VertexOutOfRange, DuplicateClassMember, EmptyClass, UnassignedVertex,
            IntraClassArc, DuplicateArc, TwoCycle.
        """
        if num_vertices < 0:
            raise VertexOutOfRange(num_vertices, 0)
        self.label = label
        self.num_vertices = num_vertices

        class_of = [-1] * num_vertices
        built_classes = []
        for index, members in enumerate(classes):
            members = list(members)
            if not members:
                raise EmptyClass(index)
            for v in members:
                if not 0 <= v < num_vertices:
                    raise VertexOutOfRange(v, num_vertices)
                if class_of[v] != -1:
                    raise DuplicateClassMember(v, index)
                class_of[v] = index
            built_classes.append(tuple(sorted(members)))
        for v, c in enumerate(class_of):
            if c == -1:
                raise UnassignedVertex(v)

        arc_set = set()
        for u, v in arcs:
            for w in (u, v):
                if not 0 <= w < num_vertices:
                    raise VertexOutOfRange(w, num_vertices)
            if class_of[u] == class_of[v]:  # includes self-loops
                raise IntraClassArc((u, v), class_of[u])
            if (u, v) in arc_set:
                raise DuplicateArc((u, v))
            if (v, u) in arc_set:
                raise TwoCycle((v, u))
            arc_set.add((u, v))

        out_lists = [[] for _ in range(num_vertices)]
        out_mask = [0] * num_vertices
        in_mask = [0] * num_vertices
        for u, v in sorted(arc_set):
            out_lists[u].append(v)
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u

        self.classes: tuple[VertexSet, ...] = tuple(built_classes)
        self.class_of: tuple[int, ...] = tuple(class_of)
        self.arcs: frozenset[Arc] = frozenset(arc_set)
        self.out_lists: tuple[VertexSet, ...] = tuple(tuple(lst) for lst in out_lists)
        self.out_mask: tuple[int, ...] = tuple(out_mask)
        self.in_mask: tuple[int, ...] = tuple(in_mask)
        self.class_mask: tuple[int, ...] = tuple(mask_of(c) for c in self.classes)
        self.origin_vertex: tuple[int, ...] = (tuple(origin_vertex) if origin_vertex is not None
                                               else tuple(range(num_vertices)))
        self.origin_class: tuple[int, ...] = (tuple(origin_class) if origin_class is not None
                                              else tuple(range(len(self.classes))))
        log.debug(f"Built {self.label}: n={num_vertices}, t={len(self.classes)}, arcs={len(arc_set)}")

    # --- basic queries ---
    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def all_mask(self) -> int:
        return full_mask(self.num_vertices)

    def adjacent(self, u: int, v: int) -> bool:
        """True if u and v are joined by an arc in either direction."""
        return bool((self.out_mask[u] | self.in_mask[u]) >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self.out_mask[v] | self.in_mask[v]

    def has_singleton_classes(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    # --- conversions ---
    def as_simple(self) -> "SimpleDigraph":
        """Drop the class structure; only lossless when every class is a singleton."""
        if not self.has_singleton_classes():
            log.warning(f"{self.label}: converting non-singleton classes to a SimpleDigraph loses classes.")
        return SimpleDigraph(self.num_vertices, self.arcs, label=self.label)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph(label=self.label)
        for v in range(self.num_vertices):
            graph.add_node(v, part=self.class_of[v])
        graph.add_edges_from(self.sorted_arcs())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.DiGraph, part_attribute: str = "part",
                      label: str = "D") -> "MultipartiteDigraph":
        """Nodes must be 0..n-1; classes come from the node attribute (ascending part value)."""
        n = graph.number_of_nodes()
        parts: dict = {}
        for v, data in graph.nodes(data=True):
            parts.setdefault(data.get(part_attribute, v), []).append(v)
        classes = [parts[key] for key in sorted(parts)]
        return cls(n, classes, graph.edges(), label=label)

    # --- reporting ---
    def summary_dict(self) -> dict:
        return {
            "label": self.label,
            "n": self.num_vertices,
            "t": self.num_classes,
            "arcs": len(self.arcs),
            "class_sizes": [len(c) for c in self.classes],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultipartiteDigraph):
            return NotImplemented
        return (self.num_vertices == other.num_vertices and self.classes == other.classes
                and self.arcs == other.arcs)

    def __hash__(self) -> int:
        return hash((self.num_vertices, self.classes, self.arcs))

    def __str__(self) -> str:
        return (f"MultipartiteDigraph '{self.label}': n={self.num_vertices}, "
                f"t={self.num_classes}, arcs={len(self.arcs)}")

    __repr__ = __str__


class SimpleDigraph(MultipartiteDigraph):
    """Oriented graph viewed as a multipartite digraph whose class i is {i}."""

    __slots__ = ()

    def __init__(self, num_vertices: int, arcs: Iterable[Arc], label: str = "D",
                 origin_vertex: Sequence[int] | None = None):
        # class i is {i}, so class provenance equals vertex provenance
        super().__init__(num_vertices, [[v] for v in range(num_vertices)], arcs,
                         label=label, origin_vertex=origin_vertex, origin_class=origin_vertex)

    def as_multipartite(self) -> MultipartiteDigraph:
        return MultipartiteDigraph(self.num_vertices, self.classes, self.arcs, label=self.label,
                                   origin_vertex=self.origin_vertex)

    def __str__(self) -> str:
        return f"SimpleDigraph '{self.label}': n={self.num_vertices}, arcs={len(self.arcs)}"

    __repr__ = __str__


def validate(num_vertices: int, classes: Sequence[Iterable[int]], arcs: Iterable[Arc],
             label: str = "D") -> MultipartiteDigraph:
    """Validate raw vertex/class/arc lists; errors name the offending element."""
    digraph = MultipartiteDigraph(num_vertices, classes, list(arcs), label=label)
    log.info(f"Validated {digraph}")
    return digraph


def as_multipartite(digraph: MultipartiteDigraph) -> MultipartiteDigraph:
    if isinstance(digraph, SimpleDigraph):
        return digraph.as_multipartite()
    return digraph


def as_vertex_set(digraph: MultipartiteDigraph, vertices: Iterable[int]) -> VertexSet:
    """Normalise to an ascending duplicate-free tuple, checking ranges."""
    unique = set()
    for v in vertices:
        if not 0 <= v < digraph.num_vertices:
            raise VertexOutOfRange(v, digraph.num_vertices)
        unique.add(v)
    return tuple(sorted(unique))
