# tridom/oracles/certificates.py
"""Certificates, violations and the independent checkers that produce them."""
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from tridom.core.bitsets import iter_bits, lowest, mask_of
from tridom.core.digraph import MultipartiteDigraph, VertexSet, as_vertex_set
from tridom.core.operations import out_mask_of
from tridom.utils.errors import ClassOutOfRange
import logging

log = logging.getLogger(__name__)

CLASSES = "classes"
VERTICES = "vertices"


@dataclass(frozen=True)
class DominationCertificate:
    """
    Proof that `chosen` dominates a digraph.

    `witness[v]` is an in-neighbor of v inside the dominating set, for every vertex v
    that is not itself part of it. When `core_vertices` is set, every vertex outside
    the classes of the core vertices and outside `exceptional_classes` has an
    in-neighbor among the core vertices.
    """
    kind: str
    chosen: tuple[int, ...]
    witness: Mapping[int, int] = field(default_factory=dict)
    core_vertices: VertexSet | None = None
    exceptional_classes: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def has_structure(self) -> bool:
        return self.core_vertices is not None and self.exceptional_classes is not None

    def with_structure(self, core_vertices: Iterable[int],
                       exceptional_classes: Iterable[int]) -> "DominationCertificate":
        return DominationCertificate(self.kind, self.chosen, self.witness,
                                     tuple(sorted(set(core_vertices))),
                                     tuple(sorted(set(exceptional_classes))))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "chosen": list(self.chosen),
            "witness": {str(v): w for v, w in sorted(self.witness.items())},
            "core_vertices": None if self.core_vertices is None else list(self.core_vertices),
            "exceptional_classes": (None if self.exceptional_classes is None
                                    else list(self.exceptional_classes)),
        }


@dataclass(frozen=True)
class Violation:
    """The first (lowest-id) place where a claimed property fails."""
    reason: str
    vertex: int | None = None
    pair: tuple[int, int] | None = None

    def __str__(self) -> str:
        where = f"vertex {self.vertex}" if self.vertex is not None else f"pair {self.pair}"
        return f"{self.reason} at {where}"


def is_certificate(result) -> bool:
    return isinstance(result, DominationCertificate)


def class_union_mask(digraph: MultipartiteDigraph, class_indices: Iterable[int]) -> int:
    mask = 0
    for c in class_indices:
        if not 0 <= c < digraph.num_classes:
            raise ClassOutOfRange(c, digraph.num_classes)
        mask |= digraph.class_mask[c]
    return mask


def check_class_domination(digraph: MultipartiteDigraph,
                           class_indices: Iterable[int]) -> DominationCertificate | Violation:
    """Check that the union of the given classes dominates every vertex outside them."""
    chosen = tuple(sorted(set(class_indices)))
    union = class_union_mask(digraph, chosen)
    witness = {}
    for v in iter_bits(digraph.all_mask & ~union):
        sources = digraph.in_mask[v] & union
        if not sources:
            log.debug(f"{digraph.label}: classes {chosen} miss vertex {v}")
            return Violation("undominated", vertex=v)
        witness[v] = lowest(sources)
    return DominationCertificate(CLASSES, chosen, witness)


def check_vertex_domination(digraph: MultipartiteDigraph,
                            vertices: Iterable[int]) -> DominationCertificate | Violation:
    """Check that the closed out-neighborhoods of the given vertices cover the digraph."""
    chosen = as_vertex_set(digraph, vertices)
    chosen_mask = mask_of(chosen)
    witness = {}
    for v in iter_bits(digraph.all_mask & ~chosen_mask):
        sources = digraph.in_mask[v] & chosen_mask
        if not sources:
            log.debug(f"{digraph.label}: vertices {chosen} miss vertex {v}")
            return Violation("uncovered", vertex=v)
        witness[v] = lowest(sources)
    return DominationCertificate(VERTICES, chosen, witness)


def check_structured_certificate(digraph: MultipartiteDigraph,
                                 certificate: DominationCertificate) -> Violation | None:
    """None when the core vertices dominate everything outside their classes and the exceptional ones."""
    if not certificate.has_structure:
        return Violation("certificate has no core/exceptional breakdown")
    core = mask_of(as_vertex_set(digraph, certificate.core_vertices))
    excused = class_union_mask(digraph, certificate.exceptional_classes)
    excused |= class_union_mask(digraph, {digraph.class_of[v] for v in certificate.core_vertices})
    for v in iter_bits(digraph.all_mask & ~excused):
        if not digraph.in_mask[v] & core:
            return Violation("not dominated by core", vertex=v)
    return None


def check_semi_kernel(digraph: MultipartiteDigraph, vertices: Iterable[int]) -> Violation | None:
    """None when the set is independent and reaches every vertex by a path of length <= 2."""
    chosen = as_vertex_set(digraph, vertices)
    chosen_mask = mask_of(chosen)
    for u in chosen:
        clash = digraph.neighbor_mask(u) & chosen_mask
        if clash:
            return Violation("dependent", pair=(u, lowest(clash)))
    one_step = out_mask_of(digraph, chosen_mask)
    reached = chosen_mask | one_step | out_mask_of(digraph, one_step)
    missing = digraph.all_mask & ~reached
    if missing:
        return Violation("unreachable in two steps", vertex=lowest(missing))
    return None


def dominated_mask(digraph: MultipartiteDigraph, class_indices: Iterable[int],
                   within: int | None = None) -> int:
    """Vertices (inside `within`) that are in, or receive an arc from, the given classes."""
    area = digraph.all_mask if within is None else within
    union = class_union_mask(digraph, class_indices) & area
    return (union | out_mask_of(digraph, union)) & area


def check_independent_set(graph, vertices: Iterable[int], transversal: bool = False) -> Violation | None:
    """None when no two vertices are adjacent (and, if `transversal`, no two share a class)."""
    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < graph.num_vertices:
            return Violation("out of range", vertex=v)
    chosen_mask = mask_of(chosen)
    for u in chosen:
        clash = graph.neighbor_mask(u) & chosen_mask
        if clash:
            return Violation("adjacent", pair=(u, lowest(clash)))
    if transversal:
        seen: dict[int, int] = {}
        for v in chosen:
            c = graph.class_of[v]
            if c in seen:
                return Violation("same class", pair=(seen[c], v))
            seen[c] = v
    return None


def check_side_domination(digraph: MultipartiteDigraph, vertices: Iterable[int],
                          target_class: int) -> Violation | None:
    """None when the open out-neighborhood of `vertices` contains every vertex of the target class."""
    chosen = mask_of(as_vertex_set(digraph, vertices))
    missing = class_union_mask(digraph, [target_class]) & ~out_mask_of(digraph, chosen)
    if missing:
        return Violation("uncovered", vertex=lowest(missing))
    return None
