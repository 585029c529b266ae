# tridom/core/operations.py
from collections.abc import Iterable

from tridom.core.bitsets import bits, iter_bits, lowest, mask_of
from tridom.core.digraph import MultipartiteDigraph, SimpleDigraph, VertexSet, as_vertex_set
import logging

log = logging.getLogger(__name__)


def out_mask_of(digraph: MultipartiteDigraph, mask: int) -> int:
    """N_+ of a vertex mask, as a mask."""
    result = 0
    for u in iter_bits(mask):
        result |= digraph.out_mask[u]
    return result


def closed_out_mask_of(digraph: MultipartiteDigraph, mask: int) -> int:
    return mask | out_mask_of(digraph, mask)


def out_neighborhood(digraph: MultipartiteDigraph, vertices: Iterable[int],
                     closed: bool = False) -> VertexSet:
    """
    Out-neighborhood N_+(U), or the closed version U ∪ N_+(U).

    Args:
        digraph: The digraph.
        vertices: The set U.
        closed: Include U itself.

    Returns:
        Ascending vertex tuple.

    Raises:
        VertexOutOfRange: If some vertex of U is not in the digraph.
    """
    mask = mask_of(as_vertex_set(digraph, vertices))
    result = closed_out_mask_of(digraph, mask) if closed else out_mask_of(digraph, mask)
    return bits(result)


def in_neighborhood(digraph: MultipartiteDigraph, vertices: Iterable[int]) -> VertexSet:
    result = 0
    for u in as_vertex_set(digraph, vertices):
        result |= digraph.in_mask[u]
    return bits(result)


def underlying_adjacent(digraph: MultipartiteDigraph, u: int, v: int) -> bool:
    return digraph.adjacent(u, v)


def find_cyclic_triangle(digraph: MultipartiteDigraph,
                         within: int | None = None) -> tuple[int, int, int] | None:
    """
    Some directed 3-cycle (u, v, w) with u its smallest vertex, or None.

    Args:
        digraph: The digraph.
        within: Optional vertex mask restricting the search.
    """
    allowed = digraph.all_mask if within is None else within
    return cyclic_triangle_in(digraph.out_mask, digraph.in_mask, allowed)


def cyclic_triangle_in(out_mask, in_mask, allowed: int) -> tuple[int, int, int] | None:
    """Same search on raw adjacency masks (used while instances are still being built)."""
    for u in iter_bits(allowed):
        higher = allowed & ~((1 << (u + 1)) - 1)
        for v in iter_bits(out_mask[u] & higher):
            closing = out_mask[v] & in_mask[u] & higher
            if closing:
                return (u, v, lowest(closing))
    return None


def induced_subdigraph(digraph: MultipartiteDigraph, vertices: Iterable[int],
                       label: str | None = None) -> MultipartiteDigraph:
    """
    D[W] with vertices renumbered 0..|W|-1 in ascending order of their ids in D.

    Classes are the nonempty intersections of D's classes with W, in D's class order.
    `origin_vertex` / `origin_class` of the result map back to D's ids.
    """
    kept = as_vertex_set(digraph, vertices)
    new_id = {v: i for i, v in enumerate(kept)}
    kept_mask = mask_of(kept)

    classes = []
    origin_class = []
    for index, members in enumerate(digraph.classes):
        restricted = [new_id[v] for v in members if kept_mask >> v & 1]
        if restricted:
            classes.append(restricted)
            origin_class.append(index)

    arcs = [(new_id[u], new_id[v]) for u in kept for v in iter_bits(digraph.out_mask[u] & kept_mask)]
    name = label if label is not None else f"{digraph.label}[{len(kept)}]"
    if isinstance(digraph, SimpleDigraph):
        return SimpleDigraph(len(kept), arcs, label=name, origin_vertex=kept)
    return MultipartiteDigraph(len(kept), classes, arcs, label=name,
                               origin_vertex=kept, origin_class=origin_class)
