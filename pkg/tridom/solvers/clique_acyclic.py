# tridom/solvers/clique_acyclic.py
"""Vertex domination for clique-acyclic digraphs, alpha <= 2 digraphs and acyclic orientations."""
from collections.abc import Iterable, Sequence
from typing import NamedTuple

import networkx as nx

from tridom.core.bitsets import bits, iter_bits, lowest, mask_of
from tridom.core.digraph import MultipartiteDigraph, VertexSet, as_vertex_set
from tridom.core.operations import closed_out_mask_of, induced_subdigraph
from tridom.oracles.certificates import DominationCertificate, check_vertex_domination
from tridom.oracles.independence import alpha_exact
from tridom.solvers.bounds import f_bound
from tridom.solvers.preconditions import require_alpha_at_most, require_triangle_free
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import InternalContradiction, NotAClique, NotACover, NotAcyclic
import logging

log = logging.getLogger(__name__)


class VertexDomination(NamedTuple):
    vertices: VertexSet
    certificate: DominationCertificate


def _verified(digraph: MultipartiteDigraph, vertices: Iterable[int]) -> VertexDomination:
    result = check_vertex_domination(digraph, vertices)
    if not isinstance(result, DominationCertificate):
        log.error(f"{digraph.label}: vertices {sorted(set(vertices))} fail verification ({result})")
        raise InternalContradiction(f"{digraph.label}: chosen vertices do not dominate: {result}")
    return VertexDomination(result.chosen, result)


def semi_kernel(digraph: MultipartiteDigraph) -> VertexSet:
    """
    An independent set reaching every vertex by a directed path of length at most 2.

    Take the lowest vertex x, solve D - N̂_+(x), and add x unless the answer already
    sends an arc to x. Run iteratively: the removal order first, then the unwinding.
    """
    remaining = digraph.all_mask
    order = []
    while remaining:
        x = lowest(remaining)
        order.append(x)
        remaining &= ~(digraph.out_mask[x] | (1 << x))
    kernel = 0
    for x in reversed(order):
        if not digraph.in_mask[x] & kernel:
            kernel |= 1 << x
    return bits(kernel)


def _clique_acyclic(digraph: MultipartiteDigraph, depth: int) -> set[int]:
    if digraph.num_vertices == 0:
        return set()
    kernel = semi_kernel(digraph)
    kernel_mask = mask_of(kernel)
    rest = digraph.all_mask & ~closed_out_mask_of(digraph, kernel_mask)
    groups: dict[int, list[int]] = {u: [] for u in kernel}
    for w in iter_bits(rest):
        free = kernel_mask & ~digraph.neighbor_mask(w)
        if not free:
            raise InternalContradiction(f"{digraph.label}: vertex {w} is adjacent to the whole semi-kernel")
        groups[lowest(free)].append(w)

    result = set(kernel)
    for u, members in groups.items():
        if members:
            sub = induced_subdigraph(digraph, members, label=f"{digraph.label}/{u}")
            result.update(sub.origin_vertex[x] for x in _clique_acyclic(sub, depth + 1))
    log.debug(f"{'  ' * depth}{digraph.label}: semi-kernel {kernel}, {len(result)} vertices so far")
    return result


def dominate_clique_acyclic(digraph: MultipartiteDigraph,
                            settings: Settings | None = None) -> VertexDomination:
    """
    At most f(alpha) dominating vertices.

    The input must have no cyclic triangle; vertices that are not dominated by the
    semi-kernel are grouped by their lowest nonadjacent semi-kernel vertex and each
    group is solved recursively.

    Raises:
        PreconditionTriangle, BudgetExceeded, InternalContradiction.
    """
    settings = resolve(settings)
    require_triangle_free(digraph)
    alpha = alpha_exact(digraph, settings)
    result = _verified(digraph, _clique_acyclic(digraph, 0))
    if len(result.vertices) > f_bound(alpha):
        raise InternalContradiction(f"{digraph.label}: {len(result.vertices)} vertices exceed f({alpha})")
    log.info(f"{digraph.label}: {len(result.vertices)} dominating vertices (alpha={alpha})")
    return result


def _tournament_source(digraph: MultipartiteDigraph, mask: int) -> int:
    sources = [v for v in iter_bits(mask) if not digraph.in_mask[v] & mask]
    if not sources:
        raise InternalContradiction(f"{digraph.label}: no source among {bits(mask)}")
    return sources[0]


def _rebuild_alpha2(digraph: MultipartiteDigraph, p: int, area: int) -> list[int]:
    others = area & ~(1 << p)
    sent_to = others & digraph.out_mask[p]
    sends = others & digraph.in_mask[p]
    silent = others & ~sent_to & ~sends
    chosen = [p]
    if silent:
        chosen.append(_tournament_source(digraph, silent))
    missed = area & ~closed_out_mask_of(digraph, mask_of(chosen))
    if missed:
        chosen.append(_tournament_source(digraph, missed))
    if area & ~closed_out_mask_of(digraph, mask_of(chosen)):
        raise InternalContradiction(f"{digraph.label}: rebuilt vertices {chosen} miss part of the prefix up to {p}")
    return chosen


def dominate_alpha2(digraph: MultipartiteDigraph, settings: Settings | None = None) -> VertexDomination:
    """
    At most three dominating vertices when alpha <= 2.

    Raises:
        PreconditionTriangle, PreconditionAlpha, InternalContradiction.
    """
    require_triangle_free(digraph)
    require_alpha_at_most(digraph, 2, settings)
    if digraph.num_vertices == 0:
        return _verified(digraph, ())
    chosen = [0]
    prefix = 1
    for p in range(1, digraph.num_vertices):
        area = prefix | (1 << p)
        if not closed_out_mask_of(digraph, mask_of(chosen)) >> p & 1:
            chosen = _rebuild_alpha2(digraph, p, area)
            log.debug(f"{digraph.label}: rebuilt around {p} -> {chosen}")
        prefix = area
    result = _verified(digraph, chosen)
    if len(result.vertices) > 3:
        raise InternalContradiction(f"{digraph.label}: {len(result.vertices)} vertices exceed 3")
    return result


def dominate_acyclic_orientation(digraph: MultipartiteDigraph) -> VertexDomination:
    """
    Layered sources: take every source of what is left, then drop their closed out-neighborhood.

    Raises:
        NotAcyclic: With the arcs of one directed cycle.
    """
    graph = digraph.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [(u, v) for u, v, *_ in nx.find_cycle(graph)]
        raise NotAcyclic(cycle)
    remaining = digraph.all_mask
    chosen = 0
    layers = 0
    while remaining:
        layer = mask_of(v for v in iter_bits(remaining) if not digraph.in_mask[v] & remaining)
        chosen |= layer
        remaining &= ~closed_out_mask_of(digraph, layer)
        layers += 1
    log.debug(f"{digraph.label}: {layers} source layers")
    return _verified(digraph, bits(chosen))


def dominate_via_clique_cover(digraph: MultipartiteDigraph, cover: Sequence[Iterable[int]]) -> VertexDomination:
    """
    One source per clique of the given cover (duplicates merged), so at most len(cover) vertices.

    Raises:
        PreconditionTriangle, NotAClique, NotACover, InternalContradiction.
    """
    require_triangle_free(digraph)
    covered = 0
    sources = []
    for index, clique in enumerate(cover):
        members = as_vertex_set(digraph, clique)
        clique_mask = mask_of(members)
        for u in members:
            missing = clique_mask & ~digraph.neighbor_mask(u) & ~(1 << u)
            if missing:
                raise NotAClique(index, (u, lowest(missing)))
        covered |= clique_mask
        if members:
            sources.append(_tournament_source(digraph, clique_mask))
    uncovered = digraph.all_mask & ~covered
    if uncovered:
        raise NotACover(lowest(uncovered))
    return _verified(digraph, sorted(set(sources)))
