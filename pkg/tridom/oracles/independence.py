# tridom/oracles/independence.py
"""
Exact independence numbers.

alpha(G): largest pairwise-nonadjacent vertex set of the underlying graph.
beta(D): same, restricted to sets with at most one vertex per partite class.

Both are maximum cliques of a "compatibility" graph held as bit masks. Small
instances use plain include/exclude branching; larger ones use branch and bound
with a greedy coloring of the compatibility graph (a clique cover of the
underlying graph) as the upper bound.
"""
from typing import Protocol

from tridom.core.bitsets import bits, full_mask, iter_bits, lowest
from tridom.core.digraph import MultipartiteDigraph, VertexSet
from tridom.utils import constants
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import BudgetExceeded
import logging

log = logging.getLogger(__name__)


class UndirectedView(Protocol):
    num_vertices: int

    def neighbor_mask(self, v: int) -> int: ...


def guard_vertex_budget(graph: UndirectedView, settings: Settings | None = None) -> None:
    budget = resolve(settings).vertex_budget
    if graph.num_vertices > budget:
        log.error(f"Refusing exact search on {graph.num_vertices} vertices (budget {budget}).")
        raise BudgetExceeded("vertices", graph.num_vertices, budget)


def _compatibility(graph: UndirectedView, transversal: bool) -> list[int]:
    n = graph.num_vertices
    everything = full_mask(n)
    compat = []
    for v in range(n):
        mask = everything & ~graph.neighbor_mask(v) & ~(1 << v)
        if transversal:
            mask &= ~graph.class_mask[graph.class_of[v]]
        compat.append(mask)
    return compat


def _plain_max_clique(compat: list[int], candidates: int) -> int:
    best_size = 0
    best_mask = 0

    def expand(size: int, chosen: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if cand == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + cand.bit_count() <= best_size:
            return
        v = lowest(cand)
        bit = 1 << v
        expand(size + 1, chosen | bit, cand & compat[v])
        expand(size, chosen, cand & ~bit)

    expand(0, 0, candidates)
    return best_mask


def _color_sort(cand: int, compat: list[int]) -> tuple[list[int], list[int]]:
    order = []
    colors = []
    color = 0
    work = cand
    while work:
        color += 1
        q = work
        while q:
            v = lowest(q)
            bit = 1 << v
            order.append(v)
            colors.append(color)
            work &= ~bit
            q &= ~bit
            q &= ~compat[v]
    return order, colors


def _bounded_max_clique(compat: list[int], candidates: int) -> int:
    best_size = 0
    best_mask = 0

    def expand(size: int, chosen: int, cand: int) -> None:
        nonlocal best_size, best_mask
        order, colors = _color_sort(cand, compat)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            narrowed = cand & compat[v]
            if narrowed == 0:
                if size + 1 > best_size:
                    best_size, best_mask = size + 1, chosen | bit
            else:
                expand(size + 1, chosen | bit, narrowed)
            cand &= ~bit

    expand(0, 0, candidates)
    return best_mask


def _max_clique(compat: list[int]) -> int:
    n = len(compat)
    if n < constants.PLAIN_ENUMERATION_LIMIT:
        return _plain_max_clique(compat, full_mask(n))
    return _bounded_max_clique(compat, full_mask(n))


def _first_clique_of_size(compat: list[int], candidates: int, size: int) -> VertexSet | None:
    """Lexicographically smallest clique of exactly `size` vertices inside `candidates`."""

    def search(chosen: tuple[int, ...], cand: int, need: int) -> VertexSet | None:
        if need == 0:
            return chosen
        if cand.bit_count() < need:
            return None
        for v in iter_bits(cand):
            higher = cand & compat[v] & ~((1 << (v + 1)) - 1)
            if higher.bit_count() < need - 1:
                continue
            found = search(chosen + (v,), higher, need - 1)
            if found is not None:
                return found
        return None

    return search((), candidates, size)


def max_transversal_independent_set(digraph: MultipartiteDigraph,
                                    settings: Settings | None = None) -> VertexSet:
    """A maximum independent set using at most one vertex per class."""
    guard_vertex_budget(digraph, settings)
    witness = bits(_max_clique(_compatibility(digraph, transversal=True)))
    log.debug(f"{digraph.label}: beta={len(witness)} witness={witness}")
    return witness


def beta_exact(digraph: MultipartiteDigraph, settings: Settings | None = None) -> int:
    return len(max_transversal_independent_set(digraph, settings))


def max_independent_set(graph: UndirectedView, settings: Settings | None = None) -> VertexSet:
    """A maximum independent set of the underlying undirected graph (classes ignored)."""
    guard_vertex_budget(graph, settings)
    return bits(_max_clique(_compatibility(graph, transversal=False)))


def alpha_exact(graph: UndirectedView, settings: Settings | None = None) -> int:
    alpha = len(max_independent_set(graph, settings))
    log.debug(f"alpha={alpha} on {graph.num_vertices} vertices")
    return alpha


def find_transversal_independent(digraph: MultipartiteDigraph, size: int,
                                 settings: Settings | None = None) -> VertexSet | None:
    """Lexicographically smallest transversal independent set of the given size, if any."""
    guard_vertex_budget(digraph, settings)
    compat = _compatibility(digraph, transversal=True)
    return _first_clique_of_size(compat, digraph.all_mask, size)


def find_independent(graph: UndirectedView, size: int,
                     settings: Settings | None = None) -> VertexSet | None:
    guard_vertex_budget(graph, settings)
    compat = _compatibility(graph, transversal=False)
    return _first_clique_of_size(compat, full_mask(graph.num_vertices), size)
