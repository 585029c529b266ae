# tridom/oracles/domination.py
"""
Exact domination minima by subset search.

Every search runs over subsets in increasing size and, within a size, in
lexicographic order; the first hit is the reported optimum. The search is a
depth-first walk over combinations with suffix-union pruning. With more than one
worker the first-element branches run in a process pool and the lowest branch
with a hit wins, which is the same subset the sequential walk finds.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from tridom.core.bitsets import iter_bits, union_of
from tridom.core.digraph import MultipartiteDigraph, VertexSet
from tridom.core.operations import out_mask_of
from tridom.oracles.certificates import (
    DominationCertificate,
    check_class_domination,
    check_vertex_domination,
)
from tridom.oracles.independence import guard_vertex_budget
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import InternalContradiction, NotBipartite
import logging

log = logging.getLogger(__name__)


def _suffix_unions(cover: list[int]) -> list[int]:
    suffix = [0] * (len(cover) + 1)
    for i in range(len(cover) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | cover[i]
    return suffix


def _search(cover: list[int], suffix: list[int], target: int, size: int,
            start: int, chosen: tuple[int, ...], acc: int) -> tuple[int, ...] | None:
    if size == 0:
        return chosen if acc & target == target else None
    last_start = len(cover) - size
    for i in range(start, last_start + 1):
        if (acc | suffix[i]) & target != target:
            return None
        found = _search(cover, suffix, target, size - 1, i + 1, chosen + (i,), acc | cover[i])
        if found is not None:
            return found
    return None


def _search_branch(args: tuple) -> tuple[int, ...] | None:
    cover, target, size, first = args
    suffix = _suffix_unions(cover)
    return _search(cover, suffix, target, size - 1, first + 1, (first,), cover[first])


def _first_cover_of_size(cover: list[int], target: int, size: int,
                         threads: int) -> tuple[int, ...] | None:
    if size == 0:
        return () if target == 0 else None
    if threads <= 1 or len(cover) - size < 1:
        return _search(cover, _suffix_unions(cover), target, size, 0, (), 0)
    branches = [(cover, target, size, first) for first in range(len(cover) - size + 1)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for found in pool.map(_search_branch, branches):
            if found is not None:
                return found
    return None


def minimum_cover(cover: list[int], target: int,
                  settings: Settings | None = None) -> tuple[int, ...] | None:
    """
    Lexicographically first smallest index set whose masks jointly cover `target`.

    Args:
        cover: One mask per selectable item.
        target: Mask that must be covered.

    Returns:
        Ascending item indices, or None when even all items together fall short.
    """
    if union_of(cover) & target != target:
        return None
    threads = resolve(settings).threads
    for size in range(len(cover) + 1):
        found = _first_cover_of_size(cover, target, size, threads)
        if found is not None:
            return found
    raise InternalContradiction("full item set covers the target but no subset was found")


def k_exact(digraph: MultipartiteDigraph,
            settings: Settings | None = None) -> tuple[int, DominationCertificate]:
    """k(D): fewest whole classes whose union dominates every vertex outside it."""
    guard_vertex_budget(digraph, settings)
    cover = [m | out_mask_of(digraph, m) for m in digraph.class_mask]
    chosen = minimum_cover(cover, digraph.all_mask, settings)
    certificate = check_class_domination(digraph, chosen)
    if not isinstance(certificate, DominationCertificate):
        raise InternalContradiction(f"optimal class set {chosen} fails: {certificate}")
    log.info(f"{digraph.label}: k={len(chosen)} via classes {chosen}")
    return len(chosen), certificate


def gamma_exact(digraph: MultipartiteDigraph,
                settings: Settings | None = None) -> tuple[int, DominationCertificate]:
    """gamma(D): fewest vertices whose closed out-neighborhoods cover V(D)."""
    guard_vertex_budget(digraph, settings)
    cover = [(1 << v) | digraph.out_mask[v] for v in range(digraph.num_vertices)]
    chosen = minimum_cover(cover, digraph.all_mask, settings)
    certificate = check_vertex_domination(digraph, chosen)
    if not isinstance(certificate, DominationCertificate):
        raise InternalContradiction(f"optimal vertex set {chosen} fails: {certificate}")
    log.info(f"{digraph.label}: gamma={len(chosen)} via vertices {chosen}")
    return len(chosen), certificate


@dataclass(frozen=True)
class Gamma0Result:
    """One-sided bipartite domination minima; None where a side cannot dominate at all."""
    gamma_a: int | None
    gamma_b: int | None
    witness_a: VertexSet | None
    witness_b: VertexSet | None

    @property
    def gamma0(self) -> int | None:
        defined = [g for g in (self.gamma_a, self.gamma_b) if g is not None]
        return min(defined) if defined else None

    def as_tuple(self) -> tuple[int | None, int | None, int | None]:
        return self.gamma_a, self.gamma_b, self.gamma0


def _one_side(digraph: MultipartiteDigraph, side: VertexSet, other_mask: int,
              settings: Settings | None) -> VertexSet | None:
    cover = [digraph.out_mask[v] & other_mask for v in side]
    found = minimum_cover(cover, other_mask, settings)
    if found is None:
        return None
    return tuple(side[i] for i in found)


def gamma0_exact(digraph: MultipartiteDigraph, settings: Settings | None = None) -> Gamma0Result:
    """
    gamma_A: fewest vertices of class 0 whose open out-neighborhoods cover class 1;
    gamma_B symmetrically; gamma_0 the smaller defined one.

    Raises:
        NotBipartite: Unless there are exactly two classes.
    """
    if digraph.num_classes != 2:
        raise NotBipartite(digraph.num_classes)
    guard_vertex_budget(digraph, settings)
    side_a, side_b = digraph.classes
    mask_a, mask_b = digraph.class_mask
    witness_a = _one_side(digraph, side_a, mask_b, settings)
    witness_b = _one_side(digraph, side_b, mask_a, settings)
    result = Gamma0Result(
        gamma_a=None if witness_a is None else len(witness_a),
        gamma_b=None if witness_b is None else len(witness_b),
        witness_a=witness_a,
        witness_b=witness_b,
    )
    log.info(f"{digraph.label}: gamma_A={result.gamma_a}, gamma_B={result.gamma_b}, gamma_0={result.gamma0}")
    return result


def min_clique_cover(digraph: MultipartiteDigraph,
                     settings: Settings | None = None) -> list[VertexSet]:
    """Fewest cliques of the underlying graph covering every vertex (exact backtracking)."""
    guard_vertex_budget(digraph, settings)
    n = digraph.num_vertices
    neighbors = [digraph.neighbor_mask(v) for v in range(n)]

    def place(v: int, cliques: list[int], limit: int) -> list[int] | None:
        if v == n:
            return list(cliques)
        for i, clique in enumerate(cliques):
            if clique & ~neighbors[v] == 0:
                cliques[i] = clique | (1 << v)
                found = place(v + 1, cliques, limit)
                cliques[i] = clique
                if found is not None:
                    return found
        if len(cliques) < limit:
            cliques.append(1 << v)
            found = place(v + 1, cliques, limit)
            cliques.pop()
            if found is not None:
                return found
        return None

    for limit in range(n + 1):
        found = place(0, [], limit)
        if found is not None:
            cover = [tuple(iter_bits(c)) for c in found]
            log.info(f"{digraph.label}: minimum clique cover has {len(cover)} cliques")
            return cover
    raise InternalContradiction("singletons always form a clique cover")
