# tridom/generators/constructions.py
"""Deterministic families: disjoint cyclic pentagons and the bipartite lower-bound digraphs D_k."""
from functools import lru_cache

from tridom.core.digraph import Arc, MultipartiteDigraph, SimpleDigraph
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import BudgetExceeded
import logging

log = logging.getLogger(__name__)

# D_1: the cyclic K_{2,2} with A = {0, 1}, B = {2, 3}
_D1_ARCS: tuple[Arc, ...] = ((0, 2), (2, 1), (1, 3), (3, 0))


def gen_pentagons(t: int) -> SimpleDigraph:
    """t vertex-disjoint cyclically oriented 5-cycles; pentagon i uses vertices 5i..5i+4."""
    if t < 1:
        raise ValueError(f"need at least one pentagon, got t={t}")
    arcs = [(5 * i + j, 5 * i + (j + 1) % 5) for i in range(t) for j in range(5)]
    return SimpleDigraph(5 * t, arcs, label=f"pentagons({t})")


@lru_cache(maxsize=None)
def _dk_arcs(k: int) -> tuple[int, tuple[Arc, ...]]:
    """(side size, arcs) of D_k with A = 0..m-1 and B = m..2m-1."""
    if k == 1:
        return 2, _D1_ARCS
    prev_side, prev_arcs = _dk_arcs(k - 1)
    prev = set(prev_arcs)
    blocks = k + 1
    side = blocks * prev_side
    arcs = []
    for j in range(blocks):
        for i in range(prev_side):
            a = j * prev_side + i
            for r in range(blocks):
                for s in range(prev_side):
                    b = side + r * prev_side + s
                    if j == r or (j != (r + 1) % blocks and (i, prev_side + s) in prev):
                        arcs.append((a, b))
                    else:
                        arcs.append((b, a))
    return side, tuple(sorted(arcs))


def dk_side_size(k: int) -> int:
    side = 2
    for level in range(2, k + 1):
        side *= level + 1
    return side


def gen_Dk(k: int, settings: Settings | None = None) -> MultipartiteDigraph:
    """
    The bipartite digraph D_k (complete bipartite orientation with gamma_0 > k).

    Block j of A_k and block r of B_k are copies of A_{k-1} and B_{k-1} (blocks 0..k,
    vertex (j, i) of A_k is j*m + i, vertex (r, s) of B_k is (k+1)*m + r*m + s). A copy
    pair (j, a_i), (r, b_s) gets the arc A -> B iff j == r, or j != r+1 (mod k+1) and
    a_i -> b_s in D_{k-1}; every other pair points B -> A.

    Raises:
        ValueError: k < 1.
        BudgetExceeded: k above the configured D_k budget.
    """
    settings = resolve(settings)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > settings.dk_budget:
        raise BudgetExceeded("D_k order", k, settings.dk_budget)
    side, arcs = _dk_arcs(k)
    log.info(f"D_{k}: sides of size {side}, {len(arcs)} arcs")
    return MultipartiteDigraph(2 * side, [range(side), range(side, 2 * side)], arcs, label=f"D_{k}")


def dk_projection_violations(k: int, r: int, exclude_blocked: bool = False,
                             settings: Settings | None = None) -> list[Arc]:
    """
    Arcs of D_k on B_k(r) and A_k minus A_k(r) that do not project onto arcs of D_{k-1}.

    The projection keeps the second coordinate. Arcs leaving A always project. The block
    A_k(r+1) receives every arc from B_k(r), so by default only arcs leaving A are checked;
    with `exclude_blocked` that block is dropped and arcs in both directions are checked.
    """
    if k < 2:
        raise ValueError(f"projection needs k >= 2, got {k}")
    if not 0 <= r <= k:
        raise ValueError(f"block index r must lie in 0..{k}, got {r}")
    digraph = gen_Dk(k, settings)
    prev_side, prev_arcs = _dk_arcs(k - 1)
    prev = set(prev_arcs)
    side = digraph.num_vertices // 2
    blocked = (r + 1) % (k + 1)

    def project(v: int) -> int:
        return v % prev_side if v < side else prev_side + (v - side) % prev_side

    def block(v: int) -> int:
        return (v if v < side else v - side) // prev_side

    kept_a = [a for a in range(side) if block(a) != r and not (exclude_blocked and block(a) == blocked)]
    kept_b = [b for b in range(side, 2 * side) if block(b) == r]
    violations = []
    for a in kept_a:
        for b in kept_b:
            arc = (a, b) if digraph.out_mask[a] >> b & 1 else (b, a)
            if arc[0] == b and not exclude_blocked:
                continue
            if (project(arc[0]), project(arc[1])) not in prev:
                violations.append(arc)
    log.debug(f"D_{k}, r={r}, exclude_blocked={exclude_blocked}: {len(violations)} violations")
    return violations
