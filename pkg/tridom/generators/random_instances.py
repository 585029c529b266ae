# tridom/generators/random_instances.py
"""
Seeded random instance generators.

Every generator draws from numpy's PCG64 bit generator (`numpy.random.Generator(PCG64(seed))`)
with a 64-bit unsigned seed, and consumes the stream in a fixed order, so identical
parameters and seed give identical instances on every platform.
"""
from typing import NamedTuple

import numpy as np
from scipy.special import comb

from tridom.core.digraph import Arc, MultipartiteDigraph, SimpleDigraph
from tridom.core.operations import cyclic_triangle_in
from tridom.gallai.colored_graph import EdgeColoredGraph, check_gallai
from tridom.oracles.independence import alpha_exact
from tridom.utils import constants
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import InternalContradiction, RetryBudgetExceeded, TargetUnreachable
import logging

log = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def _coin_oriented(pairs: np.ndarray, flips: np.ndarray) -> list[Arc]:
    """Pair (u, v) becomes u->v on heads, v->u on tails."""
    return [(int(u), int(v)) if heads else (int(v), int(u)) for (u, v), heads in zip(pairs, flips)]


def _sampled_pairs(candidates: np.ndarray, probability: float, rng: np.random.Generator) -> np.ndarray:
    keep = rng.random(len(candidates)) < probability
    return candidates[keep]


def _upper_pairs(n: int) -> np.ndarray:
    rows, cols = np.triu_indices(n, k=1)
    return np.column_stack((rows, cols))


# --- multipartite, triangle-free ---
def _repair_triangles(n: int, arcs: list[Arc], rng: np.random.Generator, rounds: int) -> list[Arc] | None:
    """Flip a random arc of some cyclic triangle until none is left; None if the rounds run out."""
    out_mask, in_mask = [0] * n, [0] * n
    for u, v in arcs:
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u
    everything = (1 << n) - 1
    for _ in range(rounds):
        triangle = cyclic_triangle_in(out_mask, in_mask, everything)
        if triangle is None:
            return [(u, v) for u in range(n) for v in range(n) if out_mask[u] >> v & 1]
        pick = int(rng.integers(3))
        u, v = triangle[pick], triangle[(pick + 1) % 3]
        out_mask[u] &= ~(1 << v)
        in_mask[v] &= ~(1 << u)
        out_mask[v] |= 1 << u
        in_mask[u] |= 1 << v
    return None


def gen_random_multipartite_trianglefree(t: int, class_size: int, completeness: float, seed: int,
                                         fallback: bool = True) -> MultipartiteDigraph:
    """
    t classes of `class_size` vertices (class c is c*class_size ..), each cross pair present
    with probability `completeness` and oriented by a fair coin.

    Cyclic triangles are repaired by flipping one of their arcs; if that takes more than
    the configured number of rounds, every arc is reoriented along a random vertex order.

    Raises:
        RetryBudgetExceeded: Repair failed and `fallback` is off.
    """
    if t < 1 or class_size < 1:
        raise ValueError(f"t and class_size must be positive, got t={t}, class_size={class_size}")
    _check_probability("completeness", completeness)
    rng = make_rng(seed)
    n = t * class_size
    classes = [range(c * class_size, (c + 1) * class_size) for c in range(t)]
    pairs = _upper_pairs(n)
    cross = pairs[pairs[:, 0] // class_size != pairs[:, 1] // class_size]
    present = _sampled_pairs(cross, completeness, rng)
    arcs = _coin_oriented(present, rng.random(len(present)) < 0.5)

    rounds = constants.TRIANGLE_REPAIR_ROUNDS_PER_VERTEX * n
    repaired = _repair_triangles(n, arcs, rng, rounds)
    if repaired is None:
        if not fallback:
            raise RetryBudgetExceeded(rounds)
        rank = np.empty(n, dtype=np.int64)
        rank[rng.permutation(n)] = np.arange(n)
        repaired = [(int(u), int(v)) if rank[u] < rank[v] else (int(v), int(u)) for u, v in present]
        log.info(f"triangle repair gave up after {rounds} flips; oriented by a random order")
    return MultipartiteDigraph(n, classes, repaired,
                               label=f"mpd(t={t},s={class_size},p={completeness},seed={seed})")


# --- bipartite tournaments, plain digraphs, DAGs ---
def gen_random_bipartite_tournament(n_per_side: int, seed: int) -> MultipartiteDigraph:
    """Complete bipartite graph (A = 0..n-1, B = n..2n-1), each edge oriented A->B on a fair coin."""
    if n_per_side < 1:
        raise ValueError(f"n_per_side must be positive, got {n_per_side}")
    rng = make_rng(seed)
    n = n_per_side
    heads = rng.random((n, n)) < 0.5
    arcs = [(a, n + b) if heads[a, b] else (n + b, a) for a in range(n) for b in range(n)]
    return MultipartiteDigraph(2 * n, [range(n), range(n, 2 * n)], arcs,
                               label=f"bipartite({n},seed={seed})")


def gen_random_digraph(n: int, arc_probability: float, seed: int) -> SimpleDigraph:
    """Each unordered pair present with the given probability, then oriented by a fair coin."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_probability("arc_probability", arc_probability)
    rng = make_rng(seed)
    present = _sampled_pairs(_upper_pairs(n), arc_probability, rng)
    arcs = _coin_oriented(present, rng.random(len(present)) < 0.5)
    return SimpleDigraph(n, arcs, label=f"digraph({n},p={arc_probability},seed={seed})")


def gen_random_dag(n: int, arc_probability: float, seed: int) -> SimpleDigraph:
    """Random pairs oriented along a random global vertex order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_probability("arc_probability", arc_probability)
    rng = make_rng(seed)
    rank = np.empty(n, dtype=np.int64)
    rank[rng.permutation(n)] = np.arange(n)
    present = _sampled_pairs(_upper_pairs(n), arc_probability, rng)
    arcs = [(int(u), int(v)) if rank[u] < rank[v] else (int(v), int(u)) for u, v in present]
    return SimpleDigraph(n, arcs, label=f"dag({n},p={arc_probability},seed={seed})")


# --- Gallai colorings ---
class GallaiSample(NamedTuple):
    graph: EdgeColoredGraph
    alpha: int
    reached: bool


def _substitute(block: list[int], palette: np.ndarray, rng: np.random.Generator,
                colors: dict[tuple[int, int], int]) -> None:
    """Color K[block]: split into 2..4 sub-blocks, 2-color the quotient, recurse."""
    if len(block) < 2:
        return
    parts = int(rng.integers(2, min(len(block), 4) + 1))
    cuts = np.sort(rng.choice(np.arange(1, len(block)), size=parts - 1, replace=False))
    sub_blocks = [[int(v) for v in chunk] for chunk in np.split(np.array(block), cuts)]
    pair = rng.choice(palette, size=min(2, len(palette)), replace=False)
    for x in range(parts):
        for y in range(x + 1, parts):
            color = int(pair[int(rng.integers(len(pair)))])
            for u in sub_blocks[x]:
                for v in sub_blocks[y]:
                    colors[(min(u, v), max(u, v))] = color
    for chunk in sub_blocks:
        _substitute(chunk, palette, rng, colors)


def gen_random_gallai(n: int, target_alpha: int | None, colors: int, seed: int,
                      max_deletions: int | None = None, strict: bool = False,
                      settings: Settings | None = None) -> GallaiSample:
    """
    A Gallai-colored complete graph built by substitution, then thinned by edge deletions.

    Vertices are shuffled before substitution. Each deletion attempt removes one random edge
    and is undone if the independence number would exceed `target_alpha`. Deletion stops as soon as
    alpha equals the target. `target_alpha=None` keeps the complete graph.

    Raises:
        TargetUnreachable: With `strict`, when the attempts end before alpha hits the target;
            the partial graph and its alpha ride on the exception.
    """
    settings = resolve(settings)
    if n < 1 or colors < 1:
        raise ValueError(f"n and colors must be positive, got n={n}, colors={colors}")
    if target_alpha is not None and target_alpha < 1:
        raise ValueError(f"target_alpha must be positive, got {target_alpha}")
    rng = make_rng(seed)
    coloring: dict[tuple[int, int], int] = {}
    _substitute([int(v) for v in rng.permutation(n)], np.arange(colors), rng, coloring)
    label = f"gallai({n},a={target_alpha},c={colors},seed={seed})"

    alpha = 1
    if target_alpha is not None and target_alpha > 1:
        budget = (constants.GALLAI_DELETION_ATTEMPTS_PER_VERTEX * n
                  if max_deletions is None else max_deletions)
        edges = sorted(coloring)
        order = rng.permutation(len(edges))[:budget]
        for index in order:
            key = edges[int(index)]
            color = coloring.pop(key)
            trial = EdgeColoredGraph(n, [(u, v, c) for (u, v), c in coloring.items()], label=label)
            trial_alpha = alpha_exact(trial, settings)
            if trial_alpha > target_alpha:
                coloring[key] = color
            else:
                alpha = trial_alpha
                if alpha == target_alpha:
                    break

    graph = EdgeColoredGraph(n, [(u, v, c) for (u, v), c in sorted(coloring.items())], label=label)
    if check_gallai(graph) is not None:
        raise InternalContradiction(f"{label}: substitution produced a rainbow triangle")
    if n == 1:
        alpha = 1
    reached = target_alpha is None or alpha == target_alpha
    log.info(f"{label}: {len(coloring)} edges, alpha={alpha}, target reached={reached}")
    if strict and not reached:
        raise TargetUnreachable(graph, target_alpha, alpha)
    return GallaiSample(graph, alpha, reached)


def union_bound(n: int, k: int) -> float:
    """2 * C(n, k) * (1 - 2^-k)^n: bounds the chance that a random bipartite tournament has gamma_0 <= k."""
    return 2 * float(comb(n, k, exact=True)) * (1.0 - 2.0 ** -k) ** n
