# tridom/solvers/general.py
"""
Class domination for any transversal independence number.

A transversal tuple K of min(2*beta, t) vertices with maximum closed reach is chosen; the
other classes are cut into parts according to the first vertex of K that does not reach
them, and each part is solved recursively with beta one smaller.
"""
from dataclasses import dataclass, field

from tridom.core.bitsets import mask_of
from tridom.core.digraph import MultipartiteDigraph, VertexSet
from tridom.core.operations import induced_subdigraph, out_mask_of
from tridom.oracles.certificates import DominationCertificate, check_class_domination
from tridom.oracles.independence import beta_exact, find_transversal_independent
from tridom.solvers.beta_small import dominate_beta1_strong, dominate_beta2
from tridom.solvers.bounds import h_bound, h_strict_bound
from tridom.solvers.preconditions import require_triangle_free
from tridom.utils.config import Settings, resolve
from tridom.utils.errors import BudgetExceeded, InternalContradiction
import logging

log = logging.getLogger(__name__)

DISPATCH = "dispatch"
STRICT = "strict"
MODES = (DISPATCH, STRICT)


@dataclass(frozen=True)
class TransversalChoice:
    vertices: VertexSet
    reach: int
    nodes: int


@dataclass(frozen=True)
class ClassPartition:
    """
    Non-core classes cut by the core tuple (k_1..k_m).

    Part 0 holds vertices some k_i reaches. Part i (1 <= i <= m) holds unreached vertices
    nonadjacent to k_i but sending arcs to k_1..k_(i-1). Part m+1 holds unreached vertices
    that send an arc to every k_i.
    """
    core: VertexSet
    core_classes: tuple[int, ...]
    parts: tuple[VertexSet, ...] = field(default_factory=tuple)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def part(self, index: int) -> VertexSet:
        return self.parts[index]

    def class_part(self, digraph: MultipartiteDigraph, class_index: int, index: int) -> VertexSet:
        return tuple(v for v in self.parts[index] if digraph.class_of[v] == class_index)


def best_transversal_tuple(digraph: MultipartiteDigraph, size: int,
                           settings: Settings | None = None) -> TransversalChoice:
    """
    Lexicographically smallest ascending tuple of `size` vertices from distinct classes
    maximizing |N̂_+(tuple)|.

    Branch and bound: a branch survives only if its covered count plus the best marginal
    gain per unused class (summed over the `size - depth` largest classes) beats the best
    found so far. A greedy pick seeds the incumbent value.

    Raises:
        BudgetExceeded: More than `settings.node_budget` search nodes.
    """
    settings = resolve(settings)
    n = digraph.num_vertices
    closed = [digraph.out_mask[v] | (1 << v) for v in range(n)]
    class_of = digraph.class_of
    if size > digraph.num_classes or size < 0:
        raise ValueError(f"cannot pick {size} vertices from {digraph.num_classes} classes")

    greedy_acc, used = 0, 0
    for _ in range(size):
        pick = max((v for v in range(n) if not used >> class_of[v] & 1),
                   key=lambda v: ((closed[v] & ~greedy_acc).bit_count(), -v))
        greedy_acc |= closed[pick]
        used |= 1 << class_of[pick]

    best_value = greedy_acc.bit_count() - 1
    best: VertexSet | None = None
    nodes = 0

    def expand(start: int, chosen: VertexSet, used_classes: int, acc: int) -> None:
        nonlocal best_value, best, nodes
        nodes += 1
        if nodes > settings.node_budget:
            raise BudgetExceeded("transversal argmax nodes", nodes, settings.node_budget)
        covered = acc.bit_count()
        if len(chosen) == size:
            if covered > best_value:
                best_value, best = covered, chosen
            return
        need = size - len(chosen)
        gain_by_class: dict[int, int] = {}
        for v in range(start, n):
            c = class_of[v]
            if used_classes >> c & 1:
                continue
            gain = (closed[v] & ~acc).bit_count()
            if gain > gain_by_class.get(c, -1):
                gain_by_class[c] = gain
        if len(gain_by_class) < need:
            return
        if covered + sum(sorted(gain_by_class.values(), reverse=True)[:need]) <= best_value:
            return
        for v in range(start, n):
            c = class_of[v]
            if not used_classes >> c & 1:
                expand(v + 1, chosen + (v,), used_classes | (1 << c), acc | closed[v])

    expand(0, (), 0, 0)
    if best is None:
        raise InternalContradiction(f"{digraph.label}: argmax search lost the greedy tuple")
    log.debug(f"{digraph.label}: core tuple {best} reaches {best_value} vertices ({nodes} nodes)")
    return TransversalChoice(best, best_value, nodes)


def partition_classes(digraph: MultipartiteDigraph, core: VertexSet) -> ClassPartition:
    """Cut every class not hit by `core` into len(core) + 2 parts."""
    core_classes = tuple(digraph.class_of[k] for k in core)
    reached = out_mask_of(digraph, mask_of(core))
    last = len(core) + 1
    parts: list[list[int]] = [[] for _ in range(last + 1)]
    for c, members in enumerate(digraph.classes):
        if c in core_classes:
            continue
        for v in members:
            if reached >> v & 1:
                parts[0].append(v)
                continue
            index = last
            for i, k in enumerate(core, start=1):
                if not digraph.out_mask[v] >> k & 1:
                    index = i
                    break
            parts[index].append(v)
    return ClassPartition(tuple(core), core_classes, tuple(tuple(sorted(p)) for p in parts))


@dataclass
class _Collected:
    classes: set[int] = field(default_factory=set)
    core: set[int] = field(default_factory=set)
    exceptional: set[int] = field(default_factory=set)
    structured: bool = True

    def merge(self, sub: MultipartiteDigraph, classes, certificate: DominationCertificate) -> None:
        self.classes.update(sub.origin_class[c] for c in classes)
        if certificate.has_structure:
            self.core.update(sub.origin_vertex[v] for v in certificate.core_vertices)
            self.exceptional.update(sub.origin_class[c] for c in certificate.exceptional_classes)
        else:
            self.structured = False


def _dominate(digraph: MultipartiteDigraph, mode: str, settings: Settings,
              beta_limit: int | None = None, depth: int = 0) -> tuple[tuple[int, ...], DominationCertificate]:
    if digraph.num_vertices == 0:
        return (), DominationCertificate("classes", (), {}, (), ())

    beta = beta_exact(digraph, settings)
    if beta_limit is not None and beta > beta_limit:
        raise InternalContradiction(
            f"{digraph.label}: beta={beta} did not drop below {beta_limit + 1} at depth {depth}")
    log.debug(f"{'  ' * depth}{digraph.label}: n={digraph.num_vertices} t={digraph.num_classes} beta={beta}")

    if beta == 1:
        strong = dominate_beta1_strong(digraph, settings)
        return (strong.K,), strong.certificate
    if beta == 2 and mode == DISPATCH:
        return dominate_beta2(digraph, settings)

    size = min(2 * beta, digraph.num_classes)
    choice = best_transversal_tuple(digraph, size, settings)
    partition = partition_classes(digraph, choice.vertices)

    found = _Collected(set(partition.core_classes), set(partition.core), set(partition.core_classes))
    for i in range(1, len(partition.core) + 1):
        part = partition.part(i)
        if part:
            sub = induced_subdigraph(digraph, part, label=f"{digraph.label}/{i}")
            found.merge(sub, *_dominate(sub, mode, settings, beta - 1, depth + 1))

    last = partition.part(len(partition.core) + 1)
    if last:
        sub = induced_subdigraph(digraph, last, label=f"{digraph.label}/last")
        if beta_exact(sub, settings) >= beta:
            independent = find_transversal_independent(sub, beta, settings)
            if independent is None:
                raise InternalContradiction(f"{sub.label}: no transversal independent set of size {beta}")
            lead = {sub.origin_class[sub.class_of[v]] for v in independent}
            found.classes |= lead
            found.exceptional |= lead
            rest = [v for v in last if digraph.class_of[v] not in lead]
            log.debug(f"{'  ' * depth}{digraph.label}: last part keeps classes {sorted(lead)}")
            if rest:
                sub = induced_subdigraph(digraph, rest, label=f"{digraph.label}/rest")
                found.merge(sub, *_dominate(sub, mode, settings, beta - 1, depth + 1))
        else:
            found.merge(sub, *_dominate(sub, mode, settings, beta - 1, depth + 1))

    classes = tuple(sorted(found.classes))
    certificate = check_class_domination(digraph, classes)
    if not isinstance(certificate, DominationCertificate):
        raise InternalContradiction(f"{digraph.label}: classes {classes} fail verification ({certificate})")
    if found.structured:
        certificate = certificate.with_structure(found.core, found.exceptional)

    limit = expected_bound(beta, mode)
    if len(classes) > limit:
        raise InternalContradiction(f"{digraph.label}: {len(classes)} classes exceed the bound {limit}")
    return classes, certificate


def dominate_general(digraph: MultipartiteDigraph, mode: str = DISPATCH,
                     settings: Settings | None = None) -> tuple[tuple[int, ...], DominationCertificate]:
    """
    At most h(beta) dominating classes of a cyclic-triangle-free multipartite digraph.

    Args:
        mode: "dispatch" hands beta <= 2 to the dedicated solvers (bound h); "strict" runs
            the recursion all the way down to beta = 1 (bound h_strict) and always
            returns a core/exceptional breakdown.

    Raises:
        PreconditionTriangle, BudgetExceeded, InternalContradiction, ValueError (bad mode).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    settings = resolve(settings)
    require_triangle_free(digraph)
    classes, certificate = _dominate(digraph, mode, settings)
    log.info(f"{digraph.label}: {len(classes)} dominating classes ({mode})")
    return classes, certificate


def expected_bound(beta: int, mode: str = DISPATCH) -> int:
    return h_strict_bound(beta) if mode == STRICT else h_bound(beta)
