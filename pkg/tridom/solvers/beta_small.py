# tridom/solvers/beta_small.py
"""Class domination for transversal independence 1 and 2."""
from typing import NamedTuple

from tridom.core.bitsets import bits
from tridom.core.digraph import MultipartiteDigraph
from tridom.core.operations import closed_out_mask_of, induced_subdigraph
from tridom.oracles.certificates import (
    DominationCertificate,
    check_class_domination,
    dominated_mask,
)
from tridom.solvers.preconditions import require_beta_at_most, require_triangle_free
from tridom.utils.config import Settings
from tridom.utils.errors import InternalContradiction, PreconditionBeta
import logging

log = logging.getLogger(__name__)


class ClassDomination(NamedTuple):
    classes: tuple[int, ...]
    certificate: DominationCertificate


class StrongDomination(NamedTuple):
    """Single-vertex breakdown: vertex k of class K reaches everything outside K and L."""
    K: int
    k: int
    L: int | None
    certificate: DominationCertificate


def _verified(digraph: MultipartiteDigraph, classes) -> DominationCertificate:
    result = check_class_domination(digraph, classes)
    if not isinstance(result, DominationCertificate):
        log.error(f"{digraph.label}: classes {sorted(set(classes))} fail verification ({result})")
        raise InternalContradiction(f"{digraph.label}: chosen classes do not dominate: {result}")
    return result


def closed_reach_by_class(digraph: MultipartiteDigraph) -> list[int]:
    """|N̂_+(class)| for every class."""
    return [closed_out_mask_of(digraph, m).bit_count() for m in digraph.class_mask]


def maximizing_classes(digraph: MultipartiteDigraph) -> tuple[int, ...]:
    reach = closed_reach_by_class(digraph)
    top = max(reach, default=0)
    return tuple(c for c, value in enumerate(reach) if value == top)


def dominate_beta1(digraph: MultipartiteDigraph,
                   settings: Settings | None = None) -> tuple[int, DominationCertificate]:
    """
    A single dominating class of a triangle-free digraph with beta = 1.

    The class with the largest closed out-neighborhood (lowest index on ties) dominates.

    Raises:
        PreconditionTriangle, PreconditionBeta, InternalContradiction.
    """
    require_triangle_free(digraph)
    require_beta_at_most(digraph, 1, settings, exact=True)
    best = maximizing_classes(digraph)[0]
    certificate = _verified(digraph, [best])
    log.debug(f"{digraph.label}: beta=1, class {best} dominates")
    return best, certificate


def dominate_beta1_strong(digraph: MultipartiteDigraph,
                          settings: Settings | None = None) -> StrongDomination:
    """
    Dominating class K plus a vertex k in K whose out-neighborhood covers all but one class L.

    Raises:
        PreconditionTriangle, PreconditionBeta,
        InternalContradiction: If the vertices k misses span more than one class.
    """
    K, certificate = dominate_beta1(digraph, settings)
    members = digraph.classes[K]
    k = max(members, key=lambda v: (digraph.out_mask[v].bit_count(), -v))
    missed = digraph.all_mask & ~digraph.class_mask[K] & ~digraph.out_mask[k]
    L = None
    if missed:
        missed_classes = sorted({digraph.class_of[v] for v in bits(missed)})
        if len(missed_classes) > 1:
            raise InternalContradiction(
                f"{digraph.label}: vertex {k} misses classes {missed_classes}; expected at most one")
        L = missed_classes[0]
    exceptional = [K] if L is None else [K, L]
    log.debug(f"{digraph.label}: K={K}, k={k}, L={L}")
    return StrongDomination(K, k, L, certificate.with_structure([k], exceptional))


def _rebuild_around(digraph: MultipartiteDigraph, p: int, area: int,
                    settings: Settings | None) -> list[int]:
    """New <=4 class set dominating D[area] when p escaped the previous one."""
    P = digraph.class_of[p]
    others = area & ~digraph.class_mask[P]
    sent_to = others & digraph.out_mask[p]      # part 1
    sends = others & digraph.in_mask[p]         # part 3
    silent = others & ~sent_to & ~sends         # part 2

    chosen = [P]
    try:
        if silent:
            second = induced_subdigraph(digraph, bits(silent), label=f"{digraph.label}/silent({p})")
            strong = dominate_beta1_strong(second, settings)
            chosen.append(second.origin_class[strong.K])
            if strong.L is not None:
                chosen.append(second.origin_class[strong.L])
        remaining = area & ~dominated_mask(digraph, chosen, within=area)
        if remaining:
            rest = induced_subdigraph(digraph, bits(remaining), label=f"{digraph.label}/rest({p})")
            fourth, _ = dominate_beta1(rest, settings)
            chosen.append(rest.origin_class[fourth])
    except PreconditionBeta as exc:
        raise InternalContradiction(f"{digraph.label}: beta did not drop around vertex {p}: {exc}") from exc

    chosen = list(dict.fromkeys(chosen))
    if dominated_mask(digraph, chosen, within=area) != area:
        raise InternalContradiction(f"{digraph.label}: rebuilt classes {chosen} miss part of the prefix up to {p}")
    log.debug(f"{digraph.label}: rebuilt around {p} -> classes {chosen}")
    return chosen


def dominate_beta2(digraph: MultipartiteDigraph,
                   settings: Settings | None = None) -> ClassDomination:
    """
    At most four dominating classes of a triangle-free digraph with beta <= 2.

    Vertices are added in id order while a <=4 class set dominating the prefix is kept;
    a vertex the set misses triggers a rebuild around it. Beta = 1 inputs go straight to
    dominate_beta1.

    Raises:
        PreconditionTriangle, PreconditionBeta, InternalContradiction.
    """
    require_triangle_free(digraph)
    beta = require_beta_at_most(digraph, 2, settings)
    if digraph.num_vertices == 0:
        return ClassDomination((), _verified(digraph, []))
    if beta == 1:
        K, certificate = dominate_beta1(digraph, settings)
        return ClassDomination((K,), certificate)

    chosen = [digraph.class_of[0]]
    prefix = 1
    rebuilds = 0
    for p in range(1, digraph.num_vertices):
        area = prefix | (1 << p)
        if not dominated_mask(digraph, chosen, within=area) >> p & 1:
            chosen = _rebuild_around(digraph, p, area, settings)
            rebuilds += 1
        prefix = area

    classes = tuple(sorted(chosen))
    if len(classes) > 4:
        raise InternalContradiction(f"{digraph.label}: {len(classes)} classes exceed 4")
    certificate = _verified(digraph, classes)
    log.info(f"{digraph.label}: beta=2 domination by classes {classes} ({rebuilds} rebuilds)")
    return ClassDomination(classes, certificate)
