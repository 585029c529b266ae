# tridom/solvers/bounds.py
from dataclasses import dataclass

import pandas as pd
import logging

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundTables:
    """
    Upper bounds guaranteed by the constructive proofs, indexed 1..max_beta.

    h: classes dominating a triangle-free multipartite digraph with transversal independence beta
       (h(1)=1, h(2)=4, then h(b)=3b+(2b+1)h(b-1)).
    f: vertices dominating a clique-acyclic digraph with independence alpha.
    g: monochromatic components covering a Gallai-colored graph with independence alpha.
    h1, h2: core vertices and exceptional classes of the general recursion.
    h_strict: classes the general recursion yields when it is used at every level (11 at beta=2).
    """
    h: dict[int, int]
    f: dict[int, int]
    g: dict[int, int]
    h1: dict[int, int]
    h2: dict[int, int]
    h_strict: dict[int, int]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({
            "h": self.h, "f": self.f, "g": self.g,
            "h1": self.h1, "h2": self.h2, "h_strict": self.h_strict,
        })
        frame.index.name = "beta_or_alpha"
        return frame


def _general_step(beta: int, previous: int) -> int:
    return 3 * beta + (2 * beta + 1) * previous


def bound_tables(max_beta: int) -> BoundTables:
    """
    Fill every recurrence for 1..max_beta.

    Raises:
        ValueError: If max_beta < 1.
    """
    if max_beta < 1:
        raise ValueError(f"max_beta must be >= 1, got {max_beta}")
    h, f, g, h1, h2, h_strict = {1: 1}, {1: 1}, {1: 1}, {1: 1}, {1: 1}, {1: 1}
    for b in range(2, max_beta + 1):
        h[b] = 4 if b == 2 else _general_step(b, h[b - 1])
        f[b] = b + b * f[b - 1]
        g[b] = g[b - 1] + h[b]
        h1[b] = 2 * b + (2 * b + 1) * h1[b - 1]
        h2[b] = b + (2 * b + 1) * h2[b - 1]
        h_strict[b] = _general_step(b, h_strict[b - 1])
    log.debug(f"Bound tables up to {max_beta}: h={h}")
    return BoundTables(h, f, g, h1, h2, h_strict)


def h_bound(beta: int) -> int:
    return 0 if beta <= 0 else bound_tables(beta).h[beta]


def f_bound(alpha: int) -> int:
    return 0 if alpha <= 0 else bound_tables(alpha).f[alpha]


def g_bound(alpha: int) -> int:
    return 0 if alpha <= 0 else bound_tables(alpha).g[alpha]


def h_strict_bound(beta: int) -> int:
    return 0 if beta <= 0 else bound_tables(beta).h_strict[beta]
