# tridom/cli/bench.py
"""Small benchmark suite: solver sizes against exact optima and proven bounds."""
import time

import pandas as pd

from tridom.gallai.cover import check_cover, cover_by_mono_components
from tridom.generators.constructions import gen_Dk, gen_pentagons
from tridom.generators.random_instances import (
    gen_random_digraph,
    gen_random_gallai,
    gen_random_multipartite_trianglefree,
)
from tridom.oracles.certificates import (
    check_class_domination,
    check_semi_kernel,
    check_vertex_domination,
    is_certificate,
)
from tridom.oracles.domination import gamma0_exact, gamma_exact, k_exact
from tridom.oracles.independence import alpha_exact, beta_exact
from tridom.solvers.bounds import f_bound, g_bound, h_bound
from tridom.solvers.clique_acyclic import dominate_alpha2, dominate_clique_acyclic, semi_kernel
from tridom.solvers.general import dominate_general
from tridom.utils.config import Settings, resolve
import logging

log = logging.getLogger(__name__)

COLUMNS = ["family", "instance", "n", "param", "value", "result", "exact", "bound", "verified", "seconds"]


def _row(family: str, instance: str, n: int, param: str, value: int | None, result: int,
         exact: int | None, bound: int | None, verified: bool, started: float) -> dict:
    return {
        "family": family, "instance": instance, "n": n, "param": param, "value": value,
        "result": result, "exact": exact, "bound": bound, "verified": verified,
        "seconds": round(time.perf_counter() - started, 4),
    }


def _pentagon_rows(settings: Settings) -> list[dict]:
    rows = []
    for t in (1, 2):
        started = time.perf_counter()
        d = gen_pentagons(t)
        alpha = alpha_exact(d, settings)
        vertices, _ = dominate_clique_acyclic(d, settings)
        gamma, _ = gamma_exact(d, settings)
        ok = is_certificate(check_vertex_domination(d, vertices))
        rows.append(_row("pentagons", d.label, d.num_vertices, "alpha", alpha, len(vertices),
                         gamma, f_bound(alpha), ok, started))
    started = time.perf_counter()
    d = gen_pentagons(1)
    vertices, _ = dominate_alpha2(d, settings)
    rows.append(_row("alpha2", d.label, d.num_vertices, "alpha", 2, len(vertices), 3, 3,
                     is_certificate(check_vertex_domination(d, vertices)), started))
    return rows


def _dk_rows(settings: Settings) -> list[dict]:
    rows = []
    for k in (1, 2):
        started = time.perf_counter()
        d = gen_Dk(k, settings)
        gamma0 = gamma0_exact(d, settings).gamma0
        rows.append(_row("D_k", d.label, d.num_vertices, "k", k, gamma0, gamma0, None,
                         gamma0 is not None and gamma0 > k, started))
    return rows


def _general_rows(seeds: int, settings: Settings) -> list[dict]:
    rows = []
    for seed in range(seeds):
        started = time.perf_counter()
        d = gen_random_multipartite_trianglefree(5, 3, 0.6, seed)
        beta = beta_exact(d, settings)
        classes, _ = dominate_general(d, settings=settings)
        k, _ = k_exact(d, settings)
        ok = is_certificate(check_class_domination(d, classes))
        rows.append(_row("general", d.label, d.num_vertices, "beta", beta, len(classes), k,
                         h_bound(beta), ok, started))
    return rows


def _semi_kernel_rows(seeds: int) -> list[dict]:
    rows = []
    for seed in range(seeds):
        started = time.perf_counter()
        d = gen_random_digraph(30, 0.3, seed)
        kernel = semi_kernel(d)
        rows.append(_row("semi-kernel", d.label, d.num_vertices, "p", None, len(kernel), None, None,
                         check_semi_kernel(d, kernel) is None, started))
    return rows


def _gallai_rows(seeds: int, settings: Settings) -> list[dict]:
    rows = []
    for seed in range(seeds):
        started = time.perf_counter()
        sample = gen_random_gallai(20, 2, 3, seed, settings=settings)
        cover = cover_by_mono_components(sample.graph, settings)
        rows.append(_row("gallai", sample.graph.label, sample.graph.num_vertices, "alpha", sample.alpha,
                         cover.size, None, g_bound(sample.alpha),
                         check_cover(sample.graph, cover) is None, started))
    return rows


def run_suite(seeds: int = 3, settings: Settings | None = None) -> pd.DataFrame:
    """One row per instance; `verified` comes from re-running the checkers."""
    settings = resolve(settings)
    rows = []
    rows += _pentagon_rows(settings)
    rows += _dk_rows(settings)
    rows += _general_rows(seeds, settings)
    rows += _semi_kernel_rows(seeds)
    rows += _gallai_rows(seeds, settings)
    frame = pd.DataFrame(rows, columns=COLUMNS)
    log.info(f"Bench suite: {len(frame)} rows, {int((~frame['verified']).sum())} unverified")
    return frame
