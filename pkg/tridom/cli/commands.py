# tridom/cli/commands.py
"""
`tridom` command-line front end.

Exit codes: 0 success (and verified), 1 property or verification failure,
2 invalid input or usage.
"""
import argparse
import logging
import sys
import time
from dataclasses import dataclass
from typing import TextIO

from tridom.cli.bench import run_suite
from tridom.cli.formats import STDIO, parse_instance, read_text, serialize_instance, write_text
from tridom.cli.report import FAILED, NOT_APPLICABLE, VERIFIED, RunReport, status_of
from tridom.core.digraph import MultipartiteDigraph
from tridom.core.operations import find_cyclic_triangle
from tridom.gallai.colored_graph import EdgeColoredGraph, check_gallai
from tridom.gallai.cover import check_cover, check_largecomp_bound, cover_by_mono_components
from tridom.generators.constructions import gen_Dk, gen_pentagons
from tridom.generators.random_instances import (
    gen_random_bipartite_tournament,
    gen_random_dag,
    gen_random_digraph,
    gen_random_gallai,
    gen_random_multipartite_trianglefree,
)
from tridom.oracles.certificates import (
    check_class_domination,
    check_independent_set,
    check_side_domination,
    check_structured_certificate,
    check_vertex_domination,
)
from tridom.oracles.domination import gamma0_exact, gamma_exact, k_exact, min_clique_cover
from tridom.oracles.independence import (
    alpha_exact,
    beta_exact,
    max_independent_set,
    max_transversal_independent_set,
)
from tridom.solvers.bounds import f_bound, g_bound
from tridom.solvers.clique_acyclic import (
    dominate_acyclic_orientation,
    dominate_alpha2,
    dominate_clique_acyclic,
    dominate_via_clique_cover,
)
from tridom.solvers.general import DISPATCH, MODES, dominate_general, expected_bound
from tridom.utils.config import load_settings, use_settings
from tridom.utils.errors import (
    BudgetExceeded,
    InternalContradiction,
    InvalidInstance,
    PreconditionError,
    TargetUnreachable,
    TridomError,
)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(TridomError):
    """The command line is well-formed but asks for something the instance cannot give."""


@dataclass
class Streams:
    stdin: TextIO
    stdout: TextIO
    stderr: TextIO


# --- argument helpers ---
def vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def cover_list(text: str) -> list[list[int]]:
    return [vertex_list(chunk) for chunk in text.split(";") if chunk.strip()]


def _load(args, io: Streams):
    return parse_instance(read_text(args.file, io.stdin), label=args.file if args.file != STDIO else "stdin")


def _load_digraph(args, io: Streams) -> MultipartiteDigraph:
    instance = _load(args, io)
    if not isinstance(instance, MultipartiteDigraph):
        raise UsageError(f"{args.command} needs an mpd instance")
    return instance


def _load_colored(args, io: Streams) -> EdgeColoredGraph:
    instance = _load(args, io)
    if not isinstance(instance, EdgeColoredGraph):
        raise UsageError(f"{args.command} needs an ecg instance")
    return instance


def _summary(instance) -> dict:
    summary = instance.summary_dict()
    summary.pop("class_sizes", None)
    return summary


# --- gen ---
def _gen(args, io: Streams) -> RunReport:
    report = RunReport(f"gen {args.kind}")
    status = NOT_APPLICABLE
    if args.kind == "pentagon":
        instance = gen_pentagons(args.t)
    elif args.kind == "dk":
        instance = gen_Dk(args.k)
    elif args.kind == "random-mpd":
        instance = gen_random_multipartite_trianglefree(args.t, args.class_size, args.completeness, args.seed)
        status = VERIFIED if find_cyclic_triangle(instance) is None else FAILED
    elif args.kind == "random-gallai":
        sample = gen_random_gallai(args.n, args.alpha, args.colors, args.seed, strict=args.strict)
        instance = sample.graph
        report.result.update(alpha=sample.alpha, reached=sample.reached)
        status = VERIFIED if check_gallai(instance) is None else FAILED
    elif args.kind == "random-bipartite":
        instance = gen_random_bipartite_tournament(args.n, args.seed)
    elif args.kind == "random-digraph":
        instance = gen_random_digraph(args.n, args.p, args.seed)
    else:
        instance = gen_random_dag(args.n, args.p, args.seed)
    write_text(args.out, serialize_instance(instance), io.stdout)
    report.summary = _summary(instance)
    report.status = status
    report.detail = str(instance)
    return report


# --- oracle ---
def _oracle(args, io: Streams) -> RunReport:
    report = RunReport(f"oracle {args.quantity}")
    if args.quantity == "alpha":
        graph = _load(args, io)
        witness = max_independent_set(graph)
        report.result.update(alpha=len(witness), witness=witness)
        report.status = status_of(check_independent_set(graph, witness))
        report.summary = _summary(graph)
        return report

    digraph = _load_digraph(args, io)
    report.summary = _summary(digraph)
    if args.quantity == "beta":
        witness = max_transversal_independent_set(digraph)
        report.result.update(beta=len(witness), witness=witness)
        report.status = status_of(check_independent_set(digraph, witness, transversal=True))
    elif args.quantity == "k":
        k, certificate = k_exact(digraph)
        report.result.update(k=k, classes=certificate.chosen)
        report.status = status_of(check_class_domination(digraph, certificate.chosen))
    elif args.quantity == "gamma":
        gamma, certificate = gamma_exact(digraph)
        report.result.update(gamma=gamma, vertices=certificate.chosen)
        report.status = status_of(check_vertex_domination(digraph, certificate.chosen))
    else:
        found = gamma0_exact(digraph)
        report.result.update(gamma_a=found.gamma_a, gamma_b=found.gamma_b, gamma0=found.gamma0,
                             witness_a=found.witness_a, witness_b=found.witness_b)
        checks = [check_side_domination(digraph, witness, target)
                  for witness, target in ((found.witness_a, 1), (found.witness_b, 0)) if witness is not None]
        report.status = FAILED if any(c is not None for c in checks) else VERIFIED
    return report


# --- solve ---
def _solve(args, io: Streams) -> RunReport:
    report = RunReport(f"solve {args.algorithm}")
    digraph = _load_digraph(args, io)
    report.summary = _summary(digraph)

    if args.algorithm == "classes":
        classes, certificate = dominate_general(digraph, mode=args.mode)
        beta = beta_exact(digraph)
        bound = expected_bound(beta, args.mode)
        report.result.update(mode=args.mode, beta=beta, size=len(classes), classes=classes, bound=bound,
                             within_bound=len(classes) <= bound)
        check = check_class_domination(digraph, classes)
        if certificate.has_structure:
            report.result.update(core=certificate.core_vertices, exceptional=certificate.exceptional_classes)
            structured = check_structured_certificate(digraph, certificate)
            check = structured if structured is not None else check
        report.status = status_of(check)
        return report

    if args.algorithm == "vertices":
        alpha = alpha_exact(digraph)
        vertices, _ = dominate_clique_acyclic(digraph)
        bound = f_bound(alpha)
        report.result.update(alpha=alpha)
    elif args.algorithm == "alpha2":
        vertices, _ = dominate_alpha2(digraph)
        bound = 3
    elif args.algorithm == "acyclic":
        vertices, _ = dominate_acyclic_orientation(digraph)
        bound = alpha_exact(digraph)
        report.result.update(alpha=bound)
    else:
        cover = args.cover if args.cover is not None else min_clique_cover(digraph)
        vertices, _ = dominate_via_clique_cover(digraph, cover)
        bound = len(cover)
        report.result.update(cover=";".join(" ".join(map(str, c)) for c in cover))
    report.result.update(size=len(vertices), vertices=vertices, bound=bound,
                         within_bound=len(vertices) <= bound)
    check = check_vertex_domination(digraph, vertices)
    if args.algorithm == "acyclic" and check_independent_set(digraph, vertices) is not None:
        check = check_independent_set(digraph, vertices)
    report.status = status_of(check)
    return report


# --- check ---
def _check(args, io: Streams) -> RunReport:
    report = RunReport(f"check {args.property}")
    if args.property in ("gallai", "largecomp"):
        graph = _load_colored(args, io)
        report.summary = _summary(graph)
        if args.property == "gallai":
            witness = check_gallai(graph)
            report.result.update(witness=witness)
            report.status = VERIFIED if witness is None else FAILED
            report.detail = "no rainbow triangle" if witness is None else f"rainbow triangle {witness}"
        else:
            found = check_largecomp_bound(graph)
            report.result.update(max_component=found.max_component, threshold=found.threshold)
            report.status = VERIFIED if found.holds else FAILED
        return report

    digraph = _load_digraph(args, io)
    report.summary = _summary(digraph)
    if args.property == "triangle":
        witness = find_cyclic_triangle(digraph)
        report.result.update(witness=witness)
        report.status = VERIFIED if witness is None else FAILED
        report.detail = "no cyclic triangle" if witness is None else f"cyclic triangle {witness}"
        return report
    if args.property == "class-domination":
        if args.classes is None:
            raise UsageError("check class-domination needs --classes")
        result = check_class_domination(digraph, args.classes)
    else:
        if args.vertices is None:
            raise UsageError("check vertex-domination needs --vertices")
        result = check_vertex_domination(digraph, args.vertices)
    report.status = status_of(result)
    report.detail = "dominating" if report.status == VERIFIED else str(result)
    return report


# --- gallai / bench ---
def _gallai_cover(args, io: Streams) -> RunReport:
    report = RunReport("gallai cover")
    graph = _load_colored(args, io)
    report.summary = _summary(graph)
    cover = cover_by_mono_components(graph)
    alpha = alpha_exact(graph)
    report.result.update(alpha=alpha, parts=cover.size, bound=g_bound(alpha))
    report.notes = [f"part {i}: color {'none' if p.color is None else p.color} vertices {list(p.vertices)}"
                    for i, p in enumerate(cover.parts)]
    report.status = status_of(check_cover(graph, cover))
    return report


def _bench(args, io: Streams) -> RunReport:
    report = RunReport("bench suite")
    frame = run_suite(args.seeds)
    io.stdout.write(frame.to_string(index=False) + "\n")
    if args.csv:
        frame.to_csv(args.csv, index=False)
        log.info(f"Wrote {args.csv}")
    unverified = int((~frame["verified"].astype(bool)).sum())
    report.result.update(rows=len(frame), unverified=unverified)
    report.status = VERIFIED if unverified == 0 else FAILED
    return report


# --- parser ---
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tridom", description="Domination in cyclic-triangle-free multipartite digraphs.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    parser.add_argument("--budget", type=int, help="vertex budget of the exact oracles (overrides TRIDOM_BUDGET)")
    parser.add_argument("--node-budget", type=int, help="search node budget of the general solver")
    parser.add_argument("--threads", type=int, help="worker processes for the exact domination oracles")
    groups = parser.add_subparsers(dest="group", required=True)

    gen = groups.add_parser("gen", help="generate an instance")
    gen_kinds = gen.add_subparsers(dest="kind", required=True)
    kinds = {
        "pentagon": [("--t", int, 1)],
        "dk": [("--k", int, 2)],
        "random-mpd": [("--t", int, 4), ("--class-size", int, 3), ("--completeness", float, 0.7), ("--seed", int, 0)],
        "random-gallai": [("--n", int, 20), ("--alpha", int, None), ("--colors", int, 3), ("--seed", int, 0)],
        "random-bipartite": [("--n", int, 10), ("--seed", int, 0)],
        "random-digraph": [("--n", int, 20), ("--p", float, 0.3), ("--seed", int, 0)],
        "random-dag": [("--n", int, 20), ("--p", float, 0.3), ("--seed", int, 0)],
    }
    for kind, options in kinds.items():
        sub = gen_kinds.add_parser(kind)
        for flag, kind_type, default in options:
            sub.add_argument(flag, type=kind_type, default=default)
        if kind == "random-gallai":
            sub.add_argument("--strict", action="store_true", help="fail if the target alpha is not reached")
        sub.add_argument("--out", default=STDIO, help="output file ('-' for stdout)")
        sub.set_defaults(handler=_gen, report_to_stderr=True)

    oracle = groups.add_parser("oracle", help="exact brute-force quantities")
    oracle.add_argument("quantity", choices=["beta", "alpha", "k", "gamma", "gamma0"])
    oracle.add_argument("file", help="instance file ('-' for stdin)")
    oracle.set_defaults(handler=_oracle)

    solve = groups.add_parser("solve", help="constructive domination algorithms")
    solve.add_argument("algorithm", choices=["classes", "vertices", "alpha2", "acyclic", "clique-cover"])
    solve.add_argument("file")
    solve.add_argument("--mode", choices=MODES, default=DISPATCH)
    solve.add_argument("--cover", type=cover_list, help='clique cover such as "0 1;2 3;4"')
    solve.set_defaults(handler=_solve)

    check = groups.add_parser("check", help="independent checkers")
    check.add_argument("property", choices=["triangle", "gallai", "class-domination", "vertex-domination", "largecomp"])
    check.add_argument("file")
    check.add_argument("--classes", type=vertex_list)
    check.add_argument("--vertices", type=vertex_list)
    check.set_defaults(handler=_check)

    gallai = groups.add_parser("gallai", help="Gallai-coloring application")
    gallai_actions = gallai.add_subparsers(dest="action", required=True)
    cover = gallai_actions.add_parser("cover")
    cover.add_argument("file")
    cover.set_defaults(handler=_gallai_cover)

    bench = groups.add_parser("bench", help="benchmark suite")
    bench_actions = bench.add_subparsers(dest="action", required=True)
    suite = bench_actions.add_parser("suite")
    suite.add_argument("--seeds", type=int, default=3)
    suite.add_argument("--csv", help="also write the table to this CSV file")
    suite.set_defaults(handler=_bench)
    return parser


def configure_logging(verbosity: int, stream: TextIO) -> None:
    level = logging.DEBUG if verbosity >= 2 else logging.INFO if verbosity == 1 else logging.WARNING
    logging.basicConfig(level=level, stream=stream, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _command_name(args) -> str:
    second = next((getattr(args, a) for a in ("kind", "quantity", "algorithm", "property", "action")
                   if getattr(args, a, None)), "")
    return f"{args.group} {second}".strip()


def run(argv: list[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse, dispatch, print the report; returns the exit code."""
    io = Streams(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    args.command = _command_name(args)
    configure_logging(args.verbose, io.stderr)

    settings = load_settings().with_overrides(vertex_budget=args.budget, node_budget=args.node_budget,
                                              threads=args.threads)
    previous = use_settings(settings)
    started = time.perf_counter()
    try:
        report = args.handler(args, io)
    except (InvalidInstance, PreconditionError, BudgetExceeded, UsageError, ValueError, OSError) as exc:
        log.error(f"{args.command}: {exc}")
        io.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (InternalContradiction, TargetUnreachable) as exc:
        log.error(f"{args.command}: {exc}")
        io.stderr.write(f"failure: {exc}\n")
        return EXIT_FAILURE
    except Exception as exc:
        log.error(f"{args.command}: unexpected error", exc_info=True)
        io.stderr.write(f"failure: {exc}\n")
        return EXIT_FAILURE
    finally:
        use_settings(previous)
    report.elapsed = time.perf_counter() - started
    target = io.stderr if getattr(args, "report_to_stderr", False) else io.stdout
    target.write(report.render())
    return EXIT_FAILURE if report.failed else EXIT_OK


def main() -> None:
    sys.exit(run())
