# tridom/cli/formats.py
"""
Line-based instance files.

    mpd <t> <n>              ecg <n>
    class <idx> <v> ...      edge <u> <v> <color>
    arc <u> <v>

`#` starts a comment (so `#R` report lines pass through), blank lines are ignored and all
ids are 0-based. Serialization is canonical: classes and vertices ascending, arcs and edges
in lexicographic order, edges written with u < v.
"""
from collections.abc import Iterator
from pathlib import Path
from typing import TextIO
import sys

from tridom.core.digraph import MultipartiteDigraph
from tridom.gallai.colored_graph import EdgeColoredGraph
from tridom.utils.errors import ParseError
import logging

log = logging.getLogger(__name__)

STDIO = "-"


def _significant_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield number, body.split()


def _ints(number: int, tokens: list[str]) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(number, f"expected integers, got {' '.join(tokens)!r}") from None


def _header(lines: list[tuple[int, list[str]]], keyword: str, arity: int) -> list[int]:
    if not lines:
        raise ParseError(1, f"missing '{keyword}' header")
    number, tokens = lines[0]
    if tokens[0] != keyword or len(tokens) != arity + 1:
        raise ParseError(number, f"expected '{keyword}' header with {arity} numbers")
    values = _ints(number, tokens[1:])
    if any(v < 0 for v in values):
        raise ParseError(number, "header values must be non-negative")
    return values


def parse_mpd(text: str, label: str = "D") -> MultipartiteDigraph:
    """
    Raises:
        ParseError: Malformed line (with its number); validation errors of the digraph pass through.
    """
    lines = list(_significant_lines(text))
    t, n = _header(lines, "mpd", 2)
    classes: list[list[int]] = []
    arcs: list[tuple[int, int]] = []
    for number, tokens in lines[1:]:
        keyword, values = tokens[0], _ints(number, tokens[1:])
        if keyword == "class":
            if not values:
                raise ParseError(number, "class line needs an index")
            if values[0] != len(classes):
                raise ParseError(number, f"class index {values[0]} out of order; expected {len(classes)}")
            classes.append(values[1:])
        elif keyword == "arc":
            if len(values) != 2:
                raise ParseError(number, "arc line needs exactly two vertices")
            arcs.append((values[0], values[1]))
        else:
            raise ParseError(number, f"unknown keyword {keyword!r}")
    if len(classes) != t:
        raise ParseError(lines[0][0], f"header announces {t} classes, found {len(classes)}")
    digraph = MultipartiteDigraph(n, classes, arcs, label=label)
    log.debug(f"Parsed {digraph}")
    return digraph


def serialize_mpd(digraph: MultipartiteDigraph) -> str:
    out = [f"mpd {digraph.num_classes} {digraph.num_vertices}"]
    out += [" ".join(["class", str(i), *map(str, members)]) for i, members in enumerate(digraph.classes)]
    out += [f"arc {u} {v}" for u, v in digraph.sorted_arcs()]
    return "\n".join(out) + "\n"


def parse_ecg(text: str, label: str = "G") -> EdgeColoredGraph:
    """
    Raises:
        ParseError: Malformed or duplicate edge line; other validation errors pass through.
    """
    lines = list(_significant_lines(text))
    (n,) = _header(lines, "ecg", 1)
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for number, tokens in lines[1:]:
        keyword, values = tokens[0], _ints(number, tokens[1:])
        if keyword != "edge":
            raise ParseError(number, f"unknown keyword {keyword!r}")
        if len(values) != 3:
            raise ParseError(number, "edge line needs two vertices and a color")
        u, v, color = values
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(number, f"edge {key} already given on line {seen[key]}")
        seen[key] = number
        edges.append((u, v, color))
    graph = EdgeColoredGraph(n, edges, label=label)
    log.debug(f"Parsed {graph}")
    return graph


def serialize_ecg(graph: EdgeColoredGraph) -> str:
    out = [f"ecg {graph.num_vertices}"]
    out += [f"edge {u} {v} {c}" for u, v, c in graph.sorted_edges()]
    return "\n".join(out) + "\n"


def detect_format(text: str) -> str:
    for _, tokens in _significant_lines(text):
        if tokens[0] in ("mpd", "ecg"):
            return tokens[0]
        break
    raise ParseError(1, "unrecognized instance format (expected an 'mpd' or 'ecg' header)")


def parse_instance(text: str, label: str = "D") -> MultipartiteDigraph | EdgeColoredGraph:
    return parse_mpd(text, label) if detect_format(text) == "mpd" else parse_ecg(text, label)


def read_text(source: str, stdin: TextIO | None = None) -> str:
    """File contents, or standard input for '-'."""
    if source == STDIO:
        return (stdin or sys.stdin).read()
    return Path(source).read_text(encoding="utf-8")


def write_text(target: str, text: str, stdout: TextIO | None = None) -> None:
    if target == STDIO:
        stream = stdout or sys.stdout
        stream.write(text)
        stream.flush()
    else:
        Path(target).write_text(text, encoding="utf-8")
        log.info(f"Wrote {target}")


def serialize_instance(instance: MultipartiteDigraph | EdgeColoredGraph) -> str:
    if isinstance(instance, EdgeColoredGraph):
        return serialize_ecg(instance)
    return serialize_mpd(instance)
