"""Graph inputs: generator expressions and edge-list files.

Expressions: ``P<n>``, ``C<n>``, ``K<n>``, ``S<k>`` (star with k leaves) and
``LEX(<expr>,<expr>)``.  Anything else is read as an edge-list file::

    # comment
    n m
    u v        (m lines)

Vertex tokens that are all integers are used as 0-based indices; otherwise
tokens are treated as names and numbered in order of first appearance.
"""

from __future__ import annotations

import re
from pathlib import Path

from . import graph as gc
from .errors import GraphError, ParseError
from .graph import Graph

EXPR_RE = re.compile(r"^[PCKS][0-9]+$")
_FAMILIES = {"P": gc.path, "C": gc.cycle, "K": gc.complete, "S": gc.star}


def is_expression(text: str) -> bool:
    return bool(EXPR_RE.match(text)) or text.startswith("LEX(")


def _split_args(inner: str) -> list[str]:
    depth, start, parts = 0, 0, []
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {inner!r}")
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"unbalanced parentheses in {inner!r}")
    parts.append(inner[start:])
    return [p.strip() for p in parts]


def parse_expression(text: str) -> Graph:
    text = text.strip()
    try:
        if EXPR_RE.match(text):
            return _FAMILIES[text[0]](int(text[1:]))
        if text.startswith("LEX(") and text.endswith(")"):
            args = _split_args(text[4:-1])
            if len(args) != 2:
                raise ParseError(f"LEX takes two arguments, got {len(args)}")
            return gc.lex_product(load_graph(args[0]), load_graph(args[1]))
    except GraphError as exc:
        raise ParseError(f"{text}: {exc}") from exc
    raise ParseError(f"not a graph expression: {text!r}")


def parse_edge_list(text: str, name: str | None = None) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list")
    lineno, header = rows[0]
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise ParseError(f"line {lineno}: expected 'n m', got {' '.join(header)!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
    tokens = [t for _, pair in body for t in pair]
    labels = None
    if all(re.fullmatch(r"-?[0-9]+", t) for t in tokens):
        index = {t: int(t) for t in tokens}
    else:
        index = {}
        for t in tokens:
            index.setdefault(t, len(index))
        if len(index) > n:
            raise ParseError(f"{len(index)} distinct vertex names but n = {n}")
        names = {i: t for t, i in index.items()}
        labels = tuple(names.get(i, str(i)) for i in range(n))
    edges = [(index[u], index[v]) for _, (u, v) in body]
    try:
        return gc.from_edge_list(n, edges, name=name, labels=labels)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def load_graph(source: str) -> Graph:
    """Parse an expression, or read an edge-list file."""
    if is_expression(source):
        return parse_expression(source)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    return parse_edge_list(text, name=path.stem)


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"# {G.label()}", f"{G.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
