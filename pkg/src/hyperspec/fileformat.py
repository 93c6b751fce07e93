"""Plain-text hypergraph format.

First non-comment line is ``n k``; every further non-empty line is one edge as
``k`` space-separated 0-based vertex indices.  Lines starting with ``#`` are
comments.  Output lists edges in lexicographic order and ends with a newline.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Iterable, Union

from .hypergraph import Hypergraph, validate


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_hypergraph(text: str) -> Hypergraph:
    header = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {raw!r}", lineno) from None
        if header is None:
            if len(fields) != 2:
                raise ParseError("header must be 'n k'", lineno)
            header = fields
            n, k = header
            if k < 2 or n < 0:
                raise ParseError(f"invalid header n={n} k={k}", lineno)
            continue
        if len(fields) != k:
            raise ParseError(f"edge has {len(fields)} vertices, expected {k}", lineno)
        if any(not 0 <= v < n for v in fields):
            raise ParseError(f"vertex out of range in {fields} (n={n})", lineno)
        if len(set(fields)) != k:
            raise ParseError(f"repeated vertex in {fields}", lineno)
        edge = tuple(sorted(fields))
        if edge in seen:
            raise ParseError(f"duplicate edge {list(edge)}", lineno)
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise ParseError("missing 'n k' header")
    h = Hypergraph(header[0], header[1], tuple(sorted(edges)))
    problem = validate(h)
    if problem:
        raise ParseError(problem)
    return h


def format_hypergraph(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"{h.n} {h.k}"]
    for c in comments:
        lines.append(c if c.startswith("#") else f"# {c}")
    lines.extend(" ".join(str(v) for v in e) for e in sorted(h.edges))
    return "\n".join(lines) + "\n"


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    """Read from a file, or from stdin when ``path`` is ``-``."""
    if str(path) == "-":
        return parse_hypergraph(sys.stdin.read())
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(h: Hypergraph, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    text = format_hypergraph(h, comments)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
