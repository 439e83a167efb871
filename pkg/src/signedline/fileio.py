"""Text formats for signed graphs and drawings, plus DOT export.

Graph files:

    # comment lines and blanks are ignored
    sg <n>
    <u> <v> <+|->        one line per edge, vertices in 0..n-1

Drawing files:

    draw <n> <dim>
    <vertex> <coord_1> ... <coord_dim>

Coordinates are integers, decimals, or exact rationals written "p/q".
Both formats are line-oriented and diffable; rationals keep exact
arithmetic intact across the CLI boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .core import Drawing, SignedGraph


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_graph(text: str) -> SignedGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file, expected 'sg <n>' header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "sg" or not parts[1].isdigit():
        raise ParseError(lineno, f"expected 'sg <n>' header, got {header!r}")
    n = int(parts[1])

    pos, neg, seen = [], [], {}
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, f"expected '<u> <v> <+|->', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"bad vertex in {line!r}") from None
        if parts[2] not in "+-" or len(parts[2]) != 1:
            raise ParseError(lineno, f"bad sign {parts[2]!r}, expected + or -")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1} in {line!r}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise ParseError(lineno, f"duplicate edge {pair} (first on line {seen[pair]})")
        seen[pair] = lineno
        (pos if parts[2] == "+" else neg).append(pair)
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def emit_graph(g: SignedGraph) -> str:
    out = [f"sg {g.n}"]
    out += [f"{u} {v} +" for u, v in sorted(g.pos_edges)]
    out += [f"{u} {v} -" for u, v in sorted(g.neg_edges)]
    return "\n".join(out) + "\n"


def _parse_coord(token: str, lineno: int, exact: bool):
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad coordinate {token!r}") from None
    return value if exact else float(value)


def parse_drawing(text: str, exact: bool = True) -> Drawing:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file, expected 'draw <n> <dim>' header") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "draw" or not (parts[1].isdigit() and parts[2].isdigit()):
        raise ParseError(lineno, f"expected 'draw <n> <dim>' header, got {header!r}")
    n, dim = int(parts[1]), int(parts[2])
    if dim < 1:
        raise ParseError(lineno, "dimension must be >= 1")

    points = [None] * n
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != dim + 1:
            raise ParseError(lineno, f"expected '<vertex> {dim} coordinate(s)', got {line!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise ParseError(lineno, f"bad vertex {parts[0]!r}") from None
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex {v} out of range 0..{n - 1}")
        if points[v] is not None:
            raise ParseError(lineno, f"vertex {v} listed twice")
        points[v] = tuple(_parse_coord(tok, lineno, exact) for tok in parts[1:])
    missing = [v for v, p in enumerate(points) if p is None]
    if missing:
        raise ParseError(lineno if n else 1, f"no coordinates for vertices {missing}")
    return Drawing(dim, tuple(points))


def _coord_text(c) -> str:
    if isinstance(c, float):
        return repr(c)
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def emit_drawing(d: Drawing) -> str:
    out = [f"draw {d.n} {d.dim}"]
    for v, p in enumerate(d.points):
        out.append(f"{v} " + " ".join(_coord_text(c) for c in p))
    return "\n".join(out) + "\n"


def to_dot(g: SignedGraph, name: str = "signed") -> str:
    """DOT text with solid positive edges and dashed negative edges."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f"  {v};")
    for u, v in sorted(g.pos_edges):
        out.append(f"  {u} -- {v};")
    for u, v in sorted(g.neg_edges):
        out.append(f"  {u} -- {v} [style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"
