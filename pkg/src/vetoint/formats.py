"""Text formats for representations and graphs.

Representation file::

    REP k=1 n=2 flags=unit,midpoint
    0 2 4
    3 5 7

Graph file::

    GRAPH n=3 m=2
    0 1
    1 2
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .model import FLAVORS, MarkedInterval, Representation, SimpleGraph, validate_representation


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_rational(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {tok!r}") from exc


def _header_fields(line: str, tag: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != tag:
        raise ParseError(f"expected header starting with {tag!r}, got {line!r}")
    fields = {}
    for p in parts[1:]:
        if "=" not in p:
            raise ParseError(f"bad header field {p!r}")
        key, val = p.split("=", 1)
        fields[key] = val
    return fields


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def dumps_rep(rep: Representation) -> str:
    flags = ",".join(f for f in FLAVORS if f in rep.flavor) or "none"
    lines = [f"REP k={rep.mark_count} n={rep.n} flags={flags}"]
    for iv in rep.intervals:
        lines.append(" ".join(format_rational(p) for p in iv.points))
    return "\n".join(lines) + "\n"


def loads_rep(text: str) -> Representation:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty representation file")
    fields = _header_fields(lines[0], "REP")
    try:
        k, n = int(fields["k"]), int(fields["n"])
    except (KeyError, ValueError) as exc:
        raise ParseError("REP header needs integer k= and n=") from exc
    flags_field = fields.get("flags", "none")
    flags = frozenset() if flags_field in ("none", "") else frozenset(flags_field.split(","))
    bad = flags - set(FLAVORS)
    if bad:
        raise ParseError(f"unknown flags {sorted(bad)}")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"header says n={n} but {len(body)} interval lines follow")
    intervals = []
    for ln in body:
        toks = ln.split()
        if len(toks) != k + 2:
            raise ParseError(f"interval line {ln!r} does not have k+2={k + 2} values")
        coords = [_parse_rational(t) for t in toks]
        intervals.append(MarkedInterval(coords[0], tuple(coords[1:-1]), coords[-1]))
    rep = Representation(tuple(intervals), k, flags)
    findings = validate_representation(rep)
    if findings:
        raise ParseError("; ".join(findings))
    return rep


def dumps_graph(g: SimpleGraph) -> str:
    lines = [f"GRAPH n={g.n} m={g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> SimpleGraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    fields = _header_fields(lines[0], "GRAPH")
    try:
        n = int(fields["n"])
        m = int(fields.get("m", -1))
    except (KeyError, ValueError) as exc:
        raise ParseError("GRAPH header needs integer n=") from exc
    edges = set()
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f"edge line {ln!r} must hold two vertex indices")
        u, v = int(toks[0]), int(toks[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge {ln!r}")
        edges.add((min(u, v), max(u, v)))
    if m >= 0 and m != len(edges):
        raise ParseError(f"header says m={m} but {len(edges)} distinct edges listed")
    return SimpleGraph(n, frozenset(edges))


def read_rep(path: str | Path) -> Representation:
    return loads_rep(Path(path).read_text())


def write_rep(rep: Representation, path: str | Path) -> None:
    Path(path).write_text(dumps_rep(rep))


def read_graph(path: str | Path) -> SimpleGraph:
    return loads_graph(Path(path).read_text())


def write_graph(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(g))
