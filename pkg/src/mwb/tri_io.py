"""Facet-list files (.tri), move traces, and coordinate files.

A .tri file is a `d n` header followed by one facet per line (d+1 labels).
Input labels may be decimal or the single characters a-z for 10-35 (the
shorthand used in printed facet tables); output is always decimal, with
facets and vertices sorted, so writing is byte-deterministic and
parse(write(C)) == C.
"""
from __future__ import annotations

from fractions import Fraction

from .core import Complex, from_facets
from .errors import ParseError
from .flips import FlipMove


def _parse_label(tok: str, line_no: int) -> int:
    if tok.isdigit():
        return int(tok)
    if len(tok) == 1 and "a" <= tok <= "z":
        return 10 + ord(tok) - ord("a")
    raise ParseError(f"bad vertex label {tok!r}", line_no)


def parse(text: str) -> Complex:
    """Parse a facet file; raises ParseError with the offending line number."""
    header = None
    facets = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2 or not all(t.isdigit() for t in toks):
                raise ParseError("header must be 'd n'", line_no)
            header = (int(toks[0]), int(toks[1]))
            if header[0] < 1 or header[1] < header[0] + 2:
                raise ParseError("need d >= 1 and n >= d+2", line_no)
            continue
        labels = [_parse_label(t, line_no) for t in toks]
        if len(labels) != header[0] + 1:
            raise ParseError(
                f"facet has {len(labels)} labels, expected {header[0] + 1}",
                line_no)
        for v in labels:
            if not 1 <= v <= header[1]:
                raise ParseError(f"label {v} outside 1..{header[1]}", line_no)
        if len(set(labels)) != len(labels):
            raise ParseError("facet repeats a vertex", line_no)
        facets.append(labels)
    if header is None:
        raise ParseError("missing header")
    if not facets:
        raise ParseError("no facets")
    C = from_facets(facets)
    if C.n != header[1]:
        raise ParseError(
            f"header announces {header[1]} vertices but {C.n} labels are used")
    return C


def write(C: Complex) -> str:
    lines = [f"{C.dim} {C.n}"]
    lines.extend(" ".join(map(str, F)) for F in C.facets)
    return "\n".join(lines) + "\n"


def load(path) -> Complex:
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read())


def save(path, C: Complex) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(write(C))


def write_trace(trace) -> str:
    return "\n".join(m.as_line() for m in trace) + ("\n" if trace else "")


def parse_trace(text: str) -> list:
    moves = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            moves.append(FlipMove.from_line(line))
        except ValueError as exc:
            raise ParseError(f"bad move line: {exc}", line_no)
    return moves


def _parse_coord(tok: str, line_no: int) -> Fraction:
    try:
        return Fraction(tok)
    except ValueError:
        raise ParseError(f"bad coordinate {tok!r}", line_no)


def parse_coords(text: str) -> dict:
    """Lines `v x y z`; coordinates may be integers, fractions, or decimals
    (all converted exactly)."""
    coords = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 4:
            raise ParseError("expected 'v x y z'", line_no)
        v = _parse_label(toks[0], line_no)
        coords[v] = tuple(_parse_coord(t, line_no) for t in toks[1:])
    return coords
