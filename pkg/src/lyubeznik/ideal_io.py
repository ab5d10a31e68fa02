"""Reading and writing monomial ideals.

Text grammar::

    # comment
    vars: x, y, z            (optional header)
    x^3, x^2*y, y^3          (generators split by commas and/or newlines)
    y^2 z
    z^3

A generator is a product of ``name`` or ``name^exp`` factors joined by
``*``, whitespace, or nothing.  Names are a letter optionally followed by
an index (``x1``, ``x_1``); under a header any declared name is accepted.
A JSON document ``{"variables": [...], "generators": [[...], ...]}`` is
accepted too.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

from .core import ArgumentError, GeneratorSet, LyubeznikError, Monomial, format_monomial, minimalize
from .orders import TotalOrder

_NAME = re.compile(r"[A-Za-z](?:_?\d+)?")
_INT = re.compile(r"\d+")


class ParseError(LyubeznikError, ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)


@dataclass
class IdealDocument:
    variables: list[str]
    generators: list[Monomial]
    metadata: dict = field(default_factory=dict)

    def generator_set(self) -> GeneratorSet:
        if not self.generators:
            raise ParseError("no generators")
        try:
            return minimalize(self.generators, self.variables)
        except ArgumentError as exc:
            raise ParseError(str(exc)) from exc


class _MonomialParser:
    def __init__(self, declared: Sequence[str] | None):
        self.declared = list(declared) if declared is not None else None
        self.longest_first = sorted(self.declared or [], key=len, reverse=True)
        self.seen: list[str] = list(declared or [])

    def _name_at(self, text: str, pos: int) -> str | None:
        if self.declared is not None:
            for name in self.longest_first:
                if text.startswith(name, pos):
                    return name
        m = _NAME.match(text, pos)
        return m.group(0) if m else None

    def parse(self, text: str, line: int, col0: int) -> dict[str, int]:
        """Exponents by name for one generator spanning ``text``."""
        exps: dict[str, int] = {}
        pos = 0
        n = len(text)
        any_factor = False
        while pos < n:
            ch = text[pos]
            if ch.isspace() or (ch == "*" and any_factor):
                pos += 1
                continue
            name = self._name_at(text, pos)
            if name is None:
                raise ParseError(f"unexpected {ch!r}", line, col0 + pos)
            if self.declared is not None and name not in self.declared:
                raise ParseError(f"unknown variable {name!r}", line, col0 + pos)
            pos += len(name)
            e = 1
            if pos < n and text[pos] == "^":
                pos += 1
                m = _INT.match(text, pos)
                if not m:
                    raise ParseError("expected a non-negative integer exponent", line, col0 + pos)
                e = int(m.group(0))
                pos = m.end()
            if name not in self.seen:
                self.seen.append(name)
            exps[name] = exps.get(name, 0) + e
            any_factor = True
        if not any_factor:
            raise ParseError("empty generator", line, col0)
        return exps


def _split_items(line: str) -> list[tuple[str, int]]:
    items = []
    start = 0
    for i, ch in enumerate(line + ","):
        if ch == ",":
            chunk = line[start:i]
            if chunk.strip():
                lead = len(chunk) - len(chunk.lstrip())
                items.append((chunk.strip(), start + lead + 1))
            start = i + 1
    return items


def parse_ideal(text: str) -> IdealDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    declared = None
    raw: list[dict[str, int]] = []
    parser = _MonomialParser(None)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.lower().startswith("vars:"):
            if declared is not None or raw:
                raise ParseError("vars header must come first", lineno, 1)
            body = stripped[5:]
            declared = [v.strip() for v in body.replace(" ", ",").split(",") if v.strip()]
            if not declared or len(set(declared)) != len(declared):
                raise ParseError("bad variable header", lineno, 1)
            parser = _MonomialParser(declared)
            continue
        for item, col in _split_items(line):
            raw.append(parser.parse(item, lineno, col))
    names = parser.seen
    if not raw:
        raise ParseError("no generators")
    gens = [tuple(e.get(v, 0) for v in names) for e in raw]
    return IdealDocument(list(names), gens)


def _parse_json(text: str) -> IdealDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    try:
        names = [str(v) for v in obj["variables"]]
        gens = [tuple(int(e) for e in row) for row in obj["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON ideal: {exc}") from exc
    for row in gens:
        if len(row) != len(names):
            raise ParseError(f"generator {list(row)} does not match {len(names)} variables")
        if any(e < 0 for e in row):
            raise ParseError(f"negative exponent in {list(row)}")
    meta = {k: v for k, v in obj.items() if k not in ("variables", "generators")}
    return IdealDocument(names, gens, meta)


def format_ideal(g: GeneratorSet) -> str:
    """Text form that parses back to the same generator set."""
    lines = ["vars: " + ", ".join(g.names)]
    lines += [format_monomial(u, g.names) for u in g.gens]
    return "\n".join(lines) + "\n"


def parse_monomial(g: GeneratorSet, text: str) -> Monomial:
    exps = _MonomialParser(g.names).parse(text.strip(), 1, 1)
    return tuple(exps.get(v, 0) for v in g.names)


def parse_subset_spec(g: GeneratorSet, spec: str) -> list[int]:
    """Canonical indices named by a comma-separated spec.

    Each item is a 1-based input position or a generator written as a monomial.
    """
    out = []
    for item, col in _split_items(spec):
        if item.isdigit():
            pos = int(item)
            if pos not in g.input_positions:
                raise ParseError(f"input position {pos} is not a minimal generator", 1, col)
            out.append(g.input_positions.index(pos))
            continue
        try:
            mono = parse_monomial(g, item)
        except ParseError as exc:
            raise ParseError(f"in {item!r}: {exc}", 1, col) from exc
        if mono not in g.gens:
            raise ParseError(f"{item!r} is not a minimal generator", 1, col)
        out.append(g.gens.index(mono))
    if len(set(out)) != len(out):
        raise ParseError("a generator is named twice")
    return out


def parse_order_spec(g: GeneratorSet, spec: str) -> TotalOrder:
    seq = parse_subset_spec(g, spec)
    if len(seq) != g.s:
        raise ParseError(f"order names {len(seq)} of {g.s} generators")
    return TotalOrder(tuple(seq))
