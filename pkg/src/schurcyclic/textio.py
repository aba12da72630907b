"""Plain-text formats for partitions, elements and enumeration output."""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .ringcore import (
    INFINITE_CYCLIC,
    RATIONAL,
    FiniteCyclic,
    GroupContext,
    RingElement,
    exponent_sort_key,
    format_element,
    format_rational,
)
from .schurmod import CLASSES, WINDOW, Partition

_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"[+-]?\d+(/\d+)?\Z")


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None, source=None):
        self.line, self.col, self.source = line, col, source
        where = ""
        if line is not None:
            where = f"{line}:{col or 1}: "
        if source:
            where = f"{source}:{where}"
        super().__init__(where + msg)


def _tokens(line: str):
    """(token, 1-based column) pairs."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_rational(tok: str) -> Fraction:
    if not _RAT.match(tok):
        raise ValueError(f"not a rational: {tok!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ValueError(f"not a rational (zero denominator): {tok!r}") from None


def parse_exponent(ctx: GroupContext, tok: str):
    if ctx.kind == "Q":
        return ctx.normalize(parse_rational(tok))
    if not _INT.match(tok):
        raise ValueError(f"not an integer exponent: {tok!r}")
    return ctx.normalize(int(tok))


def parse_group(rest: str) -> GroupContext:
    rest = rest.strip()
    if rest == "Z":
        return INFINITE_CYCLIC
    if rest == "Q":
        return RATIONAL
    m = re.fullmatch(r"Z/(\d+)", rest)
    if m and int(m.group(1)) >= 1:
        return FiniteCyclic(int(m.group(1)))
    raise ValueError(f"unknown group {rest!r}")


def format_group(ctx: GroupContext) -> str:
    return f"group {ctx}"


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield no, line


def _header(lines, source):
    try:
        no, line = next(lines)
    except StopIteration:
        raise ParseError("empty file", source=source) from None
    toks = _tokens(line)
    if toks[0][0] != "group" or len(toks) != 2:
        raise ParseError("expected 'group Z' | 'group Z/<n>' | 'group Q'", no, toks[0][1], source)
    try:
        return parse_group(toks[1][0])
    except ValueError as exc:
        raise ParseError(str(exc), no, toks[1][1], source) from None


def parse_partition(text: str, source: str | None = None) -> Partition:
    lines = _content_lines(text)
    ctx = _header(lines, source)
    window = None
    classes = []
    for no, line in lines:
        toks = _tokens(line)
        head, col = toks[0]
        if head in ("wedge", "construction"):
            what = "wedge" if head == "wedge" else (toks[1][0] if len(toks) > 1 else "?")
            raise ParseError(f"unsupported construction: {what}", no, col, source)
        if head == "window":
            if classes or window is not None:
                raise ParseError("'window' must directly follow the group line", no, col, source)
            if ctx.kind != "Z":
                raise ParseError("windows are only meaningful for group Z", no, col, source)
            if len(toks) != 3 or not all(_INT.match(t) for t, _ in toks[1:]):
                raise ParseError("expected 'window <lo> <hi>'", no, col, source)
            window = (int(toks[1][0]), int(toks[2][0]))
            if window[0] != -window[1] or window[1] < 0:
                raise ParseError("window must be symmetric: 'window -N N'", no, toks[1][1], source)
        elif head == "class":
            if len(toks) < 2:
                raise ParseError("empty class", no, col, source)
            cls = []
            for tok, c in toks[1:]:
                try:
                    cls.append(parse_exponent(ctx, tok))
                except ValueError as exc:
                    raise ParseError(str(exc), no, c, source) from None
            classes.append(cls)
        else:
            raise ParseError(f"unknown directive {head!r}", no, col, source)
    universe = WINDOW if window else (None if ctx.is_finite else CLASSES)
    return Partition(ctx, classes, universe=universe, window=window)


def format_partition(P: Partition) -> str:
    out = [format_group(P.ctx)]
    if P.universe == WINDOW:
        out.append(f"window {P.window[0]} {P.window[1]}")
    for c in P.classes:
        out.append("class " + " ".join(format_rational(e) for e in sorted(c, key=exponent_sort_key)))
    return "\n".join(out) + "\n"


def parse_element(ctx: GroupContext, line: str, no: int | None = None, source=None) -> RingElement:
    toks = _tokens(line)
    if [t for t, _ in toks] == ["0"]:
        return RingElement(ctx)
    terms = []
    for tok, col in toks:
        coeff, sep, exp = tok.partition("@")
        try:
            if not sep:
                raise ValueError(f"expected coeff@exp, got {tok!r}")
            terms.append((parse_exponent(ctx, exp), parse_rational(coeff)))
        except ValueError as exc:
            raise ParseError(str(exc), no, col, source) from None
    return RingElement(ctx, terms)


def parse_elements(text: str, source: str | None = None):
    """A ``group`` line, then one element per line."""
    lines = _content_lines(text)
    ctx = _header(lines, source)
    return ctx, [parse_element(ctx, line, no, source) for no, line in lines]


def format_elements(ctx: GroupContext, elements) -> str:
    return "\n".join([format_group(ctx)] + [format_element(a) for a in elements]) + "\n"


def read_partition(path) -> Partition:
    path = Path(path)
    return parse_partition(path.read_text(), source=str(path))


def write_enumeration(n: int, rings, out_dir) -> list[Path]:
    """One partition file per ring plus ``summary.tsv``; byte-stable for a given list."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(rings))))
    paths = []
    rows = ["n\tcount\tring\tfile\tclass_sizes"]
    for i, R in enumerate(rings):
        name = f"z{n}-ring{i:0{width}d}.partition"
        p = out / name
        p.write_text(format_partition(R.partition))
        paths.append(p)
        sizes = ",".join(str(len(c)) for c in R.classes)
        rows.append(f"{n}\t{len(rings)}\t{i}\t{name}\t{sizes}")
    (out / "summary.tsv").write_text("\n".join(rows) + "\n")
    return paths
