"""Plain-text design files.

Design format::

    nsqs v=10 blocks=30
    0 1 | 2 3
    ...
    # infinity=1

One block per line, the chosen split marked by ``|``.  Points are
decimal indices; the rotational fixed point (always the largest index)
is written ``inf``.  Trailing ``# key=value`` lines carry metadata; the
only recognized key is ``infinity``.  Serialization is byte-deterministic
and parse/serialize round-trips canonicalized designs exactly.

Rotational base-block files use the same block lines under a different
header::

    nsqs-base p=19 multipliers=1,9
    inf 1 | 0 9
    ...
"""

from __future__ import annotations

import re

from .constructions import RotationalSpec, rotational_spec
from .core import NestedDesign, nested_design
from .errors import ParseError

_DESIGN_HEADER = re.compile(r"^nsqs v=(\d+) blocks=(\d+)$")
_BASE_HEADER = re.compile(r"^nsqs-base p=(\d+) multipliers=(\d+(?:,\d+)*)$")
_BLOCK_LINE = re.compile(r"^(\S+) (\S+) \| (\S+) (\S+)$")


def _parse_point(token: str, inf_index: int, lineno: int) -> int:
    if token == "inf":
        return inf_index
    try:
        x = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: bad point {token!r}")
    if not 0 <= x < inf_index + 1:
        raise ParseError(f"line {lineno}: point {x} out of range 0..{inf_index}")
    return x


def _parse_blocks(lines, start_lineno, count, inf_index):
    """Parse block lines; returns (blocks, saw_inf, metadata, next_lineno)."""
    blocks = []
    saw_inf = False
    metadata: dict[str, str] = {}
    lineno = start_lineno
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.strip():
            lineno += 1
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" not in body:
                raise ParseError(f"line {lineno}: metadata needs key=value")
            key, _, value = body.partition("=")
            metadata[key.strip()] = value.strip()
            lineno += 1
            continue
        m = _BLOCK_LINE.match(line)
        if not m:
            raise ParseError(f"line {lineno}: malformed block line {line!r}")
        saw_inf = saw_inf or "inf" in m.groups()
        a, b, c, d = (_parse_point(t, inf_index, lineno) for t in m.groups())
        if len({a, b, c, d}) != 4:
            raise ParseError(f"line {lineno}: repeated point in block {line!r}")
        blocks.append(((a, b), (c, d)))
        lineno += 1
    if len(blocks) != count:
        raise ParseError(
            f"header announced {count} blocks, file contains {len(blocks)}"
        )
    return blocks, saw_inf, metadata


def parse_design(text: str, strict_count: bool = True) -> NestedDesign:
    """Parse a design file.

    ``strict_count=False`` tolerates a block count below the header's
    announcement (e.g. a truncated file), leaving the shortfall for
    verification to report.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    m = _DESIGN_HEADER.match(lines[0].strip())
    if not m:
        raise ParseError(f"line 1: bad header {lines[0]!r}")
    v, count = int(m.group(1)), int(m.group(2))
    if not strict_count:
        count = _count_blocks(lines[1:])
    blocks, saw_inf, metadata = _parse_blocks(lines[1:], 2, count, v - 1)
    uses_infinity = saw_inf or metadata.get("infinity") == "1"
    return nested_design(v, blocks, uses_infinity=uses_infinity)


def _fmt_point(x: int, inf_index: int, uses_infinity: bool) -> str:
    return "inf" if uses_infinity and x == inf_index else str(x)


def serialize_design(design: NestedDesign) -> str:
    out = [f"nsqs v={design.v} blocks={len(design.blocks)}"]
    inf_index = design.v - 1
    for (a, b), (c, d) in design.blocks:
        pts = [_fmt_point(x, inf_index, design.uses_infinity) for x in (a, b, c, d)]
        out.append(f"{pts[0]} {pts[1]} | {pts[2]} {pts[3]}")
    if design.uses_infinity:
        out.append("# infinity=1")
    return "\n".join(out) + "\n"


def parse_base_spec(text: str) -> RotationalSpec:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    m = _BASE_HEADER.match(lines[0].strip())
    if not m:
        raise ParseError(f"line 1: bad header {lines[0]!r}")
    p = int(m.group(1))
    multipliers = tuple(int(t) for t in m.group(2).split(","))
    body = lines[1:]
    # count is not in the header for base files; accept whatever is present
    blocks, _, _ = _parse_blocks(body, 2, _count_blocks(body), p)
    return rotational_spec(p, blocks, multipliers)


def _count_blocks(lines) -> int:
    return sum(
        1
        for line in lines
        if line.strip() and not line.lstrip().startswith("#")
    )


def serialize_base_spec(spec: RotationalSpec) -> str:
    mults = ",".join(str(m) for m in sorted(spec.multipliers))
    out = [f"nsqs-base p={spec.p} multipliers={mults}"]
    for (a, b), (c, d) in spec.base_blocks:
        pts = [_fmt_point(x, spec.p, True) for x in (a, b, c, d)]
        out.append(f"{pts[0]} {pts[1]} | {pts[2]} {pts[3]}")
    return "\n".join(out) + "\n"
