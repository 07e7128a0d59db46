"""graph6 line codec.

graph6 is the printable-ASCII interchange format for simple graphs: a 6-bit
big-endian order field followed by the upper-triangle adjacency bits in
column-major order, zero-padded to a 6-bit boundary, every 6-bit value offset
by 63 into the printable range.  One graph per line.  Decoding tolerates an
optional ``>>graph6<<`` header and a trailing newline, nothing else.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"

_MAX_ORDER = 68719476735  # 36-bit order field limit of the format


class Graph6Error(ValueError):
    """Malformed graph6 input; the message names the offending byte offset."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (without trailing newline)."""
    n = g.order
    if n > _MAX_ORDER:
        raise ValueError(f"order {n} exceeds the graph6 format limit")
    out = [_encode_order(n)]
    group = 0
    nbits = 0
    for col in range(1, n):
        colrow = g.rows[col]
        for rowi in range(col):
            group = group << 1 | (colrow >> rowi & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (group << 6 - nbits)))
    return "".join(out)


def decode_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line; raises Graph6Error naming the bad byte offset."""
    if isinstance(line, bytes):
        try:
            text = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error(f"non-ASCII byte at offset {exc.start}") from None
    else:
        text = line
    base = 0
    if text.startswith(HEADER):
        text = text[len(HEADER):]
        base = len(HEADER)
    text = text.rstrip("\n").rstrip("\r")
    if not text:
        raise Graph6Error(f"empty graph6 line at byte offset {base}")
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable graph6 byte at offset {base + i}")

    vals = [ord(ch) - 63 for ch in text]
    pos = 0
    if vals[0] != 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error(
                f"truncated order field at byte offset {base + len(vals)}")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error(
                f"truncated order field at byte offset {base + len(vals)}")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise Graph6Error(
            f"truncated adjacency data at byte offset {base + len(vals)}"
            f" (need {need} bytes, have {have})")
    if have > need:
        raise Graph6Error(f"trailing garbage at byte offset {base + pos + need}")

    rows = [0] * n
    bit = 0
    col, rowi = 1, 0
    for v in vals[pos:]:
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if v >> shift & 1:
                    raise Graph6Error(
                        f"non-zero padding bit at byte offset {base + pos + (bit // 6)}")
                bit += 1
                continue
            if v >> shift & 1:
                rows[rowi] |= 1 << col
                rows[col] |= 1 << rowi
            bit += 1
            rowi += 1
            if rowi == col:
                col += 1
                rowi = 0
    return Graph(tuple(rows))
