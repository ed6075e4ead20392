"""graph6 text encoding for graphs of order 1..62.

The format is one header byte (order + 63) followed by the upper-triangle
adjacency bits in column-major order, packed six bits per byte MSB-first,
zero-padded at the tail, each byte offset by 63 into the printable range.
Long-form headers (orders above 62) are out of scope and rejected.
"""

from __future__ import annotations

from .graphs import Graph

_OFFSET = 63
_MAX_G6_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 text or an order this codec does not cover."""


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 text for ``g`` (order 1..62)."""
    n = g.n
    if n == 0:
        raise Graph6Error("the order-0 graph has no encoding here")
    if n > _MAX_G6_ORDER:
        raise Graph6Error(
            f"order {n} needs a long-form header, which is unsupported"
        )
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    chars = [chr(_OFFSET + n)]
    for start in range(0, len(bits), 6):
        group = bits[start:start + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = value << 1 | b
        chars.append(chr(_OFFSET + value))
    return "".join(chars)


def decode_graph6(text: str) -> Graph:
    """Parse graph6 text into a Graph; rejects anything ill-formed."""
    if not text:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(text):
        code = ord(ch)
        if code < _OFFSET or code > 126:
            raise Graph6Error(
                f"byte {code} at position {pos} is outside the graph6 range 63..126"
            )
    n = ord(text[0]) - _OFFSET
    if n == 63:
        raise Graph6Error("long-form size headers (order > 62) are unsupported")
    if n == 0:
        raise Graph6Error("the order-0 graph is rejected at this boundary")
    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    body = text[1:]
    if len(body) < needed:
        raise Graph6Error(
            f"truncated bit tail: order {n} needs {needed} data bytes, got {len(body)}"
        )
    if len(body) > needed:
        raise Graph6Error(
            f"trailing bytes: order {n} needs {needed} data bytes, got {len(body)}"
        )
    bits = []
    for ch in body:
        value = ord(ch) - _OFFSET
        for shift in range(5, -1, -1):
            bits.append(value >> shift & 1)
    if any(bits[bit_count:]):
        raise Graph6Error("nonzero padding bits in the tail")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(rows)
