"""graph6 codec: 63-offset size header, column-major upper-triangle bits,
6 bits per printable character.  Bit-exact round trips are a test invariant.
"""

from __future__ import annotations

from .graph import Graph

_HEADER_LONG = 126  # '~' introduces the 3-character size form


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        bits.extend((col >> i) & 1 for i in range(j))
    chars = []
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    codes = [ord(c) for c in s]
    if any(c < 63 or c > 126 for c in codes):
        raise ValueError(f"graph6 character out of range in {text!r}")
    if codes[0] == _HEADER_LONG:
        if len(codes) >= 2 and codes[1] == _HEADER_LONG:
            raise ValueError("graph6 sizes above 258047 are not supported")
        if len(codes) < 4:
            raise ValueError("truncated graph6 size header")
        n = 0
        for c in codes[1:4]:
            n = n << 6 | (c - 63)
        body = codes[4:]
    else:
        n = codes[0] - 63
        body = codes[1:]
    if n > 64:
        raise ValueError(f"graph on {n} vertices exceeds the 64-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 payload has {len(body)} characters, expected {need}")
    stream = 0
    for c in body:
        stream = stream << 6 | (c - 63)
    total = 6 * len(body)
    if total and stream & ((1 << (total - nbits)) - 1):
        raise ValueError("graph6 trailing padding bits are not zero")
    rows = [0] * n
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines) -> list[Graph]:
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out
