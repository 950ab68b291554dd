"""Reading and writing graphs.

Edge-list text: the first non-comment line is ``n m``, then ``m`` lines
``u v`` (0-indexed). Lines starting with ``#`` are comments. A labelled
graph may add ``C: i j k`` and ``U: i j`` lines after the edges. Simple
graphs can also be given in graph6.
"""

from __future__ import annotations

from pathlib import Path

from .graph import LabelledGraph, Multigraph


class GraphFormatError(ValueError):
    pass


def parse_edge_list(text: str) -> LabelledGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    if len(lines) < 1 + m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}") from None
    labels = {"C": set(), "U": set()}
    for ln in lines[1 + m:]:
        head, _, rest = ln.partition(":")
        if head.strip() not in labels or not _:
            raise GraphFormatError(f"unexpected line {ln!r}")
        labels[head.strip()].update(int(t) for t in rest.split())
    try:
        g = Multigraph(n, tuple(edges))
        return LabelledGraph(g, frozenset(labels["C"]), frozenset(labels["U"]))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g, comment: str | None = None) -> str:
    lab = g if isinstance(g, LabelledGraph) else None
    graph = lab.graph if lab else g
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"{graph.n} {graph.m}")
    out.extend(f"{a} {b}" for a, b in graph.edges)
    if lab and lab.C:
        out.append("C: " + " ".join(map(str, sorted(lab.C))))
    if lab and lab.U:
        out.append("U: " + " ".join(map(str, sorted(lab.U))))
    return "\n".join(out) + "\n"


def _graph6_n(data: bytes) -> tuple:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if data[1] != 126:
        return (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63), data[4:]
    n = 0
    for c in data[2:8]:
        n = n << 6 | (c - 63)
    return n, data[8:]


def parse_graph6(text: str) -> Multigraph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = data.encode("ascii")
    if not raw or any(c < 63 or c > 126 for c in raw):
        raise GraphFormatError("not a graph6 string")
    n, body = _graph6_n(raw)
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise GraphFormatError("graph6 string too short")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Multigraph(n, tuple(edges))


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 encodes simple graphs only")
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    present = set(g.edges)
    bits = [int((i, j) in present) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) + 63
            for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def read_graph(path) -> LabelledGraph:
    """Read an edge-list or graph6 file (graph6 if the suffix is .g6)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".graph6"):
        return LabelledGraph(parse_graph6(text.splitlines()[0]))
    return parse_edge_list(text)
