"""Connected bipartite graphs and their edge-list text format.

Vertices are 1-based: white vertices u_1..u_alpha, black vertices v_1..v_beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


class DisconnectedGraphError(ValueError):
    """The graph is not connected; the polyhedron construction needs a connected link."""


@dataclass(frozen=True)
class BipartiteGraph:
    alpha: int
    beta: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, alpha: int, beta: int, edges: Iterable[tuple[int, int]]):
        if alpha < 1 or beta < 1:
            raise ValueError(f"need alpha, beta >= 1, got ({alpha}, {beta})")
        seen = set()
        for i, j in edges:
            if not (1 <= i <= alpha and 1 <= j <= beta):
                raise ValueError(f"edge ({i}, {j}) outside [1,{alpha}] x [1,{beta}]")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "edges", frozenset(seen))
        if not _connected(alpha, beta, seen):
            raise DisconnectedGraphError(
                f"bipartite graph on {alpha}+{beta} vertices with {len(seen)} edges is disconnected")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.alpha * self.beta

    @property
    def is_connected(self) -> bool:
        # enforced at construction
        return True

    def __str__(self):
        if self.is_complete:
            return f"complete:{self.alpha},{self.beta}"
        return f"bipartite({self.alpha},{self.beta};{len(self.edges)} edges)"


def _connected(alpha: int, beta: int, edges) -> bool:
    # union-find over whites 0..alpha-1 and blacks alpha..alpha+beta-1
    parent = list(range(alpha + beta))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        parent[find(i - 1)] = find(alpha + j - 1)
    return len({find(x) for x in range(alpha + beta)}) == 1


def complete_bipartite(alpha: int, beta: int) -> BipartiteGraph:
    return BipartiteGraph(alpha, beta,
                          [(i, j) for i in range(1, alpha + 1) for j in range(1, beta + 1)])


def parse_graph(text: Union[str, bytes]) -> BipartiteGraph:
    """Parse ``bipartite <alpha> <beta>`` followed by one ``<i> <j>`` edge per line.

    Blank lines and lines starting with ``#`` are ignored; LF or CRLF.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise GraphFormatError("edge list must be ASCII") from e
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(n, ln) for n, ln in enumerate(lines, 1) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty input: missing 'bipartite <alpha> <beta>' header")
    n, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "bipartite":
        raise GraphFormatError(f"line {n}: expected 'bipartite <alpha> <beta>', got {header!r}")
    try:
        alpha, beta = int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError(f"line {n}: non-integer vertex counts") from None
    if alpha < 1 or beta < 1:
        raise GraphFormatError(f"line {n}: vertex counts must be >= 1")
    edges = []
    seen = set()
    for n, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {n}: expected '<i> <j>', got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {n}: non-integer vertex index") from None
        if not (1 <= i <= alpha and 1 <= j <= beta):
            raise GraphFormatError(f"line {n}: edge ({i}, {j}) out of range")
        if (i, j) in seen:
            raise GraphFormatError(f"line {n}: duplicate edge ({i}, {j})")
        seen.add((i, j))
        edges.append((i, j))
    return BipartiteGraph(alpha, beta, edges)


def render_graph(g: BipartiteGraph) -> str:
    lines = [f"bipartite {g.alpha} {g.beta}"]
    lines += [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"
