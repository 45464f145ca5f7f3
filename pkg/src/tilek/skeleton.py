"""The 1-skeleton of a 2-rank graph and finite proxies for its infinite-path properties.

Blue edges come from the first matrix of a pair (degree (1,0)), magenta
edges from the second (degree (0,1)). Strong connectivity stands in for
cofinality. Aperiodicity can only be falsified on a finite grid, so
:func:`check_no_period` answers "no period found up to the bounds", never
"aperiodic".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .adjacency import AdjacencyMatrix

DEFAULT_LENGTH = 30
DEFAULT_MAX_SHIFT = 10


class PrefixError(ValueError):
    """The aperiodic-prefix construction cannot run from this start vertex."""


@dataclass(frozen=True, eq=False)
class Skeleton:
    vertices: tuple
    blue: np.ndarray
    magenta: np.ndarray

    @classmethod
    def from_pair(cls, m1: AdjacencyMatrix, m2: AdjacencyMatrix) -> Skeleton:
        if m1.index_map != m2.index_map:
            raise ValueError("the two matrices index different vertex sets")
        return cls(m1.index_map, m1.entries, m2.entries)

    @classmethod
    def from_edges(cls, n: int, blue_edges=(), magenta_edges=()) -> Skeleton:
        blue = np.zeros((n, n), dtype=np.int64)
        magenta = np.zeros((n, n), dtype=np.int64)
        for s, r in blue_edges:
            blue[s, r] = 1
        for s, r in magenta_edges:
            magenta[s, r] = 1
        return cls(tuple(range(n)), blue, magenta)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def blue_edges(self) -> set[tuple[int, int]]:
        return set(map(tuple, np.argwhere(self.blue).tolist()))

    def magenta_edges(self) -> set[tuple[int, int]]:
        return set(map(tuple, np.argwhere(self.magenta).tolist()))

    def blue_partners(self, v: int) -> list[int]:
        return np.flatnonzero(self.blue[v]).tolist()

    def magenta_partners(self, v: int) -> list[int]:
        return np.flatnonzero(self.magenta[v]).tolist()


def _union(sk: Skeleton) -> csr_matrix:
    return csr_matrix(((sk.blue + sk.magenta) > 0).astype(np.int8))


def component_labels(sk: Skeleton) -> list[int]:
    if sk.size == 0:
        return []
    return connected_components(_union(sk), directed=True, connection="weak")[1].tolist()


def components(sk: Skeleton) -> int:
    """Number of weakly connected components of the blue-magenta union."""
    if sk.size == 0:
        return 0
    return int(connected_components(_union(sk), directed=True, connection="weak")[0])


def component_sizes(sk: Skeleton) -> list[int]:
    labels = component_labels(sk)
    return sorted(labels.count(c) for c in set(labels))


def is_strongly_connected(sk: Skeleton) -> bool:
    if sk.size <= 1:
        return True
    return connected_components(_union(sk), directed=True, connection="strong")[0] == 1


def _has_cycle_with_entrance(adj: np.ndarray) -> bool:
    # A cycle with an entrance exists iff some vertex on a cycle has in-degree >= 2:
    # any cycle through it uses one incoming edge, and another one enters it.
    n = adj.shape[0]
    if n == 0:
        return False
    _, labels = connected_components(csr_matrix(adj), directed=True, connection="strong")
    sizes = np.bincount(labels)
    on_cycle = (sizes[labels] > 1) | (np.diag(adj) > 0)
    indegree = adj.sum(axis=0)
    return bool(np.any(on_cycle & (indegree >= 2)))


def has_cycle_with_entrance(sk: Skeleton) -> bool:
    """True iff the blue graph or the magenta graph has a cycle with an entrance of its own colour."""
    return _has_cycle_with_entrance(sk.blue) or _has_cycle_with_entrance(sk.magenta)


def is_b1_position(m: int) -> bool:
    # m = r^2 + r + 1 for some r >= 1
    r = 1
    while r * r + r + 1 < m:
        r += 1
    return r * r + r + 1 == m


def b1_positions(length: int) -> list[int]:
    return [m for m in range(length) if is_b1_position(m)]


@dataclass(frozen=True)
class PathPrefix:
    start: int
    horizontal_word: tuple[int, ...]
    vertical_word: tuple[int, ...]
    grid: tuple[tuple[int, ...], ...]  # grid[m][n]: m blue steps, n magenta steps

    @property
    def length(self) -> int:
        return len(self.horizontal_word)

    def to_json(self, names: Optional[Sequence] = None) -> dict:
        show = (lambda v: str(names[v])) if names is not None else (lambda v: v)
        return {"start": show(self.start), "length": self.length,
                "horizontal_word": [show(v) for v in self.horizontal_word],
                "vertical_word": [show(v) for v in self.vertical_word]}


def _prefix_word(length: int, a: int, first: int, second: int) -> tuple[int, ...]:
    return tuple(a if m % 2 == 0 else first if is_b1_position(m) else second
                 for m in range(length))


def complete_square(sk: Skeleton, b: int, c: int) -> int:
    """The unique D with a magenta edge B -> D and a blue edge C -> D."""
    cands = np.flatnonzero(sk.magenta[b] & sk.blue[c]).tolist()
    if len(cands) != 1:
        raise PrefixError(f"square completion of ({b}, {c}) is not unique: {cands}")
    return cands[0]


def fill_grid(sk: Skeleton, horizontal: Sequence[int], vertical: Sequence[int],
              row_first: bool = True) -> tuple[tuple[int, ...], ...]:
    """Fill the grid spanned by a blue path and a magenta path from one start.

    ``grid[m][n]`` completes the square whose blue side ends at
    ``grid[m][n-1]`` and whose magenta side ends at ``grid[m-1][n]``. The fill order is selectable so confluence
    can be tested.
    """
    if horizontal[0] != vertical[0]:
        raise ValueError("the two words must share their first vertex")
    rows, cols = len(horizontal), len(vertical)
    grid = [[-1] * cols for _ in range(rows)]
    for m in range(rows):
        grid[m][0] = horizontal[m]
    for n in range(cols):
        grid[0][n] = vertical[n]
    order = ([(m, n) for m in range(1, rows) for n in range(1, cols)] if row_first
             else [(m, n) for n in range(1, cols) for m in range(1, rows)])
    for m, n in order:
        grid[m][n] = complete_square(sk, grid[m][n - 1], grid[m - 1][n])
    return tuple(map(tuple, grid))


def aperiodic_prefix(sk: Skeleton, start: int, length: int = DEFAULT_LENGTH) -> PathPrefix:
    """The finite prefix of the aperiodic path built from ``start``.

    The blue word is ``A`` at even steps, ``B_1`` at steps ``r^2 + r + 1`` and
    ``B_2`` at the other odd steps; the magenta word uses ``C_1``, ``C_2``
    likewise. ``B_i`` and ``C_i`` are the two least partners of ``A``.
    """
    if length < 1:
        raise PrefixError("length must be positive")
    blue, magenta = sk.blue_partners(start), sk.magenta_partners(start)
    if len(blue) < 2 or len(magenta) < 2:
        raise PrefixError(
            f"vertex {start} has {len(blue)} blue and {len(magenta)} magenta partners; two of each are needed")
    for partner, mat in [(p, sk.blue) for p in blue[:2]] + [(p, sk.magenta) for p in magenta[:2]]:
        if not mat[partner, start]:
            raise PrefixError(f"edge {start} -> {partner} has no return edge")
    horizontal = _prefix_word(length, start, blue[0], blue[1])
    vertical = _prefix_word(length, start, magenta[0], magenta[1])
    return PathPrefix(start, horizontal, vertical, fill_grid(sk, horizontal, vertical))


def is_period(grid, p: tuple[int, int], q: tuple[int, int] = (0, 0)) -> bool:
    """Does ``grid[x + p] == grid[x]`` hold wherever both cells lie in the window ``>= q``?

    A shift with no overlapping cells is not counted as a period.
    """
    g = np.asarray(grid)
    rows, cols = g.shape
    (p1, p2), (q1, q2) = p, q
    m0, m1 = max(q1, q1 - p1), min(rows, rows - p1)
    n0, n1 = max(q2, q2 - p2), min(cols, cols - p2)
    if m0 >= m1 or n0 >= n1:
        return False
    return bool(np.array_equal(g[m0 + p1:m1 + p1, n0 + p2:n1 + p2], g[m0:m1, n0:n1]))


def check_no_period(p, max_shift: int = DEFAULT_MAX_SHIFT) -> bool:
    """True iff no shift ``0 < |s|_inf <= max_shift`` is a period of the grid or of a shifted window.

    Windows start at offsets ``q`` with ``0 <= q_i <= max_shift``. The
    comparisons made for a window are a superset of those made for any window
    inside it, so a period of some window is a period of the innermost one
    ``q = (max_shift, max_shift)``; checking that window alone is enough.
    """
    grid = np.asarray(p.grid if isinstance(p, PathPrefix) else p)
    if grid.ndim != 2 or max_shift >= min(grid.shape):
        raise ValueError("max_shift must be smaller than the prefix length")
    q = (max_shift, max_shift)
    for a in range(-max_shift, max_shift + 1):
        for b in range(-max_shift, max_shift + 1):
            if (a, b) != (0, 0) and is_period(grid, (a, b), q):
                return False
    return True


def skeleton_report(sk: Skeleton, aperiodic: bool = False, length: int = DEFAULT_LENGTH,
                    max_shift: int = DEFAULT_MAX_SHIFT, starts: Optional[Sequence[int]] = None) -> dict:
    """Summary used by the CLI. With ``aperiodic`` the prefix check runs from every start vertex."""
    out = {
        "vertices": sk.size,
        "components": components(sk),
        "component_sizes": component_sizes(sk),
        "strongly_connected": is_strongly_connected(sk),
        "cofinality_proxy": "strong connectivity of the 1-skeleton",
        "cycle_with_entrance": has_cycle_with_entrance(sk),
    }
    if aperiodic:
        verts = range(sk.size) if starts is None else starts
        found = [v for v in verts if not check_no_period(aperiodic_prefix(sk, v, length), max_shift)]
        out["aperiodic_prefix"] = {"length": length, "max_shift": max_shift,
                                   "starts_checked": len(list(verts)),
                                   "periodic_starts": found}
        out["no_period_up_to_bounds"] = not found
    return out
