"""Adjacency matrix pairs for the five polygon systems, and their axiom checks.

Every matrix entry is decided by the membership condition on boundary
words, never by a closed-form shortcut, so the structural checks below are
independent evidence for the commuting-square structure.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .graph import BipartiteGraph
from .tiles import (PointedPolygon, UnpointedPolygon, enumerate_pointed,
                    enumerate_unpointed)


class Kind(enum.Enum):
    POINTED_TILE = "pointed-tile"
    UNPOINTED_TILE = "unpointed-tile"
    POINTED_REFLECT = "pointed-reflect"
    UNPOINTED_POLYGON = "unpointed-polygon"
    POINTED_STAR = "pointed-star"

    @property
    def pointed(self) -> bool:
        return self in (Kind.POINTED_TILE, Kind.POINTED_REFLECT, Kind.POINTED_STAR)


@dataclass(frozen=True)
class SystemKind:
    kind: Kind
    t: int = 2

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind(self.kind))
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.kind in (Kind.POINTED_TILE, Kind.UNPOINTED_TILE) and self.t != 2:
            raise ValueError(f"{self.kind.value} systems have t = 2, got t = {self.t}")
        if self.kind is Kind.POINTED_REFLECT and self.t % 2:
            raise ValueError(f"pointed-reflect needs even t, got t = {self.t}")

    @property
    def pointed(self) -> bool:
        return self.kind.pointed

    def dimension(self, g: BipartiteGraph) -> int:
        e = len(g.edges)
        return 2 * self.t * e if self.pointed else e

    def __str__(self):
        return f"{self.kind.value}(t={self.t})"


Vertex = Union[PointedPolygon, UnpointedPolygon]


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """A 0/1 matrix whose rows and columns are indexed by ``index_map``."""

    index_map: tuple[Vertex, ...]
    entries: np.ndarray
    name: str = ""

    def __post_init__(self):
        n = len(self.index_map)
        if self.entries.shape != (n, n):
            raise ValueError(f"entries shape {self.entries.shape} does not match {n} polygons")

    @property
    def dimension(self) -> int:
        return len(self.index_map)

    def row_sums(self) -> list[int]:
        return [int(x) for x in self.entries.sum(axis=1)]

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return (self.index_map == other.index_map
                and np.array_equal(self.entries, other.entries))

    def to_csv(self) -> str:
        return "".join(",".join(str(int(x)) for x in row) + "\n" for row in self.entries)

    def to_json(self, kind: str = "") -> dict:
        flat = self.entries.ravel().tolist()
        runs: list[list[int]] = []
        for x in flat:
            if runs and runs[-1][0] == x:
                runs[-1][1] += 1
            else:
                runs.append([int(x), 1])
        return {"dimension": self.dimension, "kind": kind or self.name,
                "row_sums": self.row_sums(), "entries": runs}

    @classmethod
    def from_json(cls, obj: dict, index_map: Sequence[Vertex]) -> AdjacencyMatrix:
        flat = [v for v, k in obj["entries"] for _ in range(k)]
        n = obj["dimension"]
        return cls(tuple(index_map), np.array(flat, dtype=np.int64).reshape(n, n),
                   obj.get("kind", ""))


# boundary word conditions; A = [x1, y1, ..., xt, yt]

def tile_horizontal(a: PointedPolygon, b: PointedPolygon) -> bool:
    # y1 = ~y4 and x1 != ~x3
    return a.word[1] == b.word[3].bar and a.word[0] != b.word[0].bar


def tile_vertical(a: PointedPolygon, b: PointedPolygon) -> bool:
    # x2 = ~x3 and y1 != ~y3
    return a.word[2] == b.word[0].bar and a.word[1] != b.word[1].bar


@lru_cache(maxsize=None)
def _v_reflection(a: PointedPolygon):
    # [~x1, ~yt, ~xt, ~y(t-1), ..., ~x2, ~y1]
    xs, ys, t = a.u_labels, a.v_labels, a.t
    return tuple(xs[-k % t].bar for k in range(t)), tuple(ys[t - 1 - k].bar for k in range(t))


@lru_cache(maxsize=None)
def _u_reflection(a: PointedPolygon):
    # [~x(t/2+1), ~y(t/2), ~x(t/2), ..., ~y1, ~x1, ~yt, ..., ~x(t/2+2), ~y(t/2+1)]
    xs, ys, t = a.u_labels, a.v_labels, a.t
    h = t // 2
    return tuple(xs[(h - k) % t].bar for k in range(t)), tuple(ys[(h - 1 - k) % t].bar for k in range(t))


def _keep_ys_change_xs(reflection):
    def adjacent(a: PointedPolygon, b: PointedPolygon) -> bool:
        rx, ry = reflection(a)
        return (b.v_labels == ry
                and all(bx != x for bx, x in zip(b.u_labels, rx)))
    return adjacent


def _keep_xs_change_ys(reflection):
    def adjacent(a: PointedPolygon, b: PointedPolygon) -> bool:
        rx, ry = reflection(a)
        return (b.u_labels == rx
                and all(by != y for by, y in zip(b.v_labels, ry)))
    return adjacent


v_adjacent = _keep_ys_change_xs(_v_reflection)
u_adjacent = _keep_xs_change_ys(_u_reflection)
v_star_adjacent = v_adjacent
u_star_adjacent = _keep_xs_change_ys(_v_reflection)


def pointed_matrix(polys: Sequence[PointedPolygon],
                   adjacent: Callable[[PointedPolygon, PointedPolygon], bool],
                   name: str = "") -> AdjacencyMatrix:
    """Evaluate ``adjacent`` on every ordered pair of polygons."""
    n = len(polys)
    m = np.zeros((n, n), dtype=np.int64)
    for a_idx, a in enumerate(polys):
        for b_idx, b in enumerate(polys):
            if adjacent(a, b):
                m[a_idx, b_idx] = 1
    return AdjacencyMatrix(tuple(polys), m, name)


def lift(m: AdjacencyMatrix, classes: Sequence[UnpointedPolygon], name: str = "") -> AdjacencyMatrix:
    """Class adjacency: ``A' ~ B'`` iff some members of ``A'`` and ``B'`` are adjacent."""
    pos = {p: k for k, p in enumerate(m.index_map)}
    incidence = np.zeros((len(m.index_map), len(classes)), dtype=np.int64)
    for c, cls in enumerate(classes):
        for p in cls.members:
            incidence[pos[p], c] = 1
    lifted = (incidence.T @ m.entries @ incidence > 0).astype(np.int64)
    return AdjacencyMatrix(tuple(classes), lifted, name)


def build_pair(g: BipartiteGraph, kind: SystemKind) -> tuple[AdjacencyMatrix, AdjacencyMatrix]:
    """The two adjacency matrices of the ``kind`` system on ``g``.

    The first matrix of each pair is the horizontal-type one (the reflection
    that keeps the V labels and changes the white vertex), the second the
    vertical-type one:

    * pointed-tile: ``(M_1, M_2)``
    * unpointed-tile: ``(M'_1, M'_2)``, lifted from ``(M_1, M_2)``
    * pointed-reflect: ``(M_V, M_U)``, which at t = 2 equal ``(M_1, M_2)``
    * pointed-star: ``(M_V*, M_U*)``
    * unpointed-polygon: lifted from ``(M_V*, M_U*)``
    """
    t = kind.t
    pointed = enumerate_pointed(g, t)
    if not pointed:
        raise ValueError("empty polygon system")
    k = kind.kind
    if k in (Kind.POINTED_TILE, Kind.UNPOINTED_TILE):
        m1 = pointed_matrix(pointed, tile_horizontal, "M1")
        m2 = pointed_matrix(pointed, tile_vertical, "M2")
        if k is Kind.POINTED_TILE:
            return m1, m2
        classes = enumerate_unpointed(g, t)
        return lift(m1, classes, "M1'"), lift(m2, classes, "M2'")
    if k is Kind.POINTED_REFLECT:
        return (pointed_matrix(pointed, v_adjacent, "MV"),
                pointed_matrix(pointed, u_adjacent, "MU"))
    m1 = pointed_matrix(pointed, v_star_adjacent, "MV*")
    m2 = pointed_matrix(pointed, u_star_adjacent, "MU*")
    if k is Kind.POINTED_STAR:
        return m1, m2
    classes = enumerate_unpointed(g, t)
    return lift(m1, classes, "MV'"), lift(m2, classes, "MU'")


def _arr(m) -> np.ndarray:
    return m.entries if isinstance(m, AdjacencyMatrix) else np.asarray(m)


def _same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def check_symmetric(m) -> bool:
    a = _arr(m)
    return bool(np.array_equal(a, a.T))


def check_commute(m1, m2) -> bool:
    a, b = _arr(m1), _arr(m2)
    _same_shape(a, b)
    return bool(np.array_equal(a @ b, b @ a))


def check_uce(m1, m2) -> bool:
    """Every ``A -1-> B``, ``A -2-> C`` has exactly one ``D`` with ``B -2-> D``, ``C -1-> D``."""
    a, b = _arr(m1), _arr(m2)
    _same_shape(a, b)
    # completions[B, C] = #{D : m2[B, D] = m1[C, D] = 1}
    completions = b @ a.T
    for row in range(a.shape[0]):
        xs = np.flatnonzero(a[row])
        ys = np.flatnonzero(b[row])
        if xs.size and ys.size and not np.all(completions[np.ix_(xs, ys)] == 1):
            return False
    return True


def check_no_sources(m1, m2) -> bool:
    a, b = _arr(m1), _arr(m2)
    return all(bool(np.all(x.sum(axis=ax) > 0)) for x in (a, b) for ax in (0, 1))


def check_unambiguous_factorization(m1, m2) -> bool:
    a, b = _arr(m1), _arr(m2)
    _same_shape(a, b)
    return bool(np.all((a @ b) <= 1) and np.all((b @ a) <= 1))


def all_checks(m1, m2) -> dict[str, bool]:
    return {
        "symmetric": check_symmetric(m1) and check_symmetric(m2),
        "commute": check_commute(m1, m2),
        "uce": check_uce(m1, m2),
        "no_sources": check_no_sources(m1, m2),
        "factorization": check_unambiguous_factorization(m1, m2),
    }


