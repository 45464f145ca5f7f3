"""Labels, pointed 2t-gons and unpointed 2t-gons of a bipartite graph.

A pointed 2t-gon is its boundary word ``[x_1, y_1, ..., x_t, y_t]`` read
anticlockwise from the basepoint, with every ``x`` from the U alphabet and
every ``y`` from the V alphabet. Tiles are the case t = 2.

For each edge ``u_i v_j`` the system contains the 2t words obtained from
``[u_i^1, v_j^1, ..., u_i^t, v_j^t]`` by rotating the basepoint (forms
``A_s``) and by reflecting and barring (forms ``B_s``), ``s = 1..t``::

    A_s = [u_i^s, v_j^s, u_i^(s+1), v_j^(s+1), ..., u_i^(s-1), v_j^(s-1)]
    B_s = [~u_i^s, ~v_j^(s-1), ~u_i^(s-1), ~v_j^(s-2), ..., ~u_i^(s+1), ~v_j^s]

superscripts taken mod t in ``1..t``. For even t these are relabelled
``A_r, B_r, C_r = B_(r+t/2), D_r = A_(r+t/2)`` with ``r = 1..t/2``, which for
t = 2 are the tiles ``A, B, C, D`` of the tile system. For odd t only the
``A_r, B_r`` labels (``r = 1..t``) exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import NamedTuple

from .graph import BipartiteGraph

FLAVORS = "ABCD"


class Label(NamedTuple):
    family: str  # "u" or "v"
    index: int
    sup: int
    barred: bool = False

    @property
    def bar(self) -> Label:
        return self._replace(barred=not self.barred)

    def __str__(self):
        return f"{'~' if self.barred else ''}{self.family}{self.index}^{self.sup}"


def alphabet(family: str, count: int, t: int) -> list[Label]:
    """The 2*t*count labels of one family: every ``x_i^r`` and its bar."""
    return [Label(family, i, r, b) for b in (False, True)
            for i in range(1, count + 1) for r in range(1, t + 1)]


def _wrap(n: int, t: int) -> int:
    return (n - 1) % t + 1


def rotation_word(i: int, j: int, s: int, t: int) -> tuple[Label, ...]:
    word = []
    for k in range(t):
        word += [Label("u", i, _wrap(s + k, t)), Label("v", j, _wrap(s + k, t))]
    return tuple(word)


def reflection_word(i: int, j: int, s: int, t: int) -> tuple[Label, ...]:
    word = []
    for k in range(t):
        word += [Label("u", i, _wrap(s - k, t), True), Label("v", j, _wrap(s - k - 1, t), True)]
    return tuple(word)


def rotate(word: tuple[Label, ...]) -> tuple[Label, ...]:
    """Move the basepoint forward by one (x, y) pair."""
    return word[2:] + word[:2]


def reflect(word: tuple[Label, ...]) -> tuple[Label, ...]:
    """Reflect through the axis bisecting the first side: ``[~x1, ~yt, ~xt, ..., ~x2, ~y1]``."""
    t = len(word) // 2
    xs, ys = word[0::2], word[1::2]
    out = []
    for k in range(t):
        out += [xs[-k % t].bar, ys[t - 1 - k].bar]
    return tuple(out)


@total_ordering
@dataclass(frozen=True)
class PointedPolygon:
    """One pointed 2t-gon. Ordered (and compared) by ``(t, flavor, i, j, r)``."""

    t: int
    flavor: str
    i: int
    j: int
    r: int
    word: tuple[Label, ...] = field(compare=False, repr=False)

    @property
    def u_labels(self) -> tuple[Label, ...]:
        return self.word[0::2]

    @property
    def v_labels(self) -> tuple[Label, ...]:
        return self.word[1::2]

    @property
    def key(self):
        return (FLAVORS.index(self.flavor), self.i, self.j, self.r)

    def __lt__(self, other):
        return (self.t, self.key) < (other.t, other.key)

    def __str__(self):
        return "[" + ", ".join(map(str, self.word)) + "]"

    @property
    def name(self) -> str:
        return f"{self.flavor}{self.r}_{self.i},{self.j}"


def make_polygon(flavor: str, i: int, j: int, r: int, t: int) -> PointedPolygon:
    if t % 2 == 0:
        h = t // 2
        if not 1 <= r <= h:
            raise ValueError(f"r must lie in [1, {h}] for even t")
        s, rot = {"A": (r, True), "B": (r, False), "C": (r + h, False), "D": (r + h, True)}[flavor]
    else:
        if flavor not in "AB" or not 1 <= r <= t:
            raise ValueError(f"odd t admits flavors A, B with r in [1, {t}]")
        s, rot = r, flavor == "A"
    word = rotation_word(i, j, s, t) if rot else reflection_word(i, j, s, t)
    return PointedPolygon(t, flavor, i, j, r, word)


def _forms(t: int) -> list[tuple[str, int]]:
    if t % 2 == 0:
        return [(f, r) for f in FLAVORS for r in range(1, t // 2 + 1)]
    return [(f, r) for f in "AB" for r in range(1, t + 1)]


def enumerate_pointed(g: BipartiteGraph, t: int) -> list[PointedPolygon]:
    """All ``2 t |E(g)|`` pointed 2t-gons of ``g``, in canonical order."""
    if t < 1:
        raise ValueError("t must be >= 1")
    polys = [make_polygon(f, i, j, r, t) for f, r in _forms(t) for i, j in g.edges]
    polys.sort()
    return polys


def orbit(word: tuple[Label, ...]) -> set[tuple[Label, ...]]:
    """All words reachable from ``word`` by basepoint rotation and reflection."""
    seen = {word}
    todo = [word]
    while todo:
        w = todo.pop()
        for nxt in (rotate(w), reflect(w)):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


@total_ordering
@dataclass(frozen=True)
class UnpointedPolygon:
    """An unpointed 2t-gon, identified by its least pointed member."""

    canonical_representative: PointedPolygon
    members: tuple[PointedPolygon, ...] = field(compare=False, repr=False)

    @property
    def t(self) -> int:
        return self.canonical_representative.t

    @property
    def edge(self) -> tuple[int, int]:
        rep = self.canonical_representative
        return rep.i, rep.j

    def __lt__(self, other):
        return self.canonical_representative < other.canonical_representative

    def __str__(self):
        return "(" + ", ".join(map(str, self.canonical_representative.word)) + ")"


def enumerate_unpointed(g: BipartiteGraph, t: int) -> list[UnpointedPolygon]:
    """One class per edge: the pointed polygons grouped into symmetry orbits."""
    pointed = enumerate_pointed(g, t)
    by_word = {p.word: p for p in pointed}
    classes = []
    assigned = set()
    for p in pointed:
        if p.word in assigned:
            continue
        words = orbit(p.word)
        assigned |= words
        members = tuple(sorted(by_word[w] for w in words if w in by_word))
        classes.append(UnpointedPolygon(members[0], members))
    classes.sort()
    return classes
