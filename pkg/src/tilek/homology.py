"""Cellular homology of the 2t-polyhedron of a complete bipartite graph.

The polyhedron has one 2t-gon ``(u_i^1, v_j^1, ..., u_i^t, v_j^t)`` per edge
``u_i v_j``, one geometric edge per label pair ``{x, ~x}`` and 2t vertices.
Contracting the face of ``u_1 v_1`` identifies all vertices and kills the
edges ``u_1^r``, ``v_1^r``. What remains is a one-vertex complex with loops
``u_i^r`` (``i >= 2``) and ``v_j^r`` (``j >= 2``), and with the 2-cells

* ``A'_ij``, boundary ``sum_r (u_i^r + v_j^r)`` for ``i, j >= 2``,
* ``X'_i``, boundary ``sum_r u_i^r`` (the image of the face of ``u_i v_1``),
* ``Y'_j``, boundary ``sum_r v_j^r`` (the image of the face of ``u_1 v_j``).

:func:`full_complex_homology` computes the same groups from the uncontracted
complex and serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import BipartiteGraph
from .groups import TRIVIAL, FgAbelianGroup, free
from .linalg import IntMatrix, cokernel, rank, snf


class HomologyScopeError(ValueError):
    """The cell inventory is only known for complete bipartite graphs."""


@dataclass(frozen=True)
class CellComplex2:
    one_cells: tuple[str, ...]
    two_cells: tuple[tuple[str, dict[str, int]], ...]  # (name, boundary as label -> coefficient)
    zero_cells: int = 1

    def __post_init__(self):
        known = set(self.one_cells)
        for name, boundary in self.two_cells:
            missing = set(boundary) - known
            if missing:
                raise ValueError(f"2-cell {name} references unknown 1-cells {sorted(missing)}")

    def boundary_matrix(self) -> IntMatrix:
        """``d_2`` with one row per 1-cell and one column per 2-cell."""
        pos = {c: k for k, c in enumerate(self.one_cells)}
        rows = [[0] * len(self.two_cells) for _ in self.one_cells]
        for col, (_, boundary) in enumerate(self.two_cells):
            for label, coeff in boundary.items():
                rows[pos[label]][col] += coeff
        return IntMatrix(rows, len(self.two_cells))

    @property
    def euler_characteristic(self) -> int:
        return self.zero_cells - len(self.one_cells) + len(self.two_cells)


def _label(family: str, index: int, sup: int) -> str:
    return f"{family}{index}^{sup}"


def contracted_complex(g: BipartiteGraph, t: int = 2) -> CellComplex2:
    if t < 1:
        raise ValueError("t must be >= 1")
    if not g.is_complete:
        raise HomologyScopeError("the contracted cell structure is only derived for complete bipartite graphs")
    if g.alpha < 2 or g.beta < 2:
        raise HomologyScopeError("need alpha, beta >= 2")
    sups = range(1, t + 1)
    us = {i: [_label("u", i, r) for r in sups] for i in range(2, g.alpha + 1)}
    vs = {j: [_label("v", j, r) for r in sups] for j in range(2, g.beta + 1)}
    one_cells = tuple(x for i in us for x in us[i]) + tuple(y for j in vs for y in vs[j])
    cells = []
    for i in us:
        for j in vs:
            cells.append((f"A'{i},{j}", {x: 1 for x in us[i] + vs[j]}))
    cells += [(f"X'{i}", {x: 1 for x in us[i]}) for i in us]
    cells += [(f"Y'{j}", {y: 1 for y in vs[j]}) for j in vs]
    return CellComplex2(one_cells, tuple(cells))


@dataclass(frozen=True)
class HomologyResult:
    h0_reduced: FgAbelianGroup
    h0_unreduced: FgAbelianGroup
    h1: FgAbelianGroup
    h2: FgAbelianGroup
    euler_characteristic: int

    def groups(self) -> tuple[FgAbelianGroup, FgAbelianGroup, FgAbelianGroup]:
        return self.h0_reduced, self.h1, self.h2

    def to_json(self, g: BipartiteGraph | None = None, t: int | None = None) -> dict:
        out = {}
        if g is not None:
            out.update(alpha=g.alpha, beta=g.beta)
        if t is not None:
            out["t"] = t
        out.update(
            h0_reduced=self.h0_reduced.to_json(),
            h0_unreduced=self.h0_unreduced.to_json(),
            h1=self.h1.to_json(),
            h2=self.h2.to_json(),
            euler_characteristic=self.euler_characteristic,
        )
        return out


def homology_groups(c: CellComplex2) -> tuple[FgAbelianGroup, FgAbelianGroup, FgAbelianGroup]:
    """Reduced ``(H_0, H_1, H_2)`` of a one-vertex 2-complex.

    With one vertex every ``d_1`` vanishes, so ``H_1 = coker d_2`` and
    ``H_2 = ker d_2``, a free group of rank ``#2-cells - rank d_2``.
    """
    if c.zero_cells != 1:
        raise ValueError("homology_groups expects a one-vertex complex")
    d2 = c.boundary_matrix()
    r = rank(d2)
    return TRIVIAL, cokernel(d2), free(len(c.two_cells) - r)


def homology(g: BipartiteGraph, t: int = 2) -> HomologyResult:
    c = contracted_complex(g, t)
    h0, h1, h2 = homology_groups(c)
    return HomologyResult(h0, free(1), h1, h2, c.euler_characteristic)


def full_complex_homology(g: BipartiteGraph, t: int = 2) -> HomologyResult:
    """Homology of the uncontracted polyhedron, straight from its chain complex.

    Vertices ``P(u, r)`` and ``P(v, r)`` are the origins of the edges labelled
    ``u^r`` and ``v^r``; going round a face, ``u_i^r`` runs from ``P(u, r)`` to
    ``P(v, r)`` and ``v_j^r`` from ``P(v, r)`` to ``P(u, r + 1)``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    nv = 2 * t
    edges = [("u", i, r) for i in range(1, g.alpha + 1) for r in range(1, t + 1)]
    edges += [("v", j, r) for j in range(1, g.beta + 1) for r in range(1, t + 1)]
    pos = {e: k for k, e in enumerate(edges)}

    def vertex(fam: str, r: int) -> int:
        return 2 * ((r - 1) % t) + (fam == "v")

    d1 = [[0] * len(edges) for _ in range(nv)]
    for k, (fam, _, r) in enumerate(edges):
        head = vertex("v", r) if fam == "u" else vertex("u", r + 1)
        tail = vertex(fam, r)
        d1[head][k] += 1
        d1[tail][k] -= 1
    faces = sorted(g.edges)
    d2 = [[0] * len(faces) for _ in edges]
    for col, (i, j) in enumerate(faces):
        for r in range(1, t + 1):
            d2[pos[("u", i, r)]][col] += 1
            d2[pos[("v", j, r)]][col] += 1
    d1m, d2m = IntMatrix(d1, len(edges)), IntMatrix(d2, len(faces))
    if any(any(row) for row in (d1m @ d2m).tolist()):
        raise AssertionError("d1 d2 != 0")
    r1, res2 = rank(d1m), snf(d2m)
    h0 = cokernel(d1m)
    torsion1 = tuple(d for d in res2.nonzero if d > 1)
    h1 = FgAbelianGroup(len(edges) - r1 - res2.rank, torsion1)
    h2 = free(len(faces) - res2.rank)
    reduced = FgAbelianGroup(h0.free_rank - 1, h0.invariant_factors)
    return HomologyResult(reduced, h0, h1, h2, nv - len(edges) + len(faces))


def predicted_homology(g: BipartiteGraph) -> tuple[FgAbelianGroup, FgAbelianGroup, FgAbelianGroup]:
    """The closed form: ``(0, Z^(alpha+beta-2), Z^((alpha-1)(beta-1)))``, for every t."""
    return TRIVIAL, free(g.alpha + g.beta - 2), free((g.alpha - 1) * (g.beta - 1))
