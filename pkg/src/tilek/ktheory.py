"""K-groups of the 2-rank graph algebras, computed and predicted.

The computed side applies Evans' cokernel formula to an adjacency pair:

    K_0 = Z^(r_0) + tors coker(1 - M_a^T, 1 - M_b^T)
    K_1 = Z^(r_1) + tors coker(1 - M_a,   1 - M_b)

with ``r_0 = r_1 = rk coker(1 - M_a^T, 1 - M_b^T) + rk coker(1 - M_a, 1 - M_b)``.
The identity class is the class of the all-ones vector in the first cokernel.

The predicted side encodes the closed forms proved for complete bipartite
graphs, written in terms of ``a = alpha - 2`` and ``b = beta - 2`` with
``a <= b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .adjacency import (AdjacencyMatrix, Kind, SystemKind, all_checks, build_pair,
                        check_commute, check_no_sources)
from .graph import BipartiteGraph
from .groups import FgAbelianGroup, from_summands, free, power
from .linalg import INFINITE, IntMatrix, block_right, cokernel_from_snf, order_from_snf, snf

NOT_STATED = "not stated"

Order = Union[int, float]  # float only for INFINITE


class AxiomCheckError(ValueError):
    """The pair fails a hypothesis of the cokernel formula."""

    def __init__(self, check: str, message: str = ""):
        self.check = check
        super().__init__(message or f"adjacency pair fails the {check!r} check")


class PredictionUnavailable(ValueError):
    """No closed form covers this graph and system kind."""


def order_to_json(order: Optional[Order]):
    if order is None:
        return NOT_STATED
    return "infinite" if order == INFINITE else int(order)


def order_to_text(order: Optional[Order]) -> str:
    return str(order_to_json(order))


@dataclass(frozen=True)
class KTheoryResult:
    k0: FgAbelianGroup
    k1: FgAbelianGroup
    identity_order: Order
    cokernel: FgAbelianGroup
    cokernel_untransposed: FgAbelianGroup

    @property
    def r0(self) -> int:
        return self.cokernel.free_rank + self.cokernel_untransposed.free_rank

    r1 = r0

    def to_json(self) -> dict:
        return {
            "k0": self.k0.to_json(),
            "k1": self.k1.to_json(),
            "identity_order": order_to_json(self.identity_order),
            "cokernel": self.cokernel.to_json(),
            "cokernel_untransposed": self.cokernel_untransposed.to_json(),
            "r0": self.r0,
            "r1": self.r1,
        }


def _evans_block(a: np.ndarray, b: np.ndarray) -> IntMatrix:
    one = np.eye(a.shape[0], dtype=np.int64)
    return block_right(IntMatrix.from_array(one - a), IntMatrix.from_array(one - b))


def compute_k(m1: AdjacencyMatrix, m2: AdjacencyMatrix) -> KTheoryResult:
    if not check_no_sources(m1, m2):
        raise AxiomCheckError("no_sources", "the 2-graph has sources; the cokernel formula does not apply")
    if not check_commute(m1, m2):
        raise AxiomCheckError("commute", "the vertex matrices do not commute")
    a, b = m1.entries, m2.entries
    n = a.shape[0]

    transposed = _evans_block(a.T, b.T)
    res = snf(transposed, keep_left=True)
    coker_t = cokernel_from_snf(res, n)
    order = order_from_snf(res, [1] * n)

    if np.array_equal(a, a.T) and np.array_equal(b, b.T):
        # both blocks are the same integer matrix
        coker_u = coker_t
    else:
        coker_u = cokernel_from_snf(snf(_evans_block(a, b)), n)

    r = coker_t.free_rank + coker_u.free_rank
    return KTheoryResult(
        k0=free(r) + coker_t.torsion,
        k1=free(r) + coker_u.torsion,
        identity_order=order,
        cokernel=coker_t,
        cokernel_untransposed=coker_u,
    )


@dataclass(frozen=True)
class Prediction:
    kind: SystemKind
    k_group: FgAbelianGroup
    identity_order: Optional[int]  # None: not stated for these parameters
    case: str = ""

    def to_json(self) -> dict:
        return {"k_group": self.k_group.to_json(),
                "identity_order": order_to_json(self.identity_order),
                "case": self.case}


def _mods(*pairs: tuple[int, int]) -> list[int]:
    """Expand (modulus, multiplicity) pairs, dropping Z/1 summands."""
    out: list[int] = []
    for m, k in pairs:
        if m != 1:
            out += [m] * k
    return out


def _pointed_tile(a: int, b: int) -> tuple[FgAbelianGroup, str]:
    if a == b == 0:
        return free(8), "i"
    if a in (0, 1):
        return from_summands(_mods((b, 2)), 4 * (b + 1)), "ii"
    rank = 2 * (a + 1) * (b + 1)
    g, l = math.gcd(a, b), math.lcm(a, b)
    if g == 1:
        return from_summands(_mods((a, b - a), (a * b, a + 1)), rank), "iii"
    return from_summands(_mods((a, b - a), (l, a + 1), (g, a + 2)), rank), "iv"


def _unpointed_tile(a: int, b: int) -> tuple[FgAbelianGroup, str]:
    if a == b == 0:
        return free(2), "i"
    if a == 0:
        return from_summands([2] * b + [2 * b]), "ii"
    g = math.gcd(a, b)
    return from_summands([2] * ((a + 1) * (b + 1) - 1) + [2 * g]), "iii"


def _pointed_star(a: int, b: int, t: int) -> tuple[FgAbelianGroup, str]:
    if a == b == 0:
        return free(4 * t), "i"
    g = math.gcd(a, b)
    rank = 2 * t * (a + 1) * (b + 1)
    if g == 1:
        return free(rank), "ii"
    return from_summands([g] * t, rank), "iii"


def predict(g: BipartiteGraph, kind: SystemKind) -> Prediction:
    if not g.is_complete:
        raise PredictionUnavailable("closed forms exist only for complete bipartite graphs")
    alpha, beta = sorted((g.alpha, g.beta))
    if alpha < 2:
        raise PredictionUnavailable("closed forms need alpha, beta >= 2")
    a, b = alpha - 2, beta - 2
    k, t = kind.kind, kind.t
    if k is Kind.POINTED_TILE:
        group, case = _pointed_tile(a, b)
    elif k is Kind.POINTED_REFLECT:
        tile, case = _pointed_tile(a, b)
        group, case = power(tile, t // 2), f"{case}^(t/2)"
    elif k in (Kind.UNPOINTED_TILE, Kind.UNPOINTED_POLYGON):
        group, case = _unpointed_tile(a, b)
    else:
        group, case = _pointed_star(a, b, t)

    order = None
    if a >= 1:
        gg = math.gcd(a, b)
        order = gg if kind.pointed or gg % 2 else gg // 2
    return Prediction(kind, group, order, case)


@dataclass
class VerificationReport:
    graph: BipartiteGraph
    kind: SystemKind
    checks: dict[str, bool]
    computed: Optional[KTheoryResult] = None
    prediction: Optional[Prediction] = None
    error: Optional[str] = None
    dimension: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def k_match(self) -> Optional[bool]:
        if self.computed is None or self.prediction is None:
            return None
        return self.computed.k0 == self.prediction.k_group and self.computed.k1 == self.prediction.k_group

    @property
    def identity_match(self) -> Optional[bool]:
        if self.computed is None or self.prediction is None or self.prediction.identity_order is None:
            return None
        return self.computed.identity_order == self.prediction.identity_order

    @property
    def match(self) -> Optional[bool]:
        """Overall verdict; ``None`` when there is nothing to compare against."""
        if self.computed is None or self.prediction is None:
            return None
        return (all(self.checks.values()) and bool(self.k_match)
                and self.identity_match is not False)

    def to_json(self) -> dict:
        c, p = self.computed, self.prediction
        return {
            "graph": str(self.graph),
            "kind": self.kind.kind.value,
            "t": self.kind.t,
            "dimension": self.dimension,
            "checks": dict(self.checks),
            "computed": c.k0.to_json() if c else None,
            "k0": c.k0.to_json() if c else None,
            "k1": c.k1.to_json() if c else None,
            "cokernel": c.cokernel.to_json() if c else None,
            "predicted": p.k_group.to_json() if p else NOT_STATED,
            "identity_order_computed": order_to_json(c.identity_order) if c else None,
            "identity_order_predicted": order_to_json(p.identity_order if p else None),
            "k_match": self.k_match,
            "identity_match": self.identity_match,
            "match": self.match,
            "error": self.error,
        }

    def to_text(self) -> str:
        c, p = self.computed, self.prediction
        lines = [f"graph: {self.graph}", f"kind: {self.kind}", f"dimension: {self.dimension}"]
        lines += [f"check {name}: {str(ok).lower()}" for name, ok in self.checks.items()]
        if c is not None:
            lines += [f"K0 = {c.k0}", f"K1 = {c.k1}",
                      f"identity order: {order_to_text(c.identity_order)}"]
        if p is not None:
            lines += [f"predicted K = {p.k_group} (case {p.case})",
                      f"predicted identity order: {order_to_text(p.identity_order)}"]
        else:
            lines.append(f"predicted: {NOT_STATED}")
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"match: {_tri(self.match)}")
        return "\n".join(lines) + "\n"


def _tri(x: Optional[bool]) -> str:
    return "n/a" if x is None else str(x).lower()


def verify(g: BipartiteGraph, kind: SystemKind, max_dim: Optional[int] = None) -> VerificationReport:
    """Build, check, compute and compare one (graph, kind) cell."""
    dim = kind.dimension(g)
    if max_dim is not None and dim > max_dim:
        raise ValueError(f"matrix dimension {dim} exceeds --max-dim {max_dim}")
    m1, m2 = build_pair(g, kind)
    report = VerificationReport(g, kind, all_checks(m1, m2), dimension=dim)
    try:
        report.computed = compute_k(m1, m2)
    except AxiomCheckError as e:
        report.error = str(e)
    try:
        report.prediction = predict(g, kind)
    except PredictionUnavailable as e:
        report.notes.append(str(e))
    return report
