"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _invariant_factors(moduli: Iterable[int]) -> tuple[int, ...]:
    # primary decomposition, then recombine the k-th largest prime powers
    powers: dict[int, list[int]] = defaultdict(list)
    for m in moduli:
        for p, e in _factorize(m).items():
            powers[p].append(p**e)
    if not powers:
        return ()
    for ps in powers.values():
        ps.sort(reverse=True)
    length = max(len(ps) for ps in powers.values())
    chain = []
    for k in range(length):
        d = 1
        for ps in powers.values():
            if k < len(ps):
                d *= ps[k]
        chain.append(d)
    return tuple(reversed(chain))


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.

    Instances are canonical, so ``==`` is group isomorphism. Build them with
    :func:`from_summands` (or :meth:`from_json`) rather than directly unless
    the factors are already a divisibility chain.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        fs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if any(d < 2 for d in fs) or any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"not an invariant factor chain: {fs}")

    @property
    def torsion(self) -> FgAbelianGroup:
        return FgAbelianGroup(0, self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_torsion_free(self) -> bool:
        return not self.invariant_factors

    def __add__(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return direct_sum(self, other)

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank,
                "invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj: dict) -> FgAbelianGroup:
        return from_summands(obj.get("invariant_factors", ()), obj.get("free_rank", 0))


TRIVIAL = FgAbelianGroup()


def from_summands(torsion_moduli: Iterable[int], free_rank: int = 0) -> FgAbelianGroup:
    """Canonical form of ``Z^free_rank + sum(Z/m for m in torsion_moduli)``.

    Moduli equal to 1 are rejected; use an empty multiset for no torsion.
    """
    moduli = list(torsion_moduli)
    for m in moduli:
        if m < 2:
            raise ValueError(f"torsion modulus must be >= 2, got {m}")
    if free_rank < 0:
        raise ValueError("free rank must be nonnegative")
    return FgAbelianGroup(free_rank, _invariant_factors(moduli))


def cyclic(n: int) -> FgAbelianGroup:
    """Z/n, where Z/1 is trivial and Z/0 is Z."""
    n = abs(n)
    if n == 0:
        return FgAbelianGroup(1)
    return FgAbelianGroup() if n == 1 else FgAbelianGroup(0, (n,))


def free(r: int) -> FgAbelianGroup:
    return FgAbelianGroup(r)


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    moduli: list[int] = []
    rank = 0
    for g in groups:
        rank += g.free_rank
        moduli.extend(g.invariant_factors)
    return from_summands(moduli, rank)


def power(a: FgAbelianGroup, n: int) -> FgAbelianGroup:
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return from_summands(list(a.invariant_factors) * n, a.free_rank * n)


def render(a: FgAbelianGroup) -> str:
    """Text form such as ``(Z/2)^3 + Z/12 + Z^5``; the trivial group is ``0``."""
    parts = []
    for d, run in groupby(a.invariant_factors):
        k = len(list(run))
        parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
    if a.free_rank == 1:
        parts.append("Z")
    elif a.free_rank > 1:
        parts.append(f"Z^{a.free_rank}")
    return " + ".join(parts) if parts else "0"
