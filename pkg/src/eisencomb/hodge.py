"""Hodge pairs of the motives attached to cuspidal weights and their tensor products."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from typing import Mapping

from .weights import CuspidalParams

__all__ = [
    "HodgeSet",
    "HodgeError",
    "MiddleNonzero",
    "NoPairAboveMiddle",
    "hodge_set_of",
    "tensor_hodge",
    "middle_hodge_number",
    "p_of_mu",
]


class HodgeError(ValueError):
    pass


class MiddleNonzero(HodgeError):
    pass


class NoPairAboveMiddle(HodgeError):
    pass


@dataclass(frozen=True)
class HodgeSet:
    """Multiset of Hodge pairs ``(p, q)`` with ``p + q == weight``.

    ``pairs`` is stored sorted as ``((p, q, mult), ...)`` with ``p`` descending.
    """

    weight: int
    pairs: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_counts(cls, weight: int, counts: Mapping[tuple[int, int], int]) -> "HodgeSet":
        items = []
        for (p, q), mult in counts.items():
            if mult <= 0:
                continue
            if p < 0 or q < 0 or p + q != weight:
                raise HodgeError(f"bad Hodge pair ({p},{q}) for weight {weight}")
            items.append((p, q, mult))
        if not items:
            raise HodgeError("a Hodge set needs at least one pair")
        items.sort(reverse=True)
        return cls(weight, tuple(items))

    def counts(self) -> Counter:
        return Counter({(p, q): m for p, q, m in self.pairs})

    def multiplicity(self, p: int, q: int) -> int:
        for pp, qq, m in self.pairs:
            if (pp, qq) == (p, q):
                return m
        return 0

    @property
    def total(self) -> int:
        return sum(m for _, _, m in self.pairs)

    def is_symmetric(self) -> bool:
        c = self.counts()
        return all(c[(q, p)] == m for (p, q), m in c.items())

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "pairs": [{"p": p, "q": q, "mult": m} for p, q, m in self.pairs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HodgeSet":
        return cls.from_counts(
            data["weight"], {(r["p"], r["q"]): r["mult"] for r in data["pairs"]}
        )

    def __str__(self) -> str:
        parts = []
        for p, q, m in self.pairs:
            parts.append(f"({p},{q})" if m == 1 else f"{m}x({p},{q})")
        return "{" + ", ".join(parts) + "}"


def hodge_set_of(params: CuspidalParams) -> HodgeSet:
    """Pairs ``(w - s_k, s_k)`` where ``s_k`` runs over partial sums of the gap vector."""
    w = params.motivic_weight
    partial = [0, *accumulate(params.a)]
    return HodgeSet.from_counts(w, Counter((w - s, s) for s in partial))


def tensor_hodge(first: HodgeSet, second: HodgeSet) -> HodgeSet:
    counts: Counter = Counter()
    for p, q, m in first.pairs:
        for p2, q2, m2 in second.pairs:
            counts[(p + p2, q + q2)] += m * m2
    return HodgeSet.from_counts(first.weight + second.weight, counts)


def middle_hodge_number(hodge: HodgeSet) -> int:
    """``h^{w/2, w/2}``; zero when the weight is odd."""
    if hodge.weight % 2:
        return 0
    half = hodge.weight // 2
    return hodge.multiplicity(half, half)


def p_of_mu(hodge: HodgeSet) -> int:
    """Smallest ``p`` strictly above the middle carrying a nonzero Hodge number.

    Odd weights are allowed: the middle is then a half-integer and no pair
    sits on it.
    """
    if middle_hodge_number(hodge):
        raise MiddleNonzero(
            f"middle Hodge number of {hodge} is {middle_hodge_number(hodge)}"
        )
    w = hodge.weight
    # p > w/2  <=>  2p > w
    candidates = [p for p, q, _ in hodge.pairs if 2 * p > w and p <= w]
    if not candidates:
        raise NoPairAboveMiddle(f"no Hodge pair of {hodge} above the middle")
    return min(candidates)
