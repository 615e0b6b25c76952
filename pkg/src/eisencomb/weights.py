"""Highest weights of GL_n and their cuspidal parameters.

A weight is an integer vector ``(l_1, ..., l_n)`` in the standard character
basis of the diagonal torus.  For a regular, essentially self-dual weight the
shifted weight ``l + rho`` is encoded by the gap vector ``a`` (with
``a_i = l_i - l_{i+1} + 1``) and the central coordinate ``d = mean(l)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .halfint import HalfInt, NotHalfIntegral

__all__ = [
    "Weight",
    "CuspidalParams",
    "WeightError",
    "NotDominant",
    "NotSelfDual",
    "NotRegular",
    "NotHalfIntegral",
    "ParityViolation",
    "rho",
    "cuspidal_params",
    "validate",
    "twist_by_det",
    "dual_weight",
    "period_twist_exponent",
    "weight_from_params",
    "parse_weight",
    "format_vector",
]


class WeightError(ValueError):
    """A weight failed one of the admission checks.

    ``index`` is the 0-based position of the first offending entry (or pair),
    or ``None`` when the failure is global.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NotDominant(WeightError):
    pass


class NotSelfDual(WeightError):
    pass


class NotRegular(WeightError):
    pass


class ParityViolation(WeightError):
    pass


class WeightHalfIntegrality(WeightError, NotHalfIntegral):
    pass


@dataclass(frozen=True)
class Weight:
    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        values = tuple(entries)
        if not values:
            raise ValueError("a weight needs at least one entry")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"weight entries must be int, got {v!r}")
        object.__setattr__(self, "entries", values)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_dominant(self) -> bool:
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def is_regular(self) -> bool:
        e = self.entries
        return all(e[i] > e[i + 1] for i in range(len(e) - 1))

    def is_essentially_self_dual(self) -> bool:
        e = self.entries
        c = e[0] + e[-1]
        return all(e[i] + e[-1 - i] == c for i in range(len(e)))

    def __str__(self) -> str:
        return format_vector(self.entries)


@dataclass(frozen=True)
class CuspidalParams:
    """Gap vector, central coordinate and motivic weight of a GL_n weight."""

    a: tuple[int, ...]
    d: HalfInt
    motivic_weight: int
    n: int


def format_vector(values: Iterable) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


_VECTOR_RE = re.compile(r"^\[\s*-?\d+\s*(,\s*-?\d+\s*)*\]$")


def parse_weight(token: str) -> Weight:
    """Parse the bracketed form ``[1,0]``."""
    text = token.strip()
    if not _VECTOR_RE.match(text):
        raise ValueError(f"not a bracketed integer vector: {token!r}")
    return Weight(int(part) for part in text[1:-1].split(","))


def rho(n: int) -> tuple[HalfInt, ...]:
    """Half the sum of positive roots of GL_n: ((n-1)/2, ..., -(n-1)/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(HalfInt(n - 1 - 2 * i) for i in range(n))


def cuspidal_params(
    weight: Weight, *, self_dual: bool = True, regular: bool = True
) -> CuspidalParams:
    """Extract ``(a, d, w)`` from a dominant weight.

    The ``self_dual`` and ``regular`` flags switch the corresponding checks
    on.  The half-integrality of ``d`` and the parity condition
    ``2d = w + n - 1 (mod 2)`` are always enforced.
    """
    e = weight.entries
    n = len(e)
    a = tuple(e[i] - e[i + 1] + 1 for i in range(n - 1))
    if self_dual:
        c = e[0] + e[-1]
        for i in range(n):
            if e[i] + e[-1 - i] != c:
                raise NotSelfDual(
                    f"{weight}: entries {i} and {n - 1 - i} sum to "
                    f"{e[i] + e[-1 - i]}, expected {c} (a={format_vector(a)})",
                    index=i,
                )
    if regular:
        for i, ai in enumerate(a):
            if ai < 2:
                raise NotRegular(
                    f"{weight}: gap a_{i + 1} = {ai} < 2 (a={format_vector(a)})",
                    index=i,
                )
    try:
        d = HalfInt.ratio(sum(e), n)
    except NotHalfIntegral:
        raise WeightHalfIntegrality(
            f"{weight}: mean {sum(e)}/{n} is not a half-integer"
        ) from None
    w = sum(a)
    if (d.twice - (w + n - 1)) % 2:
        raise ParityViolation(
            f"{weight}: 2d = {d.twice} and w + n - 1 = {w + n - 1} differ in parity"
        )
    return CuspidalParams(a=a, d=d, motivic_weight=w, n=n)


def validate(weight: Weight) -> CuspidalParams:
    """Admission gate: dominant, essentially self-dual, regular, 2d in Z, parity."""
    e = weight.entries
    for i in range(len(e) - 1):
        if e[i] < e[i + 1]:
            raise NotDominant(
                f"{weight}: entry {i} ({e[i]}) < entry {i + 1} ({e[i + 1]})",
                index=i,
            )
    return cuspidal_params(weight)


def weight_from_params(a: Sequence[int], d: HalfInt) -> Weight:
    """Rebuild the weight with gap vector ``a`` and mean ``d``."""
    n = len(a) + 1
    # entries relative to the last one, then shift so that the mean is d
    rel = [0] * n
    for i in range(n - 2, -1, -1):
        rel[i] = rel[i + 1] + a[i] - 1
    # n * (last + mean(rel)) = n * d
    shift = HalfInt(n * d.twice - 2 * sum(rel))
    if shift.twice % (2 * n):
        raise NotHalfIntegral(f"no integral weight with a={list(a)} and d={d}")
    last = shift.twice // (2 * n)
    return Weight(r + last for r in rel)


def twist_by_det(weight: Weight, l: int) -> Weight:
    """``weight - l * det``."""
    return Weight(v - l for v in weight.entries)


def dual_weight(weight: Weight) -> Weight:
    """Highest weight of the contragredient: negate and reverse."""
    return Weight(-v for v in reversed(weight.entries))


def period_twist_exponent(l: int) -> int:
    """Exponent ``(-1)**l`` by which the relative period transforms under a twist."""
    return -1 if l % 2 else 1
