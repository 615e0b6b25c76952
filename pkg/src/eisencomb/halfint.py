"""Exact half-integers stored as doubled integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = ["HalfInt", "NotHalfIntegral"]


class NotHalfIntegral(ValueError):
    """Raised when a rational value does not lie in (1/2)Z."""


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """The number ``twice / 2``.

    >>> HalfInt(3) - 2
    HalfInt(-1/2)
    >>> HalfInt.of(Fraction(-3, 2)).is_integer()
    False
    """

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be int, got {type(self.twice).__name__}")

    @classmethod
    def of(cls, value: Union["HalfInt", int, Fraction]) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise NotHalfIntegral(f"{value} is not a half-integer")
            return cls(doubled.numerator)
        raise TypeError(f"cannot convert {type(value).__name__} to HalfInt")

    @classmethod
    def ratio(cls, num: int, den: int) -> "HalfInt":
        """num/den, which must land in (1/2)Z."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if (2 * num) % den:
            raise NotHalfIntegral(f"{num}/{den} is not a half-integer")
        return cls(2 * num // den)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        text = text.strip()
        if text.endswith("/2"):
            return cls(int(text[:-2]))
        return cls(2 * int(text))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_int(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(other.twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.twice == other.twice

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice < other.twice

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def _coerce(value):
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    if isinstance(value, Fraction):
        try:
            return HalfInt.of(value)
        except NotHalfIntegral:
            return NotImplemented
    return NotImplemented
