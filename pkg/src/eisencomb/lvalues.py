"""Critical points of Rankin-Selberg L-functions and successive-ratio statements.

Two normalizations are tracked: the cohomological one, whose critical points
are the integers ``p, p-1, ..., w+w'+1-p``, and the automorphic one, obtained
by the shift ``s -> s - (w+w')/2 + a`` and living in ``1/2 + Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .halfint import HalfInt

__all__ = [
    "CriticalData",
    "RatioStatement",
    "ShiftNotHalfIntegral",
    "NotSuccessiveCritical",
    "critical_set_coh",
    "coh_to_automorphic",
    "critical_set_automorphic",
    "nu_zero",
    "admissible_a_interval",
    "admissible_a_values",
    "build_ratio_statement",
    "ratio_statements",
    "successive_pairs",
    "pair_coverage",
    "automorphic_center",
]


class ShiftNotHalfIntegral(ArithmeticError):
    pass


class NotSuccessiveCritical(ValueError):
    pass


@dataclass(frozen=True)
class CriticalData:
    p_mu: int
    total_weight: int
    a_mu: HalfInt
    N: int

    def __post_init__(self) -> None:
        if 2 * self.p_mu <= self.total_weight:
            raise ValueError(
                f"p(mu)={self.p_mu} must exceed half the weight {self.total_weight}"
            )
        if self.N % 2 == 0 or self.N < 3:
            raise ValueError(f"N={self.N} must be odd and at least 3")


def critical_set_coh(cd: CriticalData) -> list[int]:
    """Descending integers ``p(mu), ..., w+w'+1-p(mu)``."""
    return list(range(cd.p_mu, cd.total_weight - cd.p_mu, -1))


def coh_to_automorphic(cd: CriticalData, s: Union[int, HalfInt]) -> HalfInt:
    shifted = HalfInt.of(s) + HalfInt(-cd.total_weight) + cd.a_mu
    if shifted.is_integer():
        raise ShiftNotHalfIntegral(
            f"shift of {s} lands on the integer {shifted}; "
            f"a(mu)={cd.a_mu} has the wrong parity for weight {cd.total_weight}"
        )
    return shifted


def critical_set_automorphic(cd: CriticalData) -> list[HalfInt]:
    return [coh_to_automorphic(cd, s) for s in critical_set_coh(cd)]


def automorphic_center(cd: CriticalData) -> HalfInt:
    """Image of the cohomological center ``(w+w'+1)/2``.

    Equals ``1/2`` only when the automorphic set is symmetric under ``s -> 1-s``.
    """
    return HalfInt(cd.total_weight + 1) + HalfInt(-cd.total_weight) + cd.a_mu


def nu_zero(cd: CriticalData) -> HalfInt:
    """Cohomological evaluation point ``(w+w')/2 - a(mu) - N/2``."""
    nu = HalfInt(cd.total_weight) - cd.a_mu - HalfInt(cd.N)
    if coh_to_automorphic(cd, nu) != HalfInt(-cd.N):
        raise ArithmeticError(f"nu0={nu} does not map to -N/2")
    return nu


def admissible_a_interval(total_weight: int, p_mu: int, N: int) -> tuple[HalfInt, HalfInt]:
    """Closed bounds on ``a(mu)`` from the combinatorial lemma.

    Empty (lower > upper) when ``2p - (w+w') - 1 <= 0``.
    """
    lower = HalfInt(total_weight) - p_mu + 1 - HalfInt(N)
    upper = HalfInt(-total_weight) + p_mu - 1 - HalfInt(N)
    return lower, upper


def admissible_a_values(total_weight: int, p_mu: int, N: int) -> list[HalfInt]:
    lower, upper = admissible_a_interval(total_weight, p_mu, N)
    return [HalfInt(t) for t in range(lower.twice, upper.twice + 1, 2)]


def successive_pairs(critical: list) -> list[tuple]:
    """Adjacent ``(x, x+1)`` pairs of a descending critical list, lowest first."""
    ascending = sorted(critical)
    return [(ascending[i], ascending[i + 1]) for i in range(len(ascending) - 1)]


@dataclass(frozen=True)
class RatioStatement:
    """Formal certificate for the ratio of completed L-values at ``m`` and ``m+1``.

    ``epsilon_sigma_prime`` is a sign attached to the GL_n' representation
    that is never evaluated; it stays the symbolic token ``"symbolic"``.
    """

    m: HalfInt
    m0: int
    epsilon_m: int
    epsilon_sigma_prime: str = "symbolic"
    field_tag: str = "ι(F)"

    @property
    def period_exponent(self) -> str:
        return f"({self.epsilon_m:+d})·ε_σ′"

    @property
    def lhs(self) -> str:
        return f"Λ({self.m})/Λ({self.m + 1})"

    @property
    def claim(self) -> str:
        return f"{self.lhs} ∈ Ω(σ_f, ι)^{{{self.period_exponent}}} · {self.field_tag}"

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "m0": self.m0,
            "epsilon_m": self.epsilon_m,
            "epsilon_sigma_prime": self.epsilon_sigma_prime,
            "claim": self.claim,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RatioStatement":
        return cls(
            m=HalfInt.parse(data["m"]),
            m0=data["m0"],
            epsilon_m=data["epsilon_m"],
            epsilon_sigma_prime=data["epsilon_sigma_prime"],
        )


def build_ratio_statement(cd: CriticalData, m: Union[HalfInt, int]) -> RatioStatement:
    m = HalfInt.of(m)
    critical = set(critical_set_automorphic(cd))
    if m not in critical or m + 1 not in critical:
        raise NotSuccessiveCritical(
            f"m={m} and m+1={m + 1} are not both critical "
            f"(critical points: {', '.join(map(str, sorted(critical)))})"
        )
    m0 = (m - HalfInt(1)).to_int()
    return RatioStatement(m=m, m0=m0, epsilon_m=-1 if m0 % 2 else 1)


def ratio_statements(cd: CriticalData) -> list[RatioStatement]:
    """One statement per successive critical pair, ascending in ``m``."""
    return [build_ratio_statement(cd, lo) for lo, _ in successive_pairs(critical_set_automorphic(cd))]


def pair_coverage(total_weight: int, p_mu: int, N: int) -> bool:
    """Check that ``a -> (nu0, nu0 + 1)`` is a bijection from admissible ``a``
    onto adjacent critical pairs, ordered so that the upper bound of ``a``
    gives the bottom pair, and that every ``nu0`` maps to ``-N/2``.
    """
    values = admissible_a_values(total_weight, p_mu, N)
    pairs = []
    for a in values:
        cd = CriticalData(p_mu, total_weight, a, N)
        nu = nu_zero(cd)
        if not nu.is_integer():
            return False
        pairs.append((nu.to_int(), nu.to_int() + 1))
    critical = range(p_mu, total_weight - p_mu, -1)
    # a ascending <=> nu0 descending
    return pairs[::-1] == successive_pairs(critical) and len(set(pairs)) == len(pairs)
