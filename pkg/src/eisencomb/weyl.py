"""Permutations, Kostant representatives and the shifted Weyl action for GL_N.

Permutations are 1-based and written in one-line notation ``[w(1),...,w(N)]``.
Products compose right to left: ``(u * w)(i) = u(w(i))``.  A permutation acts
on a vector by moving entries to new places, ``(w.v)_i = v_{w^{-1}(i)}``, so
``(u * w).v == u.(w.v)``.

For the two-block parabolic with Levi ``GL_n x GL_n'`` the Kostant
representatives ``W^P`` are the minimal length representatives of the cosets
``W_{M_P} w``.  They are exactly the permutations whose inverse is increasing
on positions ``1..n`` and on positions ``n+1..N``, i.e. the (n, n')-shuffles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm",
    "BlockPair",
    "BlockPairError",
    "length_of",
    "kostant_reps",
    "kostant_reps_of_length",
    "is_kostant_rep",
    "levi_weyl_group",
    "coset_factor",
    "dot_action",
    "dot_preimage",
    "concat_levi_weight",
    "is_dominant",
    "length_polynomial",
    "gaussian_binomial",
    "format_polynomial",
]


def _inversions(images: Sequence[int]) -> int:
    count = 0
    for i in range(len(images)):
        x = images[i]
        for j in range(i + 1, len(images)):
            if x > images[j]:
                count += 1
    return count


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]
    length: int = field(init=False, compare=False, repr=False)

    def __init__(self, images: Iterable[int]):
        values = tuple(images)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "images", values)
        object.__setattr__(self, "length", _inversions(values))

    @classmethod
    def identity(cls, size: int) -> "Perm":
        return cls(range(1, size + 1))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> "Perm":
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Perm(self.images[k - 1] for k in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.size
        for i, k in enumerate(self.images, start=1):
            inv[k - 1] = i
        return Perm(inv)

    def act(self, vector: Sequence) -> tuple:
        """Place permutation: entry ``i`` of the result is ``vector[w^{-1}(i)]``."""
        if len(vector) != self.size:
            raise ValueError("size mismatch")
        out = [None] * self.size
        for i, k in enumerate(self.images):
            out[k - 1] = vector[i]
        return tuple(out)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def length_of(w: Perm) -> int:
    """Number of inversions of ``w``."""
    return w.length


class BlockPairError(ValueError):
    pass


@dataclass(frozen=True)
class BlockPair:
    """Block sizes ``(n, n')`` of the maximal parabolic with Levi ``GL_n x GL_n'``.

    Any positive sizes are accepted so that both orders (P and Q) can be
    enumerated; ``standard`` tells whether ``n`` is even and ``n'`` odd.
    """

    n: int
    n_prime: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.n_prime < 1:
            raise BlockPairError(f"block sizes must be positive: {self.n}x{self.n_prime}")

    @property
    def N(self) -> int:
        return self.n + self.n_prime

    @property
    def dim_unipotent(self) -> int:
        return self.n * self.n_prime

    @property
    def standard(self) -> bool:
        return self.n % 2 == 0 and self.n_prime % 2 == 1

    def require_standard(self) -> "BlockPair":
        if not self.standard:
            raise BlockPairError(
                f"block pair {self} needs n even and n' odd"
            )
        return self

    def swapped(self) -> "BlockPair":
        return BlockPair(self.n_prime, self.n)

    @classmethod
    def parse(cls, token: str) -> "BlockPair":
        try:
            left, right = token.lower().split("x")
            return cls(int(left), int(right))
        except ValueError:
            raise BlockPairError(f"not a block pair like 2x3: {token!r}") from None

    def __str__(self) -> str:
        return f"{self.n}x{self.n_prime}"


def _shuffles(n: int, n_prime: int) -> Iterator[Perm]:
    N = n + n_prime
    for first in itertools.combinations(range(1, N + 1), n):
        chosen = set(first)
        rest = [k for k in range(1, N + 1) if k not in chosen]
        yield Perm(list(first) + rest).inverse()


@lru_cache(maxsize=None)
def _kostant_reps_cached(n: int, n_prime: int) -> tuple[Perm, ...]:
    reps = list(_shuffles(n, n_prime))
    reps.sort(key=lambda w: (w.length, w.images))
    return tuple(reps)


def kostant_reps(block: BlockPair) -> list[Perm]:
    """All ``binomial(N, n)`` Kostant representatives, sorted by (length, one-line form)."""
    return list(_kostant_reps_cached(block.n, block.n_prime))


def kostant_reps_of_length(block: BlockPair, target: int) -> list[Perm]:
    return [w for w in _kostant_reps_cached(block.n, block.n_prime) if w.length == target]


def is_kostant_rep(w: Perm, block: BlockPair) -> bool:
    """Membership test: ``w^{-1}`` increasing on both blocks of positions."""
    if w.size != block.N:
        return False
    inv = w.inverse().images
    n = block.n
    return all(inv[i] < inv[i + 1] for i in range(n - 1)) and all(
        inv[i] < inv[i + 1] for i in range(n, block.N - 1)
    )


def levi_weyl_group(block: BlockPair) -> Iterator[Perm]:
    """Block-preserving permutations ``S_n x S_n'``."""
    n, N = block.n, block.N
    for top in itertools.permutations(range(1, n + 1)):
        for bottom in itertools.permutations(range(n + 1, N + 1)):
            yield Perm(top + bottom)


def coset_factor(sigma: Perm, block: BlockPair) -> tuple[Perm, Perm]:
    """Write ``sigma = u * w`` with ``u`` block-preserving and ``w`` in ``W^P``."""
    n = block.n
    inv = sigma.inverse().images
    w_inv = sorted(inv[:n]) + sorted(inv[n:])
    w = Perm(w_inv).inverse()
    u = sigma * w.inverse()
    return u, w


def dot_action(w: Perm, weight: Sequence[int]) -> tuple[int, ...]:
    """``w(weight + rho) - rho``.

    Differences of rho entries are integers (``rho_k - rho_i = i - k``), so
    the result is integral for every ``N``.
    """
    if len(weight) != w.size:
        raise ValueError("size mismatch")
    out = [0] * w.size
    for k, i in enumerate(w.images, start=1):
        # entry k moves to place i
        out[i - 1] = weight[k - 1] + i - k
    return tuple(out)


def dot_preimage(w: Perm, weight: Sequence[int]) -> tuple[int, ...]:
    """The ``x`` with ``dot_action(w, x) == weight``."""
    return dot_action(w.inverse(), weight)


def concat_levi_weight(lam: Sequence[int], lam_prime: Sequence[int]) -> tuple[int, ...]:
    return tuple(lam) + tuple(lam_prime)


def is_dominant(weight: Sequence[int]) -> bool:
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))


def length_polynomial(perms: Iterable[Perm]) -> list[int]:
    """Coefficients of ``sum q^{l(w)}``, constant term first."""
    coeffs: list[int] = []
    for w in perms:
        if w.length >= len(coeffs):
            coeffs.extend([0] * (w.length + 1 - len(coeffs)))
        coeffs[w.length] += 1
    return coeffs


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_divexact(p: list[int], q: list[int]) -> list[int]:
    # q has leading coefficient +-1 here, so long division stays integral
    p = list(p)
    out = [0] * (len(p) - len(q) + 1)
    lead = q[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(p[k + len(q) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        for j, y in enumerate(q):
            p[k + j] -= c * y
    if any(p[: len(q) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _q_factorial(m: int) -> list[int]:
    # prod_{k=1}^{m} (1 + q + ... + q^{k-1})
    poly = [1]
    for k in range(1, m + 1):
        poly = _poly_mul(poly, [1] * k)
    return poly


def gaussian_binomial(N: int, k: int) -> list[int]:
    """Coefficients of the q-binomial ``[N choose k]_q = [N]_q! / ([k]_q! [N-k]_q!)``."""
    if k < 0 or k > N:
        return [0]
    denom = _poly_mul(_q_factorial(k), _q_factorial(N - k))
    return _poly_divexact(_q_factorial(N), denom)


def format_polynomial(coeffs: Sequence[int], var: str = "q") -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"
