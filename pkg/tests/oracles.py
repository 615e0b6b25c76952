"""Independent reference computations used by the tests.

Nothing here imports the enumeration or search code under test.
"""

import itertools


def inversions(images):
    return sum(1 for i, j in itertools.combinations(range(len(images)), 2) if images[i] > images[j])


def compose(u, w):
    return tuple(u[k - 1] for k in w)


def q_binomial_pascal(N, k):
    """[N choose k]_q via [N,k] = [N-1,k-1] + q^k [N-1,k]."""
    if k < 0 or k > N:
        return [0]
    if k == 0 or k == N:
        return [1]
    left = q_binomial_pascal(N - 1, k - 1)
    right = [0] * k + q_binomial_pascal(N - 1, k)
    size = max(len(left), len(right))
    left = left + [0] * (size - len(left))
    right = right + [0] * (size - len(right))
    out = [x + y for x, y in zip(left, right)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def block_preserving(n, n_prime):
    N = n + n_prime
    for top in itertools.permutations(range(1, n + 1)):
        for bottom in itertools.permutations(range(n + 1, N + 1)):
            yield top + bottom


def minimal_coset_reps(n, n_prime):
    """Elements w of S_N with l(u w) >= l(w) for every block-preserving u,
    found by scanning all of S_N."""
    N = n + n_prime
    levi = list(block_preserving(n, n_prime))
    reps = []
    for w in itertools.permutations(range(1, N + 1)):
        lw = inversions(w)
        if all(inversions(compose(u, w)) >= lw for u in levi):
            reps.append(w)
    return reps


def dot(w, v):
    """w(v + rho) - rho using explicit doubled rho; (w.x)_i = x_{w^{-1}(i)}."""
    N = len(w)
    rho2 = [N + 1 - 2 * i for i in range(1, N + 1)]
    shifted2 = [2 * x + r for x, r in zip(v, rho2)]
    moved = [None] * N
    for i, k in enumerate(w):
        moved[k - 1] = shifted2[i]
    return tuple((m - r) // 2 for m, r in zip(moved, rho2))


def brute_lemma_all_perms(lam, lam_prime):
    """Scan every w in S_N: middle length, minimal in its coset, dominant dot preimage."""
    n, n_prime = len(lam), len(lam_prime)
    N = n + n_prime
    mu = tuple(lam) + tuple(lam_prime)
    reps = set(minimal_coset_reps(n, n_prime))
    hits = []
    for w in itertools.permutations(range(1, N + 1)):
        if 2 * inversions(w) != n * n_prime or w not in reps:
            continue
        w_inv = [0] * N
        for i, k in enumerate(w, start=1):
            w_inv[k - 1] = i
        pre = dot(tuple(w_inv), mu)
        if all(pre[i] >= pre[i + 1] for i in range(N - 1)):
            hits.append((w, pre))
    return hits


def lemma_by_sorting(lam, lam_prime):
    """mu~ exists iff mu + rho has distinct entries and exactly n n'/2 pairs
    (i in block 1, j in block 2) have (mu+rho)_i < (mu+rho)_j."""
    n, n_prime = len(lam), len(lam_prime)
    N = n + n_prime
    mu = list(lam) + list(lam_prime)
    # doubled mu + rho, to stay integral
    shifted = [2 * mu[i] + (N + 1 - 2 * (i + 1)) for i in range(N)]
    if len(set(shifted)) != N:
        return False
    crossings = sum(1 for i in range(n) for j in range(n, N) if shifted[i] < shifted[j])
    return 2 * crossings == n * n_prime
