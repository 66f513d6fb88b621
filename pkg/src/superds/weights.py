"""Weight combinatorics for the periplectic root datum on Z^n.

The positive even roots are e_i - e_j for i < j, the positive odd roots
are -(e_i + e_j) for i < j, and mu <= lambda means that lambda - mu is a
nonnegative integral combination of positive roots. That cone is generated
by the simple differences e_i - e_{i+1} together with the single odd
generator -(e_1 + e_2), which are linearly independent, so membership of a
difference vector reduces to a prefix sum test. Intervals of the order are
finite and can be enumerated from an exact coefficient box.

Dominance is the weakly decreasing condition a_1 >= ... >= a_n throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import BadParams, DimensionMismatch, NotComparable, SuperDSError

__all__ = [
    "norm",
    "is_dominant",
    "PRootData",
    "root_data",
    "leq",
    "ell",
    "interval",
    "bfs_leq",
]


def _vector(w, n=None):
    v = tuple(int(x) for x in w)
    if n is not None and len(v) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(v)}")
    if not v:
        raise DimensionMismatch("weights must have at least one coordinate")
    return v


def norm(weight):
    """The coordinate sum. Odd positive roots lower it by two."""
    return sum(_vector(weight))


def is_dominant(weight):
    v = _vector(weight)
    return all(a >= b for a, b in zip(v, v[1:]))


@dataclass(frozen=True)
class PRootData:
    """Positive roots and semigroup generators for a fixed rank.

    Every positive root is a nonnegative integral combination of the
    generators; root_data checks that once per rank before handing the
    object out.
    """

    n: int
    positive_even: tuple
    positive_odd: tuple
    generators: tuple


def _basis_vector(n, i, j=None, sign=1):
    v = [0] * n
    v[i] += sign
    if j is not None:
        v[j] += sign
    return tuple(v)


@lru_cache(maxsize=None)
def root_data(n):
    if n < 1:
        raise BadParams("rank must be at least 1")
    even = []
    odd = []
    for i in range(n):
        for j in range(i + 1, n):
            root = [0] * n
            root[i], root[j] = 1, -1
            even.append(tuple(root))
            odd.append(_basis_vector(n, i, j, sign=-1))
    gens = []
    for i in range(n - 1):
        root = [0] * n
        root[i], root[i + 1] = 1, -1
        gens.append(tuple(root))
    if n >= 2:
        gens.append(_basis_vector(n, 0, 1, sign=-1))
    data = PRootData(
        n=n,
        positive_even=tuple(even),
        positive_odd=tuple(odd),
        generators=tuple(gens),
    )
    for root in data.positive_even + data.positive_odd:
        if not _member(root):
            raise SuperDSError(f"positive root {root} escapes the generator cone")
    return data


def _member(t):
    """Whether t lies in the nonnegative span of the generators.

    The odd generator is the only one that changes the norm, so its
    coefficient is forced to -norm/2; what remains must be a nonnegative
    combination of simple differences, which is the prefix sum test.
    """
    total = sum(t)
    if total > 0 or total % 2 != 0:
        return False
    c = -total // 2
    n = len(t)
    if n == 1:
        return t[0] == 0
    u = list(t)
    u[0] += c
    u[1] += c
    running = 0
    for x in u[:-1]:
        running += x
        if running < 0:
            return False
    return running + u[-1] == 0


def leq(mu, lam):
    """Whether lambda - mu is a nonnegative combination of positive roots."""
    mu = _vector(mu)
    lam = _vector(lam, len(mu))
    root_data(len(mu))
    return _member(tuple(b - a for a, b in zip(mu, lam)))


def ell(mu, lam):
    """Half the norm drop, the count of odd roots in any decomposition."""
    mu = _vector(mu)
    lam = _vector(lam, len(mu))
    if not leq(mu, lam):
        raise NotComparable(f"{mu} is not below {lam}")
    return (sum(mu) - sum(lam)) // 2


def _prefixes(v):
    out = []
    running = 0
    for x in v[:-1]:
        running += x
        out.append(running)
    return out


def interval(mu, lam, dominant_only=False):
    """All weights between mu and lambda, smallest coefficients first.

    Writing pi = mu + d(-(e_1+e_2)) + sum c_k (e_k - e_{k+1}), the pair of
    memberships mu <= pi <= lambda is equivalent to 0 <= d <= ell and
    0 <= c_k <= B_k for box bounds B_k read off the prefix sums of the
    endpoints, so the scan below visits each element exactly once. The leq
    filter double-checks every candidate.
    """
    mu = _vector(mu)
    lam = _vector(lam, len(mu))
    drop = ell(mu, lam)
    n = len(mu)
    if n == 1:
        return [mu]
    weight = [1] + [2] * (n - 2)
    bounds = [
        pl - pm + drop * w
        for pm, pl, w in zip(_prefixes(mu), _prefixes(lam), weight)
    ]
    out = []
    for d in range(drop + 1):
        for cs in product(*(range(b + 1) for b in bounds)):
            pi = list(mu)
            pi[0] += cs[0] - d
            pi[1] -= d
            for k in range(1, n - 1):
                pi[k] += cs[k] - cs[k - 1]
            pi[n - 1] -= cs[n - 2]
            pi = tuple(pi)
            if dominant_only and not is_dominant(pi):
                continue
            if leq(mu, pi) and leq(pi, lam):
                out.append(pi)
    return sorted(out)


def bfs_leq(mu, lam):
    """Breadth-first oracle over generator additions, for cross-checking leq.

    The norm can only drop, by two per odd generator, which caps the number
    of odd steps; the even step count is capped by the prefix slack of the
    difference. Within those caps the search walks the generator graph with
    a visited set and no further arithmetic shortcuts.
    """
    mu = _vector(mu)
    lam = _vector(lam, len(mu))
    n = len(mu)
    data = root_data(n)
    if mu == lam:
        return True
    if not data.generators:
        return False
    t = tuple(b - a for a, b in zip(mu, lam))
    total = sum(t)
    if total > 0 or total % 2 != 0:
        return False
    drop = -total // 2
    weight = [1] + [2] * (n - 2)
    slack = sum(
        max(0, pt + drop * w) for pt, w in zip(_prefixes(t), weight)
    )
    cap = drop + slack
    start = tuple(mu)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth == cap:
            continue
        for gen in data.generators:
            nxt = tuple(a + g for a, g in zip(state, gen))
            if nxt == lam:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, depth + 1))
    return False
