"""Exact counting and identity checks behind the lower-bound machinery.

Covers box lattice-point counts and their generating-function upper
bound, the pairing formula for the largest half squared distance inside
an arrangement class, the alternating-square identity, the multinomial
max-versus-mean inequality, and deterministic prime selection.

Everything here is exact integer arithmetic except where a float is the
honest answer (the generating-function bound and the prime-gap excess).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


@dataclass(frozen=True)
class CompositionProfile:
    """Symbol counts of an arrangement class inside {0, ..., l}^n.

    ``counts[i]`` is the number of coordinates equal to i; the ambient
    dimension is n = sum(counts) and the box side is l = len(counts) - 1.
    """

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise ValueError("counts must be nonempty")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def l(self) -> int:
        return len(self.counts) - 1


def count_box(n: int, l: int, d: int) -> int:
    """Number of v in {0, ..., l}^n with coordinate sum at most d.

    Computed exactly as the partial coefficient sum of (1 + x + ... + x^l)^n
    by a rolling dynamic program; big integers throughout, no overflow.
    """
    if n < 1 or l < 0 or d < 0:
        raise ValueError("need n >= 1, l >= 0, d >= 0")
    d = min(d, n * l)
    coeffs = [0] * (d + 1)
    coeffs[0] = 1
    for _ in range(n):
        new = [0] * (d + 1)
        for e, c in enumerate(coeffs):
            if c:
                for j in range(min(l, d - e) + 1):
                    new[e + j] += c
        coeffs = new
    return sum(coeffs)


def gf_upper_bound(n: int, l: int, d: int, t: float) -> float:
    """Generating-function bound  (1 + t + ... + t^l)^n / t^d  for t in (0, 1).

    Every box vector with coordinate sum <= d contributes a nonnegative
    power of 1/t to the expansion, so this dominates count_box(n, l, d)
    at every t.
    """
    if not 0.0 < t < 1.0:
        raise ValueError("t must lie in (0, 1)")
    if n < 1 or l < 0 or d < 0:
        raise ValueError("need n >= 1, l >= 0, d >= 0")
    base = sum(t ** i for i in range(l + 1))
    return base ** n / t ** d


def _pairing_order(counts: Sequence[int]) -> List[int]:
    # Interleave the counts from the top (a_l, a_{l-1}, ...) into the even
    # offsets from position l downward and from the bottom (a_0, a_1, ...)
    # into the odd offsets: b_l = a_l, b_{l-1} = a_0, b_{l-2} = a_{l-1}, ...
    l = len(counts) - 1
    b = [0] * (l + 1)
    hi, lo = l, 0
    take_hi = True
    for pos in range(l, -1, -1):
        if take_hi:
            b[pos] = counts[hi]
            hi -= 1
        else:
            b[pos] = counts[lo]
            lo += 1
        take_hi = not take_hi
    return b


def profile_diameter(profile: CompositionProfile) -> int:
    """Largest half squared distance between two arrangements of the profile.

    Valid when the reordered counts b satisfy b_i <= b_j for i > j (the
    extremal pairing then exists); the value is sum_j b_j * C(j+1, 2).
    Raises if the monotonicity check fails, naming the offending index.
    """
    b = _pairing_order(profile.counts)
    for i in range(1, len(b)):
        if b[i] > b[i - 1]:
            raise ValueError(
                f"reordered counts not nonincreasing at index {i} "
                f"(b[{i}] = {b[i]} > b[{i - 1}] = {b[i - 1]}); formula not guaranteed"
            )
    return sum(bj * (j + 1) * j // 2 for j, bj in enumerate(b))


def multinomial(n: int, counts: Sequence[int]) -> int:
    """Exact multinomial coefficient n! / prod(counts[i]!)."""
    if sum(counts) != n:
        raise ValueError("counts must sum to n")
    out = math.factorial(n)
    for c in counts:
        out //= math.factorial(c)
    return out


def _arrangements(counts: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    # Distinct arrangements of the multiset {i with multiplicity counts[i]}.
    n = sum(counts)
    work = list(counts)
    prefix: List[int] = []

    def rec() -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for sym in range(len(work)):
            if work[sym]:
                work[sym] -= 1
                prefix.append(sym)
                yield from rec()
                prefix.pop()
                work[sym] += 1

    yield from rec()


def profile_diameter_bruteforce(
    profile: CompositionProfile, budget: int = 100_000
) -> int:
    """Exhaustive maximum of half the squared distance over arrangement pairs.

    Coordinate permutations are isometries that preserve the arrangement
    class, so one endpoint can be pinned to the sorted arrangement and
    only the other enumerated.
    """
    total = multinomial(profile.n, profile.counts)
    if total > budget:
        raise ValueError(f"{total} arrangements exceed the budget of {budget}")
    base: List[int] = []
    for sym, c in enumerate(profile.counts):
        base.extend([sym] * c)
    best = 0
    for other in _arrangements(profile.counts):
        s = sum((x - y) * (x - y) for x, y in zip(base, other))
        if s > best:
            best = s
    return best // 2


def alternating_square_identity(j: int) -> Tuple[int, int]:
    """Both sides of  sum_{i=0..j} (j-i)^2 (-1)^i = C(j+1, 2)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    lhs = sum((j - i) * (j - i) * (-1) ** i for i in range(j + 1))
    rhs = (j + 1) * j // 2
    return lhs, rhs


def _compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial_lemma_check(
    n: int, l: int, c: Sequence[float], t: float, budget: int = 10**6
) -> Tuple[float, float]:
    """Max multinomial term versus the mean bound for ordered compositions.

    Over compositions a of n into l + 1 parts with a_i <= a_j whenever
    c_i > c_j (a maximizer always satisfies this: transposing a violating
    pair strictly increases the product), returns

        lhs_max = max multinomial(n; a) * t^(sum c_i a_i)
        rhs     = (sum_i t^(c_i))^n / (n + 1)^l

    and the contract is lhs_max >= rhs, since there are at most (n+1)^l
    compositions in total.
    """
    if len(c) != l + 1:
        raise ValueError("c must have l + 1 entries")
    if not 0.0 < t < 1.0:
        raise ValueError("t must lie in (0, 1)")
    if any(ci < 0 for ci in c):
        raise ValueError("c entries must be nonnegative")
    total = math.comb(n + l, l)
    if total > budget:
        raise ValueError(f"{total} compositions exceed the budget of {budget}")
    lhs_max = 0.0
    for a in _compositions(n, l + 1):
        ok = True
        for i in range(l + 1):
            for j in range(l + 1):
                if c[i] > c[j] and a[i] > a[j]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        value = multinomial(n, a) * t ** sum(ci * ai for ci, ai in zip(c, a))
        if value > lhs_max:
            lhs_max = value
    rhs = sum(t ** ci for ci in c) ** n / (n + 1) ** l
    return lhs_max, rhs


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, correct for all n below 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(x: int) -> int:
    """Smallest prime strictly greater than x (x below 2^63)."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x >= 2 ** 63:
        raise ValueError("x out of the supported 64-bit range")
    if x < 2:
        return 2
    candidate = x + 1 if (x + 1) % 2 else x + 2  # even candidates above 2 are composite
    while not is_prime(candidate):
        candidate += 2
    return candidate


def prime_gap_report(d_max: int, m: int) -> Tuple[int, float]:
    """Smallest prime above d_max / (m + 1) and its excess over the threshold.

    Diagnostic only; the excess is what prime gaps contribute to the
    finite-dimension correction and is reported without any constant.
    """
    if d_max < 1 or m < 1:
        raise ValueError("d_max and m must be positive integers")
    p = next_prime(d_max // (m + 1))
    return p, p - d_max / (m + 1)
