"""Brute-force oracles for the indicator constructions behind the bounds.

The distinctness indicator sums sgn(sigma) over permutations that are
not full cycles, evaluated on tuples via their coincidence pattern: it
is 1 on fully distinct tuples, 0 on partial coincidences, and has
magnitude (k-1)! on constant tuples (empirical sign (-1)^k).  Combined
with the product over pairs of 1 - (|x_i - x_j|^2 / 2)^(p-1) over F_p it
indicates tuples that form a simplex with all pairwise distances in
sqrt(2p) * {1, sqrt(2), ..., sqrt(m)}.

Everything here favors exhaustive enumeration over cleverness; these
are correctness oracles with deliberately small domains, not production
paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .lattice_combinatorics import count_box, is_prime, next_prime


class OddSquaredDistanceError(ValueError):
    """Some pair of points has odd squared distance."""


class NonPrimeModulusError(ValueError):
    """The configured modulus is not prime."""


class DiameterError(ValueError):
    """Pairwise half squared distances reach (m+1)*p, outside the valid window."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., k} given by its image tuple."""

    image: Tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.image)
        if sorted(self.image) != list(range(1, k + 1)):
            raise ValueError("image must be a bijection of {1, ..., k}")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Cycle decomposition, each cycle led by its smallest element."""
        seen = [False] * len(self.image)
        out: List[Tuple[int, ...]] = []
        for start in range(1, len(self.image) + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            out.append(tuple(cycle))
        return tuple(out)

    @property
    def sign(self) -> int:
        swaps = sum(len(c) - 1 for c in self.cycles())
        return -1 if swaps % 2 else 1


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty blocks covering {1, ..., k}."""

    blocks: FrozenSet[FrozenSet[int]]

    def __post_init__(self) -> None:
        flat: List[int] = [i for block in self.blocks for i in block]
        if not flat or any(not block for block in self.blocks):
            raise ValueError("blocks must be nonempty")
        k = max(flat)
        if sorted(flat) != list(range(1, k + 1)):
            raise ValueError("blocks must partition {1, ..., k}")

    @classmethod
    def of(cls, blocks) -> "SetPartition":
        return cls(frozenset(frozenset(b) for b in blocks))

    @property
    def ground_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def is_trivial(self) -> bool:
        return len(self.blocks) == 1


def symmetric_group(k: int) -> Iterator[Permutation]:
    """All permutations of {1, ..., k}."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    for image in itertools.permutations(range(1, k + 1)):
        yield Permutation(image)


def is_k_cycle(sigma: Permutation) -> bool:
    """True iff the permutation is a single cycle through all k points."""
    cycles = sigma.cycles()
    return len(cycles) == 1 and len(cycles[0]) == len(sigma.image)


@lru_cache(maxsize=None)
def _non_cycle_terms(k: int) -> Tuple[Tuple[int, Tuple[Tuple[int, ...], ...]], ...]:
    # (sign, cycles as 0-based index tuples) for every non-k-cycle of S_k.
    out = []
    for sigma in symmetric_group(k):
        if is_k_cycle(sigma):
            continue
        cycles = tuple(tuple(i - 1 for i in c) for c in sigma.cycles())
        out.append((sigma.sign, cycles))
    return tuple(out)


def distinctness_indicator(labels: Sequence) -> int:
    """Signed count of non-full-cycle permutations fixing the label tuple.

    Returns 1 when all labels are distinct, 0 when some but not all
    coincide, and (-1)^k (k-1)! when all k labels are equal.  Labels are
    compared by equality; feasible for 2 <= k <= 7.
    """
    k = len(labels)
    if not 2 <= k <= 7:
        raise ValueError("tuple length must be between 2 and 7")
    total = 0
    for sign, cycles in _non_cycle_terms(k):
        for cycle in cycles:
            first = labels[cycle[0]]
            if any(labels[i] != first for i in cycle[1:]):
                break
        else:
            total += sign
    return total


def partition_coefficients(k: int) -> Dict[SetPartition, int]:
    """Coefficients c_P with  indicator = sum_P c_P prod_{B in P} [equal on B].

    Groups the non-full-cycle permutations of S_k by their cycle
    partition and sums signs.  Only nontrivial partitions (two or more
    blocks) appear; every returned coefficient is nonzero.
    """
    if not 2 <= k <= 7:
        raise ValueError("k must be between 2 and 7")
    out: Dict[SetPartition, int] = {}
    for sigma in symmetric_group(k):
        if is_k_cycle(sigma):
            continue
        part = SetPartition.of(sigma.cycles())
        out[part] = out.get(part, 0) + sigma.sign
    return {p: c for p, c in out.items() if c != 0}


@dataclass(frozen=True)
class PointConfig:
    """Integer points with a prime modulus p and distance-set size m.

    All pairwise squared distances must be even; the product indicator
    is valid while every half squared distance stays below (m+1)*p.
    """

    points: Tuple[Tuple[int, ...], ...]
    p: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if not is_prime(self.p):
            raise NonPrimeModulusError(f"{self.p} is not prime")
        if not self.points:
            raise ValueError("at least one point is required")
        dims = {len(pt) for pt in self.points}
        if len(dims) != 1:
            raise ValueError("points must share one dimension")
        for a, b in itertools.combinations(self.points, 2):
            if sum((x - y) ** 2 for x, y in zip(a, b)) % 2:
                raise OddSquaredDistanceError(
                    f"points {a} and {b} are at odd squared distance"
                )

    def half_squared_distance(self, i: int, j: int) -> int:
        a, b = self.points[i], self.points[j]
        return sum((x - y) ** 2 for x, y in zip(a, b)) // 2


def forbidden_distance_product(
    cfg: PointConfig, indices: Optional[Sequence[int]] = None
) -> int:
    """Product over pairs of  1 - (half squared distance)^(p-1)  mod p.

    Equals 1 exactly when every pairwise half squared distance is 0 mod p,
    which under the diameter window means each distance is 0 or lies in
    sqrt(2p) * {1, ..., sqrt(m)}; any other pair kills the product.
    """
    if indices is None:
        indices = range(len(cfg.points))
    window = (cfg.m + 1) * cfg.p
    result = 1
    for i, j in itertools.combinations(indices, 2):
        h = cfg.half_squared_distance(i, j)
        if h >= window:
            raise DiameterError(
                f"half squared distance {h} reaches (m+1)p = {window}"
            )
        result = result * (1 - pow(h, cfg.p - 1, cfg.p)) % cfg.p
    return result % cfg.p


def simplex_indicator(cfg: PointConfig, k: int) -> int:
    """Distinctness indicator times the distance product, mod p.

    The configuration must hold exactly k + 1 points and p must exceed k
    so the constant-tuple value k! stays nonzero mod p.  Returns 1 on
    distinct tuples whose pairwise distances all lie in sqrt(2p) times the
    distance set, magnitude k! on the constant tuple, 0 otherwise.
    """
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    if len(cfg.points) != k + 1:
        raise ValueError(f"need exactly {k + 1} points, got {len(cfg.points)}")
    if cfg.p <= k:
        raise ValueError(f"modulus {cfg.p} must exceed k = {k}")
    h = distinctness_indicator(cfg.points)
    f = forbidden_distance_product(cfg)
    return h * f % cfg.p


@dataclass(frozen=True)
class CliqueBoundReport:
    """Exact extremal subset size against the counting rank bound."""

    n: int
    l: int
    m: int
    k: int
    p: int
    d_max: int
    ground_size: int
    extremal_size: int
    extremal_subset: Tuple[Tuple[int, ...], ...]
    rank_bound: int
    holds: bool


class SearchBudgetExceeded(RuntimeError):
    """Branch-and-bound node budget exhausted."""


def _largest_clique_free_subset(
    adjacency: List[List[bool]], clique_size: int, budget: int
) -> List[int]:
    # Largest vertex subset whose induced graph has no clique of
    # `clique_size` vertices; exact branch and bound.
    n = len(adjacency)
    best: List[int] = []
    nodes = 0

    def creates_clique(chosen: List[int], v: int) -> bool:
        neighbors = [u for u in chosen if adjacency[v][u]]
        if len(neighbors) < clique_size - 1:
            return False
        for combo in itertools.combinations(neighbors, clique_size - 1):
            if all(adjacency[a][b] for a, b in itertools.combinations(combo, 2)):
                return True
        return False

    def extend(i: int, chosen: List[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"exceeded {budget} search nodes")
        if len(chosen) + (n - i) <= len(best):
            return
        if i == n:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if not creates_clique(chosen, i):
            chosen.append(i)
            extend(i + 1, chosen)
            chosen.pop()
        extend(i + 1, chosen)

    extend(0, [])
    return best


def clique_bound_check(
    n: int,
    l: int,
    m: int,
    k: int,
    subset_budget: int = 500_000,
    parity: int = 0,
) -> CliqueBoundReport:
    """Exhaustively verify the counting bound on clique-free subsets.

    Ground set: the vectors of {0, ..., l}^n whose coordinate sum has the
    given parity (so all pairwise squared distances are even).  With p
    the smallest prime above d_max / (m+1), finds the largest subset
    containing no k+1 points pairwise at distances in sqrt(2p) times the
    distance set, and checks it against 2^(k+1) * count_box(n, l, k(p-1)).
    """
    if n < 1 or l < 0 or m < 1 or k < 1:
        raise ValueError("need n >= 1, l >= 0, m >= 1, k >= 1")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    ground = [
        v
        for v in itertools.product(range(l + 1), repeat=n)
        if sum(v) % 2 == parity
    ]
    if len(ground) > 24:
        raise ValueError(f"ground set of {len(ground)} points exceeds 24")
    if not ground:
        raise ValueError("empty ground set for this parity")

    d_max = 0
    for a, b in itertools.combinations(ground, 2):
        h = sum((x - y) ** 2 for x, y in zip(a, b)) // 2
        if h > d_max:
            d_max = h
    p = next_prime(d_max // (m + 1))
    forbidden = {p * j for j in range(1, m + 1)}

    size = len(ground)
    adjacency = [[False] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            h = sum((x - y) ** 2 for x, y in zip(ground[i], ground[j])) // 2
            if h in forbidden:
                adjacency[i][j] = adjacency[j][i] = True

    chosen = _largest_clique_free_subset(adjacency, k + 1, subset_budget)
    rank_bound = (2 ** (k + 1)) * count_box(n, l, k * (p - 1))
    return CliqueBoundReport(
        n=n,
        l=l,
        m=m,
        k=k,
        p=p,
        d_max=d_max,
        ground_size=size,
        extremal_size=len(chosen),
        extremal_subset=tuple(ground[i] for i in chosen),
        rank_bound=rank_bound,
        holds=len(chosen) <= rank_bound,
    )
