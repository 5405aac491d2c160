"""Set partitions, partition coefficients, and Bell/Stirling polynomial machinery.

All integer arithmetic in this module is exact (Python ints grow as needed);
factorials and Stirling numbers overflow fixed-width types almost immediately.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError

# Bell(14) is about 1.9e8; enumerating beyond that is not a desk-scale run.
MAX_GROUND_SIZE = 14


@dataclass(frozen=True)
class SetPartition:
    """A partition of a finite set of positive integers into disjoint blocks.

    Blocks are kept canonical: elements ascending inside each block, blocks
    ordered by their minimum element.  Construction accepts any iterable of
    iterables and canonicalizes, so two partitions are equal (and hash alike)
    exactly when they contain the same blocks.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        canon = sorted(tuple(sorted(block)) for block in blocks)
        object.__setattr__(self, "blocks", tuple(canon))
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise DomainError("partition blocks must be nonempty")
            for x in block:
                if not isinstance(x, int) or x < 1:
                    raise DomainError(f"partition elements must be positive integers, got {x!r}")
                if x in seen:
                    raise DomainError(f"element {x} appears in more than one block")
                seen.add(x)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(x for block in self.blocks for x in block)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return sum(len(block) for block in self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def to_lists(self) -> list[list[int]]:
        """JSON form: array of arrays, canonical order."""
        return [list(block) for block in self.blocks]

    def __str__(self) -> str:
        if not self.blocks:
            return "{}"
        if all(x <= 9 for block in self.blocks for x in block):
            return "|".join("".join(str(x) for x in block) for block in self.blocks)
        return "|".join(",".join(str(x) for x in block) for block in self.blocks)


@dataclass(frozen=True)
class PartitionShape:
    """Block-size profile of a partition: counts[a-1] blocks of cardinality a."""

    r: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.r < 0 or any(c < 0 for c in self.counts):
            raise DomainError("invalid partition shape")
        if sum(a * c for a, c in enumerate(self.counts, start=1)) != self.r:
            raise DomainError(f"shape {self.counts} does not sum to ground size {self.r}")

    @property
    def num_blocks(self) -> int:
        return sum(self.counts)

    @classmethod
    def of(cls, partition: SetPartition) -> "PartitionShape":
        r = partition.size
        counts = [0] * r
        for block in partition.blocks:
            counts[len(block) - 1] += 1
        return cls(r, tuple(counts))


def _check_capacity(n: int, max_size: int) -> None:
    if n > max_size:
        raise CapacityError(
            f"refusing to enumerate partitions of a {n}-element set (limit {max_size}); "
            "raise max_size explicitly if you really want this"
        )


def enum_set_partitions(elements: Iterable[int], *, max_size: int = MAX_GROUND_SIZE) -> list[SetPartition]:
    """Every partition of the given set, exactly once, in a deterministic order.

    Enumeration walks restricted-growth strings in lexicographic order, so the
    single-block partition comes first and the all-singletons partition last.
    The empty set has exactly one partition: the empty one.
    """
    items = sorted(set(elements))
    n = len(items)
    _check_capacity(n, max_size)
    if n == 0:
        return [SetPartition()]
    out: list[SetPartition] = []
    rgs = [0] * n

    def extend(pos: int, width: int) -> None:
        if pos == n:
            blocks: list[list[int]] = [[] for _ in range(width)]
            for i, b in enumerate(rgs):
                blocks[b].append(items[i])
            out.append(SetPartition(blocks))
            return
        for b in range(width + 1):
            rgs[pos] = b
            extend(pos + 1, width + 1 if b == width else width)

    extend(1, 1)
    return out


def enum_restricted_partitions(
    elements: Iterable[int], forbidden_within: Iterable[int], *, max_size: int = MAX_GROUND_SIZE
) -> list[SetPartition]:
    """Partitions of ``elements`` in which no block is contained in ``forbidden_within``."""
    b = frozenset(forbidden_within)
    return [
        p for p in enum_set_partitions(elements, max_size=max_size)
        if all(not set(block) <= b for block in p.blocks)
    ]


def coeff_c_star(partition: SetPartition) -> int:
    """Unsigned partition coefficient: product of (|block| - 1)! (1 for the empty partition)."""
    out = 1
    for block in partition.blocks:
        out *= math.factorial(len(block) - 1)
    return out


def coeff_c(partition: SetPartition) -> int:
    """Signed partition coefficient: (-1)^(size - blocks) times the unsigned one."""
    sign = -1 if (partition.size - partition.num_blocks) % 2 else 1
    return sign * coeff_c_star(partition)


def relabel_partition(subset: Iterable[int], partition: SetPartition) -> SetPartition:
    """Push a partition of ``subset`` through the order-preserving bijection onto {1..|subset|}."""
    items = sorted(set(subset))
    if partition.ground != set(items):
        raise DomainError(f"{partition} is not a partition of {sorted(items)}")
    rank = {x: i + 1 for i, x in enumerate(items)}
    return SetPartition([rank[x] for x in block] for block in partition.blocks)


def disjoint_union(left: SetPartition, right: SetPartition) -> SetPartition:
    if left.ground & right.ground:
        raise DomainError("partitions overlap; disjoint union undefined")
    return SetPartition(list(left.blocks) + list(right.blocks))


def prop1_decomposition(
    r: int, subset: Iterable[int], *, max_size: int = MAX_GROUND_SIZE
) -> list[tuple[tuple[int, ...], SetPartition, SetPartition]]:
    """All triples (A, Xi, Delta) with A inside the given proper subset of {1..r},
    Xi a partition of A, and Delta a partition of the complement of A having no
    block inside the subset.

    Gluing Xi and Delta back together hits every partition of {1..r} exactly once;
    that bijection is what the tests pin down.
    """
    if r < 1:
        raise DomainError("r must be a positive integer")
    ground = set(range(1, r + 1))
    b = frozenset(subset)
    if not b <= ground:
        raise DomainError(f"subset {sorted(b)} is not contained in {{1..{r}}}")
    if b == ground:
        raise DomainError("the subset must be proper: the complement-side enumeration needs it")
    _check_capacity(r, max_size)
    out: list[tuple[tuple[int, ...], SetPartition, SetPartition]] = []
    b_sorted = sorted(b)
    for size in range(len(b_sorted) + 1):
        for a in itertools.combinations(b_sorted, size):
            rest = ground - set(a)
            deltas = enum_restricted_partitions(rest, b, max_size=max_size)
            for xi in enum_set_partitions(a, max_size=max_size):
                for delta in deltas:
                    out.append((a, xi, delta))
    return out


def partition_shapes(r: int, k: int) -> Iterable[tuple[int, ...]]:
    """Shape vectors (i_1,...,i_{r-k+1}) with sum k and weighted sum r."""
    if not 1 <= k <= r:
        raise DomainError(f"need 1 <= k <= r, got r={r}, k={k}")
    top = r - k + 1

    def rec(a: int, blocks_left: int, mass_left: int, acc: list[int]):
        if a == top:
            if mass_left == top * blocks_left:
                yield tuple(acc + [blocks_left])
            return
        for i in range(min(blocks_left, mass_left // a) + 1):
            yield from rec(a + 1, blocks_left - i, mass_left - a * i, acc + [i])

    yield from rec(1, k, r, [])


def partition_shape_count(r: int, k: int, counts: Sequence[int]) -> int:
    """Number of partitions of {1..r} into k blocks with counts[a-1] blocks of size a.

    Equals r! / (prod_a (a!)^{i_a} * i_a!).
    """
    counts = tuple(counts)
    if sum(counts) != k or sum(a * c for a, c in enumerate(counts, start=1)) != r:
        raise DomainError(f"shape {counts} is inconsistent with r={r}, k={k}")
    denom = 1
    for a, c in enumerate(counts, start=1):
        denom *= math.factorial(a) ** c * math.factorial(c)
    return math.factorial(r) // denom


def bell_partial(r: int, k: int, xs: Sequence):
    """Partial exponential Bell polynomial B_{r,k}(x_1,...,x_{r-k+1}).

    Works over any commutative ring whose elements support +, * and
    multiplication by int (ints, Fractions, polynomials).  Evaluated via the
    recurrence B_{r,k} = sum_j C(r-1, j-1) x_j B_{r-j,k-1}.
    """
    if not 1 <= k <= r:
        raise DomainError(f"need 1 <= k <= r, got r={r}, k={k}")
    if len(xs) < r - k + 1:
        raise DomainError(f"need at least {r - k + 1} arguments, got {len(xs)}")

    memo: dict[tuple[int, int], object] = {}

    def b(rr: int, kk: int):
        if kk == 0:
            return 1 if rr == 0 else 0
        if rr < kk:
            return 0
        key = (rr, kk)
        if key not in memo:
            acc = None
            for j in range(1, rr - kk + 2):
                sub = b(rr - j, kk - 1)
                if isinstance(sub, int) and sub == 0:
                    continue
                term = math.comb(rr - 1, j - 1) * xs[j - 1] * sub
                acc = term if acc is None else acc + term
            memo[key] = 0 if acc is None else acc
        return memo[key]

    return b(r, k)


def bell_partial_by_shapes(r: int, k: int, xs: Sequence):
    """Same polynomial as :func:`bell_partial`, summed over block-size shapes.

    Independent route used for cross-checking: sums the shape multiplicities
    M_{r,k}(i_1,...) times the monomials prod x_a^{i_a}.
    """
    if not 1 <= k <= r:
        raise DomainError(f"need 1 <= k <= r, got r={r}, k={k}")
    if len(xs) < r - k + 1:
        raise DomainError(f"need at least {r - k + 1} arguments, got {len(xs)}")
    acc = None
    for shape in partition_shapes(r, k):
        coeff = partition_shape_count(r, k, shape)
        term = coeff
        for a, i in enumerate(shape, start=1):
            for _ in range(i):
                term = term * xs[a - 1]
        acc = term if acc is None else acc + term
    if acc is None:
        raise DomainError(f"no shapes for r={r}, k={k}")
    return acc


def bell_complete(r: int, xs: Sequence):
    """Complete exponential Bell polynomial Y_r = sum_k B_{r,k}; Y_0 = 1."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if r == 0:
        return 1
    if len(xs) < r:
        raise DomainError(f"need at least {r} arguments, got {len(xs)}")
    acc = bell_partial(r, 1, xs)
    for k in range(2, r + 1):
        acc = acc + bell_partial(r, k, xs)
    return acc


def stirling_first_unsigned(r: int, k: int) -> int:
    """Unsigned Stirling number of the first kind, as B_{r,k}(0!, 1!, ..., (r-k)!)."""
    return bell_partial(r, k, [math.factorial(i) for i in range(r - k + 1)])


def stirling_second(r: int, k: int) -> int:
    """Stirling number of the second kind, as B_{r,k}(1, ..., 1)."""
    return bell_partial(r, k, [1] * (r - k + 1))


def bell_number(n: int) -> int:
    """Number of partitions of an n-element set."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(stirling_second(n, k) for k in range(1, n + 1))
