"""Core data model for nested Steiner quadruple systems.

Points are integers 0..v-1.  In rotational systems the fixed point
"infinity" is encoded as the largest index v-1, which makes it sort last
under plain integer ordering; designs carry a flag saying whether that
encoding is in use (it only affects serialization).

A pair is a canonically ordered 2-tuple ``(lo, hi)`` with ``lo < hi``.
A nested block is a 2-tuple of two disjoint pairs, ordered so that
``first <= second`` lexicographically.  Both are plain tuples so they can
be dict keys and set members in the hot loops.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidBlockError, InvalidPairError, InvalidSplitError

Pair = tuple[int, int]
NestedBlock = tuple[Pair, Pair]


def canonical_pair(a: int, b: int) -> Pair:
    """Return the unordered pair {a, b} in canonical (sorted) form."""
    if a == b:
        raise InvalidPairError(f"pair needs two distinct points, got {a} twice")
    return (a, b) if a < b else (b, a)


def canonical_block(p1: Pair, p2: Pair) -> NestedBlock:
    """Canonicalize a split given as two pairs (each already canonical)."""
    a = canonical_pair(*p1)
    b = canonical_pair(*p2)
    if set(a) & set(b):
        raise InvalidSplitError(f"split pairs {a} and {b} are not disjoint")
    return (a, b) if a <= b else (b, a)


def block_points(block: NestedBlock) -> frozenset[int]:
    return frozenset(block[0] + block[1])


def alternative_splits(points: Iterable[int]) -> list[NestedBlock]:
    """All three ways to split a 4-set of points into two disjoint pairs."""
    pts = sorted(points)
    if len(pts) != 4 or len(set(pts)) != 4:
        raise InvalidBlockError(f"need 4 distinct points, got {sorted(points)}")
    a, b, c, d = pts
    return [
        canonical_block((a, b), (c, d)),
        canonical_block((a, c), (b, d)),
        canonical_block((a, d), (b, c)),
    ]


def expected_block_count(v: int) -> int:
    """Number of blocks in a quadruple system of order v."""
    return v * (v - 1) * (v - 2) // 24


def total_pair_slots(v: int) -> int:
    """Total pair count over all block splits: two per block."""
    return v * (v - 1) * (v - 2) // 12


@dataclass(frozen=True)
class NestedDesign:
    """An SQS(v) with every block carrying a chosen split into two pairs.

    ``blocks`` is kept in canonical sorted order, so two designs over the
    same point set compare equal iff they have the same blocks with the
    same splits.  Use :func:`nested_design` to construct one.
    """

    v: int
    blocks: tuple[NestedBlock, ...]
    uses_infinity: bool = False

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def point_sets(self) -> list[frozenset[int]]:
        return [block_points(b) for b in self.blocks]


def nested_design(
    v: int,
    blocks: Iterable[NestedBlock],
    uses_infinity: bool = False,
) -> NestedDesign:
    """Canonicalize blocks, validate point ranges, and build a design."""
    canon = []
    for blk in blocks:
        nb = canonical_block(*blk)
        for p in nb[0] + nb[1]:
            if not 0 <= p < v:
                raise InvalidBlockError(f"point {p} out of range for v={v}")
        canon.append(nb)
    canon.sort()
    return NestedDesign(v=v, blocks=tuple(canon), uses_infinity=uses_infinity)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a Steiner-property check.

    ``witness`` is a triple covered zero or at least two times (None on
    pass); ``violations`` counts all bad triples, not just the witness.
    """

    ok: bool
    v: int
    block_count: int
    expected_blocks: int
    witness: Optional[tuple[int, int, int]] = None
    witness_coverage: int = 0
    violations: int = 0


def verify_steiner(design: NestedDesign) -> VerificationReport:
    """Check that every 3-subset of points is covered by exactly one block."""
    v = design.v
    cover: Counter = Counter()
    for blk in design.blocks:
        pts = sorted(blk[0] + blk[1])
        for t in itertools.combinations(pts, 3):
            cover[t] += 1

    over = [(t, c) for t, c in cover.items() if c != 1]
    n_triples = v * (v - 1) * (v - 2) // 6
    missing = n_triples - len(cover)
    violations = len(over) + missing
    witness = None
    witness_cov = 0
    if over:
        witness, witness_cov = min(over)
    elif missing:
        for t in itertools.combinations(range(v), 3):
            if t not in cover:
                witness = t
                break
    ok = violations == 0 and len(design.blocks) == expected_block_count(v)
    return VerificationReport(
        ok=ok,
        v=v,
        block_count=len(design.blocks),
        expected_blocks=expected_block_count(v),
        witness=witness,
        witness_coverage=witness_cov,
        violations=violations,
    )


@dataclass(frozen=True)
class PairCensus:
    """Multiplicity map over the pairs chosen in block splits."""

    v: int
    counts: dict[Pair, int] = field(compare=False)

    @property
    def nd_pair_count(self) -> int:
        return len(self.counts)

    @property
    def min_mult(self) -> int:
        return min(self.counts.values())

    @property
    def max_mult(self) -> int:
        return max(self.counts.values())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def point_degrees(self) -> list[int]:
        """Number of distinct ND-pairs containing each point."""
        deg = [0] * self.v
        for (a, b) in self.counts:
            deg[a] += 1
            deg[b] += 1
        return deg

    def histogram(self) -> dict[int, int]:
        """multiplicity -> number of ND-pairs with that multiplicity."""
        h: Counter = Counter(self.counts.values())
        return dict(sorted(h.items()))


def pair_census(design: NestedDesign) -> PairCensus:
    counts: Counter = Counter()
    for p1, p2 in design.blocks:
        counts[p1] += 1
        counts[p2] += 1
    return PairCensus(v=design.v, counts=dict(counts))


def repartition(design: NestedDesign, index: int, split: NestedBlock) -> NestedDesign:
    """Replace the split of the block at ``index`` with ``split``.

    The new split must cover the same four points; the block set (and so
    the Steiner property) is untouched.  Blocks are re-sorted, so the
    changed block may land at a different index in the result.
    """
    split = canonical_block(*split)
    old = design.blocks[index]
    if block_points(split) != block_points(old):
        raise InvalidSplitError(
            f"split {split} does not cover the points of block {old}"
        )
    blocks = list(design.blocks)
    blocks[index] = split
    return nested_design(design.v, blocks, design.uses_infinity)


def find_block(design: NestedDesign, points: Iterable[int]) -> int:
    """Index of the block covering exactly the given 4-set of points."""
    target = frozenset(points)
    for i, blk in enumerate(design.blocks):
        if block_points(blk) == target:
            return i
    raise InvalidBlockError(f"no block with point set {sorted(target)}")


def relabel(design: NestedDesign, perm: Sequence[int]) -> NestedDesign:
    """Apply a point bijection consistently to every block and split."""
    if sorted(perm) != list(range(design.v)):
        raise InvalidBlockError("perm is not a bijection on the point set")
    blocks = [
        canonical_block(
            (perm[p1[0]], perm[p1[1]]), (perm[p2[0]], perm[p2[1]])
        )
        for p1, p2 in design.blocks
    ]
    return nested_design(design.v, blocks, design.uses_infinity)
