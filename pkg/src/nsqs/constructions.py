"""Generative machinery for nested quadruple systems.

Covers one-factorizations of K_v, Boolean systems over GF(2)^n and their
rotational form, orbit expansion of rotational base blocks, block classes
under shift and exponent doubling, and the two doubling constructions
that lift a nested system of order v to one of order 2v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    NestedBlock,
    NestedDesign,
    Pair,
    alternative_splits,
    block_points,
    canonical_block,
    canonical_pair,
    expected_block_count,
    nested_design,
    pair_census,
    verify_steiner,
)
from .errors import (
    InconsistentSpecError,
    InvalidOrderError,
    InvalidSplitError,
    PreconditionError,
)
from .gf2n import Gf2nField


# ---------------------------------------------------------------------------
# one-factorizations

@dataclass(frozen=True)
class OneFactorization:
    """A partition of the edges of K_v into v-1 perfect matchings."""

    v: int
    factors: tuple[frozenset[Pair], ...]

    def validate(self) -> None:
        v = self.v
        if len(self.factors) != v - 1:
            raise PreconditionError(
                f"expected {v - 1} factors, got {len(self.factors)}"
            )
        seen: set[Pair] = set()
        for f in self.factors:
            pts = [p for pair in f for p in pair]
            if len(f) != v // 2 or sorted(pts) != list(range(v)):
                raise PreconditionError(f"factor {sorted(f)} is not a perfect matching")
            if seen & f:
                raise PreconditionError("factors share an edge")
            seen |= f
        if len(seen) != v * (v - 1) // 2:
            raise PreconditionError("factors do not cover all edges of K_v")


def one_factorization(v: int) -> OneFactorization:
    """Round-robin (circle method) one-factorization of K_v, point v-1 fixed."""
    if v < 2 or v % 2:
        raise InvalidOrderError(f"one-factorization needs even v >= 2, got {v}")
    m = v - 1
    factors = []
    for i in range(m):
        factor = {canonical_pair(v - 1, i)}
        for j in range(1, (v - 2) // 2 + 1):
            factor.add(canonical_pair((i + j) % m, (i - j) % m))
        factors.append(frozenset(factor))
    return OneFactorization(v=v, factors=tuple(factors))


# ---------------------------------------------------------------------------
# Boolean systems

def boolean_blocks(n: int) -> list[tuple[int, int, int, int]]:
    """All 4-subsets of GF(2)^n (as ints) with zero XOR, each listed once."""
    size = 1 << n
    blocks = []
    for x in range(size):
        for y in range(x + 1, size):
            xy = x ^ y
            for z in range(y + 1, size):
                w = xy ^ z
                if w > z:
                    blocks.append((x, y, z, w))
    return blocks


def boolean_sqs(n: int, poly: int | None = None) -> NestedDesign:
    """Boolean SQS(2^n) with default (lexicographically first) splits.

    The block set does not depend on the polynomial; passing one merely
    validates it (non-primitive moduli are rejected), matching the
    rotational-form functions that do need it.
    """
    if n < 2:
        raise InvalidOrderError(f"boolean system needs n >= 2, got {n}")
    if poly is not None:
        Gf2nField(n, poly)
    blocks = [canonical_block((x, y), (z, w)) for x, y, z, w in boolean_blocks(n)]
    return nested_design(1 << n, blocks)


def boolean_to_rotational(field: Gf2nField) -> dict[int, int]:
    """Bijection GF(2)^n -> Z_{2^n-1} + {inf}: 0 -> inf, alpha^i -> i.

    The infinity point is encoded as the largest index 2^n - 1.
    """
    mapping = {0: field.order}
    for i in range(field.order):
        mapping[field.exp_table[i]] = i
    return mapping


def boolean_rotational_design(n: int, poly: int | None = None) -> NestedDesign:
    """Boolean SQS(2^n) in exponent coordinates, default splits."""
    field = Gf2nField(n, poly)
    to_rot = boolean_to_rotational(field)
    blocks = []
    for x, y, z, w in boolean_blocks(n):
        pts = sorted(to_rot[t] for t in (x, y, z, w))
        blocks.append(canonical_block((pts[0], pts[1]), (pts[2], pts[3])))
    return nested_design(1 << n, blocks, uses_infinity=True)


# ---------------------------------------------------------------------------
# rotational specs and orbit expansion

@dataclass(frozen=True)
class RotationalSpec:
    """Base nested blocks over Z_p + {inf} with shift and multiplier group.

    The infinity point is encoded as index p (= v - 1).
    """

    p: int
    base_blocks: tuple[NestedBlock, ...]
    multipliers: frozenset[int] = frozenset({1})

    @property
    def v(self) -> int:
        return self.p + 1

    def validate(self) -> None:
        if 1 not in self.multipliers:
            raise InconsistentSpecError("multiplier group must contain 1")
        for m in self.multipliers:
            if not 0 < m < self.p:
                raise InconsistentSpecError(f"multiplier {m} not a unit mod {self.p}")
            for m2 in self.multipliers:
                if (m * m2) % self.p not in self.multipliers:
                    raise InconsistentSpecError(
                        f"multipliers not closed: {m}*{m2} mod {self.p} missing"
                    )


def rotational_spec(
    p: int,
    base_blocks,
    multipliers=(1,),
) -> RotationalSpec:
    spec = RotationalSpec(
        p=p,
        base_blocks=tuple(canonical_block(*b) for b in base_blocks),
        multipliers=frozenset(multipliers),
    )
    spec.validate()
    return spec


def _rot_map(x: int, mult: int, shift: int, p: int) -> int:
    """x -> mult*x + shift mod p with the infinity point (index p) fixed."""
    if x == p:
        return p
    return (mult * x + shift) % p


def map_block(block: NestedBlock, mult: int, shift: int, p: int) -> NestedBlock:
    (a, b), (c, d) = block
    return canonical_block(
        (_rot_map(a, mult, shift, p), _rot_map(b, mult, shift, p)),
        (_rot_map(c, mult, shift, p), _rot_map(d, mult, shift, p)),
    )


def rotational_expand(spec: RotationalSpec) -> NestedDesign:
    """Apply every multiplier and shift to every base block.

    Images are deduplicated by canonical form.  A block reached with two
    different splits, a wrong final block count, or a failed Steiner
    check all raise InconsistentSpecError carrying a witness.
    """
    spec.validate()
    p = spec.p
    seen: dict[frozenset[int], NestedBlock] = {}
    for base in spec.base_blocks:
        for m in sorted(spec.multipliers):
            for s in range(p):
                nb = map_block(base, m, s, p)
                pts = block_points(nb)
                prev = seen.get(pts)
                if prev is None:
                    seen[pts] = nb
                elif prev != nb:
                    raise InconsistentSpecError(
                        f"block {sorted(pts)} reached with conflicting splits "
                        f"{prev} and {nb}"
                    )
    expected = expected_block_count(spec.v)
    if len(seen) != expected:
        raise InconsistentSpecError(
            f"expansion produced {len(seen)} distinct blocks, expected {expected}"
        )
    design = nested_design(spec.v, seen.values(), uses_infinity=True)
    report = verify_steiner(design)
    if not report.ok:
        raise InconsistentSpecError(
            f"expansion is not a quadruple system; witness triple "
            f"{report.witness} covered {report.witness_coverage} times"
        )
    return design


# ---------------------------------------------------------------------------
# block classes (shift + exponent doubling)

@dataclass(frozen=True)
class BlockClass:
    """Orbit of a block under shift (+1) and doubling (*2), inf fixed."""

    p: int
    representative: tuple[int, int, int, int]
    orbit: frozenset[frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.orbit)


def block_classes(n: int, poly: int | None = None) -> list[BlockClass]:
    """Partition the rotational Boolean SQS(2^n) block set into classes."""
    if n % 2 == 0:
        raise InvalidOrderError(f"block classes are defined for odd n, got {n}")
    design = boolean_rotational_design(n, poly)
    p = (1 << n) - 1
    remaining = {frozenset(b[0] + b[1]) for b in design.blocks}
    classes = []
    while remaining:
        start = min(remaining, key=sorted)
        orbit = {start}
        queue = [start]
        while queue:
            blk = queue.pop()
            for img in (
                frozenset(_rot_map(x, 1, 1, p) for x in blk),
                frozenset(_rot_map(x, 2, 0, p) for x in blk),
            ):
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
        rep = tuple(sorted(min(orbit, key=sorted)))
        classes.append(BlockClass(p=p, representative=rep, orbit=frozenset(orbit)))
        remaining -= orbit
    classes.sort(key=lambda c: c.representative)
    return classes


def nest_from_class_reps(
    classes: list[BlockClass], splits: list[NestedBlock]
) -> NestedDesign:
    """Propagate one chosen split per class to its whole orbit.

    The split of the image block {2x,...} / {x+1,...} is the image of the
    chosen split.  A block whose stabilizer moves the split is reported
    as InconsistentSpecError: that class admits no orbit-consistent
    nesting with this choice.
    """
    if len(classes) != len(splits):
        raise InvalidSplitError("need exactly one split per class")
    p = classes[0].p
    v = p + 1
    seeds = []
    for cls, split in zip(classes, splits):
        split = canonical_block(*split)
        # any orbit member works as the seed: propagation reaches the
        # whole class from wherever the chosen split sits
        if block_points(split) not in cls.orbit:
            raise InvalidSplitError(
                f"split {split} does not cover a block of the class of "
                f"{cls.representative}"
            )
        seeds.append((cls, split))
    assigned: dict[frozenset[int], NestedBlock] = {}
    for cls, split in seeds:
        queue = [split]
        local: dict[frozenset[int], NestedBlock] = {block_points(split): split}
        while queue:
            nb = queue.pop()
            for img in (map_block(nb, 1, 1, p), map_block(nb, 2, 0, p)):
                pts = block_points(img)
                prev = local.get(pts)
                if prev is None:
                    local[pts] = img
                    queue.append(img)
                elif prev != img:
                    raise InconsistentSpecError(
                        f"class of {cls.representative}: block {sorted(pts)} "
                        f"requires both splits {prev} and {img}"
                    )
        assigned.update(local)
    if len(assigned) != expected_block_count(v):
        raise InconsistentSpecError(
            f"classes cover {len(assigned)} blocks, expected {expected_block_count(v)}"
        )
    return nested_design(v, assigned.values(), uses_infinity=True)


def negation_preserves_blocks(n: int, poly: int | None = None) -> bool:
    """Whether negating all finite exponents maps the block set to itself."""
    design = boolean_rotational_design(n, poly)
    p = (1 << n) - 1
    blocks = {frozenset(b[0] + b[1]) for b in design.blocks}
    for blk in blocks:
        neg = frozenset(p if x == p else (-x) % p for x in blk)
        if neg not in blocks:
            return False
    return True


# ---------------------------------------------------------------------------
# doubling constructions

def _side(x: int, i: int, v: int) -> int:
    """Encode the point (x, i) of Q x {0,1} as a flat index."""
    return x + i * v


def doubling_a(
    design: NestedDesign, factorization: OneFactorization | None = None
) -> NestedDesign:
    """One-factorization doubling: nested SQS(v) -> nested SQS(2v).

    Type I blocks copy the input design (and its splits) onto each side;
    Type II blocks pair up edges of the same one-factor across sides and
    are always split into their two within-side pairs.
    """
    v = design.v
    if not verify_steiner(design).ok:
        raise PreconditionError("doubling-a input is not a Steiner quadruple system")
    if factorization is None:
        factorization = one_factorization(v)
    if factorization.v != v:
        raise PreconditionError(
            f"factorization is over {factorization.v} points, design over {v}"
        )
    factorization.validate()

    blocks = []
    for (a, b), (c, d) in design.blocks:
        for i in (0, 1):
            blocks.append(
                canonical_block(
                    (_side(a, i, v), _side(b, i, v)),
                    (_side(c, i, v), _side(d, i, v)),
                )
            )
    for factor in factorization.factors:
        for (x, y) in factor:
            for (z, w) in factor:
                blocks.append(
                    canonical_block(
                        (_side(x, 0, v), _side(y, 0, v)),
                        (_side(z, 1, v), _side(w, 1, v)),
                    )
                )
    return nested_design(2 * v, blocks)


def doubling_b(design: NestedDesign) -> NestedDesign:
    """Parity doubling: needs an input in which every pair is an ND-pair.

    Type I places each input block on the even-parity side patterns,
    carrying the split through; Type II joins both copies of two points
    and splits them into the two same-point pairs.
    """
    v = design.v
    if not verify_steiner(design).ok:
        raise PreconditionError("doubling-b input is not a Steiner quadruple system")
    census = pair_census(design)
    for a in range(v):
        for b in range(a + 1, v):
            if (a, b) not in census.counts:
                raise PreconditionError(
                    f"doubling-b needs all pairs to be ND-pairs; "
                    f"pair ({a}, {b}) is not"
                )

    blocks = []
    for (x, y), (z, w) in design.blocks:
        for i, j, k in itertools.product((0, 1), repeat=3):
            m = (i + j + k) % 2
            blocks.append(
                canonical_block(
                    (_side(x, i, v), _side(y, j, v)),
                    (_side(z, k, v), _side(w, m, v)),
                )
            )
    for x in range(v):
        for y in range(x + 1, v):
            blocks.append(
                canonical_block(
                    (_side(x, 0, v), _side(x, 1, v)),
                    (_side(y, 0, v), _side(y, 1, v)),
                )
            )
    return nested_design(2 * v, blocks)
