"""Core data model: pairs, splits, designs, census, verification."""

import pytest
from hypothesis import given, strategies as st

from nsqs import (
    InvalidBlockError,
    InvalidPairError,
    InvalidSplitError,
    alternative_splits,
    block_points,
    canonical_block,
    canonical_pair,
    catalog_get,
    expected_block_count,
    find_block,
    nested_design,
    pair_census,
    relabel,
    repartition,
    total_pair_slots,
    verify_steiner,
)


def test_canonical_pair_sorts():
    assert canonical_pair(3, 1) == (1, 3)
    assert canonical_pair(1, 3) == (1, 3)


@given(st.integers(0, 100), st.integers(0, 100))
def test_canonical_pair_symmetric(a, b):
    if a == b:
        with pytest.raises(InvalidPairError):
            canonical_pair(a, b)
    else:
        assert canonical_pair(a, b) == canonical_pair(b, a)
        assert canonical_pair(a, b)[0] < canonical_pair(a, b)[1]


def test_canonical_pair_rejects_equal():
    with pytest.raises(InvalidPairError):
        canonical_pair(2, 2)


def test_canonical_block_orders_pairs():
    assert canonical_block((5, 2), (1, 0)) == ((0, 1), (2, 5))


def test_canonical_block_rejects_overlap():
    with pytest.raises(InvalidSplitError):
        canonical_block((0, 1), (1, 2))


def test_alternative_splits():
    splits = alternative_splits([0, 1, 2, 3])
    assert splits == [
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((0, 3), (1, 2)),
    ]
    for s in splits:
        assert block_points(s) == frozenset({0, 1, 2, 3})


def test_alternative_splits_rejects_bad_sets():
    with pytest.raises(InvalidBlockError):
        alternative_splits([0, 1, 2])
    with pytest.raises(InvalidBlockError):
        alternative_splits([0, 1, 2, 2])


def test_block_count_formulas():
    assert expected_block_count(8) == 14
    assert expected_block_count(10) == 30
    assert expected_block_count(20) == 285
    assert total_pair_slots(8) == 28
    assert total_pair_slots(10) == 60
    assert total_pair_slots(62) == 18910


def test_nested_design_canonicalizes_and_sorts():
    d = nested_design(8, [((3, 1), (0, 2)), ((5, 4), (7, 6))])
    assert d.blocks[0] == ((0, 2), (1, 3))
    assert d.blocks == tuple(sorted(d.blocks))


def test_nested_design_rejects_out_of_range():
    with pytest.raises(InvalidBlockError):
        nested_design(4, [((0, 1), (2, 4))])


def test_verify_steiner_passes_catalog():
    d = catalog_get("sqs10").design()
    report = verify_steiner(d)
    assert report.ok
    assert report.block_count == report.expected_blocks == 30
    assert report.witness is None
    assert report.violations == 0


def test_verify_steiner_fails_on_truncation():
    d = catalog_get("sqs10").design()
    broken = nested_design(10, d.blocks[1:])
    report = verify_steiner(broken)
    assert not report.ok
    assert report.witness is not None
    assert report.witness_coverage == 0
    assert report.violations == 4  # each dropped block uncovers 4 triples


def test_verify_steiner_fails_on_duplicate():
    d = catalog_get("sqs10").design()
    dup = nested_design(10, d.blocks[:1] + d.blocks)
    report = verify_steiner(dup)
    assert not report.ok
    assert report.witness_coverage == 2


def test_pair_census_totals():
    d = catalog_get("bool8").design()
    census = pair_census(d)
    assert census.total == 28 == total_pair_slots(8)
    assert census.nd_pair_count == 12
    assert census.histogram() == {2: 8, 3: 4}
    assert census.min_mult == 2
    assert census.max_mult == 3
    assert sum(census.point_degrees()) == 2 * census.nd_pair_count


def test_repartition_changes_one_split():
    d = catalog_get("sqs8uniform").design()
    pts = block_points(d.blocks[0])
    alt = [s for s in alternative_splits(pts) if s != d.blocks[0]][0]
    d2 = repartition(d, 0, alt)
    assert len(d2.blocks) == len(d.blocks)
    assert {block_points(b) for b in d2.blocks} == {
        block_points(b) for b in d.blocks
    }
    assert alt in d2.blocks
    assert verify_steiner(d2).ok


def test_repartition_rejects_wrong_points():
    d = catalog_get("sqs8uniform").design()
    wrong = (
        ((0, 1), (2, 3))
        if block_points(d.blocks[0]) != frozenset({0, 1, 2, 3})
        else ((0, 1), (2, 4))
    )
    with pytest.raises(InvalidSplitError):
        repartition(d, 0, wrong)


def test_find_block():
    d = catalog_get("sqs10").design()
    for i, blk in enumerate(d.blocks):
        assert find_block(d, block_points(blk)) == i
    # the triple {0,1,2} lies in exactly one block; any other completion
    # of it is guaranteed absent
    (w,) = block_points(d.blocks[find_block_of_triple(d)]) - {0, 1, 2}
    x = next(x for x in range(10) if x not in {0, 1, 2, w})
    with pytest.raises(InvalidBlockError):
        find_block(d, {0, 1, 2, x})


def find_block_of_triple(d):
    for i, blk in enumerate(d.blocks):
        if {0, 1, 2} <= set(block_points(blk)):
            return i
    raise AssertionError("triple uncovered")


def test_relabel_preserves_verification_and_census_shape():
    d = catalog_get("sqs10").design()
    perm = [(3 * i + 1) % 10 for i in range(10)]
    d2 = relabel(d, perm)
    assert verify_steiner(d2).ok
    assert pair_census(d2).histogram() == pair_census(d).histogram()


@given(st.randoms(use_true_random=False))
def test_relabel_random_perms_preserve_histogram(rnd):
    d = catalog_get("bool8").design()
    perm = list(range(8))
    rnd.shuffle(perm)
    d2 = relabel(d, perm)
    assert verify_steiner(d2).ok
    assert pair_census(d2).histogram() == pair_census(d).histogram()
