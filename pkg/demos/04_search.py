"""Searching for nestings: refusal, flat backtracking, orbit-level search.

Run: python3 demos/04_search.py
"""

from nsqs import (
    SearchSpec,
    alternative_splits,
    block_points,
    catalog_get,
    classify,
    complete_uniform,
    rotational_expand,
    rotational_spec,
    search_nesting,
    search_rotational,
    uniform,
)


def main():
    blocks = [
        tuple(sorted(b[0] + b[1]))
        for b in catalog_get("sqs10").design().blocks
    ]

    # an infeasible target is refused before any node is expanded
    out = search_nesting(blocks, SearchSpec(uniform(3)))
    print(f"uniform mu=3 on SQS(10): {out.status} ({out.reason})")

    # the feasible target is found by backtracking over block splits
    out = search_nesting(blocks, SearchSpec(uniform(2)))
    cls = classify(out.witness)
    print(
        f"uniform mu=2 on SQS(10): {out.status} after {out.stats.nodes} nodes"
        f" -> {cls.kind} M={cls.nd_pairs}"
    )

    # orbit-level search: strip the ro20 base-block splits and re-find them
    spec = catalog_get("ro20").payload
    stripped = rotational_spec(
        spec.p,
        [alternative_splits(block_points(b))[0] for b in spec.base_blocks],
        spec.multipliers,
    )
    out = search_rotational(stripped, SearchSpec(complete_uniform()))
    cls = classify(rotational_expand(out.witness))
    print(
        f"complete-uniform on ro20 base blocks: {out.status} after "
        f"{out.stats.nodes} nodes -> {cls.kind} M={cls.nd_pairs} mu={cls.mu_min}"
    )


if __name__ == "__main__":
    main()
