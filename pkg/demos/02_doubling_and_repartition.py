"""Doubling the uniform SQS(8) and rebalancing the result.

Construction A turns the complete-uniform SQS(8) into the minimum-uniform
SQS(16).  Construction B instead makes every pair an ND-pair, but leaves
8 pairs at multiplicity 7; sixteen single-block repartitions flatten that
census into a quasi-uniform one (80 pairs at 2, 40 at 3), and the local
search engine finds exactly those moves on its own.

Run: python3 demos/02_doubling_and_repartition.py
"""

from nsqs import (
    catalog_get,
    classify,
    doubling_a,
    doubling_b,
    local_balance,
    pair_census,
)


def main():
    d8 = catalog_get("sqs8uniform").design()
    print("input:", classify(d8).kind, pair_census(d8).histogram())

    d16a = doubling_a(d8)
    cls = classify(d16a)
    print(
        "doubling A:", cls.kind,
        f"M={cls.nd_pairs} mu={cls.mu_min}",
        "halves:", cls.half_partition,
    )

    d16b = doubling_b(d8)
    print("doubling B:", classify(d16b).kind, pair_census(d16b).histogram())

    out = local_balance(d16b, 2, 3)
    print(
        f"local balance: {out.status} after {out.stats.moves} moves ->",
        classify(out.witness).kind,
        pair_census(out.witness).histogram(),
    )


if __name__ == "__main__":
    main()
