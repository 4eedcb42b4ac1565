"""Tour of the embedded catalog: expand, verify, census, classify.

Run: python3 demos/01_catalog_tour.py
"""

from nsqs import catalog_get, catalog_names, classify, pair_census, verify_steiner


def main():
    for name in catalog_names():
        entry = catalog_get(name)
        design = entry.design()
        report = verify_steiner(design)
        census = pair_census(design)
        cls = classify(design)
        mu = (
            str(cls.mu_min)
            if cls.mu_min == cls.mu_max
            else f"{cls.mu_min}..{cls.mu_max}"
        )
        print(
            f"{name:12s} v={design.v:3d} blocks={len(design.blocks):5d} "
            f"steiner={'ok' if report.ok else 'FAIL'} "
            f"M={census.nd_pair_count:5d} mu={mu:6s} {cls.kind}"
        )
        if cls.half_partition:
            q1, q2 = cls.half_partition
            print(f"{'':12s} half-partition {list(q1)} / {list(q2)}")


if __name__ == "__main__":
    main()
