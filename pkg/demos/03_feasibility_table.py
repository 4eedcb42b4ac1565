"""The uniform-nesting feasibility screen for v = 8..64.

For each admissible order, every ND-pair count between the counting
minimum and C(v,2) is screened against the divisibility and bound
conditions; survivors are the only parameter sets a uniform nesting can
have.

Run: python3 demos/03_feasibility_table.py
"""

from nsqs import feasibility_table


def main():
    print(f"{'v':>3} {'slots':>6}  candidates (M(mu)[status])")
    for row in feasibility_table(8, 64):
        cands = ", ".join(
            f"{c.nd_pairs}({c.mu})[{c.status}]" for c in row.candidates
        )
        print(f"{row.v:>3} {row.total_pair_slots:>6}  {cands}")
        for ex in row.exclusions:
            print(f"{'':>11} excluded {ex.nd_pairs}: {ex.reason}")


if __name__ == "__main__":
    main()
