"""List catalog pairs where QEC(G ⊙ H) = delta2 but QEC(G) != delta2(D_G).

For each one the script prints which candidate attains QEC(G ⊙ H). In every
counterexample found so far the winner is gamma2 or gamma3, i.e. a value
of the form -2 - theta that is itself a distance eigenvalue of the corona.
"""

import argparse

from coronaqec.catalog import DEFAULT_SEED, default_pairs
from coronaqec.corona import delta2_equality, qec_corona


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    rows = []
    for G, H in default_pairs(args.seed):
        if H.regular_degree() is None:
            continue
        d = delta2_equality(G, H)
        if d.lhs_holds == d.rhs_holds:
            continue
        r = qec_corona(G, H)
        rows.append((str(G), str(H), d.qec_corona, d.delta2_corona, d.qec_G, d.delta2_G, r.winner, r.case_label))

    print(f"{'G':<8}{'H':<16}{'QEC(GoH)':>12}{'d2(GoH)':>12}{'QEC(G)':>12}{'d2(G)':>12}  winner / case")
    for g, h, qc, dc, qg, dg, winner, case in rows:
        print(f"{g:<8}{h:<16}{qc:>12.6f}{dc:>12.6f}{qg:>12.6f}{dg:>12.6f}  {winner} / {case}")
    print(f"{len(rows)} counterexamples")


if __name__ == "__main__":
    main()
