"""Compare the corona formula with the direct QEC for irregular H.

Scans G over a few graphs (some with QEC(G) = 0) and H over stars,
complete bipartite graphs, paths and seeded random graphs, and prints the
pairs where formula and direct value disagree. The disagreements found
all have QEC(G) = 0.
"""

import argparse
import random

from coronaqec.graphs import Graph, generate
from coronaqec.corona import qec_corona


def random_connected(n, p, rng):
    # a random spanning tree plus independent extra edges
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph(n, tuple(edges), name=f"rand{n}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--random", type=int, default=30, help="number of random H")
    args = parser.parse_args()
    rng = random.Random(args.seed)

    Gs = [generate("path", 3), generate("complete", 3), generate("cycle", 4), generate("cycle", 6),
          generate("petersen"), generate("complete_bipartite", 2, 3)]
    Hs = [generate("star", k) for k in range(2, 7)]
    Hs += [generate("complete_bipartite", 2, b) for b in range(3, 6)]
    Hs += [generate("path", n) for n in range(3, 7)]
    Hs += [random_connected(rng.randrange(4, 8), 0.3, rng) for _ in range(args.random)]
    Hs = [H for H in Hs if H.regular_degree() is None]

    checked = bad = 0
    for G in Gs:
        for H in Hs:
            r = qec_corona(G, H)
            if r.qec_formula is None:
                continue
            checked += 1
            if r.formula_error > r.tolerances.qec_match_tol:
                bad += 1
                print(f"{r.G:<10}{r.H:<10} QEC(G)={r.qec_G:+.6f}  formula={r.qec_formula:+.6f}"
                      f"  direct={r.qec_direct:+.6f}")
    print(f"{bad} of {checked} irregular-H pairs disagree")


if __name__ == "__main__":
    main()
