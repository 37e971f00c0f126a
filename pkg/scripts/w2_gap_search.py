"""Search small EDCS instances where the plain W2 edge-count bound fails.

The B graph omits the H-edge between a W2 vertex in D and the special vertex
of its component, so sum deg_B(W2) can fall short of beta_minus/2 * |W2|.
This script counts such instances and prints the smallest one found; the
corrected check (w2_edge_count_net) must hold on all of them.
"""

import argparse
import random

from edcslab.edcs import EdcsParams, construct_edcs
from edcslab.graph import GeneratorConfig, format_graph, generate
from edcslab.prooflab import FAIL, verify_trace


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    nonempty = gaps = net_failures = 0
    smallest = None
    for i in range(args.trials):
        n = rng.randint(6, 24)
        g = generate(GeneratorConfig("gnm-random", n, m=rng.randint(n, min(3 * n, n * (n - 1) // 2)), seed=i))
        beta = rng.randint(2, 5)
        p = EdcsParams(beta, rng.randint(1, beta - 1))
        h = construct_edcs(g, p, seed=i)
        tr = verify_trace(g, h, 1, p, seed=i)
        if not tr.aux or not tr.aux.w2:
            continue
        nonempty += 1
        net_failures += tr.get("w2_edge_count_net").status == FAIL
        if tr.get("w2_edge_count").status == FAIL:
            gaps += 1
            if smallest is None or g.m < smallest[0].m:
                smallest = (g, h, p, i)
    print(f"trials={args.trials} nonempty_w2={nonempty} plain_bound_failures={gaps} net_bound_failures={net_failures}")
    if smallest:
        g, h, p, i = smallest
        print(f"smallest: seed={i} beta={p.beta} beta_minus={p.beta_minus}")
        print("G:\n" + format_graph(g) + "H:\n" + format_graph(h), end="")
    return 1 if net_failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
