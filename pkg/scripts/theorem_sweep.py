"""Sweep EDCS quality over dense random and planted-tight graphs; writes CSV.

    python3 scripts/theorem_sweep.py --seeds 5 --out results/theorem.csv
"""

import argparse
from pathlib import Path

from edcslab.bench import GraphSpec, SweepConfig, cmd_bench, row_ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--epsilon", action="append", default=None)
    ap.add_argument("--out", type=Path, default=Path("results/theorem.csv"))
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    cfg = SweepConfig(
        graphs=[GraphSpec("gnm-random", args.n, p=args.p), GraphSpec("planted-tight", args.n - args.n % 4)],
        epsilons=args.epsilon or ["1.0", "0.5", "0.2"],
        seeds=list(range(args.seeds)),
        out=args.out,
    )
    rows = cmd_bench(cfg)
    bad = [r for r in rows if not row_ok(r)]
    print(f"{len(rows)} rows -> {args.out}; {len(bad)} below threshold or failing trace")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
