"""Orient many random composite graphs and count any run that breaks the bound."""
import argparse
from collections import Counter

from properorient import orienter as O
from properorient.generators import GenParams, gen_composite
from properorient.graph import is_proper, max_indegree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=2000)
    ap.add_argument("--mode", choices=["bridgeless", "treefree"], default="treefree")
    ap.add_argument("--max-blocks", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    orient = O.orient_bridgeless if args.mode == "bridgeless" else O.orient_treefree
    hist, bad = Counter(), 0
    for i in range(args.runs):
        p = GenParams(seed=args.seed + i, n_target=4 + i % 30, n_blocks=2 + i % (args.max_blocks - 1),
                      fan_bias=0.5 * (i % 3), bridge_prob=0.5)
        g = gen_composite(p, args.mode)
        try:
            o = orient(g, check=True)
        except O.InvariantViolation as e:
            bad += 1
            print(f"seed {p.seed}: {e}")
            continue
        k = max_indegree(o)
        hist[k] += 1
        if not is_proper(o) or k > 4:
            bad += 1
            print(f"seed {p.seed}: proper={is_proper(o)} max={k}")
    print(f"{args.runs} runs ({args.mode}), {bad} bad, max in-degree histogram {dict(sorted(hist.items()))}")


if __name__ == "__main__":
    main()
