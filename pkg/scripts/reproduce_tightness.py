"""Orient the tightness example and confirm with the exact search that 3 is optimal."""
import argparse
import time

from properorient.generators import gen_tightness
from properorient.graph import is_proper, max_indegree
from properorient.oracle import decide_pon, exact_pon
from properorient.orienter import orient_block


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=26)
    args = ap.parse_args()

    g = gen_tightness()
    o = orient_block(g, check=True)
    print(f"n={g.n} m={g.m} orienter: proper={is_proper(o)} max in-degree={max_indegree(o)}")
    t0 = time.perf_counter()
    r = exact_pon(g, budget=args.budget)
    feasible2, _ = decide_pon(g, 2, budget=args.budget)
    print(f"exact: pon={r.pon} (k=2 feasible: {feasible2}), {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
