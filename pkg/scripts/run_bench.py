"""Time embedding plus orientation on random blocks and print per-step ratios."""
import argparse

from properorient.cli import bench


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sizes", nargs="*", type=int, default=[10**3, 10**4, 10**5])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--fan-bias", type=float, default=0.3)
    args = ap.parse_args()

    bench([1000])  # warm-up
    rows = bench(args.sizes, seeds=args.seeds, fan_bias=args.fan_bias, repeat=args.repeat)
    prev = None
    for n, t in rows:
        ratio = f"  x{t / prev:.1f}" if prev else ""
        print(f"{n:>9}  {t:9.4f}s  {t / n * 1e6:6.2f} us/vertex{ratio}")
        prev = t


if __name__ == "__main__":
    main()
