"""Monte Carlo convergence table: estimate and standard error against sample count.

    python scripts/mc_convergence.py --out convergence.csv
"""
import argparse
import csv
import sys

from subspace_mass.sampling import estimate_accrual, estimate_alignment


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-samples", type=int, default=200_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    sizes = []
    n = 1000
    while n <= args.max_samples:
        sizes.append(n)
        n *= 4

    rows = []
    for samples in sizes:
        runs = [(f"align-{N}", estimate_alignment(N, samples, args.seed, args.workers)) for N in (8, 12, 16)]
        runs.append(("accrual-pion", estimate_accrual("pion", samples, args.seed, args.workers)))
        for label, est in runs:
            rows.append([label, samples, f"{est.mean:.6g}", f"{est.stderr:.6g}",
                         f"{float(est.expected):.6g}", f"{est.deviation_in_stderr():.3f}"])

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["quantity", "samples", "mean", "stderr", "expected", "deviation_stderr"])
    w.writerows(rows)
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
