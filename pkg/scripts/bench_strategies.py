"""Operation counts and timings across strategies; writes a CSV next to stdout.

    python scripts/bench_strategies.py --out bench.csv
"""
import argparse

from spectral_fft.bench import format_table, run_bench


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--k", default="1,4,16,64,256,1024")
    p.add_argument("--n", default="1024,16384,262144")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    args = p.parse_args()
    ks = [int(v) for v in args.k.split(",")]
    ns = [int(v) for v in args.n.split(",")]
    rows = run_bench(ks, ns, args.repetitions, args.seed)
    print(format_table(rows))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_table(rows, "delimited"))


if __name__ == "__main__":
    main()
