"""Tabulate raw and up-to-isomorphism act counts for catalog monoids.

    python3 scripts/count_acts.py --max-size 5 --monoids S2 C2 T2
"""
import argparse
import time

from sacts import brute_force_count, count_acts, parse_spec
from sacts.catalog import catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--monoids", nargs="*")
    ap.add_argument("--max-size", type=int, default=5)
    ap.add_argument("--brute-limit", type=int, default=9, help="cross-check when n*|S| is at most this")
    args = ap.parse_args()
    specs = [parse_spec(s) for s in args.monoids] if args.monoids else catalog(max_monoid_size=4)
    print(f"{'monoid':<32} {'n':>2} {'raw':>10} {'iso':>8} {'brute':>8} {'secs':>6}")
    for spec in specs:
        m = spec.build()
        for n in range(1, args.max_size + 1):
            t = time.perf_counter()
            raw = count_acts(m, n)
            iso = count_acts(m, n, up_to_iso=True)
            brute = brute_force_count(m, n) if n * m.size <= args.brute_limit else None
            flag = "" if brute in (None, raw) else "  MISMATCH"
            print(f"{str(spec):<32} {n:>2} {raw:>10} {iso:>8} {brute if brute is not None else '-':>8} "
                  f"{time.perf_counter() - t:6.2f}{flag}")


if __name__ == "__main__":
    main()
