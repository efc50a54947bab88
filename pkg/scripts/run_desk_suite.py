"""Run the claim registry over the desk corpus and write JSON-lines reports.

    python3 scripts/run_desk_suite.py --max-size 6 --raw-oracle-size 5 --out reports.jsonl
"""
import argparse
import time

from sacts import suite as S
from sacts.catalog import catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--raw-oracle-size", type=int, default=5)
    ap.add_argument("--mode", default="both")
    ap.add_argument("--strictness-size", type=int, default=3)
    ap.add_argument("--out", default="reports.jsonl")
    args = ap.parse_args()

    t0 = time.perf_counter()
    specs = catalog()
    reports = []
    for spec in specs:
        t = time.perf_counter()
        reports.extend(S.run_suite([spec], args.max_size, None, args.mode,
                                   raw_max_size=args.raw_oracle_size))
        print(f"{str(spec):<32} {time.perf_counter() - t:7.1f}s", flush=True)
    merged = merge(reports)
    merged.append(S.strictness_report(S.strictness_witness_search(specs, args.strictness_size)))
    S.write_reports(args.out, merged)
    for r in merged:
        tag = "gating" if r.gating else "non-gating"
        print(f"{r.claim:<24} {r.mode or '-':<8} {'PASS' if r.passed else 'FAIL'} "
              f"{r.instances_checked:>9} {r.failures_total:>8} {tag}")
    print(f"total {time.perf_counter() - t0:.1f}s, gating failures: "
          f"{[r.claim for r in S.gating_failures(merged)]}")


def merge(reports):
    """Fold per-monoid reports into one report per (claim, mode)."""
    by = {}
    for r in reports:
        key = (r.claim, r.mode)
        if key not in by:
            by[key] = r
            continue
        acc = by[key]
        acc.instances_checked += r.instances_checked
        acc.failures_total += r.failures_total
        acc.failures.extend(r.failures[:max(0, 3 - len(acc.failures))])
        acc.elapsed += r.elapsed
        acc.corpus = dict(acc.corpus, monoids=acc.corpus["monoids"] + r.corpus["monoids"])
    return [by[k] for k in sorted(by, key=lambda k: (k[0], k[1] or ""))]


if __name__ == "__main__":
    main()
