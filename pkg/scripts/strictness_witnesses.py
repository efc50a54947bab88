"""Search the corpus for acts separating the implications between hollow-type properties.

    python3 scripts/strictness_witnesses.py --max-size 3
"""
import argparse
import json

from sacts import suite as S


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--monoids", nargs="*")
    args = ap.parse_args()
    for e in S.strictness_witness_search(args.monoids or None, args.max_size):
        if e.found:
            act = e.witness["acts"]["A"]["act"]
            print(f"{e.implication:<30} strict: {e.monoid}, |A| = {e.size}, action {json.dumps(act['action'], ensure_ascii=False)}")
        else:
            print(f"{e.implication:<30} {e.note}")


if __name__ == "__main__":
    main()
