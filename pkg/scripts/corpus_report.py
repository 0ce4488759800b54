"""Markdown table of the built-in corpus: classifier verdict, oracle outcome, agreement.

    python scripts/corpus_report.py --oracle-max-len 10 > corpus.md
"""
import argparse
import time
from dataclasses import dataclass

from si_lab.cli import corpus_rows
from si_lab.oracle import default_max_elems


@dataclass
class Config:
    oracle_max_len: int = 10
    max_elems: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--oracle-max-len", type=int, default=Config.oracle_max_len)
    ap.add_argument("--max-elems", type=int, default=Config.max_elems)
    args = ap.parse_args()
    cfg = Config(args.oracle_max_len, args.max_elems or default_max_elems())

    t0 = time.perf_counter()
    rows = corpus_rows(cfg.oracle_max_len, cfg.max_elems)
    print("| name | family | si | simple | oracle si/simple | closure | agreement | basis |")
    print("|---|---|---|---|---|---|---|---|")
    for r in rows:
        closure = f"{r['oracle_elements']}{'' if r['oracle_saturated'] else '+'}"
        print(f"| {r['name']} | {r['family']} | {r['si']} | {r['simple']} | "
              f"{r['oracle_si']}/{r['oracle_simple']} | {closure} | {r['agreement']} | "
              f"{'; '.join(r['basis'])} |")
    bad = [r["name"] for r in rows if r["agreement"] == "disagree"]
    off = [r["name"] for r in rows if not r["matches_expected"]]
    print()
    print(f"{len(rows)} matrices, {sum(r['oracle_saturated'] for r in rows)} saturated closures, "
          f"{len(bad)} disagreements, {len(off)} off the recorded expectation, "
          f"{time.perf_counter() - t0:.1f}s")
    return 3 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
