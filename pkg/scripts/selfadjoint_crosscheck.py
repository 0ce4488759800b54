"""Check the selfadjoint simplicity rule (simple iff T^2 = T or T^3 = T) against the oracle.

Random selfadjoint matrices are built as U D U* with D diagonal over a small
real spectrum and U an exact unitary. Saturated closures give exact answers;
for the rest the oracle can only say Inconclusive, which is counted separately.

    python scripts/selfadjoint_crosscheck.py --samples 60 --dim 3
"""
import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction

from si_lab.classifier import classify
from si_lab.exact_arith import ExactMatrix
from si_lab.oracle import check_si, check_simple, generate_closure
from si_lab.transforms import conjugate, exact_unitary


@dataclass
class Config:
    samples: int = 60
    dim: int = 3
    seed: int = 0
    max_len: int = 10
    spectrum: tuple = (0, 1, -1, Fraction(1, 2), 2)


def sample(cfg: Config, rng: random.Random) -> ExactMatrix:
    D = ExactMatrix.diag(*(rng.choice(cfg.spectrum) for _ in range(cfg.dim)))
    return conjugate(D, exact_unitary(cfg.dim, rng.randrange(1000)))


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    tally = Counter()
    mismatches = []
    for k in range(cfg.samples):
        T = sample(cfg, rng)
        assert T == T.adjoint()
        v = classify(T)
        S = generate_closure([T], max_len=cfg.max_len)
        si, simple = check_si(S), check_simple(S)
        if not S.saturated:
            tally["unsaturated"] += 1
            if simple.value == "No" and v.simple != "No":
                mismatches.append(k)
            continue
        tally["saturated"] += 1
        if (si.value, simple.value) == (v.si, v.simple):
            tally["agree"] += 1
        else:
            mismatches.append(k)
    return {"config": {**asdict(cfg), "spectrum": [str(x) for x in cfg.spectrum]},
            "counts": dict(tally), "mismatches": mismatches}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--dim", type=int, default=Config.dim)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-len", type=int, default=Config.max_len)
    args = ap.parse_args()
    cfg = Config(samples=args.samples, dim=args.dim, seed=args.seed, max_len=args.max_len)
    out = run(cfg)
    print(json.dumps(out, indent=2))
    raise SystemExit(1 if out["mismatches"] else 0)


if __name__ == "__main__":
    main()
