"""Compare the three F_s^perp routes on every composition up to a given size.

    python3 scripts/sweep_triple_oracle.py --max-n 7
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from immaculate import pieri
from immaculate.compositions import compositions_of
from immaculate.config import settings


@dataclass
class SweepConfig:
    max_n: int = 7
    methods: tuple = pieri.METHODS


@dataclass
class SweepResult:
    pairs: int = 0
    mismatches: int = 0
    violations: int = 0
    seconds: float = 0.0


def run(cfg):
    res = SweepResult()
    t = time.perf_counter()
    for n in range(1, cfg.max_n + 1):
        for alpha in compositions_of(n):
            for s in range(1, n + 1):
                exps = [pieri.skew_fundamental(s, alpha, m) for m in cfg.methods]
                res.pairs += 1
                if any(e.terms != exps[0].terms for e in exps[1:]):
                    res.mismatches += 1
                    print("mismatch", s, list(alpha), [dict(e.terms) for e in exps])
                res.violations += sum(len(e.violations()) for e in exps)
    res.seconds = round(time.perf_counter() - t, 3)
    return res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--methods", nargs="+", default=list(pieri.METHODS), choices=pieri.METHODS)
    args = ap.parse_args()
    cfg = SweepConfig(args.max_n, tuple(args.methods))
    settings.max_degree = max(settings.max_degree, cfg.max_n)
    res = run(cfg)
    print(json.dumps({"config": asdict(cfg), "result": asdict(res)}, indent=2))
    return 0 if res.mismatches == res.violations == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
