"""Run every identity suite over several seeds and report timing and coefficient sizes.

    python scripts/identity_sweep.py --seeds 5 --scale 2 --bound 50 --max-den 50
"""

import argparse
import random
import time
from dataclasses import replace

from pgacalc import checks, constructions


def coefficient_height(seed: int, cfg: checks.SuiteConfig, n: int = 200) -> int:
    """Largest numerator/denominator bit length seen in a side-wedge product."""
    s = checks.Sampler(cfg, random.Random(seed))
    height = 0
    for _ in range(n):
        t = s.triangle()
        mv = constructions.side(t, 1).mv ^ constructions.side(t, 2).mv
        for c in mv:
            height = max(height, c.numerator.bit_length(), c.denominator.bit_length())
    return height


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--scale", type=int, default=1, help="multiply every sample size")
    ap.add_argument("--bound", type=int, default=10)
    ap.add_argument("--max-den", type=int, default=10)
    args = ap.parse_args()

    base = checks.SuiteConfig(bound=args.bound, max_den=args.max_den)
    sizes = {f: getattr(base, f) * args.scale for f in
             ("algebra_cases", "quadrance_cases", "spread_cases", "triangle_cases",
              "thales_cases", "isometry_cases", "rotor_cases", "misc_cases")}
    failed = 0
    for seed in range(args.seeds):
        cfg = replace(base, seed=seed, **sizes)
        start = time.perf_counter()
        results = checks.run_all(cfg)
        elapsed = time.perf_counter() - start
        bad = [r for r in results if not r.passed]
        failed += len(bad)
        print(f"seed {seed}: {len(results) - len(bad)}/{len(results)} suites passed in {elapsed:.1f}s, "
              f"max coefficient height {coefficient_height(seed, cfg)} bits")
        for r in bad:
            print("  " + r.summary())
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
