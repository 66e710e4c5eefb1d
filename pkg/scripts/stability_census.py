"""Census of (m1, m2) shapes realized by valid configurations, with the
verdicts of the closed-form criterion and the Hilbert-Mumford oracle.

Usage: python3 scripts/stability_census.py [--seed 0] [--random 500]
"""

import argparse
from dataclasses import dataclass

from charvar.suites import exhaustive_suite, random_suite


@dataclass
class CensusConfig:
    seed: int = 0
    random_count: int = 500
    per_template: int = 2


def main(cfg: CensusConfig):
    ex = exhaustive_suite(cfg.seed, per_template=cfg.per_template)
    rnd = random_suite(cfg.random_count, cfg.seed)
    print(f"role templates: {ex.total} realized, {len(ex.disagreements)} disagreements")
    print("templates with no valid realization:", " ".join(f"n{n}:{r}" for n, r in ex.infeasible) or "none")
    print("shape counts (n, m1, m2):")
    for key in sorted(set(ex.shapes) | set(rnd.shapes)):
        print(f"  {key}: templates {ex.shapes.get(key, 0)}, random {rnd.shapes.get(key, 0)}")
    print(f"random configurations: {rnd.total}, {len(rnd.disagreements)} disagreements")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random", type=int, default=500)
    a = ap.parse_args()
    main(CensusConfig(seed=a.seed, random_count=a.random))
