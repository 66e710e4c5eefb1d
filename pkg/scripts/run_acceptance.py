"""Run every acceptance check and print one line per criterion.

Usage: python3 scripts/run_acceptance.py [--only 5 6]
"""

import argparse
import sys
from dataclasses import dataclass, field

from charvar.acceptance import CRITERIA, run_criterion


@dataclass
class AcceptanceConfig:
    only: list = field(default_factory=list)


def main(cfg: AcceptanceConfig) -> int:
    numbers = cfg.only or [c[0] for c in CRITERIA]
    results = [run_criterion(n) for n in numbers]
    for r in results:
        print(r.line(), flush=True)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria pass")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", type=int, nargs="*", default=[])
    sys.exit(main(AcceptanceConfig(only=ap.parse_args().only)))
