"""Write the configuration fixtures used by the CLI tests and README examples."""

import json
from dataclasses import dataclass
from pathlib import Path

from charvar.compactified import EigenvalueData
from charvar.sampling import sample_rng
from charvar.stability import s1_configuration, s2_configuration
from charvar.suites import m1_two_family, realize_roles


@dataclass
class FixtureConfig:
    out_dir: Path = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    seed: int = 0
    alphas_n4: tuple = (2, 3, 5, 7)
    alphas_n5: tuple = (2, 3, 5, 7, 11)


def build(cfg: FixtureConfig) -> dict:
    e4, e5 = EigenvalueData(cfg.alphas_n4), EigenvalueData(cfg.alphas_n5)
    fixtures = {
        "s1_n5.json": s1_configuration(e5),
        "s2_n5.json": s2_configuration(e5),
        "generic_n5.json": realize_roles("GGGG", e5, sample_rng(cfg.seed, 1)),
        "generic_n4.json": realize_roles("GGG", e4, sample_rng(cfg.seed, 2)),
        "n4_m1_1_m2_2.json": realize_roles("NPP", e4, sample_rng(cfg.seed, 3)),
        "n5_family_12.json": m1_two_family(sample_rng(cfg.seed, 4), (1, 2), e5),
    }
    return {name: c.to_json() for name, c in fixtures.items()}


def main(cfg: FixtureConfig = FixtureConfig()):
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name, data in build(cfg).items():
        (cfg.out_dir / name).write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {cfg.out_dir / name}")


if __name__ == "__main__":
    main()
