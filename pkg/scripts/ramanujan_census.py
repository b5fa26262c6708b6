"""Count Ramanujan graphs by classification case and confirm the case table against the spectral test.

    python3 scripts/ramanujan_census.py --d-max 20000
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from genpaley import qchar, ramanujan


@dataclass
class CensusConfig:
    d_min: int = 3
    d_max: int = 20_000


def census(cfg: CensusConfig) -> tuple[Counter, list[int]]:
    counts: Counter = Counter()
    disagreements = []
    for d in qchar.fundamental_discriminants(cfg.d_min, cfg.d_max):
        verdict = ramanujan.classify_ramanujan(d)
        counts[verdict.classification_case.value] += 1
        if not verdict.consistent:
            disagreements.append(d.delta)
    return counts, disagreements


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--d-min", type=int, default=CensusConfig.d_min)
    parser.add_argument("--d-max", type=int, default=CensusConfig.d_max)
    args = parser.parse_args()
    counts, bad = census(CensusConfig(args.d_min, args.d_max))
    total = sum(counts.values())
    print(f"{total} positive fundamental discriminants with {args.d_min} <= D <= {args.d_max}")
    for case in ramanujan.RamanujanCase:
        print(f"  {case.value:<14} {counts[case.value]:>6}")
    print(f"disagreements with the spectral test: {len(bad)} {bad[:10]}")


if __name__ == "__main__":
    main()
