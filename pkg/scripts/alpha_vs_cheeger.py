"""Compare the half-interval bound alpha with the brute-force Cheeger constant and with phi(D)/4.

    python3 scripts/alpha_vs_cheeger.py --brute-cap 20 --d-max 200
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from genpaley import cheeger, ntheory as nt, qchar
from genpaley.spectral import fraction_str


@dataclass
class AlphaConfig:
    d_max: int = 200
    brute_cap: int = cheeger.DEFAULT_BRUTE_CAP


def rows(cfg: AlphaConfig):
    for d in qchar.fundamental_discriminants(3, cfg.d_max):
        alpha = cheeger.alpha_bound(d)
        quarter = Fraction(nt.euler_phi(d.conductor), 4)
        h = cheeger.brute_force_cheeger(d, cfg.brute_cap) if d.conductor <= cfg.brute_cap else None
        yield d.delta, alpha, quarter, h


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--d-max", type=int, default=AlphaConfig.d_max)
    parser.add_argument("--brute-cap", type=int, default=AlphaConfig.brute_cap)
    args = parser.parse_args()
    print(f"{'delta':>6} {'alpha':>10} {'~alpha':>10} {'phi/4':>7} {'alpha/(phi/4)':>14} {'h':>6}")
    for delta, alpha, quarter, h in rows(AlphaConfig(args.d_max, args.brute_cap)):
        print(
            f"{delta:>6} {fraction_str(alpha):>10} {float(alpha):>10.4f} {fraction_str(quarter):>7} "
            f"{float(alpha / quarter):>14.4f} {'-' if h is None else fraction_str(h):>6}"
        )


if __name__ == "__main__":
    main()
