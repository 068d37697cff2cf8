"""Compare the rank-one closed form for L(v, w) under the stated and balanced exponents.

For every (a, b) in the window the script straightens E^a F^b in the double and
compares it with sum_v coeff(v) L(v, (a, b)); it also tests whether each closed
form lands in the double canonical family.  Output: one JSON row per (a, b).
"""

import argparse
import json
from dataclasses import asdict, dataclass

from hallcanon.double import DrinfeldDouble, sl2_family_index
from hallcanon.hallgen import add_into
from hallcanon.nks import pbw_in_double, rank1_EaFb, rank1_L, rank1_pairs


@dataclass
class Config:
    window: int = 4
    variants: tuple = ("stated", "balanced")


def clean(x):
    return {k: c for k, c in x.items() if c}


def straightening_rows(cfg: Config):
    D = DrinfeldDouble("A1")
    rows = []
    for a in range(cfg.window + 1):
        for b in range(cfg.window + 1):
            lhs = clean(D.mul(D.power(D.E(0), a), D.power(D.F(0), b)))
            row = {"a": a, "b": b}
            for variant in cfg.variants:
                rhs: dict = {}
                for v, c in rank1_EaFb(a, b).items():
                    add_into(rhs, pbw_in_double(D, rank1_L(v, (a, b), variant)), c)
                row[variant] = lhs == clean(rhs)
            rows.append(row)
    return rows


def membership_rows(cfg: Config):
    D = DrinfeldDouble("A1")
    rows = []
    for v, w in rank1_pairs(cfg.window):
        row = {"v": list(v), "w": list(w)}
        for variant in cfg.variants:
            params = sl2_family_index(D, pbw_in_double(D, rank1_L(v, w, variant)))
            row[variant] = list(params) if params else None
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=Config.window)
    cfg = Config(window=ap.parse_args().window)
    out = {"config": asdict(cfg), "straightening": straightening_rows(cfg), "membership": membership_rows(cfg)}
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
