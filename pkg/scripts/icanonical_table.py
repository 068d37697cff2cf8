"""Dual icanonical basis of split A1 up to a degree, with closed forms and positivity.

Writes a LaTeX table (or JSON with --json) of each L(k, m) in the standard
basis and as a polynomial in B and the Cartan generator.
"""

import argparse
from dataclasses import dataclass

from hallcanon.cli import dumps_json, dumps_latex
from hallcanon.ihall import SplitRankOne
from hallcanon.nks import irank1_L


@dataclass
class Config:
    max_degree: int = 6
    as_json: bool = False


def table(cfg: Config):
    R = SplitRankOne()
    rows = []
    for m in range(cfg.max_degree + 1):
        trans = R.dual_icanonical(m)
        positive = R.positivity(m) if m else True
        for (k, a) in sorted(trans):
            closed = irank1_L(k, m)
            rows.append({
                "m": m, "k": k,
                "standard": " + ".join(f"({c}) K^{b}U_{x}" for (b, x), c in sorted(trans[(k, a)].items())),
                "closed form": " + ".join(f"({c}) B^{j}K^{i}" for (j, i), c in sorted(closed.items())),
                "agrees": R.element_of(trans[(k, a)]) == R.from_iqg(closed),
                "positive": positive,
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.max_degree, args.json)
    rows = table(cfg)
    print((dumps_json if cfg.as_json else dumps_latex)(rows), end="")


if __name__ == "__main__":
    main()
