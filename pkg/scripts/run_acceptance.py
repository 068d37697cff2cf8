"""Run every acceptance target and write a JSON report with timings."""

import argparse
import json
import platform
from dataclasses import asdict, dataclass

from hallcanon.acceptance import TARGETS, run_target


@dataclass
class Config:
    targets: tuple = tuple(t.key for t in TARGETS)
    output: str = "acceptance_report.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("targets", nargs="*")
    ap.add_argument("--output", default=Config.output)
    args = ap.parse_args()
    cfg = Config(tuple(args.targets) or Config.targets, args.output)
    rows = []
    for t in TARGETS:
        if t.key not in cfg.targets:
            continue
        ok, detail, secs = run_target(t)
        print(f"{'PASS' if ok else 'FAIL'} {t.key}: {t.title} ({secs:.1f}s)")
        rows.append({"target": t.key, "title": t.title, "ok": ok, "detail": detail, "seconds": round(secs, 2)})
    with open(cfg.output, "w") as fh:
        json.dump({"config": asdict(cfg), "python": platform.python_version(), "results": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
