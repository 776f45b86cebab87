"""Run every verification suite over a range of strand counts and summarise.

    python3 scripts/run_suites.py --n-min 2 --n-max 6 --out results/suites.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from vtwin.config import DEFAULT
from vtwin.errors import NotApplicable
from vtwin.theorems import SUITES, run_suite


@dataclass(frozen=True)
class SuiteRunConfig:
    n_min: int = 2
    n_max: int = 6
    seed: int = DEFAULT.seed
    out: str | None = None


def run(cfg: SuiteRunConfig) -> dict:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for name in SUITES:
            t = time.perf_counter()
            try:
                rep = run_suite(name, n, cfg.seed)
            except NotApplicable:
                continue
            rows.append({
                "suite": name, "n": n, "claims": len(rep.claims),
                "failed": [c.id for c in rep.failures], "seconds": round(time.perf_counter() - t, 4),
            })
    return {"config": asdict(cfg), "runs": rows, "ok": all(not r["failed"] for r in rows)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=SuiteRunConfig.n_min)
    ap.add_argument("--n-max", type=int, default=SuiteRunConfig.n_max)
    ap.add_argument("--seed", type=int, default=SuiteRunConfig.seed)
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = SuiteRunConfig(a.n_min, a.n_max, a.seed, a.out)
    res = run(cfg)
    for r in res["runs"]:
        status = "ok" if not r["failed"] else f"FAILED {r['failed']}"
        print(f"n={r['n']:<2} {r['suite']:<15} {r['claims']:>4} claims  {r['seconds']:.3f}s  {status}")
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps(res, indent=2))
    return 0 if res["ok"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
