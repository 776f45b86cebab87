"""Time the VT_n word problem against word length.

    python3 scripts/scaling.py --n 6 --lengths 50 100 200 400 800
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from vtwin.config import DEFAULT
from vtwin.rewriting import vt_is_identity
from vtwin.sampling import random_vword


@dataclass(frozen=True)
class ScalingConfig:
    n: int = 6
    lengths: tuple[int, ...] = (50, 100, 200, 400, 800)
    reps: int = 20
    seed: int = DEFAULT.seed


def main() -> int:
    d = ScalingConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=d.n)
    ap.add_argument("--lengths", type=int, nargs="+", default=list(d.lengths))
    ap.add_argument("--reps", type=int, default=d.reps)
    ap.add_argument("--seed", type=int, default=d.seed)
    a = ap.parse_args()
    cfg = ScalingConfig(a.n, tuple(a.lengths), a.reps, a.seed)
    rng = random.Random(cfg.seed)
    print(f"n={cfg.n}  reps={cfg.reps}")
    for length in cfg.lengths:
        words = [random_vword(cfg.n, rng, max_len=length) for _ in range(cfg.reps)]
        t = time.perf_counter()
        trivial = sum(vt_is_identity(w) for w in words)
        dt = (time.perf_counter() - t) / len(words)
        print(f"length<={length:>5}  {dt * 1e3:8.3f} ms per word  ({trivial} trivial)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
