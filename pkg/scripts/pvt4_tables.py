"""Print the PVT_4 automorphism identities and which generator namings satisfy them.

    python3 scripts/pvt4_tables.py [--all-dictionaries]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from vtwin.morphisms import pvt4_dictionaries
from vtwin.theorems import verify_pvt4_tables


@dataclass(frozen=True)
class TablesConfig:
    all_dictionaries: bool = False


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--all-dictionaries", action="store_true")
    cfg = TablesConfig(**vars(ap.parse_args()))
    rep = verify_pvt4_tables()
    print(rep.to_text())
    if cfg.all_dictionaries:
        ds = pvt4_dictionaries()
        good = sum(verify_pvt4_tables(d).ok for d in ds)
        print(f"\n{good}/{len(ds)} transported namings satisfy every identity")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
