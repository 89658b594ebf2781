"""Expand every K-theoretic Stanley function F^X_w in the GP basis and report signs.

Positivity of these expansions is conjectural, so the script only reports.

    python3 scripts/gp_positivity.py --types C --ranks 2 3
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from kgroth.config import PositivityConfig
from kgroth.genfun import stanley
from kgroth.polyring import to_text
from kgroth.symfun import NotInSpan, expand_in_gp
from kgroth.weyl import group

log = logging.getLogger("gp_positivity")


def report(cfg: PositivityConfig) -> list[dict]:
    rows = []
    for letter in cfg.types:
        for n in cfg.ranks:
            nv = cfg.nvars.get(n, n)
            bad = 0
            for w in group(letter, n).elements():
                row = {"type": letter, "rank": n, "w": list(w.window), "nvars": nv}
                try:
                    exp = expand_in_gp(stanley(letter, n, w, nv), nv)
                    row["positive"] = exp.is_positive()
                    row["expansion"] = {"".join(map(str, lam)) or "0": to_text(c)
                                        for lam, c in sorted(exp.coeffs.items())}
                except NotInSpan as exc:
                    row["positive"] = False
                    row["error"] = str(exc)
                if not row["positive"]:
                    bad += 1
                    log.info("%s%d %s: %s", letter, n, w, row.get("expansion", row.get("error")))
                rows.append(row)
            log.info("%s%d: %d of %d expansions have a negative coefficient", letter, n, bad,
                     len(group(letter, n)))
    return rows


def main(argv=None) -> int:
    d = PositivityConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--types", nargs="+", default=list(d.types))
    p.add_argument("--ranks", nargs="+", type=int, default=list(d.ranks))
    p.add_argument("--out")
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    rows = report(PositivityConfig(tuple(args.types), tuple(args.ranks)))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=1, ensure_ascii=False)
    return 0


if __name__ == "__main__":
    sys.exit(main())
