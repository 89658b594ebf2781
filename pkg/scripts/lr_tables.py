"""Print structure constants c^w_{u,v} for all pairs u, v in a small Weyl group.

Products that leave the rank-n span are expanded at the first rank where the
expansion closes, so the target elements may live in a larger group.

    python3 scripts/lr_tables.py --type D --rank 2
"""

from __future__ import annotations

import argparse
import json
import sys

from kgroth.localization import lr_expand
from kgroth.weyl import group, word_text


def tables(letter: str, n: int, max_len: int | None = None):
    els = [w for w in group(letter, n).elements() if max_len is None or w.length() <= max_len]
    for i, u in enumerate(els):
        for v in els[i:]:
            yield u, v, lr_expand(u, v)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", default="D", choices=list("ABCD"))
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-len", type=int, help="only factors of at most this length")
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)
    out = []
    for u, v, table in tables(args.type, args.rank, args.max_len):
        rows = sorted(table.items(), key=lambda kv: (kv[0].length(), kv[0].window))
        if args.json:
            out.append({"u": list(u.window), "v": list(v.window),
                        "terms": [{"w": list(w.window), "coef": c.to_json()} for w, c in rows]})
            continue
        print(f"G[{word_text(u.reduced_word())}] * G[{word_text(v.reduced_word())}]")
        for w, c in rows:
            print(f"    {w}  [{word_text(w.reduced_word())}]  {c}")
    if args.json:
        print(json.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
