"""Write tests/golden/*.json from hand transcriptions of the worked examples.

Each single-pattern record keeps the printed factors; the canonical text is
the expansion of their product (no EYD code is involved), so tests can compare
byte for byte against the computed pattern weight.
"""

from __future__ import annotations

import json
from pathlib import Path

from kgroth.polyring import Poly, VarId, oplus, to_text

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def _factor(pair) -> Poly:
    return oplus(Poly.var(VarId.parse(pair[0])), Poly.var(VarId.parse(pair[1])))


def weight(boxes, circles) -> Poly:
    out = Poly.const(1)
    for f in boxes:
        out = out * _factor(f)
    for f in circles:
        out = out * (_factor(f).mul_beta() + 1)
    return out


PATTERNS = {
    "eyd_A4_3142": {
        "type": "A", "n": 4, "window": [3, 1, 4, 2], "word": "2,3,1",
        "boxes": [2, 3, 4], "circles": [6],
        "box_factors": [["a1", "b2"], ["a2", "b2"], ["a1", "b1"]],
        "circle_factors": [["a3", "b1"]],
    },
    "eyd_C3_2m31": {
        "type": "C", "n": 3, "window": [2, -3, 1], "word": "2,1,2,0,1",
        "boxes": [1, 2, 3, 7, 11], "circles": [6, 9, 10],
        "box_factors": [["x3", "b2"], ["x3", "b1"], ["x2", "b1"], ["x2", "x2"], ["x1", "a1"]],
        "circle_factors": [["x1", "x3"], ["a1", "x2"], ["x1", "x1"]],
    },
    "eyd_D4_m24m13": {
        "type": "D", "n": 4, "window": [-2, 4, -1, 3], "word": "3,1h,2",
        "boxes": [3, 7, 14], "circles": [6, 9, 12, 13, 17],
        "box_factors": [["x3", "b2"], ["x3", "x4"], ["a1", "x2"]],
        "circle_factors": [["x2", "b1"], ["x1", "x4"], ["a1", "x3"], ["x1", "x2"], ["a2", "x1"]],
    },
}

LR_C2 = {
    "type": "C", "n": 2, "u": "0", "v": "0",
    "terms": [
        {"word": "0", "coef": "b1 (+) b1"},
        {"word": "1,0", "coef": "1"},
        {"word": "0,1,0", "coef": "beta"},
    ],
}

SPEC_A4 = {
    "type": "A", "n": 4, "window": [1, 4, 3, 2], "patterns": 5,
    "specialization": {"a": 1, "b": 0}, "value": "5 + 5β + β^2",
}


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, rec in PATTERNS.items():
        rec = dict(rec)
        rec["canonical"] = to_text(weight(rec["box_factors"], rec["circle_factors"]))
        (GOLDEN / f"{name}.json").write_text(json.dumps(rec, indent=1, ensure_ascii=False) + "\n")
    (GOLDEN / "lr_C2_s0_s0.json").write_text(json.dumps(LR_C2, indent=1) + "\n")
    (GOLDEN / "eyd_A4_1432.json").write_text(json.dumps(SPEC_A4, indent=1, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
