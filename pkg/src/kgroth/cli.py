"""Command-line front end.

    kgroth compute  --type C --rank 2 --word 0 [--method genfun|eyd|compat|second]
    kgroth lr       --type C --rank 2 --u 0 --v 0
    kgroth eyd      --type A --rank 4 --window 1,4,3,2
    kgroth words    --type D --rank 2 --word 1,1h
    kgroth adjoint  --type C --rank 2 --window 1,2
    kgroth localize --type C --rank 2 --word 0 --at 0
    kgroth verify   yang-baxter | recurrence | ... [--type C --rank 2]

Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 guard exceeded,
4 cross-check mismatch under --verify.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from .config import GuardExceeded
from .polyring import LocPoly, Poly, TruncSeries, VarId, to_text
from .weyl import GroupElt, WeylError, group, parse_word, word_text

EXIT_FAIL, EXIT_INPUT, EXIT_GUARD, EXIT_MISMATCH = 1, 2, 3, 4


class InputError(ValueError):
    pass


class Mismatch(RuntimeError):
    pass


# -- argument helpers

def _element(args, word_attr="word", window_attr="window") -> GroupElt:
    word, window = getattr(args, word_attr, None), getattr(args, window_attr, None)
    try:
        if word is not None and window is not None:
            raise InputError("give either a word or a window, not both")
        if window is not None:
            win = tuple(int(t) for t in window.split(",") if t.strip())
            if len(win) != args.rank:
                raise InputError(f"window {win} does not have length {args.rank}")
            return GroupElt(args.type, args.rank, win)
        return GroupElt.from_word(args.type, args.rank, parse_word(word or ""))
    except (WeylError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _number(text: str):
    try:
        return Fraction(text)
    except ValueError as exc:
        raise InputError(f"bad value {text!r}") from exc


def parse_sets(items: list[str]) -> dict:
    """name=value pairs; a bare family letter (a, b, x, c, t) sets every index."""
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"--set expects name=value, got {item!r}")
        name, val = item.split("=", 1)
        name = name.strip()
        if name not in ("beta", "β") and name[0] not in "abxct":
            raise InputError(f"unknown variable {name!r}")
        out[name] = _number(val.strip())
    return out


def specialize(p: Poly, sets: dict) -> Poly:
    if not sets:
        return p
    sigma = {}
    for s in p.variables():
        if s == 0:
            for key in ("beta", "β"):
                if key in sets:
                    sigma[0] = sets[key]
            continue
        v = VarId.from_slot(s)
        if v.name in sets:
            sigma[s] = sets[v.name]
        elif v.family.value in sets:
            sigma[s] = sets[v.family.value]
    return p.subs({k: Poly.const(int(c) if c.denominator == 1 else c) for k, c in sigma.items()})


def _render(value, fmt: str) -> str:
    if isinstance(value, TruncSeries):
        value = value.poly
    if fmt == "json":
        data = value.to_json() if hasattr(value, "to_json") else value
        return json.dumps(data, sort_keys=True, ensure_ascii=False)
    if isinstance(value, Poly):
        return to_text(value)
    return str(value)


# -- computations

def compute_value(letter: str, n: int, w: GroupElt, method: str, kind: str = "first",
                  nx: int | None = None, trunc: int = 4):
    from . import combinat, genfun
    if method == "genfun":
        if kind == "stanley":
            return genfun.stanley(letter, n, w, nx)
        return genfun.groth(letter, n, w, nx)
    if method == "eyd":
        if kind == "stanley":
            raise InputError("the EYD sum computes G, not F; use --method compat")
        if nx is not None and nx != n:
            raise InputError("the EYD sum uses n x-variables")
        return combinat.groth_via_eyd(letter, n, w)
    if method == "compat":
        if letter == "A":
            return combinat.grothA_via_compat(w)
        return combinat.stanley_via_compat(w, n if nx is None else nx)
    if method == "second":
        if letter == "A":
            raise InputError("the second kind exists for types B, C, D")
        return genfun.build_G_second(letter, n, trunc).coefficient(w.window)
    raise InputError(f"unknown method {method!r}")


def _cross_method(letter: str, method: str, kind: str) -> tuple[str, str]:
    if method == "compat":
        return "genfun", ("first" if letter == "A" else "stanley")
    if method == "eyd":
        return "genfun", "first"
    if method == "genfun":
        if kind == "stanley":
            return "compat", kind
        return "eyd", "first"
    raise InputError(f"no cross-check available for method {method!r}")


def cmd_compute(args) -> int:
    w = _element(args)
    kind = args.kind
    if args.method == "compat" and args.type != "A":
        kind = "stanley"
    value = compute_value(args.type, args.rank, w, args.method, kind, args.nx, args.trunc)
    if args.verify:
        m2, k2 = _cross_method(args.type, args.method, kind)
        other = compute_value(args.type, args.rank, w, m2, k2, args.nx, args.trunc)
        if other != value:
            raise Mismatch(f"{args.method} and {m2} disagree for {w}")
    if isinstance(value, Poly):
        value = specialize(value, parse_sets(args.set))
    print(_render(value, args.format))
    return 0


def cmd_lr(args) -> int:
    from .localization import lr_expand
    u = _element(args, "u", "u_window")
    v = _element(args, "v", "v_window")
    table = lr_expand(u, v)
    rows = sorted(table.items(), key=lambda kv: (kv[0].length(), kv[0].window))
    if args.format == "json":
        print(json.dumps([{"w": list(w.window), "word": word_text(w.reduced_word()),
                           "coef": c.to_json()} for w, c in rows], sort_keys=True))
    else:
        for w, c in rows:
            print(f"{w}  [{word_text(w.reduced_word())}]  {c}")
    return 0


def cmd_eyd(args) -> int:
    from .combinat import delta, rsub
    w = _element(args)
    n = args.rank
    if args.type == "D" and n % 2:
        n += 1
        w = w.embed(n)
    dw = delta(args.type, n)
    pats = rsub(dw, w)
    if args.format == "json":
        print(json.dumps([p.to_json(dw) for p in pats], sort_keys=True))
    else:
        for p in pats:
            print(f"boxes={list(p.boxes)} circles={list(p.circles)}  {to_text(p.weight(dw))}")
    return 0


def cmd_words(args) -> int:
    from .combinat import compatible_seqs, hecke_words
    from .genfun import count_h_factors
    w = _element(args)
    cap = args.cap if args.cap is not None else count_h_factors(args.type, args.rank, args.nx)
    nx = args.nx or args.rank
    rows = []
    for hw in hecke_words(w, cap):
        seqs = compatible_seqs(hw.word, args.type, nx if args.type != "A" else args.rank - 1)
        if seqs or args.all:
            rows.append((hw, seqs))
    if args.format == "json":
        print(json.dumps([{"word": hw.text(), "excess": hw.excess,
                           "sequences": [list(s) for s in seqs]} for hw, seqs in rows]))
    else:
        for hw, seqs in rows:
            print(f"({hw.text()})  beta^{hw.excess}  " + " ".join(str(list(s)) for s in seqs))
    return 0


def cmd_adjoint(args) -> int:
    from .adjoint import adjoint, adjoint_relative
    w = _element(args)
    if args.relative_to is not None:
        v = GroupElt.from_word(args.type, args.rank, parse_word(args.relative_to))
        value = adjoint_relative(w, v)
    else:
        value = adjoint(w, args.rank).value.to_poly()
    print(_render(specialize(value, parse_sets(args.set)), args.format))
    return 0


def cmd_localize(args) -> int:
    from .localization import phi_table
    w = _element(args)
    v = GroupElt.from_word(args.type, args.rank, parse_word(args.at))
    print(_render(phi_table(w)(v), args.format))
    return 0


# -- verification suites

def _suite_yang_baxter(letter, n):
    from .hecke import braid_relation_holds
    grp = group(letter, n)
    return [(f"{letter}{n} braid {i},{j}", braid_relation_holds(grp, i, j))
            for i in grp.gens for j in grp.gens if i != j]


def _suite_recurrence(letter, n):
    from .localization import recurrence_check
    return [(f"{letter}{n} recurrence", recurrence_check(letter, n))]


def _suite_gkm(letter, n):
    from .localization import gkm_check, schubert_tables
    return [(f"{letter}{n} GKM {t.group.windows[i]}", gkm_check(t, letter))
            for i, t in enumerate(schubert_tables(letter, n))]


def _suite_vanishing(letter, n):
    from .localization import vanishing_holds
    return [(f"{letter}{n} vanishing", vanishing_holds(letter, n))]


def _suite_pi_recurrence(letter, n):
    from .divdiff import pi_recurrences_hold
    from .localization import generating_function
    return [(f"{letter}{n} pi recurrences", not pi_recurrences_hold(generating_function(letter, n), letter))]


def _suite_special(letter, n):
    from .divdiff import special_node_identity
    return [(f"{letter}{n} special node", special_node_identity(letter, n))]


def _suite_eyd(letter, n):
    from .combinat import groth_via_eyd
    from .genfun import groth
    return [(f"{letter}{n} EYD {w}", groth_via_eyd(letter, n, w) == groth(letter, n, w))
            for w in group(letter, n).elements()]


def _suite_compat(letter, n):
    from .combinat import grothA_via_compat, stanley_via_compat
    from .genfun import groth, stanley
    out = []
    for w in group(letter, n).elements():
        if letter == "A":
            out.append((f"A{n} compat {w}", grothA_via_compat(w) == groth("A", n, w)))
        else:
            out.append((f"{letter}{n} compat {w}", stanley_via_compat(w, n) == stanley(letter, n, w)))
    return out


def _suite_adjoint(letter, n):
    from .adjoint import adjoint, adjoint_genfun_check, adjoint_identity_closed, interval_sum
    grp = group(letter, n)
    out = [(f"{letter}{n} closed H_e",
            adjoint(grp.elt(0), n).value == LocPoly.coerce(adjoint_identity_closed(letter, n)))]
    out += [(f"{letter}{n} interval {w}", adjoint(w, n).value == LocPoly.coerce(interval_sum(w, n)))
            for w in grp.elements()]
    out.append((f"{letter}{n} factorization", adjoint_genfun_check(letter, n)))
    return out


def _suite_grading(letter, n):
    from .genfun import grading_ok, groth
    out = []
    for w in group(letter, n).elements():
        p = groth(letter, n, w)
        out.append((f"{letter}{n} grading {w}", grading_ok(p, w.length()) and p.coefficients_nonnegative()))
    return out


def _suite_supersymmetry(letter, n):
    from .symfun import gp, gq, is_beta_supersymmetric, strict_partitions
    out = []
    for lam in strict_partitions(4, n):
        if not lam:
            continue
        for name, f in (("GP", gp), ("GQ", gq)):
            out.append((f"{name}{list(lam)} n={n}", is_beta_supersymmetric(f(lam, n, True), n)))
    return out


def _suite_gp_positivity(letter, n):
    from .genfun import stanley
    from .symfun import NotInSpan, expand_in_gp
    out = []
    for w in group(letter, n).elements():
        try:
            ok = expand_in_gp(stanley(letter, n, w), n).is_positive()
        except NotInSpan:
            ok = False
        out.append((f"{letter}{n} GP-positive F_{w}", ok))
    return out


SUITES: dict[str, tuple[Callable, str, int, bool]] = {
    # name: (runner, default type, default rank, report only)
    "yang-baxter": (_suite_yang_baxter, "C", 3, False),
    "recurrence": (_suite_recurrence, "C", 2, False),
    "gkm": (_suite_gkm, "C", 2, False),
    "vanishing": (_suite_vanishing, "C", 2, False),
    "pi-recurrence": (_suite_pi_recurrence, "C", 2, False),
    "special-node": (_suite_special, "C", 2, False),
    "eyd": (_suite_eyd, "C", 2, False),
    "compat": (_suite_compat, "C", 2, False),
    "adjoint": (_suite_adjoint, "C", 2, False),
    "grading": (_suite_grading, "C", 2, False),
    "supersymmetry": (_suite_supersymmetry, "C", 3, False),
    "gp-positivity": (_suite_gp_positivity, "C", 2, True),
}


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    runner, letter, n, report_only = SUITES[args.suite]
    letter = args.type or letter
    n = args.rank or n
    results = runner(letter, n)
    passed = sum(1 for _, ok in results if ok)
    for name, ok in results:
        print(f"{'pass' if ok else 'FAIL'}  {name}")
    tag = " (report only)" if report_only else ""
    print(f"{args.suite}: {passed}/{len(results)} passed{tag}")
    if report_only:
        return 0
    return 0 if passed == len(results) else EXIT_FAIL


# -- parser

def _add_common(p: argparse.ArgumentParser, element: bool = True):
    p.add_argument("--type", required=True, choices=list("ABCD"))
    p.add_argument("--rank", type=int, required=True)
    if element:
        p.add_argument("--word", help="comma separated generators, 0 and 1h allowed")
        p.add_argument("--window", help="signed permutation window, e.g. --window=-2,1")
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgroth", description="Double Grothendieck polynomials of classical type")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one polynomial")
    _add_common(p)
    p.add_argument("--method", choices=["genfun", "eyd", "compat", "second"], default="genfun")
    p.add_argument("--kind", choices=["first", "stanley"], default="first")
    p.add_argument("--nx", type=int)
    p.add_argument("--trunc", type=int, default=4)
    p.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    p.add_argument("--verify", action="store_true", help="recompute by a second method")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("lr", help="structure constants of a product")
    _add_common(p, element=False)
    p.add_argument("--u")
    p.add_argument("--u-window", dest="u_window")
    p.add_argument("--v")
    p.add_argument("--v-window", dest="v_window")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("eyd", help="list extended EYD patterns")
    _add_common(p)
    p.set_defaults(func=cmd_eyd)

    p = sub.add_parser("words", help="list Hecke words and compatible sequences")
    _add_common(p)
    p.add_argument("--cap", type=int)
    p.add_argument("--nx", type=int)
    p.add_argument("--all", action="store_true", help="include words without compatible sequences")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("adjoint", help="adjoint polynomial H_{n,w} or H_{w,v}")
    _add_common(p)
    p.add_argument("--relative-to", dest="relative_to", help="word of v for H_{w,v}")
    p.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("localize", help="localization of G_w at v")
    _add_common(p)
    p.add_argument("--at", required=True, help="word of v")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--type", choices=list("ABCD"))
    p.add_argument("--rank", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (WeylError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
