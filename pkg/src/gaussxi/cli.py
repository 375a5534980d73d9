"""Command-line front end.

Exit codes: 0 affirmative or success, 1 negative, 2 error (message on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import GaussCodeError, GaussDiagram, canonical_key, parse_gauss_code, serialize
from .invariants import EVEN, InvariantError, invariant_profile
from .macros import expand_macro, parse_macro
from .moves import (DEFAULT_SEARCH_KINDS, PRIMITIVE_KINDS, MoveError, MoveKind,
                    apply_move, enumerate_moves, format_move, parse_move)
from .normal_forms import (NormalFormError, build_even_normal, build_knot_normal,
                           build_odd_normal, even_parameters, forbidden_equivalent,
                           normalize, parse_word, word_normalize, xi_equivalent)
from .oracle import CensusError, bfs_connect, census, random_scramble

_KIND_NAMES = {
    "xi": MoveKind.XI, "r1-": MoveKind.R1_REMOVE, "r1+": MoveKind.R1_ADD,
    "r2-": MoveKind.R2_REMOVE, "r2+": MoveKind.R2_ADD, "r3": MoveKind.R3,
}

LIBRARY_ERRORS = (GaussCodeError, InvariantError, MoveError, NormalFormError, CensusError)


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _read(path: str) -> GaussDiagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    return parse_gauss_code(text)


def _kinds(text: str | None, default):
    if not text:
        return set(default)
    if text == "all":
        return set(PRIMITIVE_KINDS)
    try:
        return {_KIND_NAMES[t.strip()] for t in text.split(",")}
    except KeyError as exc:
        raise CliError(f"unknown move kind {exc.args[0]!r}") from None


def _profile_json(d: GaussDiagram) -> dict:
    data = invariant_profile(d).as_dict()
    if data["mu"] == 2:
        data.pop("mu")
    return data


def _profile_text(d: GaussDiagram) -> str:
    pr = invariant_profile(d)
    if pr.mu == 1:
        return f"j: {pr.j_knot}"
    lines = [f"parity: {pr.parity}", f"lk: {pr.lk[0]} {pr.lk[1]}"]
    if pr.parity == EVEN:
        lines.append(f"j: {pr.j1} {pr.j2}")
        lines.append("fbar: " + " ".join(map(str, pr.fbar.canonical)))
    return "\n".join(lines)


def _moves_of(d: GaussDiagram, spec: str):
    if spec.startswith("macro:"):
        kind, window, forward = parse_macro(spec)
        return expand_macro(d, kind, window, forward)
    return [parse_move(spec)]


# -- subcommands: each returns (exit code, text, json payload) ----------------

def cmd_validate(a):
    try:
        d = _read(a.file)
    except GaussCodeError as exc:
        return 1, f"invalid: {exc}", {"valid": False, "error": str(exc)}
    return 0, f"valid: mu={d.mu} chords={d.chord_count}", {
        "valid": True, "mu": d.mu, "chords": d.chord_count}


def cmd_invariants(a):
    d = _read(a.file)
    return 0, _profile_text(d), _profile_json(d)


def cmd_equivalent(a):
    ok, reason = xi_equivalent(_read(a.first), _read(a.second))
    return (0 if ok else 1), ("equivalent" if ok else f"not equivalent: {reason}"), {
        "equivalent": ok, "reason": reason}


def cmd_forbidden(a):
    ok = forbidden_equivalent(_read(a.first), _read(a.second))
    return (0 if ok else 1), ("equivalent" if ok else "not equivalent"), {"equivalent": ok}


def _normal_payload(d: GaussDiagram) -> dict:
    pr = invariant_profile(d)
    out = {"gauss": serialize(d), "key": canonical_key(d)}
    if pr.mu == 1:
        out["params"] = {"j": pr.j_knot}
    elif pr.parity == EVEN:
        out["params"] = dict(zip("mlpqrs", even_parameters(pr)))
    else:
        out["params"] = {"a": pr.lk[0], "b": pr.lk[1]}
    return out


def cmd_normal_form(a):
    nf = normalize(_read(a.file))
    return 0, serialize(nf), _normal_payload(nf)


def cmd_apply(a):
    d = _read(a.file)
    trace = []
    for spec in a.moves:
        for m in _moves_of(d, spec):
            d = apply_move(d, m)
            trace.append(format_move(m))
    text = serialize(d)
    if a.trace:
        text = "\n".join(trace) + "\n---\n" + text
    return 0, text, {"gauss": serialize(d), "trace": trace}


def cmd_moves(a):
    d = _read(a.file)
    ms = [format_move(m) for m in enumerate_moves(d, _kinds(a.kinds, DEFAULT_SEARCH_KINDS), a.max_chords)]
    return 0, "\n".join(ms), {"moves": ms}


def cmd_scramble(a):
    d = _read(a.file)
    out, trace = random_scramble(d, a.steps, a.seed, a.max_chords, _kinds(a.kinds, PRIMITIVE_KINDS))
    tr = [format_move(m) for m in trace]
    return 0, serialize(out), {"gauss": serialize(out), "trace": tr}


def cmd_bfs(a):
    d1, d2 = _read(a.first), _read(a.second)
    res = bfs_connect(d1, d2, a.max_chords, a.max_states, _kinds(a.kinds, DEFAULT_SEARCH_KINDS))
    data = res.as_dict()
    if res.found:
        text = f"found in {len(res.path)} moves (visited {res.visited})"
        if res.path:
            text += "\n" + "\n".join(format_move(m) for m in res.path)
    else:
        state = "exhausted" if res.frontier_exhausted else "budget reached"
        text = f"not found, {state} (visited {res.visited})"
    return (0 if res.found else 1), text, data


def cmd_census(a):
    rep = census(a.max_chords, max_states=a.max_states)
    if a.plot:
        from .plotting import plot_census
        plot_census(rep, a.plot)
        rep = {**rep, "plot": str(a.plot)}
    lines = [f"diagrams: {rep['diagram_count']}", f"groups: {rep['group_count']}"]
    for g in rep["groups"]:
        lines.append(f"{json.dumps(g['profile'], sort_keys=True)}\t{g['member_count']}\t"
                     f"{g['connected_pairs_found']}/{g['connected_pairs_checked']}")
    lines.append(f"sound: {rep['sound']}")
    if a.plot:
        lines.append(f"plot: {a.plot}")
    return (0 if rep["sound"] else 1), "\n".join(lines), rep


def cmd_word_normalize(a):
    nf = word_normalize(parse_word(a.word))
    return 0, str(nf), dict(zip("pqrsv", nf.as_tuple()))


def cmd_make_normal(a):
    odd = a.a is not None or a.b is not None
    even = [a.m, a.l, a.p, a.q, a.r, a.s]
    if a.j is not None:
        if odd or any(v is not None for v in even):
            raise CliError("--j cannot be combined with link parameters")
        d = build_knot_normal(a.j)
    elif odd:
        if a.a is None or a.b is None or any(v is not None for v in even):
            raise CliError("odd form needs exactly --a and --b")
        d = build_odd_normal(a.a, a.b)
    else:
        if any(v is None for v in even):
            raise CliError("need --a --b, or all of --m --l --p --q --r --s, or --j")
        d = build_even_normal(*even)
    return 0, serialize(d), {"gauss": serialize(d), "key": canonical_key(d)}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gaussxi", description="Gauss diagrams of virtual links up to Xi-moves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, files=()):
        sp = sub.add_parser(name, help=help_text)
        for f in files:
            sp.add_argument(f, help="Gauss code file, '-' for stdin")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check a Gauss code file", ["file"])
    add("invariants", cmd_invariants, "print the invariant profile", ["file"])
    add("equivalent", cmd_equivalent, "decide Xi-equivalence", ["first", "second"])
    add("forbidden-equivalent", cmd_forbidden, "decide equivalence under forbidden moves",
        ["first", "second"])
    add("normal-form", cmd_normal_form, "print the canonical normal form", ["file"])
    sp = add("apply", cmd_apply, "apply move specs in order", ["file"])
    sp.add_argument("moves", nargs="+", help="move specs, e.g. xi:c=1,i=0")
    sp.add_argument("--trace", action="store_true", help="print the primitive moves applied")
    sp = add("moves", cmd_moves, "list legal moves", ["file"])
    sp.add_argument("--kinds", help="comma list of xi,r1-,r1+,r2-,r2+,r3 or 'all'")
    sp.add_argument("--max-chords", type=int)
    sp = add("scramble", cmd_scramble, "apply seeded random legal moves", ["file"])
    sp.add_argument("--steps", type=int, default=30)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-chords", type=int)
    sp.add_argument("--kinds")
    sp = add("bfs", cmd_bfs, "search the move graph for a connecting path", ["first", "second"])
    sp.add_argument("--max-chords", type=int)
    sp.add_argument("--max-states", type=int, default=100_000)
    sp.add_argument("--kinds")
    sp = add("census", cmd_census, "classify all small 2-component diagrams")
    sp.add_argument("--max-chords", type=int, default=2)
    sp.add_argument("--max-states", type=int, default=20_000)
    sp.add_argument("--plot", type=Path, help="write a PNG summary figure here")
    sp = add("word-normalize", cmd_word_normalize, "normalize a portion word")
    sp.add_argument("word", help='e.g. "A B^-1 C A^-1 D"')
    sp = add("make-normal", cmd_make_normal, "build a normal-form diagram")
    for name in ("a", "b", "m", "l", "p", "q", "r", "s", "j"):
        sp.add_argument(f"--{name}", type=int)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code, text, data = args.fn(args)
    except CliError as exc:
        print(f"gaussxi: error: {exc}", file=err)
        return 2
    except LIBRARY_ERRORS as exc:
        print(f"gaussxi: error: {exc}", file=err)
        return 2
    if args.json:
        print(json.dumps(data, sort_keys=False), file=out)
    elif text:
        print(text, file=out)
    return code


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
