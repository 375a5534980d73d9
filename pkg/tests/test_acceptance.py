"""Acceptance criteria 1-9, each timed and reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import functools
import itertools
import random
import time

from gaussxi.diagram import canonical_key, parse_gauss_code
from gaussxi.invariants import (EVEN, ReducedLinkingClass, invariant_profile, linking_numbers,
                                nonself_chords, odd_writhe, parity, reduced_linking_class,
                                sigma_tau)
from gaussxi.macros import MacroKind, MacroWindow, apply_macro, check_macro, expand_macro
from gaussxi.moves import PRIMITIVE_KINDS, MoveKind, apply_move, enumerate_moves
from gaussxi.normal_forms import (BASES, Letter, build_even_normal, build_odd_normal,
                                  forbidden_equivalent, predicted_profile, normalize,
                                  realize_word, word_normalize, xi_equivalent)
from gaussxi.oracle import bfs_connect, census, random_diagram, random_scramble, replay

RESULTS: dict = {}


def criterion(number, title, limit=None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **k):
            t0 = time.perf_counter()
            ok = False
            try:
                fn(*a, **k)
                elapsed = time.perf_counter() - t0
                assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
                ok = True
            finally:
                elapsed = time.perf_counter() - t0
                RESULTS[number] = (ok, title, elapsed, limit)
        return run
    return wrap


def report_lines():
    out = []
    for n in sorted(RESULTS):
        ok, title, elapsed, limit = RESULTS[n]
        bound = f" < {limit:g}s" if limit else ""
        out.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f}s{bound}]")
    return out


@criterion(1, "worked example: J = (-5, 3), sigma/tau = (3,-2,1,2)", limit=1.0)
def test_criterion_1_worked_example():
    d = build_even_normal(-5, 2, 3, -2, 1, 1)
    assert (odd_writhe(d, 1), odd_writhe(d, 2)) == (-5, 3)
    assert sigma_tau(d, nonself_chords(d)[0]) == (3, -2, 1, 2)
    assert reduced_linking_class(d) == ReducedLinkingClass.of(3, -2, 1, 2)
    assert reduced_linking_class(d) == ReducedLinkingClass.of(-2, 3, 2, 1)


@criterion(2, "constructors agree with the closed-form invariants", limit=60.0)
def test_criterion_2_constructor_formula_agreement():
    rng = range(-3, 4)
    for m, l, p, q, r, s in itertools.product(rng, repeat=6):
        if (p + q + r + s - m) % 2:
            continue
        assert invariant_profile(build_even_normal(m, l, p, q, r, s)) == predicted_profile(m, l, p, q, r, s), \
            (m, l, p, q, r, s)
    for a, b in itertools.product(range(-4, 5), repeat=2):
        if (a + b) % 2:
            d = build_odd_normal(a, b)
            assert (linking_numbers(d, 1, 2), linking_numbers(d, 2, 1)) == (a, b)


@criterion(3, "moves preserve the profile; scrambles decided equivalent", limit=60.0)
def test_criterion_3_move_invariance():
    rng = random.Random(2024)
    pairs = 0
    while pairs < 1000:
        d = random_diagram(rng, rng.choice([1, 2]), rng.randint(0, 8))
        moves = enumerate_moves(d, PRIMITIVE_KINDS, max(d.chord_count, 8))
        if not moves:
            continue
        m = rng.choice(moves)
        assert invariant_profile(apply_move(d, m)) == invariant_profile(d)
        pairs += 1
    for seed in range(200):
        g = random.Random(seed)
        d = random_diagram(g, g.choice([1, 2]), g.randint(0, 6))
        out, trace = random_scramble(d, 30, seed=seed)
        assert canonical_key(replay(d, trace)) == canonical_key(out)
        assert xi_equivalent(d, out)[0]
        assert canonical_key(normalize(d)) == canonical_key(normalize(out))


@criterion(4, "j1 + j2 = p + r = q + s (mod 2), realization of every class")
def test_criterion_4_parity_relation():
    rng = random.Random(7)
    seen = 0
    while seen < 1000:
        d = random_diagram(rng, 2, rng.randint(0, 8))
        if parity(d) != EVEN:
            continue
        pr = invariant_profile(d)
        p, q, r, s = pr.fbar.canonical
        assert (pr.j1 + pr.j2 - p - r) % 2 == 0 and (p + r - q - s) % 2 == 0
        seen += 1
    made = 0
    while made < 200:
        p, q, r, s = (rng.randint(-6, 6) for _ in range(4))
        if (p + r - q - s) % 2:
            continue
        pr = invariant_profile(build_even_normal(0, 0, p, q, r, s))
        assert pr.fbar == ReducedLinkingClass.of(p, q, r, s)
        assert (pr.j1 + pr.j2 - p - r) % 2 == 0
        made += 1


@criterion(5, "parameter identities between even normal forms")
def test_criterion_5_parameter_identities():
    span = range(-2, 3)
    for k, l, p, q, r, s in itertools.product(span, repeat=6):
        if (p + q + r + s) % 2 == 0:
            two_l = 2 * l - p + q - r + s
            a = build_even_normal(2 * k, l, p, q, r, s)
            b = build_even_normal(2 * k, two_l // 2, q, p, s, r)
        else:
            two_l = 2 * l - p + q - r + s + 1
            a = build_even_normal(2 * k + 1, l, p, q, r, s)
            b = build_even_normal(2 * k + 1, two_l // 2, q, p, s + 1, r - 1)
        assert two_l % 2 == 0
        assert invariant_profile(a) == invariant_profile(b), (k, l, p, q, r, s)
        assert xi_equivalent(a, b)[0]


def _relation_instances():
    L = Letter
    for sign in (1, -1):
        for x in BASES:
            yield [L(x, 1, sign), L(x, -1, sign)], []
            yield [L(x, -1, sign), L(x, 1, sign)], []
        for a, b, c, dd in (("A", "B", "C", "D"), ("Ah", "Bh", "Ch", "Dh")):
            ab = [L(a, 1, sign), L(b, 1, sign)]
            for rhs in ([L(b, 1, sign), L(a, 1, sign)], [L(c, 1, sign), L(dd, 1, sign)],
                        [L(dd, 1, sign), L(c, 1, sign)]):
                yield ab, rhs
            yield [L(b, 1, sign)] * 2, [L(c, 1, sign)] * 2
            yield [L(dd, 1, sign)], [L(a, 1, sign), L(b, 1, sign), L(c, -1, sign)]
            yield [L(c, -1, sign)], [L(b, -1, sign), L(b, -1, sign), L(c, 1, sign)]
        yield [L("B", 1, sign), L("Bh", 1, sign)], [L("C", 1, sign), L("Ch", 1, sign)]


@criterion(6, "word relations and realized normal forms")
def test_criterion_6_word_engine():
    for lhs, rhs in _relation_instances():
        assert word_normalize(lhs) == word_normalize(rhs), (lhs, rhs)
    rng = random.Random(11)
    for _ in range(500):
        w = [Letter(rng.choice(BASES), rng.choice((1, -1)), rng.choice((1, -1)))
             for _ in range(rng.randint(0, 10))]
        a = invariant_profile(realize_word(w))
        b = invariant_profile(realize_word(word_normalize(w).word()))
        assert (a.parity, a.lk) == (b.parity, b.lk)
        if a.parity == EVEN:
            assert a.fbar == b.fbar
            assert (a.j1 - b.j1) % 2 == 0 and (a.j2 - b.j2) % 2 == 0


@criterion(7, "macro expansions: lengths, legality, declared results")
def test_criterion_7_macro_contracts():
    K = MacroKind
    cases = [
        (K.CROSS, "O1+ O2+ U1+ O3+ U2+ U3+", MacroWindow(1, 4), True, 2),
        (K.CROSS, "O1+ O2- U2- U1+\nO3+ U3+", MacroWindow(1, 2), False, 2),
        (K.SHELL_SLIDE, "O1+ O2- U1+ U2- O3+\nU3+", MacroWindow(1, 0), True, 2),
        (K.SHELL_SLIDE, "O3+ O2- O1+ U2- U1+\nU3+", MacroWindow(1, 0), False, 2),
        (K.SHELL_PAIR_CANCEL, "O5+ O1+ O2+ U1+ U2+ O3- O4- U3- U4-\nU5+", MacroWindow(1, 1), True, 4),
        (K.SHELL_PAIR_CANCEL, "O1- O2- U1- U2- O3+ O4+ U3+ U4+", MacroWindow(1, 0), True, 4),
        (K.SHELL_PAIR_CANCEL, "O1+ U1+\n()", MacroWindow(2, 0, -1), False, 4),
        (K.SHELL_TRIPLE, "O1+ O2+ U1+ O3+ U2+ U3+\nO4+ U4+", MacroWindow(1, 0), True, 2),
        (K.SHELL_TRIPLE, "O1+ O3+ U1+ U3+\n()", MacroWindow(1, 1, -1, 1), False, 2),
    ]
    for kind, code, w, forward, length in cases:
        d = parse_gauss_code(code)
        assert len(expand_macro(d, kind, w, forward)) == length, kind
        assert check_macro(d, kind, w, forward), kind
    rng = random.Random(5)
    for n_chords in range(2, 7):
        for _ in range(10):
            d = random_diagram(rng, 2, n_chords)
            for c in (1, 2):
                n = d.circle_length(c)
                if n % 2 == 0 or n < 3:
                    continue
                for i in range(n):
                    w = MacroWindow(c, i)
                    moves = expand_macro(d, K.ODD_SWAP, w)
                    assert len(moves) <= 3 * n and all(m.kind == MoveKind.XI for m in moves)
                    seq = list(d.circles[c - 1])
                    j = (i + 1) % n
                    seq[i], seq[j] = seq[j], seq[i]
                    out = apply_macro(d, K.ODD_SWAP, w)
                    assert out.circles[c - 1] == tuple(seq)


@criterion(8, "search: shell slide in <= 2 moves; census(2) sound", limit=300.0)
def test_criterion_8_oracle():
    a = parse_gauss_code("O1+ O2- U1+ U2- O3+\nU3+")
    b = parse_gauss_code("O3+ O2- O1+ U2- U1+\nU3+")
    res = bfs_connect(a, b, max_chords=a.chord_count)
    assert res.found and len(res.path) <= 2
    rep = census(2)
    assert rep["sound"] and rep["violations"] == [] and rep["mixed_components"] == 0
    for g in rep["groups"]:
        assert g["connected_pairs_found"] <= g["connected_pairs_checked"]


@criterion(9, "knots: trefoils J = 0 and 2, inequivalent, all forbidden-trivial")
def test_criterion_9_knots():
    classical = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
    virtual = parse_gauss_code("O1+ O2+ U1+ U2+")
    empty = parse_gauss_code("()")
    assert invariant_profile(classical).j_knot == 0
    assert invariant_profile(virtual).j_knot == 2
    assert not xi_equivalent(classical, virtual)[0]
    rng = random.Random(9)
    for _ in range(100):
        k = random_diagram(rng, 1, rng.randint(0, 6))
        assert forbidden_equivalent(k, empty)
    assert forbidden_equivalent(virtual, empty) and forbidden_equivalent(classical, empty)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(report_lines()))
