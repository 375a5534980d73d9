import itertools

import pytest
from hypothesis import given, settings

from conftest import diagrams, words
from gaussxi.diagram import canonical_key, parse_gauss_code, serialize
from gaussxi.invariants import EVEN, InvariantProfile, ReducedLinkingClass, invariant_profile
from gaussxi.normal_forms import (Letter, NormalFormError, WordNormal, build_even_normal,
                                  build_knot_normal, build_odd_normal, forbidden_equivalent,
                                  format_word, predicted_profile, normalize, parse_word,
                                  profile_to_normal, realize_word, word_normalize, xi_equivalent)


def W(text):
    return word_normalize(parse_word(text)).as_tuple()


def test_word_parsing():
    w = parse_word("A B^-1 Ch- Dh^-1+")
    assert [(x.base, x.exponent, x.sign) for x in w] == [
        ("A", 1, 1), ("B", -1, 1), ("Ch", 1, -1), ("Dh", -1, 1)]
    assert format_word(w) == "A B^-1 Ch- Dh^-1"
    with pytest.raises(NormalFormError):
        parse_word("E")


def test_word_normal_examples():
    assert W("A A^-1") == (0, 0, 0, 0, 0)
    assert W("C Ch") == (0, 1, 0, 1, 0) == W("B Bh")
    assert W("A B^-1 C A^-1 D") == (1, 0, 0, 0, 0)
    assert str(word_normalize(parse_word("A B^-1 C A^-1 D"))) == "A^1"
    assert str(WordNormal(0, 0, 0, 0, 0)) == "1"


@given(words)
def test_letter_count_parity_is_kept(w):
    nf = word_normalize(w)
    assert (len(w) - (abs(nf.p) + abs(nf.q) + abs(nf.r) + abs(nf.s) + nf.v)) % 2 == 0
    assert nf.v in (0, 1)


@given(words, words)
def test_normal_form_is_order_independent(u, v):
    assert word_normalize(list(u) + list(v)) == word_normalize(list(v) + list(u))


@settings(max_examples=80, deadline=None)
@given(words)
def test_realized_normal_keeps_classifying_data(w):
    a = invariant_profile(realize_word(w))
    b = invariant_profile(realize_word(word_normalize(w).word()))
    assert (a.parity, a.lk) == (b.parity, b.lk)
    if a.parity == EVEN:
        assert a.fbar == b.fbar
        assert (a.j1 - b.j1) % 2 == 0 and (a.j2 - b.j2) % 2 == 0


def test_realize_examples():
    assert serialize(realize_word([])) == "()\n()"
    assert serialize(realize_word([Letter("A")])) == "O1+\nU1+"
    assert serialize(build_odd_normal(1, 0)) == "O1+\nU1+"
    assert serialize(build_odd_normal(1, 2)) == "O1+ U2+ U3+\nO3+ O2+ U1+"


def test_odd_constructor_parity_guard():
    with pytest.raises(NormalFormError):
        build_odd_normal(0, 0)


def test_even_constructor_parity_guard():
    with pytest.raises(NormalFormError):
        build_even_normal(0, 0, 1, 0, 0, 0)


def test_empty_even_normal():
    pr = invariant_profile(build_even_normal(0, 0, 0, 0, 0, 0))
    assert (pr.lk, pr.j1, pr.j2, pr.fbar.canonical) == ((0, 0), 0, 0, (0, 0, 0, 0))


def test_closed_form_small_cube():
    for m, l, p, q, r, s in itertools.product(range(-2, 3), repeat=6):
        if (p + q + r + s - m) % 2:
            continue
        assert invariant_profile(build_even_normal(m, l, p, q, r, s)) == predicted_profile(m, l, p, q, r, s)


def test_example_normal_form():
    d = build_even_normal(-5, 2, 3, -2, 1, 1)
    assert canonical_key(normalize(d)) == canonical_key(build_even_normal(-5, 0, -2, 3, 2, 0))
    ok, _ = xi_equivalent(d, build_even_normal(-5, 0, -2, 3, 2, 0))
    assert ok


def test_profile_with_half_shell_pair_rejected():
    pr = InvariantProfile(mu=2, parity=EVEN, lk=(0, 0), j1=0, j2=1,
                          fbar=ReducedLinkingClass.of(0, 0, 0, 0))
    with pytest.raises(NormalFormError):
        profile_to_normal(pr)


def test_knot_normal_forms():
    assert serialize(build_knot_normal(0)) == "()"
    for j in (-4, -2, 2, 6):
        assert invariant_profile(build_knot_normal(j)).j_knot == j
    with pytest.raises(NormalFormError):
        build_knot_normal(1)


@settings(max_examples=80, deadline=None)
@given(diagrams())
def test_normalize_is_idempotent_and_keeps_profile(d):
    n = normalize(d)
    assert invariant_profile(n) == invariant_profile(d)
    assert canonical_key(normalize(n)) == canonical_key(n)


@settings(max_examples=60, deadline=None)
@given(diagrams(), diagrams())
def test_decision_matches_normal_keys(d1, d2):
    if d1.mu != d2.mu:
        return
    ok, _ = xi_equivalent(d1, d2)
    assert ok == (canonical_key(normalize(d1)) == canonical_key(normalize(d2)))


def test_reason_names_linking_number():
    ok, reason = xi_equivalent(build_odd_normal(1, 0), build_odd_normal(3, 0))
    assert not ok and reason.startswith("lk12")


def test_component_mismatch_is_an_error():
    with pytest.raises(NormalFormError):
        xi_equivalent(parse_gauss_code("()"), parse_gauss_code("()\n()"))


def test_forbidden_is_weaker_than_xi():
    a, b = build_even_normal(2, 0, 1, 1, 0, 0), build_even_normal(0, 1, 1, 1, 0, 0)
    assert forbidden_equivalent(a, b)
    assert not xi_equivalent(a, b)[0]
    assert forbidden_equivalent(parse_gauss_code("O1+ O2+ U1+ U2+"), parse_gauss_code("()"))
