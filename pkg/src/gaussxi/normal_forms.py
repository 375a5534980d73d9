"""Portion words, normal-form diagrams and the equivalence decisions.

Layout used by every constructor: nonself-chords are drawn horizontally
between circle 1 (read top to bottom) and circle 2 (read bottom to top).
Each circle starts with its shell-pairs.  A shell sits immediately around
the chord endpoint it decorates and is written O first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import SOURCE, TARGET, GaussDiagram
from .invariants import (EVEN, ODD, InvariantProfile, ReducedLinkingClass,
                         canonical_fbar, invariant_profile, linking_numbers)


class NormalFormError(ValueError):
    pass


BASES = ("A", "B", "C", "D", "Ah", "Bh", "Ch", "Dh")

# base -> (chord type, shell around circle-1 end, shell around circle-2 end)
_LETTER_SHAPE = {
    "A": ((1, 2), False, False),
    "B": ((1, 2), False, True),
    "C": ((1, 2), True, False),
    "D": ((1, 2), True, True),
    "Ah": ((2, 1), False, False),
    "Bh": ((2, 1), False, True),
    "Ch": ((2, 1), True, False),
    "Dh": ((2, 1), True, True),
}


@dataclass(frozen=True)
class Letter:
    base: str
    exponent: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.base not in BASES:
            raise NormalFormError(f"unknown letter {self.base!r}")
        if self.exponent not in (1, -1) or self.sign not in (1, -1):
            raise NormalFormError("exponent and sign must be +1 or -1")

    @property
    def power(self) -> int:
        """Net sign of the chord drawn for this letter."""
        return self.exponent * self.sign

    def __str__(self):
        text = self.base
        if self.exponent < 0:
            text += "^-1"
        if self.sign < 0:
            text += "-"
        return text


PortionWord = Sequence[Letter]


@dataclass(frozen=True)
class WordNormal:
    p: int
    q: int
    r: int
    s: int
    v: int

    def as_tuple(self):
        return (self.p, self.q, self.r, self.s, self.v)

    def word(self) -> list[Letter]:
        out: list[Letter] = []
        for base, n in (("A", self.p), ("B", self.q), ("Ah", self.r), ("Bh", self.s), ("Ch", self.v)):
            out.extend(Letter(base, 1 if n > 0 else -1) for _ in range(abs(n)))
        return out

    def __str__(self):
        parts = [f"{b}^{n}" for b, n in (("A", self.p), ("B", self.q), ("Ah", self.r), ("Bh", self.s)) if n]
        if self.v:
            parts.append("Ch")
        return " ".join(parts) if parts else "1"


_LETTER_RE = re.compile(r"^(Ah|Bh|Ch|Dh|A|B|C|D)(?:\^(-?1))?([+-])?$")


def parse_word(text: str) -> list[Letter]:
    """Parse ``"A B^-1 Ch D-"``: letter, optional ``^-1``, optional sign."""
    out = []
    for tok in text.replace("*", " ").replace("·", " ").split():
        m = _LETTER_RE.match(tok)
        if m is None:
            raise NormalFormError(f"bad letter {tok!r}")
        exp = int(m.group(2)) if m.group(2) else 1
        sign = -1 if m.group(3) == "-" else 1
        out.append(Letter(m.group(1), exp, sign))
    return out


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in w) or "1"


def word_normalize(w: PortionWord) -> WordNormal:
    counts = dict.fromkeys(("A", "B", "C", "Ah", "Bh", "Ch"), 0)
    for letter in w:
        e = letter.power
        if letter.base == "D":
            counts["A"] += e
            counts["B"] += e
            counts["C"] -= e
        elif letter.base == "Dh":
            counts["Ah"] += e
            counts["Bh"] += e
            counts["Ch"] -= e
        else:
            counts[letter.base] += e
    a, b, c = counts["A"], counts["B"], counts["C"]
    ah, bh, ch = counts["Ah"], counts["Bh"], counts["Ch"]
    t, u = divmod(c, 2)
    b += 2 * t
    if u:
        b += 1
        bh += 1
        ch -= 1
    th, v = divmod(ch, 2)
    bh += 2 * th
    return WordNormal(a, b, ah, bh, v)


# -- realisation -------------------------------------------------------------

def _sgn(n: int) -> int:
    return 1 if n >= 0 else -1


def _shell_pairs(ids, count: int, sign: int) -> list:
    seq = []
    for _ in range(count):
        a, b = next(ids), next(ids)
        seq += [(a, SOURCE), (b, SOURCE), (a, TARGET), (b, TARGET)]
    return seq


def _layout(rows, k: int, l: int, signs: dict) -> GaussDiagram:
    """rows: (chord type, sign, shell1, shell2, shell sign) top to bottom."""
    from itertools import count

    ids = count(1)
    c1_rows, c2_rows = [], []
    for (i, j), sign, sh1, sh2, shell_sign in rows:
        x = next(ids)
        signs[x] = sign
        role = {1: SOURCE if i == 1 else TARGET, 2: SOURCE if i == 2 else TARGET}
        items = {}
        for circle, shelled in ((1, sh1), (2, sh2)):
            end = [(x, role[circle])]
            if shelled:
                s = next(ids)
                signs[s] = shell_sign
                end = [(s, SOURCE), end[0], (s, TARGET)]
            items[circle] = end
        c1_rows.append(items[1])
        c2_rows.append(items[2])
    first = len(signs)
    pair_ids = count(first + 1)
    c1_pairs = _shell_pairs(pair_ids, abs(k), _sgn(k))
    c2_pairs = _shell_pairs(pair_ids, abs(l), _sgn(l))
    for cid, _ in c1_pairs + c2_pairs:
        signs.setdefault(cid, _sgn(k) if (cid, SOURCE) in c1_pairs else _sgn(l))
    c1 = c1_pairs + [e for items in c1_rows for e in items]
    c2 = c2_pairs + [e for items in reversed(c2_rows) for e in items]
    return GaussDiagram.build([c1, c2], signs)


def realize_word(w: PortionWord, k: int = 0, l: int = 0) -> GaussDiagram:
    rows = []
    for letter in w:
        ctype, sh1, sh2 = _LETTER_SHAPE[letter.base]
        e = letter.power
        rows.append((ctype, e, sh1, sh2, e))
    return _layout(rows, k, l, {})


def _block(base: str, n: int) -> list[Letter]:
    return [Letter(base, 1 if n > 0 else -1) for _ in range(abs(n))]


def build_odd_normal(a: int, b: int) -> GaussDiagram:
    """G(a, b): |a| chords of type (1,2) above |b| of type (2,1)."""
    if (a + b) % 2 == 0:
        raise NormalFormError(f"G(a,b) needs a+b odd, got a={a}, b={b}")
    return realize_word(_block("A", a) + _block("Ah", b))


def build_even_normal(m: int, l: int, p: int, q: int, r: int, s: int) -> GaussDiagram:
    """G(m, 2l; p, q; r, s); ``l`` counts shell-pairs on circle 2."""
    if (p + q + r + s - m) % 2:
        raise NormalFormError("p+q+r+s must be congruent to m mod 2")
    k, odd = divmod(m, 2)
    word = _block("A", p) + _block("B", q) + _block("Ah", r) + _block("Bh", s)
    if odd:
        word.append(Letter("Ch"))
    return realize_word(word, k, l)


def build_knot_normal(j: int) -> GaussDiagram:
    """|j|/2 shell-pairs of sign sgn(j) on one circle."""
    if j % 2:
        raise NormalFormError(f"the odd writhe of a knot is even, got {j}")
    from itertools import count

    seq = _shell_pairs(count(1), abs(j) // 2, _sgn(j))
    return GaussDiagram.build([seq], {cid: _sgn(j) for cid, _ in seq})


# -- decisions ---------------------------------------------------------------

def even_parameters(pr: InvariantProfile) -> tuple[int, int, int, int, int, int]:
    """(m, l, p, q, r, s) of the canonical even normal form for a profile."""
    m = pr.j1
    P, Q, R, S = pr.fbar.canonical
    if (pr.j1 + pr.j2 - P - R) % 2 or (pr.j1 + pr.j2 - Q - S) % 2:
        raise NormalFormError("profile violates j1+j2 = p+r = q+s (mod 2)")
    p, q, r, s = (P, Q, R, S) if m % 2 == 0 else (P, Q, R, S - 1)
    twice_l = pr.j2 - q - s
    if twice_l % 2:
        raise NormalFormError("profile gives a non-integer shell-pair count")
    return m, twice_l // 2, p, q, r, s


def profile_to_normal(pr: InvariantProfile) -> GaussDiagram:
    if pr.mu == 1:
        return build_knot_normal(pr.j_knot)
    if pr.mu != 2:
        raise NormalFormError(f"no normal form for mu={pr.mu}")
    a, b = pr.lk
    if pr.parity == ODD:
        if (a + b) % 2 == 0:
            raise NormalFormError("odd profile with even linking-number sum")
        return build_odd_normal(a, b)
    if (a + b) % 2:
        raise NormalFormError("even profile with odd linking-number sum")
    P, Q, R, S = pr.fbar.canonical
    if P + Q != a or R + S != b:
        raise NormalFormError("reduced linking class does not split the linking numbers")
    return build_even_normal(*even_parameters(pr))


def normalize(d: GaussDiagram) -> GaussDiagram:
    return profile_to_normal(invariant_profile(d))


def _differences(p1: InvariantProfile, p2: InvariantProfile):
    if p1.mu == 1:
        yield "j_knot", p1.j_knot, p2.j_knot
        return
    yield "parity", p1.parity, p2.parity
    yield "lk12", p1.lk[0], p2.lk[0]
    yield "lk21", p1.lk[1], p2.lk[1]
    if p1.parity == EVEN and p2.parity == EVEN:
        yield "j1", p1.j1, p2.j1
        yield "j2", p1.j2, p2.j2
        yield "fbar", p1.fbar.canonical, p2.fbar.canonical


def xi_equivalent(d1: GaussDiagram, d2: GaussDiagram) -> tuple[bool, str]:
    """Decide Xi-equivalence; the reason names the first differing invariant."""
    if d1.mu != d2.mu:
        raise NormalFormError(f"component counts differ: {d1.mu} vs {d2.mu}")
    if d1.mu not in (1, 2):
        raise NormalFormError(f"classification covers mu in {{1, 2}}, got {d1.mu}")
    p1, p2 = invariant_profile(d1), invariant_profile(d2)
    for name, a, b in _differences(p1, p2):
        if a != b:
            return False, f"{name} differs: {a} vs {b}"
    return True, "all invariants agree"


def forbidden_equivalent(d1: GaussDiagram, d2: GaussDiagram) -> bool:
    if d1.mu != d2.mu:
        raise NormalFormError(f"component counts differ: {d1.mu} vs {d2.mu}")
    n = d1.mu
    return all(linking_numbers(d1, i, j) == linking_numbers(d2, i, j)
               for i in range(1, n + 1) for j in range(1, n + 1) if i != j)


def predicted_profile(m, l, p, q, r, s) -> InvariantProfile:
    """Invariants of G(m, 2l; p, q; r, s) predicted in closed form."""
    odd = m % 2
    lk = (p + q, r + s + odd)
    fbar = ReducedLinkingClass(canonical_fbar((p, q, r, s + odd)))
    return InvariantProfile(mu=2, parity=EVEN, lk=lk, j1=m, j2=2 * l + q + s, fbar=fbar)
