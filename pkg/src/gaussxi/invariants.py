"""Classifying invariants of 1- and 2-component virtual links up to Xi-moves.

All values are read off a single Gauss diagram:

* linking numbers ``Lk(K_i, K_j)``: signed count of chords from circle i to j;
* parity of a 2-component link: parity of the number of nonself-chords;
* odd writhe ``J(K_i; L)`` of an even link: signed count of odd self-chords;
* reduced linking class: the sigma/tau split of the linking numbers with
  respect to a reference nonself-chord, modulo swapping sigma and tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import GaussDiagram

ODD = "odd"
EVEN = "even"


class InvariantError(ValueError):
    """An invariant evaluated outside its domain."""


@dataclass(frozen=True, order=True)
class ReducedLinkingClass:
    """Canonical (lexicographically least) representative ``(p, q, r, s)``."""

    canonical: tuple[int, int, int, int]

    @classmethod
    def of(cls, p, q, r, s) -> "ReducedLinkingClass":
        return cls(canonical_fbar((p, q, r, s)))

    def representatives(self):
        p, q, r, s = self.canonical
        return ((p, q), (r, s)), ((q, p), (s, r))

    def __str__(self) -> str:
        (a, b), (c, d) = self.representatives()[0]
        return f"[({a},{b}),({c},{d})]"


def canonical_fbar(t: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    p, q, r, s = t
    return min((p, q, r, s), (q, p, s, r))


@dataclass(frozen=True)
class InvariantProfile:
    mu: int
    parity: Optional[str] = None
    lk: Optional[tuple[int, int]] = None
    j_knot: Optional[int] = None
    j1: Optional[int] = None
    j2: Optional[int] = None
    fbar: Optional[ReducedLinkingClass] = None

    def as_dict(self) -> dict:
        if self.mu == 1:
            return {"mu": 1, "j": self.j_knot}
        out = {"mu": 2, "parity": self.parity, "lk": list(self.lk)}
        if self.parity == EVEN:
            out["j"] = [self.j1, self.j2]
            out["fbar"] = list(self.fbar.canonical)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantProfile":
        mu = int(data.get("mu", 2))
        if mu == 1:
            return cls(mu=1, j_knot=int(data["j"]))
        if "fbar" in data:
            j1, j2 = data["j"]
            return cls(mu=2, parity=data.get("parity", EVEN), lk=tuple(data["lk"]),
                       j1=int(j1), j2=int(j2),
                       fbar=ReducedLinkingClass(canonical_fbar(tuple(data["fbar"]))))
        return cls(mu=2, parity=data.get("parity", ODD), lk=tuple(data["lk"]))


def _require_two(d: GaussDiagram):
    if d.mu != 2:
        raise InvariantError(f"expected a 2-component diagram, got mu={d.mu}")


def _require_even(d: GaussDiagram):
    _require_two(d)
    if parity(d) != EVEN:
        raise InvariantError("invariant defined for even links only")


def linking_numbers(d: GaussDiagram, i: int, j: int) -> int:
    if i == j or not (1 <= i <= d.mu and 1 <= j <= d.mu):
        raise InvariantError(f"bad component pair ({i}, {j}) for mu={d.mu}")
    return sum(ch.sign for ch in d.chords.values() if ch.type == (i, j))


def parity(d: GaussDiagram) -> str:
    _require_two(d)
    n = sum(1 for ch in d.chords.values() if not ch.is_self)
    return ODD if n % 2 else EVEN


def _interior(n: int, a: int, b: int) -> int:
    """Endpoints strictly inside the arc running forward from a to b."""
    return (b - a - 1) % n


def is_odd_self_chord(d: GaussDiagram, cid: int) -> bool:
    ch = d.chord(cid)
    if not ch.is_self:
        raise InvariantError(f"chord {cid} is not a self-chord")
    n = d.circle_length(ch.source.circle)
    if n % 2:
        raise InvariantError("chord parity needs an even endpoint count on its circle")
    return _interior(n, ch.source.position, ch.target.position) % 2 == 1


def _self_chord_odd_any(d, ch) -> bool:
    # knot case: the single circle always carries an even number of endpoints
    n = d.circle_length(ch.source.circle)
    return _interior(n, ch.source.position, ch.target.position) % 2 == 1


def odd_writhe(d: GaussDiagram, i: int) -> int:
    _require_even(d)
    if i not in (1, 2):
        raise InvariantError(f"no component {i}")
    return sum(ch.sign for ch in d.chords.values()
               if ch.is_self and ch.source.circle == i and is_odd_self_chord(d, ch.id))


def knot_odd_writhe(d: GaussDiagram) -> int:
    if d.mu != 1:
        raise InvariantError(f"expected a knot diagram, got mu={d.mu}")
    return sum(ch.sign for ch in d.chords.values() if _self_chord_odd_any(d, ch))


def _ends_on(ch, circle):
    return ch.source if ch.source.circle == circle else ch.target


def chords_equivalent(d: GaussDiagram, g: int, g2: int) -> bool:
    _require_even(d)
    a, b = d.chord(g), d.chord(g2)
    if a.is_self or b.is_self:
        raise InvariantError("chord equivalence is defined on nonself-chords")
    total = 0
    for c in (1, 2):
        ea, eb = _ends_on(a, c), _ends_on(b, c)
        if ea.position != eb.position:
            total += _interior(d.circle_length(c), ea.position, eb.position)
    return total % 2 == 0


def nonself_chords(d: GaussDiagram) -> list[int]:
    """Nonself-chord ids in scan order (circle 1 first, then by position)."""
    out = []
    for circle in d.circles:
        for cid, _ in circle:
            if not d.chord(cid).is_self and cid not in out:
                out.append(cid)
    return out


def sigma_tau(d: GaussDiagram, g0: int) -> tuple[int, int, int, int]:
    _require_even(d)
    if g0 not in d.chords:
        raise InvariantError(f"no chord {g0}")
    if d.chord(g0).is_self:
        raise InvariantError(f"reference chord {g0} must be a nonself-chord")
    s12 = t12 = s21 = t21 = 0
    for ch in d.chords.values():
        if ch.is_self:
            continue
        eq = chords_equivalent(d, g0, ch.id)
        if ch.type == (1, 2):
            if eq:
                s12 += ch.sign
            else:
                t12 += ch.sign
        else:
            if eq:
                s21 += ch.sign
            else:
                t21 += ch.sign
    return (s12, t12, s21, t21)


def reduced_linking_class(d: GaussDiagram, g0: int | None = None) -> ReducedLinkingClass:
    _require_even(d)
    if g0 is None:
        # any reference chord yields the same class; take the first in scan order
        ids = nonself_chords(d)
        if not ids:
            return ReducedLinkingClass((0, 0, 0, 0))
        g0 = ids[0]
    return ReducedLinkingClass(canonical_fbar(sigma_tau(d, g0)))


def invariant_profile(d: GaussDiagram) -> InvariantProfile:
    if d.mu == 1:
        return InvariantProfile(mu=1, j_knot=knot_odd_writhe(d))
    if d.mu != 2:
        raise InvariantError(f"classification covers mu in {{1, 2}}, got {d.mu}")
    lk = (linking_numbers(d, 1, 2), linking_numbers(d, 2, 1))
    par = parity(d)
    if par == ODD:
        return InvariantProfile(mu=2, parity=ODD, lk=lk)
    return InvariantProfile(mu=2, parity=EVEN, lk=lk,
                            j1=odd_writhe(d, 1), j2=odd_writhe(d, 2),
                            fbar=reduced_linking_class(d))
