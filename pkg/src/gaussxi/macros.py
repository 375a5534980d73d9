"""Derived local moves, each expanded into primitive moves.

A macro is addressed by ``(circle, position)`` plus, for the inserting
directions, a sign.  Every macro has three parts that are kept
independent of each other:

* ``match``: checks the left-hand pattern at the window;
* ``expand``: the primitive moves realising it, computed by tracking the
  window's endpoints through the intermediate diagrams;
* ``expected``: the right-hand side built by direct list surgery.

Replaying ``expand`` must give a diagram isomorphic to ``expected``.

Patterns (positions read forward from the window start, ``P``/``Q`` are
endpoints of other chords, letters repeat for the two ends of a chord)::

    CROSS              a b c d            -> c d a b
    ODD_SWAP           a b  (odd circle)  -> b a
    SHELL_SLIDE        x y x y P          -> P y x y x
    SHELL_SIGN         x P x              -> y P y z x z x   sign(y) = -sign(x) = -sign(z)
    SHELL_PAIR_CANCEL  a b a b c d c d    -> (nothing)      sign(a)=sign(b)=-sign(c)=-sign(d)
    SHELL_TRIPLE       a x a b x b        -> a b a b
    EXCHANGE_1         P Q                -> a b a b c Q c d P d
    EXCHANGE_2         s P s Q            -> s Q s P
    EXCHANGE_3         a b a b c Q c d P d  (pair e, shells -e)
                       -> the same layout with pair -e, shells e

In SHELL_PAIR_CANCEL and SHELL_SIGN every shell is written O first.  In
EXCHANGE_1 the created pair a, b has sign e and the shells c, d have sign
-e, where e is the window's sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .diagram import SOURCE, TARGET, GaussDiagram, canonical_key
from .moves import (Move, MoveError, apply_move, r1_add, r1_remove, r2_add,
                    r2_remove, xi)


class PatternError(MoveError):
    """The diagram does not show the macro's left-hand pattern at the window."""


class MacroKind(enum.Enum):
    CROSS = "cross"
    ODD_SWAP = "odd-swap"
    SHELL_SLIDE = "shell-slide"
    SHELL_SIGN = "shell-sign"
    SHELL_PAIR_CANCEL = "shell-pair-cancel"
    EXCHANGE_1 = "exchange-1"
    EXCHANGE_2 = "exchange-2"
    EXCHANGE_3 = "exchange-3"
    SHELL_TRIPLE = "shell-triple"


FORWARD = True
BACKWARD = False


@dataclass(frozen=True)
class MacroWindow:
    circle: int
    position: int
    sign: int = 1
    order: int = 0


# -- window helpers ------------------------------------------------------------

def _seq(d: GaussDiagram, c: int):
    if not 1 <= c <= d.mu:
        raise PatternError(f"no circle {c}")
    return d.circles[c - 1]


def _window(d, w: MacroWindow, size: int):
    seq = _seq(d, w.circle)
    n = len(seq)
    if n < size:
        raise PatternError(f"circle {w.circle} has {n} endpoints, window needs {size}")
    if not 0 <= w.position < n:
        raise PatternError(f"position {w.position} out of range")
    return [seq[(w.position + t) % n] for t in range(size)]


def _ids(ends):
    return [cid for cid, _ in ends]


def _pos(d, c, endpoint) -> int:
    return d.circles[c - 1].index(endpoint)


def _rotated(d, c, start):
    """Circle c rotated to begin at ``start``, as a list."""
    seq = list(_seq(d, c))
    return seq[start:] + seq[:start]


def _surgery(d, c, start, size, replacement, new_signs=None):
    seq = _rotated(d, c, start)
    seq[:size] = replacement
    circles = list(d.circles)
    circles[c - 1] = tuple(seq)
    signs = dict(d.signs)
    signs.update(new_signs or {})
    return d.replace_circles(circles, signs)


def _is_shell_pair(d, ends) -> bool:
    a, b, a2, b2 = _ids(ends)
    return a == a2 and b == b2 and a != b


def _source_first(ends) -> bool:
    return ends[0][1] == SOURCE


# -- individual macros --------------------------------------------------------

def _cross(d, w, forward):
    _window(d, w, 4)
    n = d.circle_length(w.circle)
    i = w.position
    moves = [xi(w.circle, i), xi(w.circle, (i + 1) % n)]
    return moves if forward else moves[::-1]


def _cross_expected(d, w, forward):
    e = _window(d, w, 4)
    return _surgery(d, w.circle, w.position, 4, [e[2], e[3], e[0], e[1]])


def _odd_match(d, w):
    e = _window(d, w, 2)
    if len(_seq(d, w.circle)) % 2 == 0:
        raise PatternError(f"circle {w.circle} carries an even number of endpoints")
    return e


def _odd_swap(d, w, forward):
    _odd_match(d, w)
    n = d.circle_length(w.circle)
    i = w.position
    if n == 3:
        return [xi(w.circle, (i + 1) % n)]
    # i and i+1 are t steps of +2 apart; bubble along that cycle and back
    t = (n + 1) // 2
    chain = [(i + 2 * step) % n for step in range(t)]
    return [xi(w.circle, p) for p in chain + chain[-2::-1]]


def _odd_swap_expected(d, w, forward):
    e = _odd_match(d, w)
    return _surgery(d, w.circle, w.position, 2, [e[1], e[0]])


def _slide_match(d, w, forward):
    e = _window(d, w, 5)
    pair, other = (e[:4], e[4]) if forward else (e[1:], e[0])
    if not _is_shell_pair(d, pair) or other[0] in _ids(pair):
        raise PatternError("expected a shell-pair next to a foreign endpoint")
    return e


def _slide(d, w, forward):
    _slide_match(d, w, forward)
    n = d.circle_length(w.circle)
    i = w.position
    first, second = ((i + 2) % n, i) if forward else (i, (i + 2) % n)
    return [xi(w.circle, first), xi(w.circle, second)]


def _slide_expected(d, w, forward):
    e = _slide_match(d, w, forward)
    new = [e[4], e[1], e[0], e[3], e[2]] if forward else [e[2], e[1], e[4], e[3], e[0]]
    return _surgery(d, w.circle, w.position, 5, new)


def _sign_match(d, w, forward):
    if forward:
        e = _window(d, w, 3)
        if e[0][0] != e[2][0] or e[1][0] == e[0][0] or not _source_first(e):
            raise PatternError("expected a shell written O first around a foreign endpoint")
        return e
    e = _window(d, w, 7)
    y, p, y2, z, x, z2, x2 = _ids(e)
    ok = (y == y2 and z == z2 and x == x2 and len({y, z, x, p}) == 4
          and all(e[k][1] == SOURCE for k in (0, 3, 4))
          and d.sign(z) == d.sign(x) == -d.sign(y))
    if not ok:
        raise PatternError("expected y P y z x z x with sign(y) = -sign(x) = -sign(z)")
    return e


def _shell_sign(d, w, forward):
    e = _sign_match(d, w, forward)
    c, i = w.circle, w.position
    if not forward:
        y, z = e[0][0], e[3][0]
        n = d.circle_length(c)
        return [xi(c, (i + 1) % n), xi(c, (i + 3) % n), r2_remove(y, z)]
    eps = d.sign(e[0][0])
    add = r2_add(c, i, c, (i + 2) % (d.circle_length(c) + 2), -eps, 0)
    d1 = apply_move(d, add)
    z = d.next_id() + 1
    m1 = xi(c, _pos(d1, c, (z, TARGET)))
    d2 = apply_move(d1, m1)
    m2 = xi(c, _pos(d2, c, (z, SOURCE)))
    return [add, m1, m2]


def _shell_sign_expected(d, w, forward):
    e = _sign_match(d, w, forward)
    if not forward:
        y, p, x = e[0][0], e[1], e[4][0]
        return _surgery(d, w.circle, w.position, 7, [(x, SOURCE), p, (x, TARGET)])
    x, p = e[0][0], e[1]
    eps = d.sign(x)
    y, z = d.next_id(), d.next_id() + 1
    new = [(y, SOURCE), p, (y, TARGET), (z, SOURCE), (x, SOURCE), (z, TARGET), (x, TARGET)]
    return _surgery(d, w.circle, w.position, 3, new, {y: -eps, z: eps})


def _cancel_match(d, w):
    e = _window(d, w, 8)
    if not (_is_shell_pair(d, e[:4]) and _is_shell_pair(d, e[4:])):
        raise PatternError("expected two consecutive shell-pairs")
    if not all(e[k][1] == SOURCE for k in (0, 1, 4, 5)):
        raise PatternError("shells must be written O first")
    a, b, c_, dd = e[0][0], e[1][0], e[4][0], e[5][0]
    if len({a, b, c_, dd}) != 4 or not (d.sign(a) == d.sign(b) == -d.sign(c_) == -d.sign(dd)):
        raise PatternError("shell-pairs must have opposite signs")
    return e


def _pair_cancel(d, w, forward):
    c, i = w.circle, w.position
    if forward:
        e = _cancel_match(d, w)
        n = d.circle_length(c)
        a, b, c_, dd = e[0][0], e[1][0], e[4][0], e[5][0]
        return [xi(c, (i + 2) % n), xi(c, (i + 3) % n), r2_remove(b, c_), r2_remove(a, dd)]
    n = d.circle_length(c)
    if not (n == 0 and i == 0) and not 0 <= i < n:
        raise PatternError(f"gap {i} out of range")
    eps = w.sign
    a = d.next_id()
    dd, b, c_ = a + 1, a + 2, a + 3
    m1 = r2_add(c, i, c, (i + 2) % (n + 2), eps, 0)
    d1 = apply_move(d, m1)
    g1 = _pos(d1, c, (dd, SOURCE))
    g2 = _pos(d1, c, (dd, TARGET))
    if g2 >= g1:
        g2 += 2
    m2 = r2_add(c, g1, c, g2, eps, 0)
    d2 = apply_move(d1, m2)
    m3 = xi(c, _pos(d2, c, (dd, SOURCE)))
    d3 = apply_move(d2, m3)
    m4 = xi(c, _pos(d3, c, (c_, SOURCE)))
    return [m1, m2, m3, m4]


def _pair_cancel_expected(d, w, forward):
    c, i = w.circle, w.position
    if forward:
        _cancel_match(d, w)
        return _surgery(d, c, i, 8, [])
    a = d.next_id()
    dd, b, c_ = a + 1, a + 2, a + 3
    block = [(a, SOURCE), (b, SOURCE), (a, TARGET), (b, TARGET),
             (c_, SOURCE), (dd, SOURCE), (c_, TARGET), (dd, TARGET)]
    eps = w.sign
    n = d.circle_length(c)
    return _surgery(d, c, i if n else 0, 0, block, {a: eps, b: eps, c_: -eps, dd: -eps})


def _triple_match(d, w, forward):
    if forward:
        e = _window(d, w, 6)
        a, x, a2, b, x2, b2 = _ids(e)
        if not (a == a2 and x == x2 and b == b2 and len({a, b, x}) == 3):
            raise PatternError("expected a x a b x b")
        return e
    e = _window(d, w, 4)
    if not _is_shell_pair(d, e):
        raise PatternError("expected a shell-pair")
    return e


def _triple(d, w, forward):
    e = _triple_match(d, w, forward)
    c, i = w.circle, w.position
    n = d.circle_length(c)
    if forward:
        return [xi(c, (i + 1) % n), r1_remove(e[1][0])]
    add = r1_add(c, (i + 3) % n, w.sign, w.order)
    d1 = apply_move(d, add)
    return [add, xi(c, _pos(d1, c, e[1]))]


def _triple_expected(d, w, forward):
    e = _triple_match(d, w, forward)
    if forward:
        return _surgery(d, w.circle, w.position, 6, [e[0], e[3], e[2], e[5]])
    x = d.next_id()
    ends = [(x, SOURCE), (x, TARGET)]
    if w.order:
        ends.reverse()
    new = [e[0], ends[0], e[2], e[1], ends[1], e[3]]
    return _surgery(d, w.circle, w.position, 4, new, {x: w.sign})


def _ex2_match(d, w):
    e = _window(d, w, 4)
    s, p, s2, q = _ids(e)
    if s != s2 or s in (p, q):
        raise PatternError("expected a shell around the first endpoint: s P s Q")
    return e


def _exchange2(d, w, forward):
    _ex2_match(d, w)
    return [xi(w.circle, (w.position + 1) % d.circle_length(w.circle))]


def _exchange2_expected(d, w, forward):
    e = _ex2_match(d, w)
    return _surgery(d, w.circle, w.position, 4, [e[0], e[3], e[2], e[1]])


def _ex1_match(d, w, forward):
    if forward:
        e = _window(d, w, 2)
        if e[0][0] == e[1][0]:
            raise PatternError("expected endpoints of two different chords")
        return e
    e = _window(d, w, 10)
    ids = _ids(e)
    a, b, a2, b2, c_, q, c2, dd, p, d2 = ids
    ok = (a == a2 and b == b2 and c_ == c2 and dd == d2
          and len({a, b, c_, dd, q, p}) == 6 and q != p
          and all(e[k][1] == SOURCE for k in (0, 1, 4, 7))
          and d.sign(a) == d.sign(b) == -d.sign(c_) == -d.sign(dd))
    if not ok:
        raise PatternError("expected a b a b c Q c d P d")
    return e


def _exchange1(d, w, forward):
    e = _ex1_match(d, w, forward)
    c, i = w.circle, w.position
    n = d.circle_length(c)
    if not forward:
        # undo the two Xi-moves, then cancel the two shell-pairs
        m1 = xi(c, (i + 5) % n)
        m2 = xi(c, (i + 7) % n)
        d2 = apply_move(apply_move(d, m1), m2)
        start = _pos(d2, c, e[0])
        return [m1, m2] + _pair_cancel(d2, MacroWindow(c, start), FORWARD)
    eps = w.sign
    prep = _pair_cancel(d, MacroWindow(c, i, eps), BACKWARD)
    d1 = d
    for m in prep:
        d1 = apply_move(d1, m)
    m5 = xi(c, _pos(d1, c, e[0]) - 1)
    d2 = apply_move(d1, m5)
    m6 = xi(c, _pos(d2, c, e[1]) - 2)
    return prep + [m5, m6]


def _exchange1_expected(d, w, forward):
    e = _ex1_match(d, w, forward)
    if not forward:
        return _surgery(d, w.circle, w.position, 10, [e[8], e[5]])
    eps = w.sign
    a = d.next_id()
    dd, b, c_ = a + 1, a + 2, a + 3
    p, q = e
    new = [(a, SOURCE), (b, SOURCE), (a, TARGET), (b, TARGET),
           (c_, SOURCE), q, (c_, TARGET), (dd, SOURCE), p, (dd, TARGET)]
    return _surgery(d, w.circle, w.position, 2, new, {a: eps, b: eps, c_: -eps, dd: -eps})


def _exchange3(d, w, forward):
    e = _ex1_match(d, w, BACKWARD)
    eps = -d.sign(e[0][0])
    c, i = w.circle, w.position
    undo = _exchange1(d, w, BACKWARD)
    d1 = d
    for m in undo:
        d1 = apply_move(d1, m)
    start = _pos(d1, c, e[8])
    return undo + _exchange1(d1, MacroWindow(c, start, eps), FORWARD)


def _exchange3_expected(d, w, forward):
    e = _ex1_match(d, w, BACKWARD)
    signs = {cid: -d.sign(cid) for cid in {e[0][0], e[1][0], e[4][0], e[7][0]}}
    return d.replace_circles(d.circles, {**dict(d.signs), **signs})


_TABLE = {
    MacroKind.CROSS: (_cross, _cross_expected),
    MacroKind.ODD_SWAP: (_odd_swap, _odd_swap_expected),
    MacroKind.SHELL_SLIDE: (_slide, _slide_expected),
    MacroKind.SHELL_SIGN: (_shell_sign, _shell_sign_expected),
    MacroKind.SHELL_PAIR_CANCEL: (_pair_cancel, _pair_cancel_expected),
    MacroKind.SHELL_TRIPLE: (_triple, _triple_expected),
    MacroKind.EXCHANGE_1: (_exchange1, _exchange1_expected),
    MacroKind.EXCHANGE_2: (_exchange2, _exchange2_expected),
    MacroKind.EXCHANGE_3: (_exchange3, _exchange3_expected),
}


def expand_macro(d: GaussDiagram, kind: MacroKind, window: MacroWindow, forward: bool = True) -> list[Move]:
    """Primitive moves realising the macro at ``window``."""
    expand, _ = _TABLE[kind]
    return expand(d, window, forward)


def expected_result(d: GaussDiagram, kind: MacroKind, window: MacroWindow, forward: bool = True) -> GaussDiagram:
    """The declared right-hand side, built without using any move."""
    _, expected = _TABLE[kind]
    return expected(d, window, forward)


def apply_macro(d: GaussDiagram, kind: MacroKind, window: MacroWindow, forward: bool = True) -> GaussDiagram:
    for m in expand_macro(d, kind, window, forward):
        d = apply_move(d, m)
    return d


def check_macro(d: GaussDiagram, kind: MacroKind, window: MacroWindow, forward: bool = True) -> bool:
    return canonical_key(apply_macro(d, kind, window, forward)) == canonical_key(
        expected_result(d, kind, window, forward))


def parse_macro(spec: str):
    """``macro:<name>:c=<circle>,i=<pos>[,s=+|-][,o=st|ts][,dir=fwd|back]``."""
    parts = spec.split(":", 2)
    if len(parts) != 3 or parts[0] != "macro":
        raise MoveError(f"bad macro spec {spec!r}")
    try:
        kind = MacroKind(parts[1])
    except ValueError:
        raise MoveError(f"unknown macro {parts[1]!r}") from None
    fields = dict(f.split("=", 1) for f in parts[2].split(",") if f)
    try:
        window = MacroWindow(int(fields["c"]), int(fields["i"]),
                             -1 if fields.get("s") == "-" else 1,
                             1 if fields.get("o") == "ts" else 0)
    except (KeyError, ValueError) as exc:
        raise MoveError(f"malformed macro spec {spec!r}: {exc}") from None
    return kind, window, fields.get("dir", "fwd") != "back"
