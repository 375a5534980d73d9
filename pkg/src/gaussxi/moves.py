"""Primitive moves on Gauss diagrams: R1, R2, R3 and the Xi-move.

Every move is addressed by a window of integers so that instances are
hashable, sortable and printable in the CLI move-spec grammar.

Windows by kind (circles 1-based, positions and gaps 0-based)::

    XI         (c, i)                      swap positions i and i+2
    R1_REMOVE  (x,)
    R1_ADD     (c, g, sign, order)         order 0: O first, 1: U first
    R2_REMOVE  (x, y)                      x < y
    R2_ADD     (c1, g1, c2, g2, sign, pattern)
    R3         (c1, i1, c2, i2, c3, i3)    three adjacent pairs, sorted

A gap ``g`` on a circle means "insert before position g"; a chord-free
circle has the single gap 0.  For R2_ADD the two sources are inserted
first at ``(c1, g1)`` and ``g2`` indexes the gaps of the enlarged circle
``c2``.  ``sign`` is the sign of the first new chord ``x``; ``pattern`` 0
places the targets as ``x, y`` (parallel strands) and 1 as ``y, x``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .diagram import SOURCE, TARGET, GaussDiagram, canonical_key


class MoveError(ValueError):
    """A move whose window does not satisfy its precondition."""


class MoveKind(enum.IntEnum):
    XI = 0
    R1_REMOVE = 1
    R1_ADD = 2
    R2_REMOVE = 3
    R2_ADD = 4
    R3 = 5


PRIMITIVE_KINDS = frozenset(MoveKind)
ADD_KINDS = frozenset({MoveKind.R1_ADD, MoveKind.R2_ADD})
DEFAULT_SEARCH_KINDS = frozenset(
    {MoveKind.XI, MoveKind.R1_REMOVE, MoveKind.R2_REMOVE, MoveKind.R3})

CHORD_DELTA = {
    MoveKind.XI: 0, MoveKind.R3: 0,
    MoveKind.R1_REMOVE: -1, MoveKind.R1_ADD: 1,
    MoveKind.R2_REMOVE: -2, MoveKind.R2_ADD: 2,
}


@dataclass(frozen=True, order=True)
class Move:
    kind: MoveKind
    window: tuple[int, ...]

    def __str__(self) -> str:
        return format_move(self)


def xi(c, i):
    return Move(MoveKind.XI, (c, i))


def r1_remove(x):
    return Move(MoveKind.R1_REMOVE, (x,))


def r1_add(c, g, sign, order=0):
    return Move(MoveKind.R1_ADD, (c, g, sign, order))


def r2_remove(x, y):
    return Move(MoveKind.R2_REMOVE, (min(x, y), max(x, y)))


def r2_add(c1, g1, c2, g2, sign, pattern=0):
    return Move(MoveKind.R2_ADD, (c1, g1, c2, g2, sign, pattern))


def r3(*pairs):
    flat = []
    for p in sorted(pairs):
        flat.extend(p)
    return Move(MoveKind.R3, tuple(flat))


# -- helpers ---------------------------------------------------------------

def _circle(d: GaussDiagram, c: int) -> list:
    if not 1 <= c <= d.mu:
        raise MoveError(f"no circle {c}")
    return list(d.circles[c - 1])


def _with_circle(d, c, seq, signs=None):
    circles = list(d.circles)
    circles[c - 1] = tuple(seq)
    return d.replace_circles(circles, signs)


def _gap_ok(n: int, g: int) -> bool:
    return (n == 0 and g == 0) or 0 <= g < n


def _adjacent(d, a, b) -> bool:
    """True when endpoint ref ``b`` directly follows ``a`` on one circle."""
    if a.circle != b.circle:
        return False
    n = d.circle_length(a.circle)
    return n >= 2 and (a.position + 1) % n == b.position


def is_free(d: GaussDiagram, cid: int) -> bool:
    ch = d.chord(cid)
    return ch.is_self and (_adjacent(d, ch.source, ch.target) or _adjacent(d, ch.target, ch.source))


def _r2_pair_ok(d, x, y) -> bool:
    if x == y or x not in d.chords or y not in d.chords:
        return False
    cx, cy = d.chord(x), d.chord(y)
    if cx.sign != -cy.sign:
        return False
    src = _adjacent(d, cx.source, cy.source) or _adjacent(d, cy.source, cx.source)
    tgt = _adjacent(d, cx.target, cy.target) or _adjacent(d, cy.target, cx.target)
    return src and tgt


def _r3_roles(d, pairs):
    """Match three adjacent endpoint pairs against the braid-like R3.

    Returns True when the window is the left- or right-hand side of the
    move with chords a (top strand), b, c all of one sign::

        top:    Oa Ob        (right-hand side: Ob Oa)
        middle: Ua Oc        (right-hand side: Oc Ua)
        bottom: Ub Uc        (right-hand side: Uc Ub)
    """
    ends = []
    for c, i in pairs:
        if not 1 <= c <= d.mu:
            return False
        n = d.circle_length(c)
        if n < 2 or not 0 <= i < n:
            return False
        circle = d.circles[c - 1]
        ends.append((circle[i], circle[(i + 1) % n]))
    refs = {(c, i % d.circle_length(c)) for c, i in pairs}
    refs |= {(c, (i + 1) % d.circle_length(c)) for c, i in pairs}
    if len(refs) != 6:
        return False
    ids = {e[0] for pair in ends for e in pair}
    if len(ids) != 3 or len({d.sign(x) for x in ids}) != 1:
        return False
    for flip in (False, True):
        seqs = [p[::-1] if flip else p for p in ends]
        roles = sorted((tuple(r for _, r in s), s) for s in seqs)
        shapes = [r for r, _ in roles]
        if shapes != [(SOURCE, SOURCE), (TARGET, SOURCE), (TARGET, TARGET)]:
            continue
        (oa, ob), (ua, oc), (ub, uc) = (s for _, s in roles)
        a, b, c_ = oa[0], ob[0], oc[0]
        if ua[0] == a and ub[0] == b and uc[0] == c_ and len({a, b, c_}) == 3:
            return True
    return False


# -- application -----------------------------------------------------------

def apply_move(d: GaussDiagram, m: Move) -> GaussDiagram:
    k, w = m.kind, m.window
    if k == MoveKind.XI:
        c, i = w
        seq = _circle(d, c)
        n = len(seq)
        if n < 3 or not 0 <= i < n:
            raise MoveError(f"XI window {w} needs 3 endpoints on circle {c}")
        j = (i + 2) % n
        seq[i], seq[j] = seq[j], seq[i]
        return _with_circle(d, c, seq)

    if k == MoveKind.R1_REMOVE:
        (x,) = w
        if x not in d.chords or not is_free(d, x):
            raise MoveError(f"chord {x} is not a free self-chord")
        c = d.chord(x).source.circle
        seq = [e for e in _circle(d, c) if e[0] != x]
        return _with_circle(d, c, seq)

    if k == MoveKind.R1_ADD:
        c, g, sign, order = w
        seq = _circle(d, c)
        if not _gap_ok(len(seq), g) or sign not in (1, -1) or order not in (0, 1):
            raise MoveError(f"bad R1_ADD window {w}")
        x = d.next_id()
        pair = [(x, SOURCE), (x, TARGET)]
        if order:
            pair.reverse()
        seq[g:g] = pair
        signs = dict(d.signs)
        signs[x] = sign
        return _with_circle(d, c, seq, signs)

    if k == MoveKind.R2_REMOVE:
        x, y = w
        if not _r2_pair_ok(d, x, y):
            raise MoveError(f"chords {x}, {y} do not form an R2 bigon")
        circles = [tuple(e for e in c if e[0] not in (x, y)) for c in d.circles]
        return d.replace_circles(circles)

    if k == MoveKind.R2_ADD:
        c1, g1, c2, g2, sign, pattern = w
        seq1 = _circle(d, c1)
        if not _gap_ok(len(seq1), g1) or sign not in (1, -1) or pattern not in (0, 1):
            raise MoveError(f"bad R2_ADD window {w}")
        x = d.next_id()
        y = x + 1
        seq1[g1:g1] = [(x, SOURCE), (y, SOURCE)]
        circles = list(d.circles)
        circles[c1 - 1] = tuple(seq1)
        seq2 = list(circles[c2 - 1]) if 1 <= c2 <= d.mu else None
        if seq2 is None or not _gap_ok(len(seq2), g2):
            raise MoveError(f"bad R2_ADD window {w}")
        if c2 == c1 and g2 == g1 + 1:
            raise MoveError("R2_ADD targets would split the source pair")
        tg = [(x, TARGET), (y, TARGET)]
        if pattern:
            tg.reverse()
        seq2[g2:g2] = tg
        circles[c2 - 1] = tuple(seq2)
        signs = dict(d.signs)
        signs[x], signs[y] = sign, -sign
        return d.replace_circles(circles, signs)

    if k == MoveKind.R3:
        pairs = [(w[0], w[1]), (w[2], w[3]), (w[4], w[5])]
        if not _r3_roles(d, pairs):
            raise MoveError(f"window {w} is not an R3 configuration")
        circles = [list(c) for c in d.circles]
        for c, i in pairs:
            seq = circles[c - 1]
            j = (i + 1) % len(seq)
            seq[i], seq[j] = seq[j], seq[i]
        return d.replace_circles(circles)

    raise MoveError(f"unknown move kind {k!r}")


def apply_moves(d: GaussDiagram, moves) -> GaussDiagram:
    for m in moves:
        d = apply_move(d, m)
    return d


def invert(d: GaussDiagram, m: Move) -> Move:
    """The move undoing ``m`` on ``apply_move(d, m)`` (up to rotation)."""
    k, w = m.kind, m.window
    if k in (MoveKind.XI, MoveKind.R3):
        return m
    if k == MoveKind.R1_ADD:
        return r1_remove(d.next_id())
    if k == MoveKind.R2_ADD:
        x = d.next_id()
        return r2_remove(x, x + 1)
    if k == MoveKind.R1_REMOVE:
        ch = d.chord(w[0])
        c = ch.source.circle
        n = d.circle_length(c)
        first, order = (ch.source, 0) if _adjacent(d, ch.source, ch.target) else (ch.target, 1)
        g = first.position if first.position < n - 2 else 0
        return r1_add(c, g, ch.sign, order)
    if k == MoveKind.R2_REMOVE:
        # the add site is recovered by search; bigons are rare enough for this
        reduced = apply_move(d, m)
        goal = canonical_key(d)
        for cand in enumerate_moves(reduced, {MoveKind.R2_ADD}, reduced.chord_count + 2):
            if canonical_key(apply_move(reduced, cand)) == goal:
                return cand
    raise MoveError(f"cannot invert {m}")


# -- enumeration -----------------------------------------------------------

def enumerate_moves(d: GaussDiagram, kinds=DEFAULT_SEARCH_KINDS, max_chords: int | None = None) -> list[Move]:
    kinds = frozenset(kinds)
    if max_chords is None:
        max_chords = d.chord_count
    out: list[Move] = []
    n_chords = d.chord_count
    if MoveKind.XI in kinds:
        for c, circle in enumerate(d.circles, start=1):
            if len(circle) >= 3:
                out.extend(xi(c, i) for i in range(len(circle)))
    if MoveKind.R1_REMOVE in kinds:
        out.extend(r1_remove(x) for x in sorted(d.chords) if is_free(d, x))
    if MoveKind.R1_ADD in kinds and n_chords + 1 <= max_chords:
        for c, circle in enumerate(d.circles, start=1):
            for g in range(max(len(circle), 1)):
                for s in (1, -1):
                    for o in (0, 1):
                        out.append(r1_add(c, g, s, o))
    if MoveKind.R2_REMOVE in kinds:
        ids = sorted(d.chords)
        for a_i, x in enumerate(ids):
            for y in ids[a_i + 1:]:
                if _r2_pair_ok(d, x, y):
                    out.append(r2_remove(x, y))
    if MoveKind.R2_ADD in kinds and n_chords + 2 <= max_chords:
        for c1, circle1 in enumerate(d.circles, start=1):
            for g1 in range(max(len(circle1), 1)):
                for c2, circle2 in enumerate(d.circles, start=1):
                    n2 = len(circle2) + (2 if c2 == c1 else 0)
                    for g2 in range(max(n2, 1)):
                        if c2 == c1 and g2 == g1 + 1:
                            continue
                        for s in (1, -1):
                            for p in (0, 1):
                                out.append(r2_add(c1, g1, c2, g2, s, p))
    if MoveKind.R3 in kinds:
        starts = [(c, i) for c, circle in enumerate(d.circles, start=1)
                  for i in range(len(circle)) if len(circle) >= 2]
        found = set()
        for a_i, p in enumerate(starts):
            for b_i in range(a_i + 1, len(starts)):
                for q in starts[b_i + 1:]:
                    trip = (p, starts[b_i], q)
                    if _r3_roles(d, trip):
                        found.add(r3(*trip))
        out.extend(sorted(found))
    return sorted(out)


# -- move-spec grammar -----------------------------------------------------

_NAMES = {
    MoveKind.XI: "xi", MoveKind.R1_REMOVE: "r1-", MoveKind.R1_ADD: "r1+",
    MoveKind.R2_REMOVE: "r2-", MoveKind.R2_ADD: "r2+", MoveKind.R3: "r3",
}


def _sgn(s):
    return "+" if s > 0 else "-"


def format_move(m: Move) -> str:
    w = m.window
    if m.kind == MoveKind.XI:
        return f"xi:c={w[0]},i={w[1]}"
    if m.kind == MoveKind.R1_REMOVE:
        return f"r1-:id={w[0]}"
    if m.kind == MoveKind.R1_ADD:
        return f"r1+:c={w[0]},g={w[1]},s={_sgn(w[2])},o={'ts' if w[3] else 'st'}"
    if m.kind == MoveKind.R2_REMOVE:
        return f"r2-:x={w[0]},y={w[1]}"
    if m.kind == MoveKind.R2_ADD:
        return (f"r2+:c1={w[0]},g1={w[1]},c2={w[2]},g2={w[3]},"
                f"s={_sgn(w[4])},o={'anti' if w[5] else 'par'}")
    return f"r3:p1={w[0]}:{w[1]},p2={w[2]}:{w[3]},p3={w[4]}:{w[5]}"


def _fields(body: str) -> dict[str, str]:
    out = {}
    for part in filter(None, body.split(",")):
        if "=" not in part:
            raise MoveError(f"bad move field {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _sign_field(v):
    if v not in ("+", "-"):
        raise MoveError(f"bad sign {v!r}")
    return 1 if v == "+" else -1


def parse_move(spec: str) -> Move:
    """Parse a primitive move spec such as ``xi:c=1,i=0`` or ``r1-:id=3``."""
    m = re.match(r"^\s*(xi|r1-|r1\+|r2-|r2\+|r3):(.*)$", spec)
    if m is None:
        raise MoveError(f"unknown move spec {spec!r}")
    name, f = m.group(1), _fields(m.group(2))
    try:
        if name == "xi":
            return xi(int(f["c"]), int(f["i"]))
        if name == "r1-":
            return r1_remove(int(f["id"]))
        if name == "r1+":
            order = {"st": 0, "ts": 1}[f.get("o", "st")]
            return r1_add(int(f["c"]), int(f["g"]), _sign_field(f.get("s", "+")), order)
        if name == "r2-":
            return r2_remove(int(f["x"]), int(f["y"]))
        if name == "r2+":
            pattern = {"par": 0, "anti": 1}[f.get("o", "par")]
            return r2_add(int(f["c1"]), int(f["g1"]), int(f["c2"]), int(f["g2"]),
                          _sign_field(f.get("s", "+")), pattern)
        pairs = []
        for key in ("p1", "p2", "p3"):
            c, i = f[key].split(":")
            pairs.append((int(c), int(i)))
        return r3(*pairs)
    except (KeyError, ValueError) as exc:
        raise MoveError(f"malformed move spec {spec!r}: {exc}") from None
