"""Gauss diagrams of ordered, oriented virtual links.

A diagram is a tuple of circles; each circle is the cyclic sequence of
chord endpoints met while travelling along the component.  An endpoint is
a pair ``(chord_id, role)`` with role ``"O"`` (over, arrow tail, the
chord's source) or ``"U"`` (under, arrow head, the chord's target).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

SOURCE = "O"
TARGET = "U"

Endpoint = tuple[int, str]


class GaussCodeError(ValueError):
    """Raised for malformed or inconsistent Gauss code."""


@dataclass(frozen=True, order=True)
class EndpointRef:
    circle: int  # 1-based
    position: int  # 0-based


@dataclass(frozen=True)
class Chord:
    id: int
    sign: int
    source: EndpointRef
    target: EndpointRef

    @property
    def is_self(self) -> bool:
        return self.source.circle == self.target.circle

    @property
    def type(self) -> tuple[int, int]:
        return (self.source.circle, self.target.circle)


@dataclass(frozen=True)
class GaussDiagram:
    circles: tuple[tuple[Endpoint, ...], ...]
    signs: tuple[tuple[int, int], ...] = ()
    _chords: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    @classmethod
    def build(cls, circles: Iterable[Sequence[Endpoint]], signs: dict[int, int]) -> "GaussDiagram":
        circles = tuple(tuple((int(i), r) for i, r in c) for c in circles)
        d = cls(circles, tuple(sorted(signs.items())))
        d.validate()
        return d

    @classmethod
    def empty(cls, mu: int) -> "GaussDiagram":
        return cls(tuple(() for _ in range(mu)), ())

    def __post_init__(self):
        chords = {}
        where: dict[int, dict[str, EndpointRef]] = {}
        for c, circle in enumerate(self.circles, start=1):
            for pos, (cid, role) in enumerate(circle):
                where.setdefault(cid, {})[role] = EndpointRef(c, pos)
        sign_of = dict(self.signs)
        for cid, roles in where.items():
            if SOURCE in roles and TARGET in roles and cid in sign_of:
                chords[cid] = Chord(cid, sign_of[cid], roles[SOURCE], roles[TARGET])
        object.__setattr__(self, "_chords", chords)

    def validate(self) -> None:
        seen: dict[tuple[int, str], int] = {}
        for circle in self.circles:
            for cid, role in circle:
                if role not in (SOURCE, TARGET):
                    raise GaussCodeError(f"bad role {role!r} for chord {cid}")
                if cid <= 0:
                    raise GaussCodeError(f"chord id must be positive, got {cid}")
                seen[(cid, role)] = seen.get((cid, role), 0) + 1
        ids = {cid for cid, _ in seen}
        sign_of = dict(self.signs)
        for cid in sorted(ids):
            if seen.get((cid, SOURCE), 0) != 1 or seen.get((cid, TARGET), 0) != 1:
                raise GaussCodeError(
                    f"chord {cid} must appear exactly once as O and once as U")
            if sign_of.get(cid) not in (1, -1):
                raise GaussCodeError(f"chord {cid} has no valid sign")
        if set(sign_of) != ids:
            raise GaussCodeError("sign table does not match the chords present")

    @property
    def mu(self) -> int:
        return len(self.circles)

    @property
    def chords(self) -> dict[int, Chord]:
        return self._chords

    def chord(self, cid: int) -> Chord:
        try:
            return self._chords[cid]
        except KeyError:
            raise KeyError(f"no chord with id {cid}") from None

    def sign(self, cid: int) -> int:
        return self._chords[cid].sign

    @property
    def chord_count(self) -> int:
        return len(self._chords)

    def endpoint(self, ref: EndpointRef) -> Endpoint:
        return self.circles[ref.circle - 1][ref.position]

    def locate(self, cid: int, role: str) -> EndpointRef:
        ch = self.chord(cid)
        return ch.source if role == SOURCE else ch.target

    def circle_length(self, c: int) -> int:
        return len(self.circles[c - 1])

    def next_id(self) -> int:
        return max(self._chords, default=0) + 1

    def replace_circles(self, circles, signs=None) -> "GaussDiagram":
        if signs is None:
            signs = dict(self.signs)
        live = {cid for circle in circles for cid, _ in circle}
        signs = {k: v for k, v in signs.items() if k in live}
        return GaussDiagram.build(circles, signs)

    def __str__(self) -> str:
        return serialize(self)


_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse Gauss code: one line per circle, ``()`` for a chord-free circle.

    >>> serialize(parse_gauss_code("O1+ O2+\\nU1+ U2+"))
    'O1+ O2+\\nU1+ U2+'
    """
    circles = []
    signs: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "()":
            circles.append(())
            continue
        circle = []
        for tok in line.split():
            m = _TOKEN.match(tok)
            if m is None:
                raise GaussCodeError(f"line {lineno}: bad token {tok!r}")
            role, cid, s = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
            if cid <= 0:
                raise GaussCodeError(f"line {lineno}: chord id must be positive")
            if signs.setdefault(cid, s) != s:
                raise GaussCodeError(f"sign mismatch for id {cid}")
            circle.append((cid, role))
        circles.append(tuple(circle))
    if not circles:
        raise GaussCodeError("no circles in input")
    return GaussDiagram.build(circles, signs)


def _format_circle(circle, sign_of, label=None) -> str:
    if not circle:
        return "()"
    out = []
    for cid, role in circle:
        s = "+" if sign_of[cid] > 0 else "-"
        out.append(f"{role}{cid if label is None else label[cid]}{s}")
    return " ".join(out)


def serialize(d: GaussDiagram) -> str:
    sign_of = dict(d.signs)
    return "\n".join(_format_circle(c, sign_of) for c in d.circles)


def _relabelled_text(circles, sign_of) -> str:
    label: dict[int, int] = {}
    for circle in circles:
        for cid, _ in circle:
            if cid not in label:
                label[cid] = len(label) + 1
    return "\n".join(_format_circle(c, sign_of, label) for c in circles)


def canonical_key(d: GaussDiagram) -> str:
    """Least relabelled serialization over all per-circle rotations.

    Circles keep their order and orientation; only the base point of each
    circle moves.
    """
    sign_of = dict(d.signs)
    options = [
        [c[k:] + c[:k] for k in range(len(c))] or [c]
        for c in d.circles
    ]
    return min(_relabelled_text(combo, sign_of) for combo in itertools.product(*options))


def isomorphic(d1: GaussDiagram, d2: GaussDiagram) -> bool:
    return d1.mu == d2.mu and d1.chord_count == d2.chord_count and (
        canonical_key(d1) == canonical_key(d2))


def canonical_diagram(d: GaussDiagram) -> GaussDiagram:
    return parse_gauss_code(canonical_key(d))
