"""Bounded search over the move graph, random scrambles and small censuses.

Search is a semi-decision tool: a found path proves equivalence, a miss
proves nothing.  Inequivalence always comes from the invariants.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass, field

from .diagram import SOURCE, TARGET, GaussDiagram, canonical_key, parse_gauss_code
from .invariants import invariant_profile
from .moves import (DEFAULT_SEARCH_KINDS, PRIMITIVE_KINDS, Move, apply_move, format_move,
                    apply_moves, enumerate_moves)


class CensusError(ValueError):
    pass


@dataclass
class SearchResult:
    found: bool
    path: list[Move] = field(default_factory=list)
    visited: int = 0
    frontier_exhausted: bool = False

    def as_dict(self) -> dict:
        return {
            "found": self.found,
            "path": [str(m) for m in self.path],
            "visited": self.visited,
            "frontier_exhausted": self.frontier_exhausted,
        }


def bfs_connect(d1: GaussDiagram, d2: GaussDiagram, max_chords: int | None = None,
                max_states: int = 100_000, kinds=DEFAULT_SEARCH_KINDS) -> SearchResult:
    """Breadth-first search from d1 for a diagram isomorphic to d2.

    ``max_chords`` caps the chord count of every visited state (it defaults
    to the larger of the two inputs); ADD kinds only fire below the cap.
    """
    if max_chords is None:
        max_chords = max(d1.chord_count, d2.chord_count)
    goal = canonical_key(d2)
    start = canonical_key(d1)
    if d1.mu != d2.mu:
        return SearchResult(False, [], 0, False)
    if start == goal:
        return SearchResult(True, [], 1, False)
    parent: dict[str, tuple[str, Move] | None] = {start: None}
    queue = deque([(start, d1)])
    while queue:
        key, d = queue.popleft()
        for m in enumerate_moves(d, kinds, max_chords):
            nd = apply_move(d, m)
            if nd.chord_count > max_chords:
                continue
            nk = canonical_key(nd)
            if nk in parent:
                continue
            parent[nk] = (key, m)
            if nk == goal:
                return SearchResult(True, _path(parent, nk), len(parent), False)
            if len(parent) >= max_states:
                return SearchResult(False, [], len(parent), False)
            queue.append((nk, nd))
    return SearchResult(False, [], len(parent), True)


def _path(parent, key) -> list[Move]:
    out = []
    while parent[key] is not None:
        key, m = parent[key]
        out.append(m)
    return out[::-1]


def replay(d: GaussDiagram, path) -> GaussDiagram:
    return apply_moves(d, path)


def random_scramble(d: GaussDiagram, steps: int, seed: int = 0,
                    max_chords: int | None = None, kinds=PRIMITIVE_KINDS):
    """Apply ``steps`` uniformly chosen legal moves; returns (diagram, trace)."""
    rng = random.Random(seed)
    if max_chords is None:
        max_chords = d.chord_count + 2
    trace = []
    for _ in range(steps):
        options = enumerate_moves(d, kinds, max_chords)
        if not options:
            continue
        m = rng.choice(options)
        d = apply_move(d, m)
        trace.append(m)
    return d, trace


def random_diagram(rng: random.Random, mu: int, n_chords: int) -> GaussDiagram:
    """Uniformly placed chords with random signs and orientations."""
    slots = [[] for _ in range(mu)]
    signs = {}
    for cid in range(1, n_chords + 1):
        signs[cid] = rng.choice((1, -1))
        for role in (SOURCE, TARGET):
            c = rng.randrange(mu)
            slots[c].insert(rng.randint(0, len(slots[c])), (cid, role))
    return GaussDiagram.build(slots, signs)


# -- census ------------------------------------------------------------------

def enumerate_diagrams(mu: int, n_chords: int):
    """All Gauss diagrams with exactly ``n_chords`` chords, up to isomorphism."""
    seen = set()
    endpoints = [(cid, role) for cid in range(1, n_chords + 1) for role in (SOURCE, TARGET)]
    n = len(endpoints)
    for assignment in itertools.product(range(mu), repeat=n):
        groups = [[e for e, c in zip(endpoints, assignment) if c == k] for k in range(mu)]
        for orders in itertools.product(*(itertools.permutations(g) for g in groups)):
            for sign_bits in itertools.product((1, -1), repeat=n_chords):
                signs = dict(zip(range(1, n_chords + 1), sign_bits))
                d = GaussDiagram.build(orders, signs)
                key = canonical_key(d)
                if key not in seen:
                    seen.add(key)
                    yield key


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def census(max_chords: int, mu: int = 2, max_states: int = 20_000, kinds=DEFAULT_SEARCH_KINDS) -> dict:
    """Group every small diagram by profile and probe each group by search.

    Within a group, every member is searched towards the group's first
    (smallest) member.  Every discovered path is replayed, and the census checks that
    no replayed path ever joins diagrams with different profiles.
    """
    if max_chords > 3:
        raise CensusError("census is limited to max_chords <= 3")
    if mu != 2:
        raise CensusError("census is implemented for 2-component diagrams")
    keys = [k for n in range(max_chords + 1) for k in enumerate_diagrams(mu, n)]
    profile_of = {k: invariant_profile(parse_gauss_code(k)) for k in keys}
    groups: dict = {}
    for k in keys:
        groups.setdefault(profile_of[k], []).append(k)
    uf = _UnionFind()
    violations = []
    report = []
    for profile, members in sorted(groups.items(), key=lambda kv: str(kv[0].as_dict())):
        base = parse_gauss_code(members[0])
        hist: Counter = Counter()
        checked = connected = 0
        for other in members[1:]:
            # search towards the base: removals shrink, so this direction
            # needs no chord additions
            start = parse_gauss_code(other)
            res = bfs_connect(start, base, max_chords, max_states, kinds)
            checked += 1
            if not res.found:
                continue
            connected += 1
            hist[len(res.path)] += 1
            d = start
            for m in res.path:
                nd = apply_move(d, m)
                if invariant_profile(nd) != profile:
                    violations.append((canonical_key(d), format_move(m)))
                uf.union(canonical_key(d), canonical_key(nd))
                d = nd
            if canonical_key(d) != members[0]:
                violations.append((other, "replay did not reach " + members[0]))
        report.append({
            "profile": profile.as_dict(),
            "member_count": len(members),
            "connected_pairs_checked": checked,
            "connected_pairs_found": connected,
            "path_length_histogram": {str(k): v for k, v in sorted(hist.items())},
        })
    # no union-find component may mix profiles
    comp_profiles: dict = {}
    for k in list(uf.parent):
        pr = profile_of.get(k) or invariant_profile(parse_gauss_code(k))
        comp_profiles.setdefault(uf.find(k), set()).add(pr)
    mixed = sum(1 for s in comp_profiles.values() if len(s) > 1)
    return {
        "max_chords": max_chords,
        "mu": mu,
        "diagram_count": len(keys),
        "group_count": len(groups),
        "groups": report,
        "mixed_components": mixed,
        "violations": [list(v) for v in violations],
        "sound": not violations and mixed == 0,
    }
