"""Orbits of labeled graphs under local complementation.

Breadth-first search over the n single-vertex moves enumerates the orbit of
a graph state under local Clifford operations. Orbits are over labeled
graphs: vertex relabeling is deliberately not factored out, since the moves
act on fixed qubits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations

from . import graphs
from .decomposition import LCSequence, Single

DEFAULT_MEMBER_CAP = 10**6


class CapExceededError(RuntimeError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"orbit exceeds the member cap of {cap}")


@dataclass(frozen=True)
class Orbit:
    """A complete orbit: members, its lexicographic minimum, and replayable transcripts."""

    seed: graphs.Graph
    members: frozenset
    canonical: graphs.Graph
    transcripts: dict = field(compare=False)


def _lex_key(g):
    """Row-major upper-triangular adjacency bits; tuple order is lexicographic."""
    return tuple(
        g.adj.entry(i, j) for i in range(g.n) for j in range(i + 1, g.n)
    )


def enumerate_orbit(g, member_cap=DEFAULT_MEMBER_CAP):
    """BFS closure of the graph under all single-vertex complementations.

    Every member gets a shortest-move transcript from the seed (replaying it
    with :func:`decomposition.apply_sequence` reproduces the member). Raises
    CapExceededError rather than growing past ``member_cap`` members.
    """
    transcripts = {g: LCSequence(())}
    frontier = deque([g])
    while frontier:
        cur = frontier.popleft()
        base = transcripts[cur].steps
        for i in range(1, g.n + 1):
            nxt = graphs.local_complement(cur, i)
            if nxt in transcripts:
                continue
            if len(transcripts) >= member_cap:
                raise CapExceededError(member_cap)
            transcripts[nxt] = LCSequence(base + (Single(i),))
            frontier.append(nxt)
    canonical = min(transcripts, key=_lex_key)
    return Orbit(
        seed=g,
        members=frozenset(transcripts),
        canonical=canonical,
        transcripts=transcripts,
    )


def canonical_form(g, member_cap=DEFAULT_MEMBER_CAP):
    """Lexicographically smallest member of the orbit; orbit-invariant and idempotent."""
    return enumerate_orbit(g, member_cap=member_cap).canonical


def same_orbit(g, h, member_cap=DEFAULT_MEMBER_CAP):
    """True iff the two graphs share an orbit (equal canonical forms)."""
    if g.n != h.n:
        raise ValueError("vertex count mismatch")
    return canonical_form(g, member_cap) == canonical_form(h, member_cap)


def are_isomorphic(g, h):
    """Brute-force labeled-isomorphism test by trying all vertex permutations.

    Experimental helper for grouping canonical forms; factorial cost, intended
    for n <= 8 only.
    """
    if g.n != h.n:
        return False
    if sorted(g.degree(i) for i in range(1, g.n + 1)) != sorted(
        h.degree(i) for i in range(1, h.n + 1)
    ):
        return False
    g_edges = set(g.edges())
    for perm in permutations(range(1, g.n + 1)):
        mapped = {
            tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in h.edges()
        }
        if mapped == g_edges:
            return True
    return False


def group_by_isomorphism(members):
    """Partition graphs into isomorphism classes by brute force. Experimental; n <= 8."""
    classes = []
    for g in members:
        for cls in classes:
            if are_isomorphic(cls[0], g):
                cls.append(g)
                break
        else:
            classes.append([g])
    return classes
