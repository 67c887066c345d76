"""Deciding whether a crossing sequence is realized by an embedded curve.

Cut the disc along every ray.  What is left is simply connected, so each
piece of the curve between consecutive crossings is a chord of the cut
boundary, and the arc embeds exactly when some choice of (a) the side
each crossing enters its ray from and (b) the bottom-to-top order of the
crossings on each ray makes all chords pairwise non-interleaving.
Counterclockwise, the cut boundary reads: the basepoint b, then for each
ray from n down to 1 its right side top to bottom, the puncture, and its
left side bottom to top.

Both choice families are searched by backtracking.  The relative
circular order of points already on the boundary never changes when a
later crossing is inserted, so a segment can be rejected as soon as both
of its endpoints are placed; the search is nevertheless exhaustive.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator

from .arcs import Arc
from .errors import CapExceeded

log = logging.getLogger(__name__)

Token = tuple[str, int]


@dataclass(frozen=True)
class EmbeddingWitness:
    """Per-crossing side choices plus per-ray crossing orders.

    sides[j] is "LR" when the curve meets crossing j on the left copy of
    its ray and leaves on the right copy, "RL" for the opposite.  heights
    pairs each crossed ray with the 0-based crossing indices on it,
    bottom to top.
    """

    sides: tuple[str, ...]
    heights: tuple[tuple[int, tuple[int, ...]], ...]

    def height_map(self) -> dict[int, tuple[int, ...]]:
        return {ray: order for ray, order in self.heights}

    def to_json(self) -> dict:
        return {
            "sides": list(self.sides),
            "heights": {str(ray): list(order) for ray, order in self.heights},
        }

    @classmethod
    def from_json(cls, data: dict) -> EmbeddingWitness:
        heights = tuple(
            sorted(
                (int(ray), tuple(int(j) for j in order))
                for ray, order in data["heights"].items()
            )
        )
        return cls(tuple(str(s) for s in data["sides"]), heights)


@dataclass(frozen=True)
class EmbeddingReport:
    """Verdict plus how much of the choice space the search visited."""

    embeddable: bool
    witness: EmbeddingWitness | None
    branches: int
    search_space: int


def _entry(side: str, j: int) -> Token:
    return ("L", j) if side == "LR" else ("R", j)


def _exit(side: str, j: int) -> Token:
    return ("R", j) if side == "LR" else ("L", j)


def _boundary_positions(n: int, heights: dict[int, list[int]]) -> dict[Token, int]:
    """Index of every boundary point in counterclockwise order."""
    tokens: list[Token] = [("b", 0)]
    for s in range(n, 0, -1):
        order = heights.get(s, [])
        tokens.extend(("R", j) for j in reversed(order))
        tokens.append(("p", s))
        tokens.extend(("L", j) for j in order)
    return {t: i for i, t in enumerate(tokens)}


def _interleave(pos: dict[Token, int], a: tuple[Token, Token], b: tuple[Token, Token]) -> bool:
    lo, hi = sorted((pos[a[0]], pos[a[1]]))
    return (lo < pos[b[0]] < hi) != (lo < pos[b[1]] < hi)


def _space_size(a: Arc) -> int:
    size = 2 ** len(a.crossings)
    for s in set(a.crossings):
        size *= factorial(a.crossings.count(s))
    return size


def probe_embedding(a: Arc, cap: int = 12) -> EmbeddingReport:
    """Exhaustive embeddability decision with search statistics.

    Branches are tried in lexicographic order (sides "LR" before "RL",
    insertion heights bottom first), so the returned witness is the
    first one in that order.  branches counts the placements tried;
    search_space is the unpruned 2^l * prod(m_s!) product.
    """
    l = len(a.crossings)
    if l > cap:
        raise CapExceeded(f"{l} crossings exceed the cap {cap}")
    space = _space_size(a)
    if l == 0:
        return EmbeddingReport(True, EmbeddingWitness((), ()), 0, space)
    n = max(a.endpoint, max(a.crossings))

    sides: list[str] = []
    heights: dict[int, list[int]] = {s: [] for s in set(a.crossings)}
    chords: list[tuple[Token, Token]] = []
    branches = 0

    def clear(chord: tuple[Token, Token]) -> bool:
        pos = _boundary_positions(n, heights)
        return not any(_interleave(pos, chord, c) for c in chords)

    def place(j: int) -> EmbeddingWitness | None:
        nonlocal branches
        if j == l:
            closing = (_exit(sides[-1], l - 1), ("p", a.endpoint))
            if clear(closing):
                return EmbeddingWitness(
                    tuple(sides),
                    tuple(sorted((s, tuple(o)) for s, o in heights.items())),
                )
            return None
        slots = heights[a.crossings[j]]
        for side in ("LR", "RL"):
            sides.append(side)
            for at in range(len(slots) + 1):
                branches += 1
                slots.insert(at, j)
                entering = ("b", 0) if j == 0 else _exit(sides[j - 1], j - 1)
                chord = (entering, _entry(side, j))
                if clear(chord):
                    chords.append(chord)
                    found = place(j + 1)
                    if found is not None:
                        return found
                    chords.pop()
                slots.pop(at)
            sides.pop()
        return None

    witness = place(0)
    if witness is None:
        log.debug(
            "no embedding for %s: search tree of %d placements, leaf space %d",
            a, branches, space,
        )
    return EmbeddingReport(witness is not None, witness, branches, space)


def is_embeddable(a: Arc, cap: int = 12) -> tuple[bool, EmbeddingWitness | None]:
    report = probe_embedding(a, cap)
    return report.embeddable, report.witness


def candidate_witnesses(a: Arc) -> Iterator[EmbeddingWitness]:
    """Every (sides, heights) candidate, unpruned, in lexicographic order.

    The product grows as 2^l * prod(m_s!); meant for audits of small
    arcs, where checking each candidate independently confirms a
    negative verdict without trusting the backtracking search.
    """
    rays = sorted(set(a.crossings))
    per_ray = {s: [j for j, c in enumerate(a.crossings) if c == s] for s in rays}
    for sides in product(("LR", "RL"), repeat=len(a.crossings)):
        for orders in product(*(permutations(per_ray[s]) for s in rays)):
            yield EmbeddingWitness(sides, tuple(zip(rays, orders)))


def witness_is_valid(a: Arc, witness: EmbeddingWitness) -> bool:
    """Re-check a witness by walking the boundary once with a stack.

    The chords of a witnessed embedding must open and close like
    balanced brackets along the circle; this re-derives the verdict
    without the pairwise interleaving test the search uses.
    """
    l = len(a.crossings)
    if len(witness.sides) != l or any(s not in ("LR", "RL") for s in witness.sides):
        return False
    heights = witness.height_map()
    placed = [j for order in heights.values() for j in order]
    if sorted(placed) != list(range(l)):
        return False
    for ray, order in heights.items():
        if any(a.crossings[j] != ray for j in order):
            return False

    n = max((a.endpoint, *a.crossings))
    pos = _boundary_positions(n, {s: list(o) for s, o in heights.items()})
    owner: dict[Token, int] = {("b", 0): 0, ("p", a.endpoint): l}
    for j, side in enumerate(witness.sides):
        owner[_entry(side, j)] = j
        owner[_exit(side, j)] = j + 1

    stack: list[int] = []
    open_chords: set[int] = set()
    for token in sorted(pos, key=pos.get):
        chord = owner.get(token)
        if chord is None:
            continue
        if chord in open_chords:
            if not stack or stack[-1] != chord:
                return False
            stack.pop()
        else:
            open_chords.add(chord)
            stack.append(chord)
    return not stack
