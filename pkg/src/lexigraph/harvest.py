"""Harvesting analogical quadruplets from morphological neighborhoods.

For a seed ``a``, every pair of its neighbors ``b``, ``c`` and every
common neighbor ``d`` of ``b`` and ``c`` make a candidate ``a:b::c:d``.
A candidate is kept, in either of its orders ``a:b::c:d`` and
``a:c::b:d``, when the two pairs of that order have the same edit
signature.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from lexigraph.analogy import is_degenerate, signature
from lexigraph.errors import InvalidInput, UnknownLexeme
from lexigraph.features import Lexeme
from lexigraph.graph import BipartiteGraph, EdgeWeighting, Mode
from lexigraph.walk import Neighbor, neighbors

log = logging.getLogger(__name__)

DEFAULT_K = 100

# lexeme -> its ranked neighbor list
NeighborhoodIndex = dict[Lexeme, list[Neighbor]]


@dataclass(frozen=True, order=True)
class AnalogyQuadruplet:
    """``a:b::c:d``; ``seed`` is the harvesting seed that produced it."""

    a: Lexeme
    b: Lexeme
    c: Lexeme
    d: Lexeme
    seed: Lexeme = field(compare=False)
    mode: Mode = field(compare=False)

    @property
    def members(self) -> tuple[Lexeme, Lexeme, Lexeme, Lexeme]:
        return (self.a, self.b, self.c, self.d)

    def canonical(self) -> AnalogyQuadruplet:
        """Representative of the class {a:b::c:d, c:d::a:b}."""
        swapped = (self.c, self.d, self.a, self.b)
        if swapped < self.members:
            return AnalogyQuadruplet(*swapped, seed=self.seed, mode=self.mode)
        return self

    def __str__(self):
        return f"{self.a}:{self.b}::{self.c}:{self.d}"


def candidate_quadruplets(index: NeighborhoodIndex, a: Lexeme, tally: Counter | None = None):
    """Yield candidate ``(a, b, c, d)`` tuples from the neighborhood index.

    ``b`` and ``c`` range over the neighbors of ``a`` other than ``a``,
    each unordered pair once with ``b`` ranked before ``c``; ``d`` ranges
    over the neighbors of ``b`` (in rank order) that also neighbor ``c``.
    Pairs whose ``b`` or ``c`` has no entry in ``index`` are skipped and
    counted under ``"missing"`` in ``tally``.
    """
    pool = [n.lexeme for n in index[a] if n.lexeme != a]
    for i, b in enumerate(pool):
        for c in pool[i + 1:]:
            if b not in index or c not in index:
                if tally is not None:
                    tally["missing"] += 1
                continue
            near_c = {n.lexeme for n in index[c]}
            for n in index[b]:
                d = n.lexeme
                if d in near_c and d != a and d != b and d != c:
                    yield a, b, c, d


def accepts(a: Lexeme, b: Lexeme, c: Lexeme, d: Lexeme) -> bool:
    """Non-degenerate formal analogy between the four lemmas."""
    if len({a, b, c, d}) < 4:
        return False
    sig = signature(a.lemma, b.lemma)
    return not is_degenerate(sig) and sig == signature(c.lemma, d.lemma)


@dataclass
class HarvestResult:
    quadruplets: list[AnalogyQuadruplet]
    per_seed: dict[Lexeme, int]
    errors: dict[Lexeme, str]
    tally: Counter

    def __len__(self):
        return len(self.quadruplets)


class NeighborCache:
    """Lazily computed neighbor lists for one graph and weighting."""

    def __init__(self, graph: BipartiteGraph, weights: EdgeWeighting, k: int, steps: int = 2):
        self.graph = graph
        self.weights = weights
        self.k = k
        self.steps = steps
        self.index: NeighborhoodIndex = {}

    def get(self, lexeme: Lexeme) -> list[Neighbor]:
        found = self.index.get(lexeme)
        if found is None:
            found = neighbors(self.graph, self.weights, lexeme, self.k, self.steps)
            self.index[lexeme] = found
        return found

    def fill(self, seed: Lexeme) -> None:
        """Make sure the seed and all its neighbors are indexed."""
        for n in self.get(seed):
            self.get(n.lexeme)


def harvest(
    graph: BipartiteGraph,
    weights: EdgeWeighting,
    seeds,
    k: int = DEFAULT_K,
    steps: int = 2,
) -> HarvestResult:
    """Collect the analogies found around each seed.

    The result is deduplicated under a:b::c:d == c:d::a:b, keeps the first
    seed that found each quadruplet, and is sorted.  Unknown seeds are
    reported in ``errors`` and skipped.
    """
    if k < 2:
        raise InvalidInput(f"k must be >= 2, got {k}")
    cache = NeighborCache(graph, weights, k, steps)
    found: dict[AnalogyQuadruplet, AnalogyQuadruplet] = {}
    per_seed: dict[Lexeme, int] = {}
    errors: dict[Lexeme, str] = {}
    tally: Counter = Counter()
    for seed in seeds:
        if seed in per_seed or seed in errors:
            continue
        try:
            cache.fill(seed)
        except UnknownLexeme as exc:
            errors[seed] = str(exc)
            log.warning("skipping seed %s: %s", seed, exc)
            continue
        mine = set()
        for a, b, c, d in candidate_quadruplets(cache.index, seed, tally):
            tally["candidates"] += 1
            # the pair {b, c} comes once; a:c::b:d is a distinct analogy
            for quad in ((a, b, c, d), (a, c, b, d)):
                if not accepts(*quad):
                    continue
                q = AnalogyQuadruplet(*quad, seed=seed, mode=weights.mode).canonical()
                mine.add(q)
                found.setdefault(q, q)
        per_seed[seed] = len(mine)
    return HarvestResult(sorted(found.values()), per_seed, errors, tally)
