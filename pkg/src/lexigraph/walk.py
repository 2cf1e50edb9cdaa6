"""Spreading activation by finite random walks on the bipartite graph.

The activation of vertex ``v`` after ``n`` steps from ``seed`` is the
``(seed, v)`` entry of ``M**n``.  Only the seed's row is propagated, one
sparse vector-matrix product per step, alternating between the lexeme
and feature sides of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from lexigraph.errors import InvalidInput
from lexigraph.features import Lexeme
from lexigraph.graph import BipartiteGraph, EdgeWeighting, Mode


@dataclass(frozen=True, eq=False)
class ActivationVector:
    """Probability mass over vertices after ``steps`` propagation steps.

    ``lexemes`` and ``features`` are indexed like the graph's vertex
    tables.
    """

    seed: Lexeme
    steps: int
    mode: Mode
    lexemes: np.ndarray
    features: np.ndarray

    @property
    def total(self) -> float:
        return float(self.lexemes.sum() + self.features.sum())

    def as_vector(self) -> np.ndarray:
        """Dense vector over all vertices, lexemes first."""
        return np.concatenate([self.lexemes, self.features])


class Neighbor(NamedTuple):
    lexeme: Lexeme
    activation: float


def spread(graph: BipartiteGraph, weights: EdgeWeighting, seed: Lexeme, steps: int = 2) -> ActivationVector:
    if steps < 1:
        raise InvalidInput(f"steps must be >= 1, got {steps}")
    start = graph.lexeme_index(seed)
    lex = np.zeros(graph.n_lexemes)
    lex[start] = 1.0
    feat = np.zeros(graph.n_features)
    # transposes are csc views, no copy
    to_features = weights.lexeme_to_feature.T
    to_lexemes = weights.feature_to_lexeme.T
    for step in range(steps):
        if step % 2 == 0:
            feat = to_features @ lex
            lex = np.zeros(graph.n_lexemes)
        else:
            lex = to_lexemes @ feat
            feat = np.zeros(graph.n_features)
    return ActivationVector(seed, steps, weights.mode, lex, feat)


def rank(graph: BipartiteGraph, activation: ActivationVector, k: int) -> list[Neighbor]:
    """Top ``k`` lexemes with positive activation.

    Ties are broken by lemma then POS so the order is total.
    """
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    mass = activation.lexemes
    hits = np.flatnonzero(mass > 0)
    ordered = sorted(hits, key=lambda i: (-mass[i], graph.lexemes[i].lemma, graph.lexemes[i].pos))
    return [Neighbor(graph.lexemes[i], float(mass[i])) for i in ordered[:k]]


def neighbors(graph: BipartiteGraph, weights: EdgeWeighting, seed: Lexeme, k: int, steps: int = 2) -> list[Neighbor]:
    """The ``k`` nearest morphological neighbors of ``seed``.

    The seed itself is part of the list (usually first).
    """
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    return rank(graph, spread(graph, weights, seed, steps), k)
