"""Morpheme-free derivational structure of a lexicon.

Build a bipartite graph between headwords and their character and
definition n-grams, rank morphological neighbors by two-step random
walks, and keep neighbor quadruplets that form formal analogies.
"""

from lexigraph.analogy import edit_matrix, is_analogy, is_analogy_oracle, signature
from lexigraph.features import Entry, Feature, FeatureKind, Lexeme, Token
from lexigraph.graph import BipartiteGraph, EdgeWeighting, Mode, build_graph, prune_hapax, stats, weighting
from lexigraph.harvest import AnalogyQuadruplet, harvest
from lexigraph.io import load_graph, load_lexicon, save_graph
from lexigraph.walk import neighbors, spread

__version__ = "0.1.0"

__all__ = [
    "AnalogyQuadruplet",
    "BipartiteGraph",
    "EdgeWeighting",
    "Entry",
    "Feature",
    "FeatureKind",
    "Lexeme",
    "Mode",
    "Token",
    "build_graph",
    "edit_matrix",
    "harvest",
    "is_analogy",
    "is_analogy_oracle",
    "load_graph",
    "load_lexicon",
    "neighbors",
    "prune_hapax",
    "save_graph",
    "signature",
    "spread",
    "stats",
    "weighting",
]
