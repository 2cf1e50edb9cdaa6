"""Bipartite lexeme/feature graph and its stochastic weighting.

Vertices are numbered lexemes first (``0 .. n_lexemes-1``, in entry
order) then features (formal before semantic, each sorted by key).  The
adjacency is stored as a sparse 0/1 incidence matrix ``B`` of shape
``(n_lexemes, n_features)``; the full symmetric adjacency is
``[[0, B], [B.T, 0]]`` and is never materialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from lexigraph.errors import DuplicateLexeme, InvalidInput, UnknownLexeme
from lexigraph.features import Feature, FeatureKind, Lexeme, entry_features


class Mode(enum.Enum):
    """Which feature kinds receive activation from a lexeme."""

    FORMAL = "form"
    SEMANTIC = "sem"
    BOTH = "form+sem"

    @classmethod
    def parse(cls, text: str) -> Mode:
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise InvalidInput(f"unknown mode {text!r} (expected one of {names})") from None


@dataclass(eq=False)
class BipartiteGraph:
    lexemes: tuple[Lexeme, ...]
    features: tuple[Feature, ...]
    incidence: sp.csr_matrix
    _lexeme_index: dict = field(init=False, repr=False)
    _feature_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.incidence = sp.csr_matrix(self.incidence, dtype=np.int8)
        self.incidence.sort_indices()
        if self.incidence.shape != (len(self.lexemes), len(self.features)):
            raise InvalidInput(
                f"incidence shape {self.incidence.shape} does not match "
                f"{len(self.lexemes)} lexemes x {len(self.features)} features"
            )
        self._lexeme_index = {lx: i for i, lx in enumerate(self.lexemes)}
        self._feature_index = {f: i for i, f in enumerate(self.features)}

    @property
    def n_lexemes(self) -> int:
        return len(self.lexemes)

    @property
    def n_features(self) -> int:
        return len(self.features)

    @property
    def n_vertices(self) -> int:
        return self.n_lexemes + self.n_features

    def lexeme_index(self, lexeme: Lexeme) -> int:
        try:
            return self._lexeme_index[lexeme]
        except KeyError:
            raise UnknownLexeme(f"unknown lexeme {lexeme}") from None

    def feature_index(self, feature: Feature) -> int:
        return self._feature_index[feature]

    def __contains__(self, item) -> bool:
        return item in self._lexeme_index or item in self._feature_index

    @property
    def formal_mask(self) -> np.ndarray:
        """Boolean array over features: True for formal features."""
        return np.fromiter((f.is_formal for f in self.features), dtype=bool, count=self.n_features)

    def feature_degrees(self) -> np.ndarray:
        return np.asarray(self.incidence.sum(axis=0)).ravel().astype(np.int64)

    def lexeme_degrees(self) -> np.ndarray:
        return np.asarray(self.incidence.sum(axis=1)).ravel().astype(np.int64)

    def features_of(self, lexeme: Lexeme) -> list[Feature]:
        i = self.lexeme_index(lexeme)
        row = self.incidence.indices[self.incidence.indptr[i]:self.incidence.indptr[i + 1]]
        return [self.features[j] for j in row]

    def lexemes_of(self, feature: Feature) -> list[Lexeme]:
        j = self.feature_index(feature)
        col = self.incidence.getcol(j).tocoo().row
        return [self.lexemes[i] for i in sorted(col)]

    def same_structure(self, other: BipartiteGraph) -> bool:
        """Identical vertex tables (indices included) and edges."""
        return (
            self.lexemes == other.lexemes
            and self.features == other.features
            and self.incidence.shape == other.incidence.shape
            and (self.incidence != other.incidence).nnz == 0
        )


def _check_unique(entries) -> None:
    seen = set()
    for entry in entries:
        if entry.lexeme in seen:
            raise DuplicateLexeme(f"duplicate lexeme {entry.lexeme}")
        seen.add(entry.lexeme)


def build_graph(entries, min_n: int = 3, prune: bool = True) -> BipartiteGraph:
    """Connect each entry's lexeme to its formal and semantic features."""
    entries = list(entries)
    _check_unique(entries)
    per_entry = [entry_features(e, min_n) for e in entries]
    features = sorted(set().union(*per_entry), key=Feature.sort_key)
    index = {f: j for j, f in enumerate(features)}

    indptr = [0]
    indices = []
    for feats in per_entry:
        indices.extend(sorted(index[f] for f in feats))
        indptr.append(len(indices))
    data = np.ones(len(indices), dtype=np.int8)
    incidence = sp.csr_matrix(
        (data, np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
        shape=(len(entries), len(features)),
    )
    graph = BipartiteGraph(tuple(e.lexeme for e in entries), tuple(features), incidence)
    return prune_hapax(graph) if prune else graph


def prune_hapax(graph: BipartiteGraph) -> BipartiteGraph:
    """Drop features attached to fewer than two lexemes.

    Lexemes are kept even when left without any feature, so lexeme
    indices are unchanged.
    """
    keep = np.flatnonzero(graph.feature_degrees() >= 2)
    if len(keep) == graph.n_features:
        return graph
    return BipartiteGraph(
        graph.lexemes,
        tuple(graph.features[j] for j in keep),
        graph.incidence[:, keep],
    )


@dataclass(eq=False)
class EdgeWeighting:
    """Row-stochastic transition probabilities over the bipartite graph.

    ``lexeme_to_feature[i, j]`` is the weight of edge (lexeme i, feature j)
    and ``feature_to_lexeme[j, i]`` the weight of the reverse edge.  Rows
    of vertices without any edge usable in ``mode`` are all zero; those
    lexemes are listed in ``absorbing``.
    """

    mode: Mode
    formal_share: float
    lexeme_to_feature: sp.csr_matrix
    feature_to_lexeme: sp.csr_matrix
    absorbing: tuple[int, ...]

    def row_sums(self) -> tuple[np.ndarray, np.ndarray]:
        lex = np.asarray(self.lexeme_to_feature.sum(axis=1)).ravel()
        feat = np.asarray(self.feature_to_lexeme.sum(axis=1)).ravel()
        return lex, feat


def _safe_inverse(counts: np.ndarray) -> np.ndarray:
    out = np.zeros(len(counts), dtype=np.float64)
    nz = counts > 0
    out[nz] = 1.0 / counts[nz]
    return out


def weighting(graph: BipartiteGraph, mode: Mode = Mode.BOTH, formal_share: float = 0.5) -> EdgeWeighting:
    """Edge-class-aware transition probabilities.

    In ``Mode.BOTH`` a lexeme connected to both kinds of features sends
    ``formal_share`` of its activation to its formal features and the
    rest to its semantic features, split evenly inside each kind; a
    lexeme with a single kind sends everything there.  The other modes
    mask one kind entirely.  A feature spreads uniformly over its
    lexemes.
    """
    if not 0.0 <= formal_share <= 1.0:
        raise InvalidInput(f"formal_share must lie in [0, 1], got {formal_share}")
    B = graph.incidence.astype(np.float64)
    formal = graph.formal_mask
    semantic = ~formal
    use_formal = mode in (Mode.FORMAL, Mode.BOTH)
    use_semantic = mode in (Mode.SEMANTIC, Mode.BOTH)

    deg_formal = np.asarray(B[:, formal].sum(axis=1)).ravel() if use_formal else np.zeros(graph.n_lexemes)
    deg_semantic = np.asarray(B[:, semantic].sum(axis=1)).ravel() if use_semantic else np.zeros(graph.n_lexemes)
    has_formal = deg_formal > 0
    has_semantic = deg_semantic > 0
    both = has_formal & has_semantic

    formal_scale = np.where(both, formal_share, 1.0) * _safe_inverse(deg_formal)
    semantic_scale = np.where(both, 1.0 - formal_share, 1.0) * _safe_inverse(deg_semantic)

    # per-entry scale: row factor depends on the column's feature kind
    coo = B.tocoo()
    col_formal = formal[coo.col]
    values = np.where(col_formal, formal_scale[coo.row], semantic_scale[coo.row])
    lex_to_feat = sp.csr_matrix((values, (coo.row, coo.col)), shape=B.shape)
    lex_to_feat.eliminate_zeros()
    lex_to_feat.sort_indices()

    active = (formal & use_formal) | (semantic & use_semantic)
    feat_deg = np.asarray(B.sum(axis=0)).ravel()
    feat_scale = _safe_inverse(feat_deg) * active
    BT = B.T.tocsr()
    feat_to_lex = sp.diags(feat_scale).dot(BT).tocsr()
    feat_to_lex.eliminate_zeros()
    feat_to_lex.sort_indices()

    absorbing = tuple(int(i) for i in np.flatnonzero(~(has_formal | has_semantic)))
    return EdgeWeighting(mode, float(formal_share), lex_to_feat, feat_to_lex, absorbing)


@dataclass(frozen=True)
class KindStats:
    features: int
    edges: int
    hapax: int

    @property
    def hapax_fraction(self) -> float:
        return self.hapax / self.features if self.features else 0.0


@dataclass(frozen=True)
class GraphStats:
    lexemes: int
    isolated_lexemes: int
    formal: KindStats
    semantic: KindStats

    @property
    def features(self) -> int:
        return self.formal.features + self.semantic.features

    @property
    def edges(self) -> int:
        return self.formal.edges + self.semantic.edges

    @property
    def hapax(self) -> int:
        return self.formal.hapax + self.semantic.hapax

    @property
    def hapax_fraction(self) -> float:
        return self.hapax / self.features if self.features else 0.0

    @property
    def vertices(self) -> int:
        return self.lexemes + self.features


def stats(graph: BipartiteGraph) -> GraphStats:
    degrees = graph.feature_degrees()
    formal = graph.formal_mask

    def kind(mask):
        d = degrees[mask]
        return KindStats(features=int(mask.sum()), edges=int(d.sum()), hapax=int((d == 1).sum()))

    return GraphStats(
        lexemes=graph.n_lexemes,
        isolated_lexemes=int((graph.lexeme_degrees() == 0).sum()),
        formal=kind(formal),
        semantic=kind(~formal),
    )


def subgraph_without(graph: BipartiteGraph, kind: FeatureKind) -> BipartiteGraph:
    """Copy of ``graph`` with every feature of ``kind`` deleted."""
    keep = np.flatnonzero(np.array([f.kind is not kind for f in graph.features], dtype=bool))
    return BipartiteGraph(graph.lexemes, tuple(graph.features[j] for j in keep), graph.incidence[:, keep])
