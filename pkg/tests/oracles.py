"""Slow reference implementations used only by the tests.

Each oracle recomputes its result from first principles and must not
share code paths with what it checks: the dense walk rebuilds the
transition matrix edge by edge from the adjacency, the harvest oracle
enumerates every ordered quadruplet of the lexicon, and the string
helpers enumerate rather than compute.
"""

import itertools

import numpy as np

from lexigraph.analogy import EditOp, is_degenerate, signature, simplify
from lexigraph.errors import SizeError
from lexigraph.graph import Mode, build_graph, weighting

MAX_DENSE_VERTICES = 500
MAX_EXHAUSTIVE_WORDS = 50


def dense_adjacency(graph):
    """Full symmetric 0/1 adjacency, lexemes first then features."""
    n = graph.n_vertices
    A = np.zeros((n, n))
    L = graph.n_lexemes
    coo = graph.incidence.tocoo()
    for i, j in zip(coo.row, coo.col):
        A[i, L + j] = 1
        A[L + j, i] = 1
    return A


def dense_transition(graph, mode, formal_share):
    """Transition matrix built cell by cell from the edge classes.

    Edges lexeme->formal feature, lexeme->semantic feature and
    feature->lexeme each get their own normalization.
    """
    A = dense_adjacency(graph)
    L = graph.n_lexemes
    n = graph.n_vertices
    is_formal = [f.is_formal for f in graph.features]
    keep_formal = mode in (Mode.FORMAL, Mode.BOTH)
    keep_semantic = mode in (Mode.SEMANTIC, Mode.BOTH)
    M = np.zeros((n, n))
    for i in range(L):
        formal_edges = [j for j in range(L, n) if A[i, j] and is_formal[j - L] and keep_formal]
        semantic_edges = [j for j in range(L, n) if A[i, j] and not is_formal[j - L] and keep_semantic]
        for j in formal_edges:
            M[i, j] = (formal_share if semantic_edges else 1.0) / len(formal_edges)
        for j in semantic_edges:
            M[i, j] = (1.0 - formal_share if formal_edges else 1.0) / len(semantic_edges)
    for j in range(L, n):
        active = keep_formal if is_formal[j - L] else keep_semantic
        lexemes = [i for i in range(L) if A[j, i]]
        if active and lexemes:
            for i in lexemes:
                M[j, i] = 1.0 / len(lexemes)
    return M


def dense_spread(graph, weights, seed, steps):
    """Row ``seed`` of ``M**steps`` as a dense vector over all vertices."""
    if graph.n_vertices > MAX_DENSE_VERTICES:
        raise SizeError(f"dense oracle refuses {graph.n_vertices} vertices (> {MAX_DENSE_VERTICES})")
    M = dense_transition(graph, weights.mode, weights.formal_share)
    start = np.zeros(graph.n_vertices)
    start[graph.lexeme_index(seed)] = 1.0
    return start @ np.linalg.matrix_power(M, steps)


def dense_neighbors(graph, weights, seed, k, steps=2):
    row = dense_spread(graph, weights, seed, steps)[: graph.n_lexemes]
    order = sorted(
        (i for i in range(graph.n_lexemes) if row[i] > 0),
        key=lambda i: (-row[i], graph.lexemes[i].lemma, graph.lexemes[i].pos),
    )
    return [(graph.lexemes[i], row[i]) for i in order[:k]]


def canonical(quad):
    a, b, c, d = quad
    return min((a, b, c, d), (c, d, a, b))


def exhaustive_harvest(entries, k, mode=Mode.BOTH, formal_share=0.5, min_n=3, prune=True, seeds=None):
    """All analogies a:b::c:d meeting the neighborhood conditions.

    ``b`` and ``c`` are non-seed neighbors of ``a``, ``d`` a neighbor of
    both; found by trying every ordered quadruplet of distinct words.
    Returns canonical (a, b, c, d) tuples.
    """
    entries = list(entries)
    if len(entries) > MAX_EXHAUSTIVE_WORDS:
        raise SizeError(f"exhaustive harvest refuses {len(entries)} words (> {MAX_EXHAUSTIVE_WORDS})")
    graph = build_graph(entries, min_n, prune)
    weights = weighting(graph, mode, formal_share)
    near = {lx: {n for n, _ in dense_neighbors(graph, weights, lx, k)} for lx in graph.lexemes}
    seeds = set(graph.lexemes if seeds is None else seeds)
    out = set()
    for a, b, c, d in itertools.permutations(graph.lexemes, 4):
        if a not in seeds:
            continue
        if b not in near[a] or c not in near[a]:
            continue
        if d not in near[b] or d not in near[c]:
            continue
        sig = signature(a.lemma, b.lemma)
        if is_degenerate(sig) or sig != signature(c.lemma, d.lemma):
            continue
        out.add(canonical((a, b, c, d)))
    return out


def all_substrings(s, min_len):
    """Distinct substrings of ``s`` with length >= ``min_len``, by slicing every (i, j)."""
    return {s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1) if j - i >= min_len}


def levenshtein(a, b):
    """Distance only, two-row recurrence."""
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def all_min_paths(a, b):
    """Every least-cost edit script from ``a`` to ``b``."""
    L = [[levenshtein(a[:i], b[:j]) for j in range(len(b) + 1)] for i in range(len(a) + 1)]

    def rec(i, j):
        if i == 0 and j == 0:
            yield ()
            return
        here = L[i][j]
        if j > 0 and L[i][j - 1] + 1 == here:
            for p in rec(i, j - 1):
                yield p + (EditOp("I", "", b[j - 1]),)
        if i > 0 and L[i - 1][j] + 1 == here:
            for p in rec(i - 1, j):
                yield p + (EditOp("D", a[i - 1], ""),)
        if i > 0 and j > 0 and L[i - 1][j - 1] + (a[i - 1] != b[j - 1]) == here:
            kind = "M" if a[i - 1] == b[j - 1] else "S"
            for p in rec(i - 1, j - 1):
                yield p + (EditOp(kind, a[i - 1], b[j - 1]),)

    return list(rec(len(a), len(b)))


def wildcard(script):
    return tuple(EditOp("M", "@", "@") if op.kind == "M" else op for op in simplify(script))


_PREFERENCE = {"I": 0, "D": 1, "M": 2, "S": 2}


def preferred_path(a, b):
    """The least-cost script that, read from its end, prefers I over D over diagonal."""
    return min(all_min_paths(a, b), key=lambda p: [_PREFERENCE[op.kind] for op in reversed(p)])
