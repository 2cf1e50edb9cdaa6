"""Formal and semantic features of lexicon entries.

A lexeme is described by two kinds of features:

* formal features: every character n-gram (n >= ``min_n``) of the lemma
  decorated with ``$`` at both ends, e.g. ``$or``, ``tion$``;
* semantic features: every token n-gram of its definitions, where a token
  is rendered ``pos.lemma`` and an n-gram never crosses a punctuation mark
  (definitions arrive already split into punctuation-free segments).

Features are sets: an n-gram occurring twice in one lemma is one feature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from lexigraph.errors import InvalidInput

POS_TAGS = frozenset("ANRVX")
BOUNDARY = "$"
JOINER = "_"


def _check_lemma(lemma: str, what: str) -> None:
    if not lemma:
        raise InvalidInput(f"empty {what}")
    if BOUNDARY in lemma:
        raise InvalidInput(f"{what} {lemma!r} contains {BOUNDARY!r}")
    if any(ch.isspace() for ch in lemma):
        raise InvalidInput(f"{what} {lemma!r} contains whitespace")


def _check_pos(pos: str, lemma: str) -> None:
    if pos not in POS_TAGS:
        raise InvalidInput(f"bad POS tag {pos!r} for {lemma!r} (expected one of A, N, R, V, X)")


@dataclass(frozen=True, order=True)
class Lexeme:
    """A headword: a (lemma, POS) pair.

    Ordering is (lemma, pos), which is also the tie-break order used
    when ranking neighbors.
    """

    lemma: str
    pos: str

    def __post_init__(self):
        _check_lemma(self.lemma, "lemma")
        if JOINER in self.lemma:
            raise InvalidInput(f"lemma {self.lemma!r} contains {JOINER!r}")
        _check_pos(self.pos, self.lemma)

    def __str__(self):
        return f"{self.pos}.{self.lemma}"

    @classmethod
    def parse(cls, text: str) -> Lexeme:
        """Parse the ``pos.lemma`` rendering, e.g. ``V.fructifier``."""
        pos, sep, lemma = text.strip().partition(".")
        if not sep:
            raise InvalidInput(f"expected pos.lemma, got {text!r}")
        return cls(lemma, pos)


@dataclass(frozen=True)
class Token:
    """A POS-tagged, lemmatized definition word."""

    pos: str
    lemma: str

    def __post_init__(self):
        _check_lemma(self.lemma, "token lemma")
        if JOINER in self.lemma:
            raise InvalidInput(f"token lemma {self.lemma!r} contains {JOINER!r}")
        _check_pos(self.pos, self.lemma)

    def __str__(self):
        return f"{self.pos}.{self.lemma}"

    @classmethod
    def parse(cls, text: str) -> Token:
        pos, sep, lemma = text.partition(".")
        if not sep:
            raise InvalidInput(f"expected pos.lemma token, got {text!r}")
        return cls(pos, lemma)


# A segment is the run of tokens between two punctuation marks; a
# definition is a list of segments.
Segment = tuple[Token, ...]
Definition = tuple[Segment, ...]


@dataclass(frozen=True)
class Entry:
    lexeme: Lexeme
    definitions: tuple[Definition, ...] = field(default_factory=tuple)

    @classmethod
    def make(cls, lemma: str, pos: str, definitions=()) -> Entry:
        """Build an entry from plain strings.

        ``definitions`` is a list of definitions, each a list of segments,
        each a list of ``"pos.lemma"`` strings or :class:`Token` objects.
        """
        defs = tuple(
            tuple(
                tuple(t if isinstance(t, Token) else Token.parse(t) for t in segment)
                for segment in definition
            )
            for definition in definitions
        )
        return cls(Lexeme(lemma, pos), defs)


class FeatureKind(enum.Enum):
    FORMAL = "formal"
    SEMANTIC = "semantic"


@dataclass(frozen=True)
class Feature:
    kind: FeatureKind
    key: str

    @property
    def is_formal(self) -> bool:
        return self.kind is FeatureKind.FORMAL

    def sort_key(self):
        """Formal features first, then by key."""
        return (not self.is_formal, self.key)


def extract_formal_features(lemma: str, min_n: int = 3) -> set[Feature]:
    """All distinct substrings of ``$lemma$`` of length >= ``min_n``.

    >>> sorted(f.key for f in extract_formal_features("ab"))
    ['$ab', '$ab$', 'ab$']
    """
    _check_lemma(lemma, "lemma")
    if min_n < 1:
        raise InvalidInput(f"min_n must be >= 1, got {min_n}")
    decorated = f"{BOUNDARY}{lemma}{BOUNDARY}"
    size = len(decorated)
    keys = {
        decorated[start:start + n]
        for n in range(min_n, size + 1)
        for start in range(size - n + 1)
    }
    return {Feature(FeatureKind.FORMAL, key) for key in keys}


def segment_ngrams(segment) -> list[str]:
    """Every contiguous n-gram of a segment, rendered and ``_``-joined.

    Returns all t(t+1)/2 n-grams of a t-token segment, duplicates included.
    """
    rendered = [str(tok) for tok in segment]
    t = len(rendered)
    return [
        JOINER.join(rendered[start:stop])
        for start in range(t)
        for stop in range(start + 1, t + 1)
    ]


def extract_semantic_features(definitions) -> set[Feature]:
    keys = set()
    for definition in definitions:
        for segment in definition:
            keys.update(segment_ngrams(segment))
    return {Feature(FeatureKind.SEMANTIC, key) for key in keys}


def entry_features(entry: Entry, min_n: int = 3) -> set[Feature]:
    return extract_formal_features(entry.lexeme.lemma, min_n) | extract_semantic_features(
        entry.definitions
    )
