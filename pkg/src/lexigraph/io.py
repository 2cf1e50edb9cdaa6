"""Lexicon ingest, graph snapshots and result dumps.

Lexicon files are UTF-8 JSON Lines, one headword per line::

    {"lemma": "orientation", "pos": "N",
     "definitions": [[["N.action", "X.de", "V.orienter"], ["X.de", "V.s'orienter"]],
                     [["N.résultat", "X.de", "X.ce", "N.action"]]]}

``definitions`` is a list of definitions, each a list of segments (runs of
tokens between punctuation marks), each a list of tagged tokens written
``pos.lemma`` or ``[pos, lemma]``.  Blank lines and lines starting with
``#`` are ignored.

Snapshots are JSON documents carrying a format tag and version number.
Result dumps are tab-separated UTF-8 text with LF line endings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from lexigraph.errors import DuplicateLexeme, InvalidInput, LexiconError, SnapshotError
from lexigraph.features import Entry, Feature, FeatureKind, Lexeme, Token
from lexigraph.graph import BipartiteGraph

SNAPSHOT_FORMAT = "lexigraph-snapshot"
SNAPSHOT_VERSION = 1


def _token(raw, line):
    try:
        if isinstance(raw, str):
            return Token.parse(raw)
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return Token(str(raw[0]), str(raw[1]))
    except InvalidInput as exc:
        raise LexiconError(str(exc), line) from None
    raise LexiconError(f"bad token {raw!r}", line)


def parse_record(text: str, line: int | None = None) -> Entry:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LexiconError(f"invalid JSON: {exc.msg}", line) from None
    if not isinstance(record, dict):
        raise LexiconError("record is not an object", line)
    try:
        lemma = record["lemma"]
        pos = record["pos"]
    except KeyError as exc:
        raise LexiconError(f"missing field {exc.args[0]!r}", line) from None
    definitions = record.get("definitions", [])
    if not isinstance(definitions, list) or not all(
        isinstance(d, list) and all(isinstance(s, list) for s in d) for d in definitions
    ):
        raise LexiconError("definitions must be a list of lists of segments", line)
    try:
        lexeme = Lexeme(lemma, pos)
    except (InvalidInput, TypeError) as exc:
        raise LexiconError(str(exc), line) from None
    defs = tuple(
        tuple(tuple(_token(t, line) for t in segment) for segment in definition)
        for definition in definitions
    )
    return Entry(lexeme, defs)


def load_lexicon(path) -> list[Entry]:
    entries = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, text in enumerate(fh, start=1):
            text = text.strip()
            if not text or text.startswith("#"):
                continue
            entry = parse_record(text, lineno)
            if entry.lexeme in seen:
                raise DuplicateLexeme(
                    f"duplicate lexeme {entry.lexeme} (first seen on line {seen[entry.lexeme]})",
                    lineno,
                )
            seen[entry.lexeme] = lineno
            entries.append(entry)
    return entries


def entry_record(entry: Entry) -> dict:
    return {
        "lemma": entry.lexeme.lemma,
        "pos": entry.lexeme.pos,
        "definitions": [
            [[str(tok) for tok in segment] for segment in definition]
            for definition in entry.definitions
        ],
    }


def dump_lexicon(entries, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for entry in entries:
            fh.write(json.dumps(entry_record(entry), ensure_ascii=False) + "\n")


@dataclass(frozen=True)
class BuildParams:
    min_n: int = 3
    prune: bool = True
    formal_share: float = 0.5


def save_graph(graph: BipartiteGraph, params: BuildParams, path) -> None:
    inc = graph.incidence
    doc = {
        "format": SNAPSHOT_FORMAT,
        "version": SNAPSHOT_VERSION,
        "params": {"min_n": params.min_n, "prune": params.prune, "formal_share": params.formal_share},
        "lexemes": [[lx.lemma, lx.pos] for lx in graph.lexemes],
        "features": [[f.kind.value, f.key] for f in graph.features],
        "rows": [inc.indices[inc.indptr[i]:inc.indptr[i + 1]].tolist() for i in range(graph.n_lexemes)],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, ensure_ascii=False, separators=(",", ":"))
        fh.write("\n")


def load_graph(path) -> tuple[BipartiteGraph, BuildParams]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SnapshotError(f"{path}: not a readable snapshot ({exc})") from None
    if not isinstance(doc, dict) or doc.get("format") != SNAPSHOT_FORMAT:
        raise SnapshotError(f"{path}: missing or wrong snapshot header")
    version = doc.get("version")
    if version != SNAPSHOT_VERSION:
        raise SnapshotError(
            f"{path}: snapshot version {version} is not supported (this build reads version {SNAPSHOT_VERSION})"
        )
    try:
        p = doc["params"]
        params = BuildParams(int(p["min_n"]), bool(p["prune"]), float(p["formal_share"]))
        lexemes = tuple(Lexeme(lemma, pos) for lemma, pos in doc["lexemes"])
        features = tuple(Feature(FeatureKind(kind), key) for kind, key in doc["features"])
        rows = doc["rows"]
        if len(rows) != len(lexemes):
            raise SnapshotError(f"{path}: {len(rows)} edge rows for {len(lexemes)} lexemes")
        indptr = np.zeros(len(rows) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(r) for r in rows])
        indices = np.fromiter((j for r in rows for j in r), dtype=np.int64, count=int(indptr[-1]))
        if len(indices) and (indices.min() < 0 or indices.max() >= len(features)):
            raise SnapshotError(f"{path}: edge points outside the feature table")
        data = np.ones(len(indices), dtype=np.int8)
        incidence = sp.csr_matrix((data, indices, indptr), shape=(len(lexemes), len(features)))
    except SnapshotError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SnapshotError(f"{path}: corrupted snapshot body ({exc})") from None
    return BipartiteGraph(lexemes, features, incidence), params


def format_activation(value: float) -> str:
    return f"{value:.12g}"


def _write_lines(path, lines) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for line in lines:
                fh.write(line + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def neighbor_lines(neighbors, header: str | None = None) -> list[str]:
    lines = [f"# {header}"] if header else []
    lines.extend(
        f"{rank}\t{n.lexeme}\t{format_activation(n.activation)}"
        for rank, n in enumerate(neighbors, start=1)
    )
    return lines


def write_neighbors(neighbors, path, header: str | None = None) -> None:
    _write_lines(path, neighbor_lines(neighbors, header))


def read_neighbors(path) -> list[tuple[int, Lexeme, float]]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        rank, word, act = line.split("\t")
        out.append((int(rank), Lexeme.parse(word), float(act)))
    return out


QUADRUPLET_HEADER = "# a\tb\tc\td\tmode\tseed\treview"


def quadruplet_lines(quads) -> list[str]:
    lines = [QUADRUPLET_HEADER]
    lines.extend(
        f"{q.a}\t{q.b}\t{q.c}\t{q.d}\t{q.mode.value}\t{q.seed}\t" for q in quads
    )
    return lines


def write_quadruplets(quads, path) -> None:
    """One quadruplet per line; the last column is left empty for review."""
    _write_lines(path, quadruplet_lines(quads))


def read_quadruplets(path) -> list[tuple[Lexeme, Lexeme, Lexeme, Lexeme, str, str]]:
    """Parse a quadruplet dump; returns (a, b, c, d, mode, review) rows."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        a, b, c, d = (Lexeme.parse(w) for w in fields[:4])
        out.append((a, b, c, d, fields[4], fields[6]))
    return out
