"""Command-line interface.

::

    lexigraph build --input lexicon.jsonl --snapshot graph.json
    lexigraph neighbors --snapshot graph.json --mode form --k 40 V.fructifier
    lexigraph check fructueux infructueusement soucieux insoucieusement
    lexigraph harvest --snapshot graph.json --seeds seeds.txt --mode form --output quads.tsv
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections import defaultdict
from dataclasses import dataclass, field

from lexigraph import analogy
from lexigraph.errors import LexigraphError
from lexigraph.features import Lexeme
from lexigraph.graph import Mode, build_graph, prune_hapax, stats, weighting
from lexigraph.harvest import DEFAULT_K, harvest
from lexigraph.io import (
    BuildParams,
    load_graph,
    load_lexicon,
    neighbor_lines,
    quadruplet_lines,
    save_graph,
    write_neighbors,
    write_quadruplets,
)
from lexigraph.walk import neighbors

log = logging.getLogger("lexigraph")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    min_n: int = 3
    formal_share: float | None = None
    steps: int = 2
    k: int = DEFAULT_K
    modes: list[Mode] = field(default_factory=lambda: [Mode.BOTH])
    prune: bool = True
    seeds_path: str | None = None
    all_headwords: bool = False
    by_length: bool = False
    input: str | None = None
    output: str | None = None
    snapshot: str | None = None

    def validate(self, command: str) -> None:
        if self.min_n < 1:
            raise UsageError(f"--min-n must be >= 1, got {self.min_n}")
        if self.formal_share is not None and not 0.0 <= self.formal_share <= 1.0:
            raise UsageError(f"--formal-share must lie in [0, 1], got {self.formal_share}")
        if self.k < 1:
            raise UsageError(f"--k must be >= 1, got {self.k}")
        if command in ("neighbors", "harvest") and (self.steps < 2 or self.steps % 2):
            raise UsageError(f"--steps must be even and >= 2, got {self.steps}")
        if command == "harvest" and self.k < 2:
            raise UsageError(f"--k must be >= 2 for harvest, got {self.k}")
        if command == "build" and not self.input:
            raise UsageError("build needs --input")
        if command == "build" and not (self.snapshot or self.output):
            raise UsageError("build needs --snapshot (or --output) for the graph file")
        if command in ("neighbors", "harvest") and not (self.input or self.snapshot):
            raise UsageError(f"{command} needs --input or --snapshot")
        if command == "harvest" and not (self.seeds_path or self.all_headwords):
            raise UsageError("harvest needs --seeds FILE or --all")
        if command == "neighbors" and len(self.modes) != 1:
            raise UsageError("neighbors takes a single --mode")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="lexicon file (JSON Lines)")
    p.add_argument("--snapshot", help="graph snapshot file")
    p.add_argument("--output", help="output file (default: standard output)")
    p.add_argument("--min-n", type=int, default=3, help="minimum character n-gram length (default 3)")
    p.add_argument("--formal-share", type=float, default=None,
                   help="activation share sent to formal features (default 0.5)")
    p.add_argument("--no-prune", dest="prune", action="store_false", help="keep hapax features")


def _add_walk(p: argparse.ArgumentParser) -> None:
    p.add_argument("--steps", type=int, default=2, help="propagation steps (even, default 2)")
    p.add_argument("--k", type=int, default=DEFAULT_K, help="neighbors per word (default 100)")
    p.add_argument("--mode", action="append", choices=[m.value for m in Mode],
                   help="propagation mode; may be repeated for harvest (default form+sem)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexigraph", description="Morpheme-free derivational structure of a lexicon.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the lexeme/feature graph and report feature counts")
    _add_common(p)

    p = sub.add_parser("neighbors", help="rank the morphological neighbors of a word")
    _add_common(p)
    _add_walk(p)
    p.add_argument("word", help="word as pos.lemma, e.g. V.fructifier")

    p = sub.add_parser("check", help="test a formal analogy a:b::c:d")
    for name in "abcd":
        p.add_argument(name)

    p = sub.add_parser("harvest", help="collect analogies from neighborhoods")
    _add_common(p)
    _add_walk(p)
    p.add_argument("--seeds", dest="seeds_path", help="file with one pos.lemma per line")
    p.add_argument("--all", dest="all_headwords", action="store_true", help="use every headword as a seed")
    p.add_argument("--by-length", action="store_true", help="also report analogies per headword length")
    return parser


def config_from_args(args) -> RunConfig:
    cfg = RunConfig()
    for name in ("min_n", "formal_share", "steps", "k", "prune", "seeds_path",
                 "all_headwords", "by_length", "input", "output", "snapshot"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "mode", None):
        cfg.modes = [Mode(m) for m in dict.fromkeys(args.mode)]
    return cfg


def _emit(lines, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(line + "\n" for line in lines)
    else:
        sys.stdout.writelines(line + "\n" for line in lines)


def _load(cfg: RunConfig):
    """Graph and formal share from a snapshot, or built from the lexicon."""
    if cfg.snapshot and not cfg.input:
        graph, params = load_graph(cfg.snapshot)
        share = params.formal_share if cfg.formal_share is None else cfg.formal_share
        return graph, share
    entries = load_lexicon(cfg.input)
    share = 0.5 if cfg.formal_share is None else cfg.formal_share
    return build_graph(entries, cfg.min_n, cfg.prune), share


def stats_table(complete, reduced) -> list[str]:
    """Feature counts before and after pruning, with the hapax rate."""
    rows = [
        ("formal", complete.formal.features, reduced.formal.features, complete.formal.hapax_fraction),
        ("semantic", complete.semantic.features, reduced.semantic.features, complete.semantic.hapax_fraction),
        ("total", complete.features, reduced.features, complete.hapax_fraction),
    ]
    lines = [f"{'features':<10}{'complete':>12}{'reduced':>12}{'hapax':>8}"]
    for name, full, kept, frac in rows:
        lines.append(f"{name:<10}{full:>12}{kept:>12}{frac * 100:>7.0f}%")
    return lines


def cmd_build(cfg: RunConfig) -> int:
    entries = load_lexicon(cfg.input)
    full = build_graph(entries, cfg.min_n, prune=False)
    graph = prune_hapax(full) if cfg.prune else full
    share = 0.5 if cfg.formal_share is None else cfg.formal_share
    save_graph(graph, BuildParams(cfg.min_n, cfg.prune, share), cfg.snapshot or cfg.output)
    reduced = stats(graph)
    lines = [f"lexemes: {reduced.lexemes}"]
    lines += stats_table(stats(full), reduced)
    lines.append(f"edges: {reduced.edges}")
    if reduced.isolated_lexemes:
        log.warning("%d lexeme(s) have no feature left and will not spread activation", reduced.isolated_lexemes)
    _emit(lines, None)
    return 0


def cmd_neighbors(cfg: RunConfig, word: str) -> int:
    seed = Lexeme.parse(word)
    graph, share = _load(cfg)
    mode = cfg.modes[0]
    weights = weighting(graph, mode, share)
    ranked = neighbors(graph, weights, seed, cfg.k, cfg.steps)
    header = f"seed={seed} mode={mode.value} steps={cfg.steps} k={cfg.k}"
    if cfg.output:
        write_neighbors(ranked, cfg.output, header)
    else:
        _emit(neighbor_lines(ranked, header), None)
    return 0


def cmd_check(a: str, b: str, c: str, d: str) -> int:
    left = analogy.signature(a, b)
    right = analogy.signature(c, d)
    verdict = left == right
    print(f"sigma({a},{b}) = {analogy.format_script(left)}")
    print(f"sigma({c},{d}) = {analogy.format_script(right)}")
    print(f"{a}:{b}::{c}:{d} {'true' if verdict else 'false'}")
    if verdict and analogy.is_degenerate(left):
        log.warning("degenerate analogy: both pairs are identical strings")
    return 0


def _read_seeds(path) -> list[Lexeme]:
    seeds = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                seeds.append(Lexeme.parse(line))
            except LexigraphError as exc:
                log.warning("%s line %d: %s", path, lineno, exc)
    return seeds


def cmd_harvest(cfg: RunConfig) -> int:
    graph, share = _load(cfg)
    seeds = list(graph.lexemes) if cfg.all_headwords else _read_seeds(cfg.seeds_path)
    all_quads = []
    summary = [f"{'configuration':<14}{'analogies':>10}{'correct':>9}{'errors':>8}"]
    per_seed_lines = []
    by_length = defaultdict(int)
    resolved = 0
    for mode in cfg.modes:
        weights = weighting(graph, mode, share)
        result = harvest(graph, weights, seeds, cfg.k, cfg.steps)
        resolved = max(resolved, len(result.per_seed))
        all_quads.extend(result.quadruplets)
        summary.append(f"{mode.value:<14}{len(result):>10}{'':>9}{'':>8}")
        for seed, count in result.per_seed.items():
            per_seed_lines.append(f"{mode.value}\t{seed}\t{count}")
            by_length[mode.value, len(seed.lemma)] += count
    if not resolved:
        log.warning("no seed could be resolved in the graph; nothing harvested")
    if cfg.output:
        write_quadruplets(all_quads, cfg.output)
    else:
        _emit(quadruplet_lines(all_quads), None)
        summary = ["# " + line for line in summary]
    lines = summary + ["", "mode\tseed\tanalogies"] + per_seed_lines
    if cfg.by_length:
        lines += ["", f"{'configuration':<14}{'length':>6}{'analogies':>10}{'correct':>9}{'errors':>8}"]
        lines += [
            f"{mode:<14}{n:>6}{count:>10}{'':>9}{'':>8}"
            for (mode, n), count in sorted(by_length.items())
        ]
    out = sys.stdout if cfg.output else sys.stderr
    out.writelines(line + "\n" for line in lines)
    return 0


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "check":
        return cmd_check(args.a, args.b, args.c, args.d)
    cfg = config_from_args(args)
    try:
        cfg.validate(args.command)
    except UsageError as exc:
        parser.error(str(exc))
    try:
        if args.command == "build":
            return cmd_build(cfg)
        if args.command == "neighbors":
            return cmd_neighbors(cfg, args.word)
        return cmd_harvest(cfg)
    except (LexigraphError, OSError) as exc:
        print(f"lexigraph: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
