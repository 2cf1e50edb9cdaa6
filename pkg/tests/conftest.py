import random
from collections import OrderedDict
from pathlib import Path

import pytest

from lexigraph.features import Entry
from lexigraph.graph import build_graph
from lexigraph.io import load_lexicon

DATA = Path(__file__).parent / "data"

TOKENS = ["N.action", "X.de", "V.faire", "A.petit", "N.chose", "X.le", "V.être", "N.fruit"]


def random_entries(rng, n_words, alphabet="abcde", max_len=5):
    """Small random lexicon; some entries have no definition."""
    lemmas = set()
    while len(lemmas) < n_words:
        lemmas.add("".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len))))
    entries = []
    for lemma in sorted(lemmas):
        defs = []
        for _ in range(rng.choice([0, 0, 1, 1, 2])):
            segments = [
                [rng.choice(TOKENS) for _ in range(rng.randint(1, 3))]
                for _ in range(rng.randint(1, 2))
            ]
            defs.append(segments)
        entries.append(Entry.make(lemma, rng.choice("ANV"), defs))
    return entries


def random_graph(rng, max_vertices=200):
    """Random toy graph with at most ``max_vertices`` vertices."""
    while True:
        entries = random_entries(rng, rng.randint(2, 8))
        graph = build_graph(entries, min_n=rng.choice([2, 3]), prune=rng.random() < 0.7)
        if graph.n_vertices <= max_vertices:
            return graph


@pytest.fixture
def rng():
    return random.Random(20240614)


@pytest.fixture(scope="session")
def grid12_path():
    return DATA / "grid12.jsonl"


@pytest.fixture(scope="session")
def grid12():
    return load_lexicon(DATA / "grid12.jsonl")


@pytest.fixture(scope="session")
def fructifier_lexicon():
    return load_lexicon(DATA / "fructifier.jsonl")


@pytest.fixture(scope="session")
def synth50():
    return load_lexicon(DATA / "synth50.jsonl")


@pytest.fixture(scope="session")
def orientation_lexicon():
    return load_lexicon(DATA / "orientation.jsonl")


# -- acceptance report ------------------------------------------------------

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion exercised by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.criterion if hasattr(report, "criterion") else None
    if marker is None:
        return
    number, title = marker
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": 0})
    entry["passed" if report.passed else "failed"] += 1


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "PASS" if entry["failed"] == 0 else "FAIL"
        total = entry["passed"] + entry["failed"]
        tr.write_line(f"[{verdict}] criterion {number:>2}: {entry['title']} ({entry['passed']}/{total} checks)")
