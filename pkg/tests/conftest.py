import json
from pathlib import Path

import pytest

from clonescope.pipeline import analyze_corpus

DATA_DIR = Path(__file__).parent / "data"

# one printed line per acceptance criterion at the end of the run
_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.fspath.basename == "test_acceptance.py":
        status = "PASS" if report.passed else ("FAIL" if report.failed else "SKIP")
        _ACCEPTANCE_RESULTS.append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, status in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture(scope="session")
def planted_corpus_path() -> Path:
    return DATA_DIR / "planted_corpus.jsonl"


@pytest.fixture(scope="session")
def planted_manifest() -> dict:
    return json.loads((DATA_DIR / "planted_manifest.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def planted_run(planted_corpus_path, tmp_path_factory):
    """Full pipeline run over the planted corpus, written to a session dir."""
    out_dir = tmp_path_factory.mktemp("planted-out")
    return analyze_corpus(
        planted_corpus_path, "jsonl", out_dir, min_nloc=6, min_threads=2
    )
