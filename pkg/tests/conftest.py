import pytest

from pglreduce.corpus import random_corpus, theorem_corpus


@pytest.fixture(scope="session")
def corpus100():
    return random_corpus(100)


@pytest.fixture(scope="session")
def corpus20():
    return theorem_corpus(20)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()[:4]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
