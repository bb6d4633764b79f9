from importlib.resources import files

import pytest

from lpreadings.syntax import ground_text

CORPUS = ("p1", "trans", "deadalive", "mixed")


def corpus_text(name: str) -> str:
    return (files("lpreadings") / "corpus" / f"{name}.lp").read_text()


def corpus_path(name: str) -> str:
    return str(files("lpreadings") / "corpus" / f"{name}.lp")


@pytest.fixture
def p1():
    return ground_text(corpus_text("p1"))


@pytest.fixture
def trans():
    return ground_text(corpus_text("trans"))


@pytest.fixture
def p3():
    return ground_text(corpus_text("deadalive"))


@pytest.fixture
def p4():
    return ground_text(corpus_text("mixed"))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
