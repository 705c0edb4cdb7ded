import contextlib
import time

import pytest

ACCEPTANCE: list[tuple[str, str]] = []


def pytest_addoption(parser):
    parser.addoption("--big", action="store_true", help="also run the n = 6 engine cross-check")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--big"):
        return
    skip = pytest.mark.skip(reason="needs --big")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """``with criterion("3", "title"):`` records one PASS/FAIL line for the block."""
    @contextlib.contextmanager
    def run(key: str, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            line = f"criterion {key} [{title}]: FAIL ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
            print(line)
            ACCEPTANCE.append((key, line))
            raise
        line = f"criterion {key} [{title}]: PASS ({time.perf_counter() - start:.1f}s)"
        print(line)
        ACCEPTANCE.append((key, line))
    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE, key=lambda kv: kv[0]):
            terminalreporter.write_line(line)
