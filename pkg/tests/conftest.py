import pytest

ACCEPTANCE = {}


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    monkeypatch.delenv("IRREC_CACHE_DIR", raising=False)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, seconds, summary = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %2d: %s  (%.2fs; %s)" % (k, status, seconds, summary))
