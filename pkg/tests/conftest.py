import pytest
from hypothesis import HealthCheck, settings

from packsyz.characters import Decomposition
from packsyz.partitions import NPartition, Partition

settings.register_profile(
    "packsyz",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("packsyz")


def dec(N, terms):
    """Decomposition from plain nested tuples."""
    return Decomposition(N, {NPartition(Partition(c) for c in lam): m for lam, m in terms.items()})


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv("PACKSYZ_CACHE_DIR", raising=False)


# one line per acceptance criterion, filled in by test_acceptance
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[n])
