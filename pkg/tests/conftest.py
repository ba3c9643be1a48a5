import pytest
from hypothesis import HealthCheck, settings

from idealconn.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[crit] = (report.outcome, report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria, key=int):
        outcome, nodeid = _criteria[crit]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark} criterion {crit}: {nodeid.split('::')[-1]}")


@pytest.fixture
def criterion(record_property):
    """Tag a test with its acceptance criterion number."""

    def tag(number: int):
        record_property("criterion", str(number))

    return tag


def edges_strategy(max_n: int = 7, min_n: int = 1):
    from hypothesis import strategies as st

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        pairs = [(u, v) for v in range(n) for u in range(v)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return Graph.from_edges(n, chosen)

    return build()
