import pytest

_criteria = {}


@pytest.fixture
def criterion():
    """Record one acceptance outcome: ``criterion(n, ok, detail)``.

    Several calls for the same ``n`` are combined; the criterion passes
    only if every part did.
    """

    def record(n, ok, detail):
        parts = _criteria.setdefault(n, [])
        parts.append((bool(ok), detail))
        print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        parts = _criteria[n]
        ok = all(p for p, _ in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}")
