import pytest

from zcolor.fixtures import load_fixture


@pytest.fixture(scope="session")
def fixture():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(n, title)`` returns a setter
    for the detail text; the outcome comes from the test result."""
    entry = {}

    def start(number, title):
        entry.update(number=number, title=title, detail="")

        def detail(text):
            entry["detail"] = text

        return detail

    yield start
    if entry:
        rep = getattr(request.node, "rep_call", None)
        entry["ok"] = bool(rep and rep.passed)
        ACCEPTANCE.append(entry)


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(ACCEPTANCE, key=lambda e: e["number"]):
        status = "PASS" if e["ok"] else "FAIL"
        line = f"{status} criterion {e['number']}: {e['title']}"
        if e["detail"]:
            line += f" ({e['detail']})"
        terminalreporter.write_line(line)
