import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vlink.gauss import Diagram, Entry

settings.register_profile(
    "default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def diagrams(draw, max_crossings=5, max_components=2):
    n = draw(st.integers(0, max_crossings))
    entries = []
    for c in range(1, n + 1):
        s = draw(st.sampled_from((1, -1)))
        entries += [Entry(c, True, s), Entry(c, False, s)]
    entries = draw(st.permutations(entries))
    m = draw(st.integers(1, max_components))
    cuts = sorted(draw(st.lists(st.integers(0, len(entries)), min_size=m - 1, max_size=m - 1)))
    bounds = [0, *cuts, len(entries)]
    return Diagram(tuple(tuple(entries[a:b]) for a, b in zip(bounds, bounds[1:])))


@st.composite
def coloured(draw, max_crossings=5, max_components=2):
    from vlink.parity import Colouring, admissible_weightings

    d = draw(diagrams(max_crossings, max_components))
    space = admissible_weightings(d)
    bits = draw(st.lists(st.integers(0, 1), min_size=space.dim, max_size=space.dim))
    base = draw(st.lists(st.integers(0, 1), min_size=d.n_components, max_size=d.n_components))
    return d, Colouring(d, space.combine(bits), tuple(base))


TREFOIL = "O1+U2+O3+U1+O2+U3+"
VIRTUAL_TREFOIL = "O1+U2+U1+O2+"
VIRTUAL_HOPF = "O1+;U1+"
HOPF = "O1+U2+;U1+O2+"


@pytest.fixture
def cli(capsys):
    from vlink.cli import main

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return run


@pytest.fixture(scope="session")
def five_crossing_shapes():
    """All diagrams with at most 5 crossings and 2 components, every sign +."""
    from vlink.generate import all_diagrams

    return list(all_diagrams(5, 2, sign=1))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
