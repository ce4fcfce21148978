import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skyline.core import Biword

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SEC3 = Biword((1, 1, 2, 3, 4, 4, 5, 7, 7), (2, 7, 2, 4, 1, 3, 3, 1, 1))
RUNNING = Biword((1, 1, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 6, 7),
                 (4, 4, 1, 3, 5, 5, 5, 3, 3, 4, 3, 4, 4, 2, 2))


@st.composite
def biwords(draw, n=None, max_len=6):
    if n is None:
        n = draw(st.integers(1, 5))
    letters = st.integers(1, n)
    pairs = draw(st.lists(st.tuples(letters, letters), max_size=max_len))
    return Biword.from_pairs(pairs), n


@st.composite
def weak_compositions(draw, n=None, max_part=3):
    if n is None:
        n = draw(st.integers(1, 4))
    return tuple(draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n)))


def words(n, max_len=10):
    return st.lists(st.integers(1, n), max_size=max_len).map(tuple)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
