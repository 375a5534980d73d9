import random

from hypothesis import strategies as st

from gaussxi.normal_forms import BASES, Letter
from gaussxi.oracle import random_diagram


@st.composite
def diagrams(draw, mu=None, max_chords=6):
    m = draw(st.sampled_from([1, 2])) if mu is None else mu
    n = draw(st.integers(0, max_chords))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_diagram(random.Random(seed), m, n)


letters = st.builds(Letter, st.sampled_from(BASES), st.sampled_from([1, -1]), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=10)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
