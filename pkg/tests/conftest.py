from itertools import combinations_with_replacement, product

import pytest
from hypothesis import settings

from energystats.combinat import insert_word, is_tableau, row_word
from energystats.crystal import CrystalElement

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def rectangles(r, s, N):
    """Every SSYT of shape s^r over 1..N, by brute force."""
    rows = list(combinations_with_replacement(range(1, N + 1), s))
    out = []
    for choice in product(rows, repeat=r):
        if is_tableau(choice, N):
            out.append(CrystalElement(tuple(choice), r, s, N))
    return out


def brute_force_R(b, b2):
    """All pairs (c2, c) in B^{r2,s2} x B^{r,s} with (b2 <- row b) == (c <- row c2)."""
    target = insert_word(b2.tableau, row_word(b.tableau))
    return [
        (c2, c)
        for c2 in rectangles(b2.r, b2.s, b.N)
        for c in rectangles(b.r, b.s, b.N)
        if insert_word(c.tableau, row_word(c2.tableau)) == target
    ]


@pytest.fixture
def golden_pair():
    b = CrystalElement.from_rows([[1, 1, 4], [2, 3, 6]], 6)
    b2 = CrystalElement.from_rows([[2, 3], [3, 4], [4, 5]], 6)
    return b, b2


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
