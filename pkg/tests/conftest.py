import os
import sys

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

LETTERS = "ab"


def ratexpr_trees(letters=LETTERS, depth=4):
    leaves = st.one_of(
        st.sampled_from([("sym", a) for a in letters]),
        st.just(("eps",)),
        st.just(("empty",)),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.tuples(st.just("or"), kids, kids),
            st.tuples(st.just("cat"), kids, kids),
            st.tuples(st.just("star"), kids),
            st.tuples(st.just("plus"), kids),
        ),
        max_leaves=depth * 2,
    )


def words(letters=LETTERS, max_size=6, min_size=0):
    return st.lists(st.sampled_from(list(letters)), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def grammars(draw, letters=LETTERS, max_nts=4, max_prods=8):
    """Small random grammars with nonterminals S, A, B, ... (S is the start)."""
    from hsg.grammar import Cfg
    from hsg.words import Alphabet

    n = draw(st.integers(1, max_nts))
    nts = ["S", "A", "B", "C", "D"][:n]
    sym = st.sampled_from(list(letters) + nts)
    prods = draw(st.lists(st.tuples(st.sampled_from(nts), st.lists(sym, max_size=3).map(tuple)),
                          min_size=1, max_size=max_prods))
    return Cfg(Alphabet.of(letters), frozenset(nts), tuple(prods), "S")


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(f"criterion {n}: {ACCEPTANCE[n]}")
