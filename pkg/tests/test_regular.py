import pytest
from hypothesis import given, settings

from conftest import ratexpr_trees
from oracles import all_words, nfa_accepts, render, tree_words
from hsg import regular
from hsg.regular import Nfa
from hsg.words import Alphabet, AlphabetError, FreeHom

AB = Alphabet.of("ab")
ALL6 = list(all_words("ab", 6))
ALL8 = list(all_words("ab", 8))


def lang(tree):
    return regular.compile(render(tree), AB)


@given(ratexpr_trees())
def test_compile_matches_set_semantics(tree):
    A = lang(tree)
    W = tree_words(tree, 6)
    for w in ALL6:
        assert regular.member(A, w) == (w in W)


@given(ratexpr_trees())
def test_member_matches_plain_simulation(tree):
    A = lang(tree)
    for w in ALL6:
        assert regular.member(A, w) == nfa_accepts(A, w)


@given(ratexpr_trees(), ratexpr_trees())
def test_boolean_ops(t1, t2):
    A, B = lang(t1), lang(t2)
    U, I, D = regular.union(A, B), regular.intersect(A, B), regular.difference(A, B)
    C = regular.complement(A)
    W1, W2 = tree_words(t1, 8), tree_words(t2, 8)
    for w in ALL8:
        a, b = w in W1, w in W2
        assert regular.member(U, w) == (a or b)
        assert regular.member(I, w) == (a and b)
        assert regular.member(D, w) == (a and not b)
        assert regular.member(C, w) == (not a)


@given(ratexpr_trees(), ratexpr_trees())
def test_concat_star_reverse(t1, t2):
    A, B = lang(t1), lang(t2)
    cat = regular.concat(A, B)
    st = regular.star(A)
    rev = regular.reverse_nfa(A)
    W_cat, W_star, W1 = tree_words(("cat", t1, t2), 5), tree_words(("star", t1), 5), tree_words(t1, 5)
    for w in all_words("ab", 5):
        assert regular.member(cat, w) == (w in W_cat)
        assert regular.member(st, w) == (w in W_star)
        assert regular.member(rev, w) == (w[::-1] in W1)


@given(ratexpr_trees())
def test_determinize_and_trim_preserve_language(tree):
    A = lang(tree)
    D = regular.determinize(A, complete=True)
    # one initial state and at most one edge per letter
    assert len(D.initial) == 1
    assert all(len({a for a, _ in D.out[q]}) == len(D.out[q]) for q in range(D.n_states))
    T = regular.trim(regular.remove_epsilon(A))
    for w in ALL6:
        m = regular.member(A, w)
        assert regular.member(D, w) == m == regular.member(T, w)


@settings(max_examples=20)
@given(ratexpr_trees())
def test_words_enumeration_is_sorted_and_complete(tree):
    A = lang(tree)
    got = regular.words(A, 5)
    assert got == sorted(got, key=AB.sort_key)
    assert set(got) == tree_words(tree, 5)


@given(ratexpr_trees())
def test_is_empty(tree):
    # a nonempty expression with at most 8 letter leaves has a member of length <= 8
    A = lang(tree)
    assert regular.is_empty(A) == (not tree_words(tree, 8))


def test_alphabet_mismatch():
    A = regular.compile("a*", AB)
    B = regular.compile("c*", Alphabet.of("c"))
    with pytest.raises(AlphabetError):
        regular.union(A, B)
    with pytest.raises(AlphabetError):
        regular.compile("ac", AB)


def test_json_roundtrip():
    A = regular.compile("b*a* + @eps", AB)
    B = Nfa.from_json(A.to_json())
    for w in ALL6:
        assert regular.member(A, w) == regular.member(B, w)
    assert A.to_json()["edges"] and "@eps" in str(A.to_json())


@given(ratexpr_trees())
def test_hom_image_and_preimage(tree):
    h = FreeHom(AB, Alphabet.of("abc"), {"a": "ca", "b": "b"})
    A = lang(tree)
    img = regular.hom_image(h, A)
    members = tree_words(tree, 4)
    for w in members:
        assert regular.member(img, h(w))
    pre = regular.hom_preimage(h, img)
    for w in all_words("ab", 4):
        assert regular.member(pre, w) == regular.member(img, h(w))


def test_universal_and_from_words():
    plus = regular.universal(AB, plus=True)
    assert not regular.member(plus, ()) and regular.member(plus, ("a", "b"))
    F = regular.from_words([("a",), ("a", "b")], AB)
    assert [w for w in all_words("ab", 3) if regular.member(F, w)] == [("a",), ("a", "b")]
