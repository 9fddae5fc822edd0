import itertools
import random

import pytest

from oracles import all_words, bicyclic
from hsg import regular
from hsg.oracle import (
    ONE,
    ZERO,
    AdjoinedOracle,
    BicyclicOracle,
    FiniteOracle,
    FreeCommutativeOracle,
    FreeOracle,
    ImageOracle,
    RewritingOracle,
    ball,
    minimal_combing_words,
    naive_minimal_words,
    oracle_from_json,
)
from hsg.words import Alphabet, AlphabetError, CapExceeded, FreeHom

Z = RewritingOracle(Alphabet(("a", "A")), [(("a", "A"), ()), (("A", "a"), ())], monoid=True)
# {0, 1} under multiplication, generated by z -> 0 and e -> 1
MUL2 = FiniteOracle([0, 1], [[0, 0], [0, 1]], {"z": 0, "e": 1})


def all_oracles():
    return [
        BicyclicOracle(),
        FreeCommutativeOracle(),
        FreeOracle(Alphabet.of("ab")),
        MUL2,
        Z,
        AdjoinedOracle(BicyclicOracle(), "x", "zero"),
        AdjoinedOracle(FreeOracle(Alphabet.of("ab")), "x", "identity"),
        ImageOracle(FreeHom(Alphabet.of("uv"), Alphabet.of("ab"), {"u": "ab", "v": "b"}),
                    FreeOracle(Alphabet.of("ab"))),
    ]


@pytest.mark.parametrize("o", all_oracles(), ids=lambda o: o.kind)
def test_homomorphism_law(o):
    rng = random.Random(7)
    letters = list(o.alphabet)
    for _ in range(10_000):
        x = tuple(rng.choice(letters) for _ in range(rng.randint(1, 6)))
        y = tuple(rng.choice(letters) for _ in range(rng.randint(1, 6)))
        assert o.evaluate(x + y) == o.product(o.evaluate(x), o.evaluate(y))


@pytest.mark.parametrize("o", all_oracles(), ids=lambda o: o.kind)
def test_json_roundtrip(o):
    p = oracle_from_json(o.to_json())
    for w in all_words(list(o.alphabet), 4, 1):
        assert p.key(p.evaluate(w)) == o.key(o.evaluate(w))


def test_evaluate_examples():
    B = BicyclicOracle()
    assert B.evaluate("ab") == (0, 0) == B.identity()
    assert B.evaluate("baa") == (1, 2)
    assert B.evaluate("") == (0, 0)
    F = FreeCommutativeOracle()
    assert F.evaluate("ab") == F.evaluate("ba") == (1, 1)
    with pytest.raises(ValueError):
        F.evaluate("")
    with pytest.raises(AlphabetError):
        F.evaluate("c")


def test_bicyclic_matches_rewriting():
    B = BicyclicOracle()
    for w in all_words("ab", 10):
        assert B.evaluate(w) == bicyclic(w)


def test_bicyclic_product_rule():
    B = BicyclicOracle()
    for i, j, k, l in itertools.product(range(7), repeat=4):
        got = B.evaluate("b" * i + "a" * j + "b" * k + "a" * l)
        assert got == ((i, j - k + l) if j >= k else (i + k - j, l))


def test_adjoined_zero_absorbs():
    o = AdjoinedOracle(BicyclicOracle(), "x", "zero")
    rng = random.Random(1)
    for _ in range(500):
        u = "".join(rng.choice("abx") for _ in range(rng.randint(0, 5)))
        v = "".join(rng.choice("abx") for _ in range(rng.randint(0, 5)))
        assert o.evaluate(u + "x" + v) == ZERO == o.evaluate("x")
    with pytest.raises(AlphabetError):
        AdjoinedOracle(BicyclicOracle(), "a")


def test_adjoined_identity_is_neutral():
    o = AdjoinedOracle(FreeOracle(Alphabet.of("ab")), "x", "identity")
    assert o.evaluate("x") == ONE
    for w in all_words("abx", 5, 1):
        stripped = tuple(a for a in w if a != "x")
        assert o.evaluate(w) == (o.evaluate(stripped) if stripped else ONE)


def test_finite_oracle_checks_associativity():
    with pytest.raises(ValueError):
        FiniteOracle([0, 1], [[1, 0], [0, 0]], {"g": 0})
    with pytest.raises(ValueError):
        FiniteOracle([0, 1], [[0, 0]], {"g": 0})


def test_rewriting_budget_and_confluence():
    bad = RewritingOracle(Alphabet.of("a"), [(("a",), ("a", "a"))], max_steps=50)
    with pytest.raises(CapExceeded):
        bad.evaluate("a")
    assert Z.spot_check_confluence()
    assert Z.evaluate(("a", "A", "a")) == ("a",)


def test_ball_examples():
    assert set(ball(FreeCommutativeOracle(), 2)) == {(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    assert set(ball(BicyclicOracle(), 2)) == {(0, 1), (1, 0), (0, 0), (0, 2), (1, 1), (2, 0)}
    assert ball(BicyclicOracle(), 2)[(0, 0)] == 0
    assert len(ball(MUL2, 1)) == len(ball(MUL2, 5)) == 2
    with pytest.raises(ValueError):
        ball(MUL2, 0)
    with pytest.raises(CapExceeded):
        ball(FreeOracle(Alphabet.of("ab")), 10, cap=100)


def test_ball_distances_match_enumeration():
    o = FreeCommutativeOracle()
    want = {}
    for w in all_words("ab", 5, 1):
        want.setdefault(o.evaluate(w), len(w))
    assert ball(o, 5) == want


def test_minimal_words_bicyclic_normal_forms():
    o = BicyclicOracle()
    R = regular.compile("b*a*", o.alphabet)
    best = minimal_combing_words(o, R, 10)
    assert len(best) == 66
    for (i, j), (n, w) in best.items():
        assert n == i + j and w == ("b",) * i + ("a",) * j


def test_minimal_words_forced_witness():
    o = FreeCommutativeOracle()
    R = regular.compile("a*b*", o.alphabet)
    R = regular.intersect(R, regular.universal(o.alphabet, plus=True))
    assert minimal_combing_words(o, R, 5)[(2, 1)] == (3, ("a", "a", "b"))


@pytest.mark.parametrize("o,expr", [
    (BicyclicOracle(), "(a+b)*"),
    (BicyclicOracle(), "b*a* + a b"),
    (FreeCommutativeOracle(), "(a+b)^+"),
    (FreeCommutativeOracle(), "(ba)^+ + a^+ b*"),
    (Z, "(a + A)*"),
])
def test_minimal_words_match_naive(o, expr):
    R = regular.compile(expr, o.alphabet)
    assert minimal_combing_words(o, R, 8) == naive_minimal_words(o, R, 8)
