import pytest

from oracles import all_words
from hsg import hyper, regular
from hsg.grammar import Cfg, cyk_member, words_upto
from hsg.hyper import (
    Combing,
    HyperbolicStructure,
    TableLanguage,
    adjoin_zero,
    change_generators,
    generate_table,
    identity_pairs_language,
    restrict_identity,
    restrict_structure,
    verify_table,
)
from hsg.oracle import BicyclicOracle, FreeCommutativeOracle, FreeOracle, RewritingOracle
from hsg.words import Alphabet, AlphabetError, FreeHom, parse_word, reverse


@pytest.fixture(scope="module")
def bicyclic():
    return hyper.bicyclic_structure()


def corrupted(s, drop=-3):
    g = s.table.cfg
    prods = list(g.productions)
    del prods[drop]
    broken = Cfg(g.terminals, g.nonterminals, tuple(prods), g.start)
    return HyperbolicStructure(s.combing, TableLanguage(broken))


def words_of(table):
    return {t.word for t in table}


def test_generate_table_free_examples():
    c = hyper.free_structure("ab").combing
    t4 = words_of(generate_table(c, 4))
    assert parse_word("a#b#ba") in t4
    # |u|+|v|+|w| = 6
    assert parse_word("ab#a#aba") not in words_of(generate_table(c, 5))
    assert parse_word("ab#a#aba") in words_of(generate_table(c, 6))


def test_generate_table_order_and_empty(bicyclic):
    t = generate_table(bicyclic.combing, 8)
    marked = Alphabet.of("ab").with_marker()
    assert [x.word for x in t] == sorted((x.word for x in t), key=marked.sort_key)
    assert parse_word("baa#ba#aab") in words_of(t)
    o = FreeOracle(Alphabet.of("ab"))
    assert generate_table(Combing(o, regular.empty_nfa(o.alphabet)), 6) == []


def test_generated_words_are_in_the_table(bicyclic):
    cnf = bicyclic.table.cfg.cnf
    assert all(cyk_member(cnf, t.word) for t in generate_table(bicyclic.combing, 8))


def test_bicyclic_verifies_and_is_monotone(bicyclic):
    for n in (12, 9, 6, 3):
        rep = verify_table(bicyclic, n)
        assert rep["disagreements"] == []
    assert bicyclic.verified == 12


def test_corrupted_table_is_caught(bicyclic):
    rep = verify_table(corrupted(bicyclic), 8)
    assert rep["disagreements"]
    assert all(set(d) == {"u", "v", "w", "table", "oracle"} for d in rep["disagreements"])


@pytest.mark.parametrize("name,n", [("bicyclic", 8), ("corrupted", 7), ("free", 7), ("subfree", 5)])
def test_set_and_cyk_methods_agree(bicyclic, name, n):
    s = {
        "bicyclic": lambda: bicyclic,
        "corrupted": lambda: corrupted(bicyclic),
        "free": lambda: hyper.free_structure("ab"),
        "subfree": hyper.subfree_structure,
    }[name]()
    assert verify_table(s, n) == verify_table(s, n, method="cyk")


def test_count_triples():
    R = regular.compile("b*a*", Alphabet.of("ab"))
    # by hand: words of length n in b*a*: n + 1
    want = sum((i + 1) * (j + 1) * (k + 1) for i in range(6) for j in range(6) for k in range(6) if i + j + k <= 5)
    assert hyper.count_triples(R, 5) == want


def test_free_table_verifies():
    assert verify_table(hyper.free_structure("ab"), 8)["disagreements"] == []


def test_change_generators_identity(bicyclic):
    h = FreeHom.identity(bicyclic.oracle.alphabet)
    c = change_generators(bicyclic, h, BicyclicOracle())
    assert set(words_upto(c.table.cfg, 10)) == set(words_upto(bicyclic.table.cfg, 10))
    for w in all_words("ab", 8):
        assert regular.member(c.R, w) == regular.member(bicyclic.R, w)


def test_change_generators_renaming(bicyclic):
    h = FreeHom(Alphabet.of("ab"), Alphabet.of("cd"), {"a": "d", "b": "c"})
    c = change_generators(bicyclic, h, BicyclicOracle("d", "c"))
    assert verify_table(c, 8)["disagreements"] == []
    with pytest.raises(ValueError):
        change_generators(bicyclic, h, BicyclicOracle("c", "d"))


def test_change_generators_checks_keys():
    s = hyper.free_structure("ab")
    h = FreeHom(Alphabet.of("ab"), Alphabet.of("ab"), {"a": "b", "b": "a"})
    # free words are their own keys, so swapping letters is not a factorization
    with pytest.raises(ValueError):
        change_generators(s, h, FreeOracle(Alphabet.of("ab")))


def test_subsemigroup_single_letters():
    a = Alphabet.of("a")
    amb_o = RewritingOracle(a, [])
    ambient = HyperbolicStructure(Combing(amb_o, regular.universal(a, plus=True)),
                                  TableLanguage(hyper.free_table_cfg(a)))
    for img in ("a", "aa"):
        h = FreeHom(Alphabet.of("z"), a, {"z": img})
        s = hyper.subsemigroup_structure(ambient, h)
        assert verify_table(s, 8)["disagreements"] == []


def test_adjoin_zero_members(bicyclic):
    z = adjoin_zero(bicyclic)
    assert z.table.accepts(parse_word("x#x#x"))
    assert z.table.accepts(parse_word("baa#x#x"))
    assert not z.table.accepts(parse_word("x#baa#aab"))
    with pytest.raises(AlphabetError):
        adjoin_zero(bicyclic, "a")


def test_restrict_without_new_letters_changes_nothing(bicyclic):
    r = restrict_structure(bicyclic, bicyclic.oracle.alphabet)
    assert set(words_upto(r.table.cfg, 10)) == set(words_upto(bicyclic.table.cfg, 10))


def test_identity_adjoined_and_erased():
    si = hyper.free_with_identity_structure("ab")
    assert verify_table(si, 8)["disagreements"] == []
    plain = restrict_identity(si)
    assert verify_table(plain, 8)["disagreements"] == []
    assert set(words_upto(plain.table.cfg, 10)) == set(words_upto(hyper.free_table_cfg(Alphabet.of("ab")), 10))


def test_identity_pairs(bicyclic):
    L, inj = identity_pairs_language(bicyclic.combing, 10)
    assert inj
    assert set(L) == {u + ("#",) + reverse(u) for u in regular.words(bicyclic.R, 5)}
    fc = FreeCommutativeOracle()
    L, inj = identity_pairs_language(Combing(fc, regular.universal(fc.alphabet, plus=True)), 4)
    assert parse_word("ab#ab") in L and not inj
    fr = FreeOracle(Alphabet.of("ab"))
    L, inj = identity_pairs_language(Combing(fr, regular.universal(fr.alphabet, plus=True)), 6)
    assert inj and all(t == reverse(t) for t in L)


def test_integer_word_problem():
    sigma, inverse, V, Z = hyper.integers_example()
    W = hyper.group_wp_to_semigroup(V, sigma, inverse)
    for t in ("a#a", "a a#a a", "a A#A a"):
        assert W.accepts(parse_word(t.replace("#", " # ")))
    assert not W.accepts(parse_word("a # A"))
    members = set(words_upto(W, 7))
    for w in all_words(("a", "A"), 3, 1):
        for v in all_words(("a", "A"), 3, 1):
            x = w + ("#",) + reverse(v)
            y = v + ("#",) + reverse(w)
            assert (x in members) == (y in members)


def test_word_problem_reflexive():
    o = BicyclicOracle()
    W = set(hyper.word_problem_language(o, 8))
    for w in all_words("ab", 4):
        assert w + ("#",) + reverse(w) in W


def test_group_constructions_reject_bad_input():
    sigma, inverse, V, Z = hyper.integers_example()
    with pytest.raises(AlphabetError):
        hyper.group_wp_to_semigroup(V, sigma, {"a": "A"})
    W = hyper.group_wp_to_semigroup(V, sigma, inverse)
    with pytest.raises(ValueError):
        hyper.semigroup_wp_to_group(W, (), sigma)
    zm = RewritingOracle(sigma, [(("a", "A"), ()), (("A", "a"), ())], monoid=True)
    with pytest.raises(ValueError):
        hyper.semigroup_wp_to_group(W, ("a",), sigma, oracle=zm)


def test_bundle_roundtrip(tmp_path, bicyclic):
    p = tmp_path / "s.json"
    hyper.save_structure(bicyclic, p)
    s = hyper.load_structure(p)
    assert s.table.kind == "valence"
    assert verify_table(s, 8)["disagreements"] == []
    sub = hyper.subfree_structure()
    hyper.save_structure(sub, p)
    assert verify_table(hyper.load_structure(p), 6) == verify_table(sub, 6)


def test_table_markers_and_surjectivity(bicyclic):
    assert bicyclic.table.check_markers(8) == []
    assert bicyclic.combing.check_surjective() == []
    o = BicyclicOracle()
    assert (0, 1) in Combing(o, regular.compile("b*", o.alphabet)).check_surjective(3, 6)
    with pytest.raises(ValueError):
        Combing(FreeOracle(Alphabet.of("ab")), regular.compile("a*", Alphabet.of("ab")))


def test_product_check_sees_outside_the_box(bicyclic):
    from hsg.grammar import finite_cfg, union_cfg
    assert hyper.bicyclic_product_check(bicyclic.table, 2) == ([], [])
    stray = parse_word("a#a#" + "b" * 13)
    extra = union_cfg(bicyclic.table.cfg, finite_cfg([stray], bicyclic.table.cfg.terminals))
    missing, unexpected = hyper.bicyclic_product_check(TableLanguage(extra), 2)
    assert missing == [] and unexpected == [stray]
