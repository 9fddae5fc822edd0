"""Hyperbolic structures: a regular combing plus a context-free table.

A structure for a semigroup ``S`` generated by ``Sigma`` is a regular
language ``R`` mapping onto ``S`` together with the language
``T = {u#v#w^r : u, v, w in R, uv = w in S}``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from . import regular
from .grammar import (
    Cfg,
    apply_transduction,
    cyk_member,
    finite_cfg,
    from_nfa,
    hom_image_cfg,
    hom_preimage_cfg,
    intersect_regular,
    is_empty_cfg,
    remove_useless,
    shortest_words,
    union_cfg,
    with_terminals,
    words_upto,
)
from .oracle import AdjoinedOracle, BicyclicOracle, FreeOracle, ImageOracle, SemigroupOracle, ball
from .oracle import combing_words, minimal_combing_words, oracle_from_json
from .regular import Nfa
from .transduce import (
    Transducer,
    generator_change_rho,
    hom_transducer,
    identity_transducer,
    invert,
    pair,
    t_concat,
    wp_rho,
    _widen,
)
from .valence import ValenceAutomaton, figure3_automaton
from .words import (
    MARKER,
    Alphabet,
    AlphabetError,
    CapExceeded,
    FreeHom,
    MarkedWord,
    element_cap,
    format_word,
    reverse,
)


@dataclass(frozen=True, eq=False)
class Combing:
    oracle: SemigroupOracle
    R: Nfa

    def __post_init__(self):
        if set(self.R.alphabet) != set(self.oracle.alphabet):
            raise AlphabetError("combing alphabet differs from the oracle's generators")
        if not self.oracle.monoid and regular.member(self.R, ()):
            raise ValueError("a semigroup combing may not contain the empty word")

    @property
    def alphabet(self) -> Alphabet:
        return self.oracle.alphabet

    def check_surjective(self, n0: int = 6, N0: int = 12) -> list:
        """Elements of the radius-``n0`` ball with no R-word of length <= N0
        (empty list means the check passed)."""
        hit = minimal_combing_words(self.oracle, self.R, N0)
        return [x for x in ball(self.oracle, n0) if x not in hit]


@dataclass(frozen=True, eq=False)
class TableLanguage:
    rep: object  # Cfg or ValenceAutomaton
    note: str = ""

    @property
    def cfg(self) -> Cfg:
        return self.rep.cfg if isinstance(self.rep, ValenceAutomaton) else self.rep

    @property
    def kind(self) -> str:
        return "valence" if isinstance(self.rep, ValenceAutomaton) else "cfg"

    def accepts(self, w: Sequence[str]) -> bool:
        return cyk_member(self.cfg.cnf, tuple(w))

    def check_markers(self, maxlen: int = 8) -> list:
        """Sampled members (all words up to ``maxlen``) without exactly two markers."""
        return [w for w in words_upto(self.cfg, maxlen) if w.count(MARKER) != 2]

    def to_json(self) -> dict:
        d = {"kind": self.kind, **self.rep.to_json()}
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_json(cls, data) -> "TableLanguage":
        data = dict(data)
        kind = data.pop("kind", "cfg")
        note = data.pop("note", "")
        if kind == "valence":
            return cls(ValenceAutomaton.from_json(data), note)
        if kind == "cfg":
            return cls(Cfg.from_json(data), note)
        raise ValueError(f"unknown table kind {kind!r}")


@dataclass(eq=False)
class HyperbolicStructure:
    combing: Combing
    table: TableLanguage
    verified: int | None = field(default=None)

    @property
    def oracle(self) -> SemigroupOracle:
        return self.combing.oracle

    @property
    def R(self) -> Nfa:
        return self.combing.R

    def to_json(self) -> dict:
        return {"oracle": self.oracle.to_json(), "combing": self.R.to_json(), "table": self.table.to_json()}


def structure_from_json(data) -> HyperbolicStructure:
    if isinstance(data, str):
        data = json.loads(data)
    o = oracle_from_json(data["oracle"])
    R = Nfa.from_json(data["combing"])
    return HyperbolicStructure(Combing(o, R), TableLanguage.from_json(data["table"]))


def save_structure(s: HyperbolicStructure, path) -> None:
    with open(path, "w") as f:
        json.dump(s.to_json(), f, indent=1)


def load_structure(path) -> HyperbolicStructure:
    with open(path) as f:
        return structure_from_json(json.load(f))


# ------------------------------------------------------------ tables by brute force


def _shortest_len(c: Combing) -> int:
    D = regular.trim(regular.determinize(c.R))
    layer, seen, n = {0}, {0}, 0
    while layer:
        if layer & D.final:
            return n
        layer = {t for q in layer for _, t in D.out[q]} - seen
        seen |= layer
        n += 1
    return 0


def _oracle_triples(c: Combing, maxlen: int, cap: int | None = None) -> set:
    """All ``(u, v, w)`` with u, v, w in L(R), total length <= maxlen and uv = w."""
    o = c.oracle
    if regular.is_empty(c.R):
        return set()
    m0 = _shortest_len(c)
    top = maxlen - 2 * m0
    if top < m0:
        return set()
    ws = combing_words(o, c.R, top, cap)
    group = defaultdict(list)
    for w, x in ws:
        group[x].append(w)
    out = set()
    cap = element_cap() if cap is None else cap
    for u, x in ws:
        for v, y in ws:
            room = maxlen - len(u) - len(v)
            if room < m0:
                break  # ws is sorted by length
            for w in group.get(o.product(x, y), ()):
                if len(w) > room:
                    break
                out.add((u, v, w))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} table triples")
    return out


def _sorted_marked(triples, alphabet: Alphabet) -> list:
    marked = alphabet.with_marker()
    words = [MarkedWord(u, v, w) for u, v, w in triples]
    return sorted(words, key=lambda t: marked.sort_key(t.word))


def generate_table(c: Combing, maxlen: int, cap: int | None = None) -> list:
    """Every ``u#v#w^r`` of the table with ``|u|+|v|+|w| <= maxlen``,
    ordered by length then letter order."""
    return _sorted_marked(_oracle_triples(c, maxlen, cap), c.alphabet)


def count_triples(R: Nfa, maxlen: int) -> int:
    """Number of ``(u, v, w)`` in L(R)^3 with total length <= maxlen."""
    D = regular.trim(regular.determinize(R))
    if regular.is_empty(D):
        return 0
    counts = [0] * (maxlen + 1)
    vec = {0: 1}
    for n in range(maxlen + 1):
        counts[n] = sum(k for s, k in vec.items() if s in D.final)
        nxt = defaultdict(int)
        for s, k in vec.items():
            for _, t in D.out[s]:
                nxt[t] += k
        vec = nxt
    two = [sum(counts[i] * counts[n - i] for i in range(n + 1)) for n in range(maxlen + 1)]
    return sum(two[i] * counts[n - i] for n in range(maxlen + 1) for i in range(n + 1))


def shape_automaton(R: Nfa, maxlen: int, alphabet: Alphabet | None = None) -> Nfa:
    """DFA for ``R # R # R^r`` restricted to at most ``maxlen`` non-marker letters."""
    marked = (alphabet or R.alphabet).with_marker()
    F = regular.trim(regular.determinize(R))
    B = regular.trim(regular.determinize(regular.reverse_nfa(R)))
    parts = (F, F, B)
    ids = {}

    def sid(node):
        if node not in ids:
            ids[node] = len(ids)
        return ids[node]

    start = (0, 0, 0)
    sid(start)
    edges, final = [], set()
    stack = [start]
    seen = {start}
    while stack:
        node = stack.pop()
        ph, q, n = node
        A = parts[ph]
        if regular.is_empty(A):
            continue
        if ph == 2 and q in A.final:
            final.add(sid(node))
        nxts = [((ph, t, n + 1), a) for a, t in A.out[q] if n < maxlen]
        if ph < 2 and q in A.final:
            nxts.append(((ph + 1, 0, n), MARKER))
        for nx, a in nxts:
            edges.append((sid(node), a, sid(nx)))
            if nx not in seen:
                seen.add(nx)
                stack.append(nx)
    return regular.trim(Nfa(marked, len(ids), edges, {0}, final))


def table_words(s: HyperbolicStructure, maxlen: int, cap: int | None = None) -> list:
    """Members of the table of the form u#v#w^r with u, v, w in L(R) and
    ``|u|+|v|+|w| <= maxlen``."""
    marked = s.combing.alphabet.with_marker()
    g = s.table.cfg
    if set(g.terminals) - set(marked):
        raise AlphabetError("table terminals are not inside the marked generator alphabet")
    g = with_terminals(g, marked)
    shaped = intersect_regular(g, shape_automaton(s.R, maxlen, s.combing.alphabet))
    return words_upto(shaped, maxlen + 2, cap)


def _split(t) -> tuple:
    i = t.index(MARKER)
    j = t.index(MARKER, i + 1)
    return t[:i], t[i + 1 : j], reverse(t[j + 1 :])


def verify_table(s: HyperbolicStructure, maxlen: int, method: str = "sets",
                 cap: int | None = None) -> dict:
    """Compare the table language with the oracle on every R-triple of total
    size <= maxlen.

    ``method="sets"`` enumerates both finite sets and compares them;
    ``method="cyk"`` runs a membership test for every R-triple and is only
    practical for small instances.
    """
    c = s.combing
    truth = _oracle_triples(c, maxlen, cap)
    if method == "sets":
        table = {_split(t) for t in table_words(s, maxlen, cap)}
    elif method == "cyk":
        cnf = s.table.cfg.cnf
        table = set()
        ws = [w for w, _ in combing_words(c.oracle, c.R, maxlen, cap)]
        for u in ws:
            for v in ws:
                if len(u) + len(v) > maxlen:
                    break
                for w in ws:
                    if len(u) + len(v) + len(w) > maxlen:
                        break
                    if cyk_member(cnf, u + (MARKER,) + v + (MARKER,) + reverse(w)):
                        table.add((u, v, w))
    else:
        raise ValueError(f"unknown method {method!r}")
    bad = [(t, True, False) for t in table - truth] + [(t, False, True) for t in truth - table]
    marked = c.alphabet.with_marker()
    bad.sort(key=lambda e: marked.sort_key(MarkedWord(*e[0]).word))
    ok = not bad
    if ok:
        s.verified = max(s.verified or 0, maxlen)
    return {
        "maxlen": maxlen,
        "checked": count_triples(c.R, maxlen),
        "table_size": len(truth),
        "disagreements": [
            {"u": format_word(u), "v": format_word(v), "w": format_word(w), "table": tb, "oracle": ob}
            for (u, v, w), tb, ob in bad
        ],
    }


# ------------------------------------------------------------ constructions


def _same_element(o1: SemigroupOracle, x, o2: SemigroupOracle, y) -> bool:
    return o1.key(x) == o2.key(y)


def change_generators(s: HyperbolicStructure, h: FreeHom, target: SemigroupOracle) -> HyperbolicStructure:
    """Transport a structure along ``h`` to the generators of ``target``.

    ``target`` must present the same semigroup with ``g(h(a)) = f(a)``; this
    is checked letter by letter through the oracles' canonical keys.
    """
    src = s.oracle
    if set(h.source) != set(src.alphabet) or set(h.target) != set(target.alphabet):
        raise AlphabetError("homomorphism does not connect the two generator alphabets")
    for a in h.source:
        if not h.image[a] and not target.monoid:
            raise ValueError(f"empty image of {a!r} in a semigroup")
        if not _same_element(target, target.evaluate(h.image[a]), src, src.generator(a)):
            raise ValueError(f"factorization fails at letter {a!r}")
    monoid = src.monoid
    R1 = regular.trim(regular.hom_image(h, s.R))
    rho = generator_change_rho(h, allow_empty=monoid)
    T1 = apply_transduction(rho, s.table.cfg)
    return HyperbolicStructure(Combing(target, R1), TableLanguage(T1, "generator change"))


def subsemigroup_structure(ambient: HyperbolicStructure, h: FreeHom) -> HyperbolicStructure:
    """Structure for the subsemigroup generated by ``h(a)`` inside a free
    semigroup with a known structure: combing Sigma^+ and the pulled-back table."""
    o = ImageOracle(h, ambient.oracle)
    rho = generator_change_rho(h)
    T = apply_transduction(invert(rho), ambient.table.cfg)
    R = regular.universal(h.source, plus=True)
    return HyperbolicStructure(Combing(o, R), TableLanguage(T, "pullback"))


def _lang(parts: Sequence[Nfa], alphabet: Alphabet) -> Nfa:
    marker = regular.from_words([(MARKER,)], alphabet)
    seq = []
    for p in parts:
        if seq:
            seq.append(marker)
        seq.append(regular.with_alphabet(p, alphabet))
    return regular.concat_all(seq)


def adjoin_zero(s: HyperbolicStructure, x: str = "x") -> HyperbolicStructure:
    o = AdjoinedOracle(s.oracle, x, "zero")
    big = o.alphabet
    marked = big.with_marker()
    X = regular.from_words([(x,)], big)
    R1 = regular.union(regular.with_alphabet(s.R, big), X)
    T = with_terminals(s.table.cfg, marked)
    extra = [from_nfa(_lang(p, marked)) for p in ((s.R, X, X), (X, s.R, X), (X, X, X))]
    T1 = remove_useless(union_cfg(T, *extra))
    return HyperbolicStructure(Combing(o, R1), TableLanguage(T1, "adjoined zero"))


def _restrict_nfa(A: Nfa, sigma: Alphabet) -> Nfa:
    edges = [(p, a, q) for p, a, q in A.edges if a is None or a in sigma]
    return regular.trim(Nfa(sigma, A.n_states, edges, A.initial, A.final))


def _restrict_table(T: Cfg, big: Alphabet, sigma: Alphabet, monoid: bool) -> Cfg:
    marked_big = big.with_marker()
    part = regular.universal(sigma, plus=not monoid)
    shape = _lang((part, part, part), marked_big)
    g = intersect_regular(with_terminals(T, marked_big), shape)
    return remove_useless(Cfg(sigma.with_marker(), g.nonterminals, g.productions, g.start))


def restrict_structure(s: HyperbolicStructure, sigma: Alphabet,
                       oracle: SemigroupOracle | None = None) -> HyperbolicStructure:
    """Restrict a structure over ``Sigma + x`` to ``Sigma``: ``R & Sigma^+`` and
    ``T & Sigma^+ # Sigma^+ # Sigma^+`` (Sigma^* in monoid mode)."""
    if oracle is None:
        oracle = s.oracle.base if isinstance(s.oracle, AdjoinedOracle) else s.oracle
    if set(sigma) != set(oracle.alphabet):
        raise AlphabetError("oracle alphabet differs from the restriction alphabet")
    big = s.combing.alphabet
    R = _restrict_nfa(s.R, sigma)
    if not oracle.monoid:
        R = regular.trim(regular.intersect(R, regular.universal(sigma, plus=True)))
    T = _restrict_table(s.table.cfg, big, sigma, oracle.monoid)
    return HyperbolicStructure(Combing(oracle, R), TableLanguage(T, "restriction"))


def restrict_identity(s: HyperbolicStructure, x: str = "x",
                      oracle: SemigroupOracle | None = None) -> HyperbolicStructure:
    """From a structure for ``S^I`` (``x`` the adjoined identity) to one for
    ``S``: erase ``x`` everywhere, then discard words with empty components."""
    if oracle is None:
        if not isinstance(s.oracle, AdjoinedOracle):
            raise ValueError("pass the oracle of S explicitly")
        oracle = s.oracle.base
    big = s.combing.alphabet
    sigma = oracle.alphabet
    if set(big) != set(sigma) | {x}:
        raise AlphabetError("structure alphabet must be Sigma plus x")
    erase = FreeHom(big, sigma, {a: (() if a == x else (a,)) for a in big}, monoid=True)
    R = regular.hom_image(erase, s.R)
    if not oracle.monoid:
        R = regular.intersect(regular.remove_epsilon(R), regular.universal(sigma, plus=True))
    R = regular.trim(R)
    erase_m = erase.with_marker()
    T = hom_image_cfg(erase_m, with_terminals(s.table.cfg, big.with_marker()))
    T = _restrict_table(T, sigma, sigma, oracle.monoid)
    return HyperbolicStructure(Combing(oracle, R), TableLanguage(T, "identity removed"))


# ------------------------------------------------------------ word problems


def identity_pairs_language(c: Combing, maxlen: int, cap: int | None = None) -> tuple:
    """``{u#w^r : u, w in R, u = w in S}`` up to ``|u|+|w| <= maxlen``, and
    whether R is injective on elements among words of length <= maxlen."""
    o = c.oracle
    ws = combing_words(o, c.R, maxlen, cap)
    group = defaultdict(list)
    for w, x in ws:
        group[x].append(w)
    out = []
    for u, x in ws:
        for w in group[x]:
            if len(u) + len(w) <= maxlen:
                out.append(u + (MARKER,) + reverse(w))
    injective = all(len(g) == 1 for g in group.values())
    marked = c.alphabet.with_marker()
    return sorted(out, key=marked.sort_key), injective


def word_problem_language(o: SemigroupOracle, maxlen: int, cap: int | None = None) -> list:
    """``{w#v^r : w = v in S}`` with ``|w|+|v| <= maxlen``."""
    R = regular.universal(o.alphabet, plus=not o.monoid)
    return identity_pairs_language(Combing(o, R), maxlen, cap)[0]


def subsemigroup_word_problem(W: Cfg, h: FreeHom) -> Cfg:
    """Word problem of the subsemigroup generated by the ``h(a)``, from the
    ambient word problem ``W``."""
    return apply_transduction(invert(wp_rho(h)), W)


def _inverse_hom(inverse: dict, sigma: Alphabet) -> FreeHom:
    for a in sigma:
        b = inverse.get(a)
        if b is None or b not in sigma or inverse.get(b) != a:
            raise AlphabetError(f"no formal inverse for {a!r}")
    return FreeHom(sigma, sigma, {a: (inverse[a],) for a in sigma})


def group_wp_to_semigroup(V: Cfg, sigma: Alphabet, inverse: dict) -> Cfg:
    """Semigroup word problem ``{w#v^r : w = v}`` of a group from its group
    word problem ``V = {w : w = 1}`` over an alphabet closed under inverses."""
    inv = _inverse_hom(inverse, sigma)
    marked = sigma.with_marker()
    drop = FreeHom(marked, sigma, {a: (() if a == MARKER else (a,)) for a in marked}, monoid=True)
    pre = hom_preimage_cfg(drop, with_terminals(V, sigma))
    plus = regular.universal(sigma, plus=True)
    pre = intersect_regular(pre, _lang((plus, plus), marked))
    rho = t_concat(
        _widen(identity_transducer(sigma, plus=True), marked, marked),
        pair((MARKER,), (MARKER,), marked, marked),
        _widen(hom_transducer(inv), marked, marked),
    )
    return apply_transduction(rho, pre)


def semigroup_wp_to_group(W: Cfg, w1: Sequence[str], sigma: Alphabet,
                          oracle: SemigroupOracle | None = None) -> Cfg:
    """``{@eps} + {w : w#w1^r in W}`` where ``w1`` represents the identity."""
    w1 = tuple(w1)
    sigma.check(w1)
    if not w1:
        raise ValueError("w1 must be nonempty")
    if oracle is not None and oracle.monoid and oracle.evaluate(w1) != oracle.identity():
        raise ValueError("w1 does not represent the identity")
    marked = sigma.with_marker()
    tail = (MARKER,) + reverse(w1)
    cut = t_concat(
        _widen(identity_transducer(sigma, plus=True), marked, sigma),
        Transducer(marked, sigma, 2, [(0, tail, (), 1)], {0}, {1}),
    )
    V = apply_transduction(cut, with_terminals(W, marked))
    return remove_useless(union_cfg(V, finite_cfg([()], sigma)))


# ------------------------------------------------------------ worked examples


def bicyclic_structure() -> HyperbolicStructure:
    """``R = b*a*`` with the table defined by the valence automaton."""
    o = BicyclicOracle()
    R = regular.compile("b*a*", o.alphabet)
    return HyperbolicStructure(Combing(o, R), TableLanguage(figure3_automaton(), "valence automaton"))


def free_table_cfg(alphabet: Alphabet) -> Cfg:
    """``{u#v#v^r u^r : u, v nonempty}``."""
    S, M = ("F", "S"), ("F", "M")
    prods = []
    for x in alphabet:
        prods += [(S, (x, S, x)), (S, (x, MARKER, M, x))]
        prods += [(M, (x, M, x)), (M, (x, MARKER, x))]
    return Cfg.build(alphabet.with_marker(), prods, S)


def free_structure(alphabet: Alphabet | str = "ab") -> HyperbolicStructure:
    if isinstance(alphabet, str):
        alphabet = Alphabet.of(alphabet)
    o = FreeOracle(alphabet)
    R = regular.universal(alphabet, plus=True)
    return HyperbolicStructure(Combing(o, R), TableLanguage(free_table_cfg(alphabet), "free"))


def free_with_identity_structure(alphabet: Alphabet | str = "ab", x: str = "x") -> HyperbolicStructure:
    """Free semigroup with an identity ``x`` adjoined, combing ``x + Sigma^+``."""
    if isinstance(alphabet, str):
        alphabet = Alphabet.of(alphabet)
    o = AdjoinedOracle(FreeOracle(alphabet), x, "identity")
    marked = o.alphabet.with_marker()
    D, Q, S = ("I", "D"), ("I", "Q"), ("I", "S")
    prods = [(S, (x, MARKER, x, MARKER, x)), (S, (x, MARKER, D)), (S, (Q,))]
    for y in alphabet:
        prods += [(D, (y, D, y)), (D, (y, MARKER, y))]
        prods += [(Q, (y, Q, y)), (Q, (y, MARKER, x, MARKER, y))]
    T = union_cfg(Cfg.build(marked, prods, S), with_terminals(free_table_cfg(alphabet), marked))
    R = regular.union(regular.from_words([(x,)], o.alphabet),
                      regular.with_alphabet(regular.universal(alphabet, plus=True), o.alphabet))
    return HyperbolicStructure(Combing(o, R), TableLanguage(T, "identity adjoined"))


SUBFREE_IMAGES = {"u": "c", "v": "ac", "w": "ca", "x": "ab", "y": "baba"}


def subfree_hom() -> FreeHom:
    return FreeHom(Alphabet.of("uvwxy"), Alphabet.of("abc"),
                   {k: tuple(v) for k, v in SUBFREE_IMAGES.items()})


def subfree_structure() -> HyperbolicStructure:
    return subsemigroup_structure(free_structure("abc"), subfree_hom())


def bicyclic_product_check(table: TableLanguage, bound: int = 6) -> tuple:
    """Compare ``b^i a^j # b^k a^l # (b^n a^m)^r`` membership with the product
    rule for ``i, j, k, l <= bound`` and every third component.

    The table is intersected with the finite box ``n, m <= 2 * bound`` and
    the result compared with the predicted set; outside the box, where the
    rule predicts nothing, the intersection must be empty (a shortest
    offending word is reported).  Returns ``(missing, unexpected)``.
    """
    sigma = Alphabet.of("ab")
    marked = sigma.with_marker()

    def nf(i, j):
        return ("b",) * i + ("a",) * j

    r = range(bound + 1)
    r2 = range(2 * bound + 1)
    side = regular.from_words([nf(i, j) for i in r for j in r], sigma)
    back = regular.from_words([reverse(nf(n, m)) for n in r2 for m in r2], sigma)
    box = intersect_regular(with_terminals(table.cfg, marked), _lang((side, side, back), marked))
    found = set(words_upto(box, 8 * bound + 2))
    rest = intersect_regular(with_terminals(table.cfg, marked), _lang((side, side, regular.complement(back)), marked))
    if not is_empty_cfg(rest):
        cnf = rest.cnf
        found.add(() if cnf.accepts_empty else shortest_words(cnf)[cnf.start])
    want = set()
    for i in r:
        for j in r:
            for k in r:
                for l in r:
                    n, m = (i, j - k + l) if j >= k else (i + k - j, l)
                    want.add(nf(i, j) + (MARKER,) + nf(k, l) + (MARKER,) + reverse(nf(n, m)))
    key = marked.sort_key
    return sorted(want - found, key=key), sorted(found - want, key=key)


def integers_example() -> tuple:
    """ℤ on ``a`` and its formal inverse ``A``: alphabet, inverse map, the
    group word problem grammar and a rewriting oracle."""
    from .oracle import RewritingOracle

    sigma = Alphabet(("a", "A"))
    inverse = {"a": "A", "A": "a"}
    V = Cfg.build(sigma, [("S", ()), ("S", ("a", "S", "A", "S")), ("S", ("A", "S", "a", "S"))], "S")
    oracle = RewritingOracle(sigma, [(("a", "A"), ()), (("A", "a"), ())])
    return sigma, inverse, V, oracle


__all__ = [
    "Combing", "TableLanguage", "HyperbolicStructure", "generate_table", "verify_table",
    "table_words", "shape_automaton", "count_triples", "change_generators",
    "subsemigroup_structure", "adjoin_zero", "restrict_structure", "restrict_identity",
    "identity_pairs_language", "word_problem_language", "subsemigroup_word_problem",
    "group_wp_to_semigroup", "semigroup_wp_to_group", "bicyclic_structure", "free_structure",
    "free_table_cfg", "free_with_identity_structure", "subfree_hom", "subfree_structure", "structure_from_json",
    "save_structure", "load_structure", "bicyclic_product_check", "integers_example",
]
