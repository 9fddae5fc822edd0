"""Context-free grammars.

A :class:`Cfg` is the general form; every decision goes through
:func:`to_cnf` and :func:`cyk_member`.  Nonterminals may be any hashable
value that is not a terminal string, which lets the closure constructions
name their nonterminals by tuples such as ``(p, A, q)``.

The closure operations follow the textbook route.  Intersection with a
regular language is the triple construction, computed bottom-up so only
generating triples are ever built.  Inverse homomorphism reduces to the
weak (letter-or-empty) case through an expanded alphabet.  Rational
transductions factor as inverse projection, intersection, projection over
the edge alphabet of the transducer.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from . import regular
from .regular import Nfa
from .transduce import Transducer, edge_coding
from .words import EPS, Alphabet, AlphabetError, CapExceeded, FreeHom


@dataclass(frozen=True, eq=False)
class Cfg:
    terminals: Alphabet
    nonterminals: frozenset
    productions: tuple  # ((head, body), ...)
    start: Hashable

    def __post_init__(self):
        prods = tuple(dict.fromkeys((h, tuple(b)) for h, b in self.productions))
        object.__setattr__(self, "productions", prods)
        nts = frozenset(self.nonterminals)
        object.__setattr__(self, "nonterminals", nts)
        if self.start not in nts:
            raise ValueError(f"start symbol {self.start!r} is not a nonterminal")
        for t in self.terminals:
            if t in nts:
                raise ValueError(f"{t!r} is both terminal and nonterminal")
        for h, body in prods:
            if h not in nts:
                raise ValueError(f"production head {h!r} is not a nonterminal")
            for s in body:
                if s not in nts and s not in self.terminals:
                    raise AlphabetError(f"undeclared symbol {s!r} in production for {h!r}")

    @classmethod
    def build(cls, terminals: Alphabet, productions: Iterable, start) -> "Cfg":
        """Nonterminals are the start symbol and every non-terminal symbol used."""
        productions = [(h, tuple(b)) for h, b in productions]
        nts = {h for h, _ in productions} | {start}
        nts |= {s for _, b in productions for s in b if s not in terminals}
        return cls(terminals, frozenset(nts), tuple(productions), start)

    def __repr__(self):
        return f"Cfg({len(self.nonterminals)} nonterminals, {len(self.productions)} productions)"

    @cached_property
    def cnf(self) -> "CnfGrammar":
        return to_cnf(self)

    def accepts(self, w: Sequence[str]) -> bool:
        return cyk_member(self.cnf, w)

    def rules(self) -> dict:
        out = defaultdict(list)
        for h, b in self.productions:
            out[h].append(b)
        return out

    # -- text and JSON forms

    def to_text(self) -> str:
        names = _display_names(self)
        lines = []
        rules = self.rules()
        order = [self.start] + [h for h in dict.fromkeys(h for h, _ in self.productions) if h != self.start]
        for h in order:
            if h not in rules:
                continue
            bodies = [" ".join(names.get(s, s) for s in b) if b else EPS for b in rules[h]]
            lines.append(f"{names[h]} -> " + " | ".join(bodies))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        names = _display_names(self)
        return {
            "start": names[self.start],
            "terminals": list(self.terminals),
            "productions": [[names[h], [names.get(s, s) for s in b]] for h, b in self.productions],
        }

    @classmethod
    def from_json(cls, data) -> "Cfg":
        if isinstance(data, str):
            data = json.loads(data)
        terms = Alphabet.of(data["terminals"])
        return cls.build(terms, [(h, tuple(b)) for h, b in data["productions"]], data["start"])


def _display_names(g: Cfg) -> dict:
    names = {}
    used = set(g.terminals)
    for i, nt in enumerate(sorted(g.nonterminals, key=repr)):
        if isinstance(nt, str) and nt not in used and " " not in nt:
            names[nt] = nt
        else:
            names[nt] = f"N{i}"
            while names[nt] in used:
                names[nt] += "_"
        used.add(names[nt])
    return names


def parse_cfg(text: str, terminals: Alphabet | Iterable[str] | None = None) -> Cfg:
    """Parse ``A -> x A y | @eps`` lines.

    Symbols are whitespace separated; a body written without spaces is split
    into characters.  Heads are the nonterminals, everything else is a
    terminal.  The first head is the start symbol.
    """
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("//"):
            continue
        head, _, rhs = line.partition("->")
        head = head.strip()
        if not head or not _:
            raise ValueError(f"bad production line {line!r}")
        for alt in rhs.split("|"):
            alt = alt.strip()
            rows.append((head, alt))
    heads = list(dict.fromkeys(h for h, _ in rows))
    prods = []
    for h, alt in rows:
        if alt in ("", EPS):
            prods.append((h, ()))
        elif any(c.isspace() for c in alt) or alt in heads:
            prods.append((h, tuple(s for s in alt.split() if s != EPS)))
        else:
            prods.append((h, tuple(alt)))
    found = [s for _, b in prods for s in b if s not in heads]
    if terminals is None:
        terminals = Alphabet.of(list(dict.fromkeys(found)))
    elif not isinstance(terminals, Alphabet):
        terminals = Alphabet.of(terminals)
    return Cfg.build(terminals, prods, heads[0])


# ------------------------------------------------------------ Chomsky normal form


@dataclass(frozen=True, eq=False)
class CnfGrammar:
    """Productions ``A -> B C`` and ``A -> a`` only; the empty word is a flag."""

    terminals: Alphabet
    nonterminals: tuple
    binary: tuple  # ((A, B, C), ...)
    unary: tuple  # ((A, a), ...)
    start: Hashable
    accepts_empty: bool = False

    def __post_init__(self):
        nts = set(self.nonterminals)
        for A, B, C in self.binary:
            if not {A, B, C} <= nts:
                raise ValueError("binary production over undeclared nonterminals")
        for A, a in self.unary:
            if A not in nts or a not in self.terminals:
                raise ValueError(f"bad unary production {A!r} -> {a!r}")

    def __repr__(self):
        return f"CnfGrammar({len(self.nonterminals)} nonterminals, {len(self.binary)}+{len(self.unary)} productions)"

    @cached_property
    def _tables(self) -> tuple:
        idx = {A: i for i, A in enumerate(self.nonterminals)}
        unary = defaultdict(int)
        for A, a in self.unary:
            unary[a] |= 1 << idx[A]
        pairs: dict = defaultdict(lambda: defaultdict(int))
        for A, B, C in self.binary:
            pairs[idx[B]][idx[C]] |= 1 << idx[A]
        right_any = {b: sum(1 << c for c in cs) for b, cs in pairs.items()}
        pairs = {b: dict(cs) for b, cs in pairs.items()}
        return idx, dict(unary), pairs, right_any, {}

    def to_cfg(self) -> Cfg:
        prods = [(A, (B, C)) for A, B, C in self.binary] + [(A, (a,)) for A, a in self.unary]
        start = self.start
        if self.accepts_empty:
            start = ("_cnf", "start", "eps")
            prods += [(start, (self.start,)), (start, ())]
        return Cfg(self.terminals, frozenset(self.nonterminals) | {start}, tuple(prods), start)


def _fresh(tag, taken: set):
    i = 0
    while (tag, i) in taken:
        i += 1
    taken.add((tag, i))
    return (tag, i)


def nullable_set(g: Cfg) -> set:
    nullable = set()
    changed = True
    while changed:
        changed = False
        for h, b in g.productions:
            if h not in nullable and all(s in nullable for s in b):
                nullable.add(h)
                changed = True
    return nullable


def generating_set(g: Cfg) -> set:
    gen = set()
    terms = set(g.terminals)
    changed = True
    while changed:
        changed = False
        for h, b in g.productions:
            if h not in gen and all(s in gen or s in terms for s in b):
                gen.add(h)
                changed = True
    return gen


def is_empty_cfg(g: Cfg) -> bool:
    return g.start not in generating_set(g)


def remove_useless(g: Cfg) -> Cfg:
    """Keep only nonterminals that are generating and reachable from the start."""
    gen = generating_set(g)
    if g.start not in gen:
        return Cfg(g.terminals, frozenset({g.start}), (), g.start)
    prods = [(h, b) for h, b in g.productions if h in gen and all(s in gen or s in g.terminals for s in b)]
    rules = defaultdict(list)
    for h, b in prods:
        rules[h].append(b)
    reach = {g.start}
    stack = [g.start]
    while stack:
        A = stack.pop()
        for b in rules[A]:
            for s in b:
                if s in gen and s not in reach:
                    reach.add(s)
                    stack.append(s)
    prods = [(h, b) for h, b in prods if h in reach]
    return Cfg(g.terminals, frozenset(reach), tuple(prods), g.start)


def to_cnf(g: Cfg) -> CnfGrammar:
    """Chomsky normal form: epsilon removal, unit removal, useless-symbol
    removal, terminal lifting, binarization.  The empty word becomes a flag."""
    taken = set(g.nonterminals)
    terms = set(g.terminals)
    start = _fresh("_start", taken)
    prods = list(g.productions) + [(start, (g.start,))]

    # epsilon productions
    nullable = nullable_set(Cfg(g.terminals, frozenset(taken), tuple(prods), start))
    accepts_empty = start in nullable
    new = []
    for h, b in prods:
        opts = [((s,), ()) if s in nullable else ((s,),) for s in b]
        for choice in itertools.product(*opts):
            body = tuple(x for part in choice for x in part)
            if body:
                new.append((h, body))
    prods = list(dict.fromkeys(new))

    # unit productions
    units = defaultdict(set)
    for h, b in prods:
        if len(b) == 1 and b[0] not in terms:
            units[h].add(b[0])
    heads = {h for h, _ in prods} | {start}
    closure = {}
    for A in heads:
        seen = {A}
        stack = [A]
        while stack:
            X = stack.pop()
            for Y in units.get(X, ()):
                if Y not in seen:
                    seen.add(Y)
                    stack.append(Y)
        closure[A] = seen
    nonunit = defaultdict(list)
    for h, b in prods:
        if not (len(b) == 1 and b[0] not in terms):
            nonunit[h].append(b)
    prods = list(dict.fromkeys((A, b) for A in heads for B in closure[A] for b in nonunit.get(B, ())))

    # useless symbols
    nts = heads | {s for _, b in prods for s in b if s not in terms}
    cleaned = remove_useless(Cfg(g.terminals, frozenset(nts), tuple(prods), start))
    prods = list(cleaned.productions)

    # terminal lifting and binarization
    lifted = {}
    binary, unary = [], []
    for h, b in prods:
        if len(b) == 1:
            unary.append((h, b[0]))
            continue
        syms = []
        for s in b:
            if s in terms:
                if s not in lifted:
                    lifted[s] = _fresh(("_t", s), taken)
                    unary.append((lifted[s], s))
                syms.append(lifted[s])
            else:
                syms.append(s)
        cur = h
        while len(syms) > 2:
            nxt = _fresh("_bin", taken)
            binary.append((cur, syms[0], nxt))
            cur = nxt
            syms = syms[1:]
        binary.append((cur, syms[0], syms[1]))
    nts_out = list(dict.fromkeys([start] + [x for r in binary for x in r] + [A for A, _ in unary]))
    return CnfGrammar(g.terminals, tuple(nts_out), tuple(dict.fromkeys(binary)),
                      tuple(dict.fromkeys(unary)), start, accepts_empty)


def as_cnf(g) -> CnfGrammar:
    return g if isinstance(g, CnfGrammar) else g.cnf


# ------------------------------------------------------------ membership


def _combine(tables, L: int, R: int) -> int:
    _, _, pairs, right_any, memo = tables
    key = (L, R)
    got = memo.get(key)
    if got is not None:
        return got
    out = 0
    x = L
    while x:
        low = x & -x
        b = low.bit_length() - 1
        x ^= low
        rm = R & right_any.get(b, 0)
        if rm:
            row = pairs[b]
            while rm:
                lc = rm & -rm
                rm ^= lc
                out |= row[lc.bit_length() - 1]
    if len(memo) < 1_000_000:
        memo[key] = out
    return out


def cyk_member(g, w: Sequence[str]) -> bool:
    """CYK membership; ``g`` may be a Cfg (its cached CNF is used) or a CnfGrammar."""
    g = as_cnf(g)
    n = len(w)
    if n == 0:
        return g.accepts_empty
    tables = g._tables
    idx, unary = tables[0], tables[1]
    # cell[i][l-1]: nonterminals deriving w[i:i+l]
    cell = [[unary.get(a, 0)] for a in w]
    if not all(c[0] for c in cell):
        return False
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            m = 0
            row = cell[i]
            for k in range(1, length):
                L = row[k - 1]
                if L:
                    R = cell[i + k][length - k - 1]
                    if R:
                        m |= _combine(tables, L, R)
            row.append(m)
    return bool(cell[0][n - 1] >> idx[g.start] & 1)


def shortest_words(g) -> dict:
    """Shortest terminal word derivable from each nonterminal (fixed point)."""
    g = as_cnf(g)
    best: dict = {}
    for A, a in g.unary:
        if A not in best or g.terminals.sort_key((a,)) < g.terminals.sort_key(best[A]):
            best[A] = (a,)
    changed = True
    while changed:
        changed = False
        for A, B, C in g.binary:
            if B in best and C in best:
                cand = best[B] + best[C]
                if A not in best or g.terminals.sort_key(cand) < g.terminals.sort_key(best[A]):
                    best[A] = cand
                    changed = True
    return best


def nonterminal_bound_k(g) -> int:
    """Max over nonterminals of the length of its shortest derivable word."""
    return nonterminal_bound(g)[0]


def nonterminal_bound(g) -> tuple:
    """``(k, witnesses)`` where witnesses maps each nonterminal to a shortest word."""
    g = as_cnf(g)
    best = shortest_words(g)
    missing = [A for A in g.nonterminals if A not in best]
    if missing:
        raise ValueError(f"nonterminals deriving no word: {missing[:5]}")
    return max((len(w) for w in best.values()), default=0), best


# ------------------------------------------------------------ enumeration


def words_upto(g, maxlen: int, cap: int | None = None) -> list:
    """Every word of length <= maxlen, by dynamic programming over lengths."""
    g = as_cnf(g)
    by_len = [defaultdict(set) for _ in range(maxlen + 1)]
    for A, a in g.unary:
        if maxlen >= 1:
            by_len[1][A].add((a,))
    rules = defaultdict(list)
    for A, B, C in g.binary:
        rules[A].append((B, C))
    total = 0
    for n in range(2, maxlen + 1):
        cur = by_len[n]
        for A, bodies in rules.items():
            acc = cur[A]
            for B, C in bodies:
                for k in range(1, n):
                    left = by_len[k].get(B)
                    if not left:
                        continue
                    right = by_len[n - k].get(C)
                    if not right:
                        continue
                    for x in left:
                        for y in right:
                            acc.add(x + y)
            total += len(acc)
            if cap is not None and total > cap:
                raise CapExceeded(f"more than {cap} derived fragments")
    out = [()] if g.accepts_empty else []
    for n in range(1, maxlen + 1):
        out += by_len[n].get(g.start, ())
    return sorted(out, key=g.terminals.sort_key)


# ------------------------------------------------------------ closure constructions


def from_nfa(A: Nfa) -> Cfg:
    """Right-linear grammar for a regular language."""
    start = ("_nfa", "start")
    prods = [(start, (("_q", i),)) for i in sorted(A.initial)]
    for p, a, q in A.edges:
        prods.append((("_q", p), (("_q", q),) if a is None else (a, ("_q", q))))
    prods += [(("_q", f), ()) for f in sorted(A.final)]
    return Cfg.build(A.alphabet, prods, start)


def finite_cfg(words: Iterable[Sequence[str]], terminals: Alphabet) -> Cfg:
    start = ("_fin", "start")
    return Cfg.build(terminals, [(start, tuple(w)) for w in words], start)


def union_cfg(*gs: Cfg) -> Cfg:
    terms = gs[0].terminals
    for g in gs[1:]:
        terms = terms.union(g.terminals)
    start = ("_union", "start")
    prods = []
    nts = {start}
    for i, g in enumerate(gs):
        ren = {A: ("_u", i, A) for A in g.nonterminals}
        nts |= set(ren.values())
        prods.append((start, (ren[g.start],)))
        prods += [(ren[h], tuple(ren.get(s, s) for s in b)) for h, b in g.productions]
    return Cfg(terms, frozenset(nts), tuple(prods), start)


def concat_cfg(*gs: Cfg) -> Cfg:
    terms = gs[0].terminals
    for g in gs[1:]:
        terms = terms.union(g.terminals)
    start = ("_cat", "start")
    prods = [(start, tuple(("_c", i, g.start) for i, g in enumerate(gs)))]
    nts = {start}
    for i, g in enumerate(gs):
        ren = {A: ("_c", i, A) for A in g.nonterminals}
        nts |= set(ren.values())
        prods += [(ren[h], tuple(ren.get(s, s) for s in b)) for h, b in g.productions]
    return Cfg(terms, frozenset(nts), tuple(prods), start)


def intersect_regular(g: Cfg, A: Nfa) -> Cfg:
    """Grammar for ``L(g) & L(A)`` by the triple construction."""
    if set(g.terminals) - set(A.alphabet):
        raise AlphabetError(
            f"automaton alphabet {A.alphabet.letters} does not cover terminals {g.terminals.letters}")
    cnf = as_cnf(g)
    A = regular.remove_epsilon(A)
    by_label = defaultdict(list)
    for p, a, q in A.edges:
        by_label[a].append((p, q))

    as_left = defaultdict(list)  # B -> [(A, C)]
    as_right = defaultdict(list)  # C -> [(A, B)]
    for X, B, C in cnf.binary:
        as_left[B].append((X, C))
        as_right[C].append((X, B))

    gen = set()
    ends = defaultdict(set)  # (B, p) -> {q}
    starts = defaultdict(set)  # (C, q) -> {p}
    work = []

    def add(t):
        if t not in gen:
            gen.add(t)
            ends[(t[1], t[0])].add(t[2])
            starts[(t[1], t[2])].add(t[0])
            work.append(t)

    for X, a in cnf.unary:
        for p, q in by_label.get(a, ()):
            add((p, X, q))
    while work:
        p, B, q = work.pop()
        for X, C in as_left.get(B, ()):
            for r in list(ends.get((C, q), ())):
                add((p, X, r))
        for X, Bl in as_right.get(B, ()):
            for o in list(starts.get((Bl, p), ())):
                add((o, X, q))

    start = ("_ix", "start")
    prods = []
    roots = [(i, cnf.start, f) for i in sorted(A.initial) for f in sorted(A.final) if (i, cnf.start, f) in gen]
    prods += [(start, (t,)) for t in roots]
    if cnf.accepts_empty and A.initial & A.final:
        prods.append((start, ()))
    unary_of = defaultdict(list)
    for X, a in cnf.unary:
        unary_of[X].append(a)
    binary_of = defaultdict(list)
    for X, B, C in cnf.binary:
        binary_of[X].append((B, C))
    edge_set = set(A.edges)
    seen = set(roots)
    stack = list(roots)
    while stack:
        p, X, r = stack.pop()
        for a in unary_of.get(X, ()):
            if (p, a, r) in edge_set:
                prods.append(((p, X, r), (a,)))
        for B, C in binary_of.get(X, ()):
            for q in ends.get((B, p), ()):
                right = (q, C, r)
                if right in gen:
                    left = (p, B, q)
                    prods.append(((p, X, r), (left, right)))
                    for t in (left, right):
                        if t not in seen:
                            seen.add(t)
                            stack.append(t)
    return Cfg(g.terminals, frozenset(seen | {start}), tuple(prods), start)


def hom_image_cfg(h: FreeHom, g: Cfg) -> Cfg:
    if set(g.terminals) - set(h.source):
        raise AlphabetError("grammar terminals are not inside the homomorphism's source")
    g = _apart(g, h.target)
    prods = []
    for head, body in g.productions:
        out = []
        for s in body:
            if s in g.terminals:
                out.extend(h.image[s])
            else:
                out.append(s)
        prods.append((head, tuple(out)))
    return Cfg(h.target, g.nonterminals, tuple(prods), g.start)


def _weak_preimage(h: FreeHom, g: Cfg) -> Cfg:
    """Inverse image under a homomorphism whose letter images have length <= 1."""
    cnf = as_cnf(g)
    if any(a in set(cnf.nonterminals) for a in h.source):
        cnf = _apart(cnf.to_cfg(), h.source).cnf
    erasable = [e for e in h.source if not h.image[e]]
    by_target = defaultdict(list)
    for e in h.source:
        if h.image[e]:
            by_target[h.image[e][0]].append(e)
    Z = ("_wp", "Z")
    start = ("_wp", "start")
    prods = [(Z, ())] + [(Z, (e, Z)) for e in erasable]
    pad = (Z,) if erasable else ()
    for a in cnf.terminals:
        for e in by_target.get(a, ()):
            prods.append((("_wp", "t", a), (e,) + pad))
    prods += [(X, (B, C)) for X, B, C in cnf.binary]
    prods += [(X, (("_wp", "t", a),)) for X, a in cnf.unary]
    prods.append((start, pad + (cnf.start,)))
    if cnf.accepts_empty:
        prods.append((start, pad))
    nts = {start, Z} | set(cnf.nonterminals) | {("_wp", "t", a) for a in cnf.terminals}
    return remove_useless(Cfg(h.source, frozenset(nts), tuple(prods), start))


def hom_preimage_cfg(h: FreeHom, g: Cfg) -> Cfg:
    """Grammar for ``{x | h(x) in L(g)}``."""
    if set(g.terminals) - set(h.target):
        raise AlphabetError("grammar terminals are not inside the homomorphism's target")
    if h.is_weak():
        return _weak_preimage(h, g)
    # spell each letter a as a chain (a,1)...(a,m) of fresh letters
    spelled, gamma = {}, []
    for a in h.source:
        img = h.image[a]
        parts = [f"~{len(gamma) + i}" for i in range(max(len(img), 1))]
        gamma += parts
        spelled[a] = parts
    G = Alphabet(tuple(gamma))
    letterwise, project = {}, {}
    for a in h.source:
        img = h.image[a]
        for i, x in enumerate(spelled[a]):
            letterwise[x] = img[i : i + 1]
            project[x] = (a,) if i == 0 else ()
    g_weak = FreeHom(G, h.target, letterwise, monoid=True)
    pi = FreeHom(G, h.source, project, monoid=True)
    n = 1
    edges = []
    for a in h.source:
        prev = 0
        parts = spelled[a]
        for i, x in enumerate(parts):
            nxt = 0 if i == len(parts) - 1 else n
            if i < len(parts) - 1:
                n += 1
            edges.append((prev, x, nxt))
            prev = nxt
    K = Nfa(G, n, edges, {0}, {0})
    return hom_image_cfg(pi, intersect_regular(_weak_preimage(g_weak, g), K))


def apply_transduction(T: Transducer, g: Cfg) -> Cfg:
    """Grammar for the image of ``L(g)`` under the relation ``T``."""
    if set(g.terminals) - set(T.in_alphabet):
        raise AlphabetError("grammar terminals are not inside the transducer's input alphabet")
    E, K, pin, pout = edge_coding(T)
    g = _widen_terminals(g, T.in_alphabet)
    return remove_useless(hom_image_cfg(pout, intersect_regular(hom_preimage_cfg(pin, g), K)))


def _apart(g: Cfg, letters) -> Cfg:
    """Rename nonterminals if any of them collides with one of ``letters``."""
    if not any(a in g.nonterminals for a in letters):
        return g
    ren = {A: ("_n", A) for A in g.nonterminals}
    prods = tuple((ren[h], tuple(ren.get(s, s) for s in b)) for h, b in g.productions)
    return Cfg(g.terminals, frozenset(ren.values()), prods, ren[g.start])


def _widen_terminals(g: Cfg, alphabet: Alphabet) -> Cfg:
    if g.terminals == alphabet:
        return g
    g = _apart(g, alphabet)
    return Cfg(alphabet, g.nonterminals, g.productions, g.start)


def with_terminals(g: Cfg, alphabet: Alphabet) -> Cfg:
    """Same grammar over a larger terminal alphabet."""
    if set(g.terminals) - set(alphabet):
        raise AlphabetError("new terminal alphabet must contain the old one")
    return _widen_terminals(g, alphabet)


__all__ = [
    "Cfg", "CnfGrammar", "parse_cfg", "to_cnf", "cyk_member", "nonterminal_bound_k",
    "nonterminal_bound", "shortest_words", "words_upto", "intersect_regular", "hom_image_cfg",
    "hom_preimage_cfg", "apply_transduction", "union_cfg", "concat_cfg", "is_empty_cfg",
    "from_nfa", "finite_cfg", "remove_useless", "with_terminals",
]
