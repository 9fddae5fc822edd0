"""Finite automata and rational expressions over free monoids.

Automata carry epsilon edges (label ``None``).  Binary operations insist on
compatible alphabets; use :func:`with_alphabet` to widen one first.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .words import EPS, Alphabet, AlphabetError, CapExceeded, FreeHom


@dataclass(frozen=True, eq=False)
class Nfa:
    alphabet: Alphabet
    n_states: int
    edges: frozenset
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        n = self.n_states
        for p, a, q in self.edges:
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"edge {(p, a, q)} out of range")
            if a is not None and a not in self.alphabet:
                raise AlphabetError(f"edge label {a!r} not in alphabet")
        for s in self.initial | self.final:
            if not 0 <= s < n:
                raise ValueError(f"state {s} out of range")

    @cached_property
    def out(self) -> list:
        out = [[] for _ in range(self.n_states)]
        for p, a, q in sorted(self.edges, key=_edge_key):
            out[p].append((a, q))
        return out

    def closure(self, states: Iterable[int]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        out = self.out
        while stack:
            p = stack.pop()
            for a, q in out[p]:
                if a is None and q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def step(self, states: Iterable[int], a: str) -> frozenset:
        out = self.out
        nxt = {q for p in states for b, q in out[p] if b == a}
        return self.closure(nxt)

    def accepts(self, w: Sequence[str]) -> bool:
        return member(self, w)

    def __repr__(self):
        return f"Nfa({self.n_states} states, {len(self.edges)} edges, alphabet={list(self.alphabet)})"

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.n_states,
            "initial": sorted(self.initial),
            "final": sorted(self.final),
            "edges": [[p, EPS if a is None else a, q] for p, a, q in sorted(self.edges, key=_edge_key)],
        }

    @classmethod
    def from_json(cls, data) -> "Nfa":
        if isinstance(data, str):
            data = json.loads(data)
        alphabet = Alphabet.of(data["alphabet"])
        edges = [(p, None if a == EPS else a, q) for p, a, q in data["edges"]]
        return cls(alphabet, data["states"], edges, data["initial"], data["final"])


def _edge_key(e):
    p, a, q = e
    return (p, "" if a is None else a, q)


# ---------------------------------------------------------------- expressions


class RatExpr:
    """Rational expression tree.  Leaves of :class:`Sym` hold an *atom*: a
    letter for languages, a pair of words for transducers."""

    def __or__(self, other):
        return Union(self, other)

    def __add__(self, other):
        return Union(self, other)

    def __mul__(self, other):
        return Concat(self, other)

    def star(self):
        return Star(self)

    def plus(self):
        return Plus(self)


@dataclass(frozen=True)
class Empty(RatExpr):
    pass


@dataclass(frozen=True)
class Epsilon(RatExpr):
    pass


@dataclass(frozen=True)
class Sym(RatExpr):
    atom: Hashable


@dataclass(frozen=True)
class Union(RatExpr):
    left: RatExpr
    right: RatExpr


@dataclass(frozen=True)
class Concat(RatExpr):
    left: RatExpr
    right: RatExpr


@dataclass(frozen=True)
class Star(RatExpr):
    inner: RatExpr


@dataclass(frozen=True)
class Plus(RatExpr):
    inner: RatExpr


def atoms(e: RatExpr) -> list:
    out: list = []
    stack = [e]
    while stack:
        x = stack.pop()
        if isinstance(x, Sym):
            if x.atom not in out:
                out.append(x.atom)
        elif isinstance(x, (Union, Concat)):
            stack.extend([x.right, x.left])
        elif isinstance(x, (Star, Plus)):
            stack.append(x.inner)
    return out


_OPS = ("@eps", "@empty", "^+", "(", ")", "*", "+")


def _tokenize(text: str, alphabet: Alphabet | None) -> list:
    letters = sorted(alphabet.letters, key=len, reverse=True) if alphabet else []
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for op in _OPS[:3]:
            if text.startswith(op, i):
                toks.append(op)
                i += len(op)
                break
        else:
            for a in letters:
                if text.startswith(a, i):
                    toks.append(("sym", a))
                    i += len(a)
                    break
            else:
                if c in "()*+":
                    toks.append(c)
                    i += 1
                elif alphabet is None:
                    toks.append(("sym", c))
                    i += 1
                else:
                    raise AlphabetError(f"unknown symbol at {text[i:]!r}")
    return toks


def parse_ratexpr(text: str, alphabet: Alphabet | None = None) -> RatExpr:
    """Parse ``b*a*``, ``(ab)^+ + @eps`` etc.

    ``+`` between operands is union, postfix ``*`` is star and postfix ``^+``
    is the plus closure.  Letters are matched longest-first against
    ``alphabet``; without an alphabet every other character is a letter.
    """
    toks = _tokenize(text, alphabet)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def union_():
        nonlocal pos
        e = concat_()
        while peek() == "+":
            pos += 1
            e = Union(e, concat_())
        return e

    def concat_():
        parts = []
        while peek() is not None and peek() not in ("+", ")", "*", "^+"):
            parts.append(postfix_())
        if not parts:
            return Epsilon()
        e = parts[0]
        for p in parts[1:]:
            e = Concat(e, p)
        return e

    def postfix_():
        nonlocal pos
        e = atom_()
        while peek() in ("*", "^+"):
            e = Star(e) if peek() == "*" else Plus(e)
            pos += 1
        return e

    def atom_():
        nonlocal pos
        t = peek()
        pos += 1
        if t == "(":
            e = union_()
            if peek() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return e
        if t == "@eps":
            return Epsilon()
        if t == "@empty":
            return Empty()
        if isinstance(t, tuple):
            return Sym(t[1])
        raise ValueError(f"unexpected token {t!r} in {text!r}")

    e = union_()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return e


class _Builder:
    """Thompson construction with arbitrary atoms as edge labels."""

    def __init__(self):
        self.n = 0
        self.edges: list = []

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def build(self, e: RatExpr) -> tuple:
        s, f = self.new(), self.new()
        if isinstance(e, Empty):
            pass
        elif isinstance(e, Epsilon):
            self.edges.append((s, None, f))
        elif isinstance(e, Sym):
            self.edges.append((s, e.atom, f))
        elif isinstance(e, Union):
            for part in (e.left, e.right):
                a, b = self.build(part)
                self.edges += [(s, None, a), (b, None, f)]
        elif isinstance(e, Concat):
            a, b = self.build(e.left)
            c, d = self.build(e.right)
            self.edges += [(s, None, a), (b, None, c), (d, None, f)]
        elif isinstance(e, (Star, Plus)):
            a, b = self.build(e.inner)
            self.edges += [(s, None, a), (b, None, f), (b, None, a)]
            if isinstance(e, Star):
                self.edges.append((s, None, f))
        else:
            raise TypeError(f"not a rational expression: {e!r}")
        return s, f


def thompson(e: RatExpr) -> tuple:
    """Return ``(n_states, edges, initial, final)`` with atoms as labels."""
    b = _Builder()
    s, f = b.build(e)
    return b.n, b.edges, s, f


def compile(e: RatExpr | str, alphabet: Alphabet | None = None) -> Nfa:
    if isinstance(e, str):
        e = parse_ratexpr(e, alphabet)
    if alphabet is None:
        alphabet = Alphabet.of(atoms(e))
    n, edges, s, f = thompson(e)
    return Nfa(alphabet, n, edges, {s}, {f})


# ------------------------------------------------------------ basic queries


def member(A: Nfa, w: Sequence[str]) -> bool:
    cur = A.closure(A.initial)
    for a in w:
        if a not in A.alphabet:
            raise AlphabetError(f"symbol {a!r} not in alphabet {A.alphabet.letters}")
        cur = A.step(cur, a)
        if not cur:
            return False
    return bool(cur & A.final)


def reachable(A: Nfa, sources: Iterable[int]) -> set:
    seen = set(sources)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for _, q in A.out[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def is_empty(A: Nfa) -> bool:
    return not (reachable(A, A.initial) & A.final)


def _require_same(A: Nfa, B: Nfa) -> Alphabet:
    if set(A.alphabet) != set(B.alphabet):
        raise AlphabetError(f"alphabet mismatch: {A.alphabet.letters} vs {B.alphabet.letters}")
    return A.alphabet


def with_alphabet(A: Nfa, alphabet: Alphabet) -> Nfa:
    if not set(A.alphabet) <= set(alphabet):
        raise AlphabetError("new alphabet must contain the old one")
    return Nfa(alphabet, A.n_states, A.edges, A.initial, A.final)


# ------------------------------------------------------------ constructions


def from_words(words: Iterable[Sequence[str]], alphabet: Alphabet) -> Nfa:
    """Trie-shaped automaton for a finite language."""
    edges = {}
    final = set()
    n = 1
    for w in words:
        p = 0
        for a in alphabet.check(w):
            if (p, a) not in edges:
                edges[(p, a)] = n
                n += 1
            p = edges[(p, a)]
        final.add(p)
    return Nfa(alphabet, n, [(p, a, q) for (p, a), q in edges.items()], {0}, final)


def universal(alphabet: Alphabet, plus: bool = False) -> Nfa:
    """Sigma^* (or Sigma^+ when ``plus``)."""
    if plus:
        edges = [(0, a, 1) for a in alphabet] + [(1, a, 1) for a in alphabet]
        return Nfa(alphabet, 2, edges, {0}, {1})
    return Nfa(alphabet, 1, [(0, a, 0) for a in alphabet], {0}, {0})


def empty_nfa(alphabet: Alphabet) -> Nfa:
    return Nfa(alphabet, 1, [], {0}, [])


def _disjoint(A: Nfa, B: Nfa) -> tuple:
    off = A.n_states
    edges = set(A.edges) | {(p + off, a, q + off) for p, a, q in B.edges}
    return off, edges


def union(A: Nfa, B: Nfa) -> Nfa:
    alph = _require_same(A, B)
    off, edges = _disjoint(A, B)
    return Nfa(alph, A.n_states + B.n_states, edges,
               set(A.initial) | {q + off for q in B.initial},
               set(A.final) | {q + off for q in B.final})


def concat(A: Nfa, B: Nfa) -> Nfa:
    alph = _require_same(A, B)
    off, edges = _disjoint(A, B)
    edges |= {(f, None, i + off) for f in A.final for i in B.initial}
    return Nfa(alph, A.n_states + B.n_states, edges, A.initial, {q + off for q in B.final})


def concat_all(parts: Sequence[Nfa]) -> Nfa:
    out = parts[0]
    for p in parts[1:]:
        out = concat(out, p)
    return out


def star(A: Nfa) -> Nfa:
    n = A.n_states
    edges = set(A.edges)
    edges |= {(n, None, i) for i in A.initial}
    edges |= {(f, None, n) for f in A.final}
    return Nfa(A.alphabet, n + 1, edges, {n}, {n})


def plus(A: Nfa) -> Nfa:
    return concat(A, star(A))


def reverse_nfa(A: Nfa) -> Nfa:
    return Nfa(A.alphabet, A.n_states, {(q, a, p) for p, a, q in A.edges}, A.final, A.initial)


def remove_epsilon(A: Nfa) -> Nfa:
    """Equivalent automaton without epsilon edges (same states)."""
    if all(a is not None for _, a, _ in A.edges):
        return A
    edges = set()
    final = set()
    for p in range(A.n_states):
        cl = A.closure({p})
        if cl & A.final:
            final.add(p)
        for q in cl:
            for a, r in A.out[q]:
                if a is not None:
                    edges.add((p, a, r))
    return trim(Nfa(A.alphabet, A.n_states, edges, A.initial, final))


def trim(A: Nfa) -> Nfa:
    """Drop states that are not both accessible and co-accessible; renumber."""
    fwd = reachable(A, A.initial)
    back = reachable(reverse_nfa(A), A.final)
    keep = sorted(fwd & back)
    if not keep:
        return empty_nfa(A.alphabet)
    ren = {q: i for i, q in enumerate(keep)}
    edges = {(ren[p], a, ren[q]) for p, a, q in A.edges if p in ren and q in ren}
    return Nfa(A.alphabet, len(keep), edges,
               {ren[q] for q in A.initial if q in ren}, {ren[q] for q in A.final if q in ren})


def determinize(A: Nfa, complete: bool = False) -> Nfa:
    """Subset construction.  One initial state, no epsilon edges.

    With ``complete`` every state gets an edge for every letter (a sink
    state absorbs the missing ones).
    """
    start = A.closure(A.initial)
    ids = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for a in A.alphabet:
            T = A.step(S, a)
            if not T and not complete:
                continue
            if T not in ids:
                ids[T] = len(order)
                order.append(T)
                queue.append(T)
            edges.append((ids[S], a, ids[T]))
    final = {i for i, S in enumerate(order) if S & A.final}
    return Nfa(A.alphabet, len(order), edges, {0}, final)


def complement(A: Nfa) -> Nfa:
    D = determinize(A, complete=True)
    return Nfa(D.alphabet, D.n_states, D.edges, D.initial, set(range(D.n_states)) - set(D.final))


def intersect(A: Nfa, B: Nfa) -> Nfa:
    alph = _require_same(A, B)
    A, B = remove_epsilon(A), remove_epsilon(B)
    ids: dict = {}
    order = []
    edges = []
    queue = deque()
    for p in sorted(A.initial):
        for q in sorted(B.initial):
            ids[(p, q)] = len(order)
            order.append((p, q))
            queue.append((p, q))
    while queue:
        p, q = queue.popleft()
        for a, p2 in A.out[p]:
            for b, q2 in B.out[q]:
                if a != b:
                    continue
                if (p2, q2) not in ids:
                    ids[(p2, q2)] = len(order)
                    order.append((p2, q2))
                    queue.append((p2, q2))
                edges.append((ids[(p, q)], a, ids[(p2, q2)]))
    if not order:
        return empty_nfa(alph)
    initial = {ids[(p, q)] for p in A.initial for q in B.initial}
    final = {i for i, (p, q) in enumerate(order) if p in A.final and q in B.final}
    return Nfa(alph, len(order), edges, initial, final)


def difference(A: Nfa, B: Nfa) -> Nfa:
    return intersect(A, complement(B))


def hom_image(h: FreeHom, A: Nfa) -> Nfa:
    if set(A.alphabet) - set(h.source):
        raise AlphabetError("automaton alphabet is not inside the homomorphism's source")
    n = A.n_states
    edges = []
    for p, a, q in A.edges:
        img = () if a is None else h.image[a]
        if len(img) <= 1:
            edges.append((p, img[0] if img else None, q))
            continue
        prev = p
        for x in img[:-1]:
            edges.append((prev, x, n))
            prev = n
            n += 1
        edges.append((prev, img[-1], q))
    return Nfa(h.target, n, edges, A.initial, A.final)


def hom_preimage(h: FreeHom, A: Nfa) -> Nfa:
    if set(h.target) - set(A.alphabet):
        raise AlphabetError("homomorphism target is not inside the automaton alphabet")
    A = remove_epsilon(A)
    edges = []
    for p in range(A.n_states):
        for a in h.source:
            cur = {p}
            for x in h.image[a]:
                cur = {r for s in cur for b, r in A.out[s] if b == x}
            edges += [(p, a, q) for q in cur]
    return Nfa(h.source, A.n_states, edges, A.initial, A.final)


# ------------------------------------------------------------ enumeration


def words(A: Nfa, maxlen: int, cap: int | None = None) -> list:
    """All accepted words of length <= maxlen, ordered by (length, letter order)."""
    D = trim(determinize(A))
    if is_empty(D):
        return []
    out = []
    layer = [((), 0)]
    for n in range(maxlen + 1):
        for w, s in layer:
            if s in D.final:
                out.append(w)
        if cap is not None and len(out) > cap:
            raise CapExceeded(f"more than {cap} words")
        if n == maxlen:
            break
        nxt = []
        for w, s in layer:
            for a, t in D.out[s]:
                nxt.append((w + (a,), t))
        nxt.sort(key=lambda x: D.alphabet.sort_key(x[0]))
        layer = nxt
    return out


def all_words(alphabet: Alphabet, maxlen: int, minlen: int = 0):
    """Every word over ``alphabet`` with length in [minlen, maxlen], in order."""
    layer = [()]
    for n in range(maxlen + 1):
        if n >= minlen:
            yield from layer
        layer = [w + (a,) for w in layer for a in alphabet]


def nfa_from_text(text: str, alphabet: Alphabet | None = None) -> Nfa:
    """Accept either NFA JSON or a rational expression."""
    text = text.strip()
    if text.startswith("{"):
        return Nfa.from_json(text)
    return compile(text, alphabet)
