"""Rational transductions as finite automata over a product of free monoids."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import regular
from .regular import Nfa, RatExpr, thompson
from .words import (
    MARKER,
    Alphabet,
    AlphabetError,
    FreeHom,
    as_word,
    format_word,
    parse_word,
    reverse,
)


@dataclass(frozen=True, eq=False)
class Transducer:
    """Edges are ``(src, input word, output word, dst)``; either word may be empty."""

    in_alphabet: Alphabet
    out_alphabet: Alphabet
    n_states: int
    edges: frozenset
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        edges = frozenset((p, tuple(x), tuple(y), q) for p, x, y, q in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        if not self.initial:
            raise ValueError("a transducer needs at least one initial state")
        for p, x, y, q in edges:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise ValueError(f"edge {(p, x, y, q)} out of range")
            self.in_alphabet.check(x)
            self.out_alphabet.check(y)

    def __repr__(self):
        return f"Transducer({self.n_states} states, {len(self.edges)} edges)"

    @cached_property
    def out(self) -> list:
        out = [[] for _ in range(self.n_states)]
        for p, x, y, q in sorted(self.edges):
            out[p].append((x, y, q))
        return out

    def to_json(self) -> dict:
        return {
            "in_alphabet": list(self.in_alphabet),
            "out_alphabet": list(self.out_alphabet),
            "states": self.n_states,
            "initial": sorted(self.initial),
            "final": sorted(self.final),
            "edges": [[p, format_word(x), format_word(y), q] for p, x, y, q in sorted(self.edges)],
        }

    @classmethod
    def from_json(cls, data) -> "Transducer":
        if isinstance(data, str):
            data = json.loads(data)
        edges = [(p, parse_word(x), parse_word(y), q) for p, x, y, q in data["edges"]]
        return cls(Alphabet.of(data["in_alphabet"]), Alphabet.of(data["out_alphabet"]),
                   data["states"], edges, data["initial"], data["final"])


# ------------------------------------------------------------ constructors


def from_pairs(e: RatExpr, in_alphabet: Alphabet, out_alphabet: Alphabet) -> Transducer:
    """Compile a rational expression whose atoms are ``(input, output)`` word pairs."""
    n, edges, s, f = thompson(e)
    tedges = []
    for p, atom, q in edges:
        x, y = ((), ()) if atom is None else (as_word(atom[0]), as_word(atom[1]))
        tedges.append((p, x, y, q))
    return Transducer(in_alphabet, out_alphabet, n, tedges, {s}, {f})


def pair(x, y, in_alphabet: Alphabet, out_alphabet: Alphabet) -> Transducer:
    return Transducer(in_alphabet, out_alphabet, 2, [(0, as_word(x), as_word(y), 1)], {0}, {1})


def _shift(T: Transducer, off: int) -> set:
    return {(p + off, x, y, q + off) for p, x, y, q in T.edges}


def _merge_alphabets(Ts) -> tuple:
    ia, oa = Ts[0].in_alphabet, Ts[0].out_alphabet
    for T in Ts[1:]:
        ia, oa = ia.union(T.in_alphabet), oa.union(T.out_alphabet)
    return ia, oa


def t_union(*Ts: Transducer) -> Transducer:
    ia, oa = _merge_alphabets(Ts)
    edges, init, fin, off = set(), set(), set(), 0
    for T in Ts:
        edges |= _shift(T, off)
        init |= {q + off for q in T.initial}
        fin |= {q + off for q in T.final}
        off += T.n_states
    return Transducer(ia, oa, off, edges, init, fin)


def t_concat(*Ts: Transducer) -> Transducer:
    """Product of relations: ``(x1 x2, y1 y2)`` for related pairs."""
    ia, oa = _merge_alphabets(Ts)
    edges, off = set(), 0
    prev_final = None
    init = None
    for T in Ts:
        edges |= _shift(T, off)
        if prev_final is None:
            init = {q + off for q in T.initial}
        else:
            edges |= {(f, (), (), i + off) for f in prev_final for i in T.initial}
        prev_final = {q + off for q in T.final}
        off += T.n_states
    return Transducer(ia, oa, off, edges, init, prev_final)


def t_star(T: Transducer) -> Transducer:
    n = T.n_states
    edges = set(T.edges)
    edges |= {(n, (), (), i) for i in T.initial}
    edges |= {(f, (), (), n) for f in T.final}
    return Transducer(T.in_alphabet, T.out_alphabet, n + 1, edges, {n}, {n})


def t_plus(T: Transducer) -> Transducer:
    return t_concat(T, t_star(T))


def identity_transducer(alphabet: Alphabet, plus: bool = False) -> Transducer:
    edges = [(0, (a,), (a,), 1) for a in alphabet] + [(1, (a,), (a,), 1) for a in alphabet]
    return Transducer(alphabet, alphabet, 2, edges, {0}, {1} if plus else {0, 1})


def hom_transducer(h: FreeHom, allow_empty: bool = False) -> Transducer:
    """Graph of ``h`` restricted to nonempty inputs (or all inputs with ``allow_empty``)."""
    edges = [(s, (a,), h.image[a], 1) for a in h.source for s in (0, 1)]
    return Transducer(h.source, h.target, 2, edges, {0}, {0, 1} if allow_empty else {1})


def tau_of_hom(h: FreeHom, allow_empty: bool = False) -> Transducer:
    """The transduction ``x -> h(x^r)^r``, graph ``(sum_a (a, h(a)^r))^+``."""
    if any(not x for x in h.image.values()):
        raise AlphabetError("tau_h needs a homomorphism with nonempty letter images")
    edges = [(s, (a,), reverse(h.image[a]), 1) for a in h.source for s in (0, 1)]
    return Transducer(h.source, h.target, 2, edges, {0}, {0, 1} if allow_empty else {1})


def generator_change_rho(h: FreeHom, allow_empty: bool = False) -> Transducer:
    """``(h)(#,#)(h)(#,#)(tau_h)``: sends ``u#v#w^r`` to ``h(u)#h(v)#h(w)^r``.

    ``allow_empty`` admits empty components, as needed for monoid tables.
    """
    ia, oa = h.source.with_marker(), h.target.with_marker()
    H = _widen(hom_transducer(h, allow_empty), ia, oa)
    M = pair((MARKER,), (MARKER,), ia, oa)
    tau = _widen(tau_of_hom(h, allow_empty), ia, oa)
    return t_concat(H, M, H, M, tau)


def wp_rho(h: FreeHom, allow_empty: bool = False) -> Transducer:
    """``(h)(#,#)(tau_h)``: sends ``x#y^r`` to ``h(x)#h(y)^r``."""
    ia, oa = h.source.with_marker(), h.target.with_marker()
    H = _widen(hom_transducer(h, allow_empty), ia, oa)
    M = pair((MARKER,), (MARKER,), ia, oa)
    tau = _widen(tau_of_hom(h, allow_empty), ia, oa)
    return t_concat(H, M, tau)


def _widen(T: Transducer, ia: Alphabet, oa: Alphabet) -> Transducer:
    return Transducer(ia, oa, T.n_states, T.edges, T.initial, T.final)


# ------------------------------------------------------------ algebra


def invert(T: Transducer) -> Transducer:
    return Transducer(T.out_alphabet, T.in_alphabet, T.n_states,
                      {(p, y, x, q) for p, x, y, q in T.edges}, T.initial, T.final)


def normalize(T: Transducer) -> Transducer:
    """Equivalent transducer whose edges read at most one letter per tape and
    that has no edge reading nothing on both tapes."""
    n = T.n_states
    edges = set()
    for p, x, y, q in T.edges:
        k = max(len(x), len(y))
        if k <= 1:
            edges.add((p, x, y, q))
            continue
        prev = p
        for i in range(k):
            nxt = q if i == k - 1 else n
            if i < k - 1:
                n += 1
            edges.add((prev, x[i : i + 1], y[i : i + 1], nxt))
            prev = nxt
    # collapse (eps, eps) edges through closures
    eps_out = [[] for _ in range(n)]
    for p, x, y, q in edges:
        if not x and not y:
            eps_out[p].append(q)
    closures = []
    for p in range(n):
        seen = {p}
        stack = [p]
        while stack:
            s = stack.pop()
            for t in eps_out[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        closures.append(seen)
    by_src = [[] for _ in range(n)]
    for p, x, y, q in edges:
        if x or y:
            by_src[p].append((x, y, q))
    new_edges = set()
    final = set()
    for p in range(n):
        if closures[p] & T.final:
            final.add(p)
        for s in closures[p]:
            for x, y, q in by_src[s]:
                new_edges.add((p, x, y, q))
    return _trim(Transducer(T.in_alphabet, T.out_alphabet, n, new_edges, T.initial, final))


def _trim(T: Transducer) -> Transducer:
    fwd = [[] for _ in range(T.n_states)]
    bwd = [[] for _ in range(T.n_states)]
    for p, x, y, q in T.edges:
        fwd[p].append(q)
        bwd[q].append(p)

    def reach(src, adj):
        seen = set(src)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in adj[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    keep = sorted(reach(T.initial, fwd) & reach(T.final, bwd))
    if not keep:
        return Transducer(T.in_alphabet, T.out_alphabet, 1, [], {0}, [])
    ren = {q: i for i, q in enumerate(keep)}
    edges = {(ren[p], x, y, ren[q]) for p, x, y, q in T.edges if p in ren and q in ren}
    return Transducer(T.in_alphabet, T.out_alphabet, len(keep), edges,
                      {ren[q] for q in T.initial if q in ren}, {ren[q] for q in T.final if q in ren})


def _product(A_out, B_out, A_init, B_init, A_final, B_final, moves):
    """Generic BFS over pairs of states; ``moves(p, q)`` yields ``(x, y, p2, q2)``."""
    ids: dict = {}
    order = []
    queue = deque()
    for p in sorted(A_init):
        for q in sorted(B_init):
            ids[(p, q)] = len(order)
            order.append((p, q))
            queue.append((p, q))
    edges = []
    while queue:
        p, q = queue.popleft()
        for x, y, p2, q2 in moves(p, q):
            if (p2, q2) not in ids:
                ids[(p2, q2)] = len(order)
                order.append((p2, q2))
                queue.append((p2, q2))
            edges.append((ids[(p, q)], x, y, ids[(p2, q2)]))
    final = {i for i, (p, q) in enumerate(order) if p in A_final and q in B_final}
    initial = {ids[(p, q)] for p in A_init for q in B_init}
    return len(order), edges, initial, final


def compose(T1: Transducer, T2: Transducer) -> Transducer:
    """Relation ``{(x, z) | (x, y) in T1, (y, z) in T2}``."""
    if set(T1.out_alphabet) - set(T2.in_alphabet):
        raise AlphabetError("output alphabet of T1 must lie inside input alphabet of T2")
    A, B = normalize(T1), normalize(T2)

    def moves(p, q):
        for x, y, p2 in A.out[p]:
            if not y:
                yield x, (), p2, q
            else:
                for y2, z, q2 in B.out[q]:
                    if y2 == y:
                        yield x, z, p2, q2
        for y2, z, q2 in B.out[q]:
            if not y2:
                yield (), z, p, q2

    n, edges, init, fin = _product(A.out, B.out, A.initial, B.initial, A.final, B.final, moves)
    if n == 0:
        return Transducer(T1.in_alphabet, T2.out_alphabet, 1, [], {0}, [])
    return normalize(Transducer(T1.in_alphabet, T2.out_alphabet, n, edges, init, fin))


def apply_to_regular(T: Transducer, A: Nfa) -> Nfa:
    """Automaton for ``{y | (x, y) in T for some x in L(A)}``."""
    if set(A.alphabet) - set(T.in_alphabet):
        raise AlphabetError("automaton alphabet must lie inside the transducer's input alphabet")
    N = normalize(T)
    B = regular.remove_epsilon(A)

    def moves(p, q):
        for x, y, p2 in N.out[p]:
            if not x:
                yield None, y, p2, q
            else:
                for a, q2 in B.out[q]:
                    if a == x[0]:
                        yield None, y, p2, q2

    n, edges, init, fin = _product(N.out, B.out, N.initial, B.initial, N.final, B.final, moves)
    if n == 0:
        return regular.empty_nfa(T.out_alphabet)
    nfa_edges = [(p, y[0] if y else None, q) for p, _, y, q in edges]
    return regular.trim(Nfa(T.out_alphabet, n, nfa_edges, init, fin))


def domain(T: Transducer) -> Nfa:
    N = normalize(T)
    edges = [(p, x[0] if x else None, q) for p, x, _, q in N.edges]
    return regular.trim(Nfa(T.in_alphabet, N.n_states, edges, N.initial, N.final))


def relates(T: Transducer, x: Sequence[str], y: Sequence[str]) -> bool:
    """Decide ``(x, y) in T`` by search over (state, position in x, position in y)."""
    x, y = tuple(x), tuple(y)
    start = [(q, 0, 0) for q in T.initial]
    seen = set(start)
    stack = list(start)
    while stack:
        q, i, j = stack.pop()
        if i == len(x) and j == len(y) and q in T.final:
            return True
        for a, b, r in T.out[q]:
            if x[i : i + len(a)] == a and y[j : j + len(b)] == b:
                node = (r, i + len(a), j + len(b))
                if node not in seen:
                    seen.add(node)
                    stack.append(node)
    return False


def outputs(T: Transducer, x: Sequence[str], maxlen: int) -> list:
    """Outputs related to ``x`` of length <= maxlen, in (length, letter order)."""
    single = regular.from_words([tuple(x)], T.in_alphabet)
    return regular.words(apply_to_regular(T, single), maxlen)


def transduce(T: Transducer, x: Sequence[str], maxlen: int = 64):
    """Image of ``x`` under a partial-function transducer, or None outside the domain."""
    outs = outputs(T, x, maxlen)
    if len(outs) > 1:
        raise ValueError(f"transducer is not functional on {format_word(x)}: {outs[:3]}")
    return outs[0] if outs else None


def edge_coding(T: Transducer) -> tuple:
    """Split a transducer into an edge alphabet, an automaton over it and the two
    letter-or-empty projections onto the tapes (Nivat factorization)."""
    N = normalize(T)
    edges = sorted(N.edges)
    names = [f"~e{i}" for i in range(len(edges))]
    E = Alphabet(tuple(names))
    K = Nfa(E, N.n_states, [(p, names[i], q) for i, (p, _, _, q) in enumerate(edges)], N.initial, N.final)
    pin = FreeHom(E, T.in_alphabet, {names[i]: x for i, (_, x, _, _) in enumerate(edges)}, monoid=True)
    pout = FreeHom(E, T.out_alphabet, {names[i]: y for i, (_, _, y, _) in enumerate(edges)}, monoid=True)
    return E, K, pin, pout


__all__ = [
    "Transducer", "from_pairs", "pair", "t_union", "t_concat", "t_star", "t_plus",
    "identity_transducer", "hom_transducer", "tau_of_hom", "generator_change_rho", "wp_rho",
    "invert", "normalize", "compose", "apply_to_regular", "domain", "relates", "outputs",
    "transduce", "edge_coding",
]
