"""The polycyclic monoid and automata over ``Sigma^* x M_cf``.

A monoid word is a tuple of nonzero integers: ``+i`` stands for ``p_i`` and
``-i`` for ``q_i``.  The only relations are ``p_i q_i = 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .grammar import Cfg, cyk_member
from .words import EPS, MARKER, Alphabet, as_word, format_word, parse_word

ONE = "@one"


def push(i: int) -> int:
    return i


def pop(i: int) -> int:
    return -i


def parse_monoid_word(text: str) -> tuple:
    """``"p2 p1 q1"`` -> ``(2, 1, -1)``; ``"@one"`` is the identity."""
    out = []
    for tok in text.split():
        if tok == ONE:
            continue
        kind, num = tok[0], tok[1:]
        if kind not in "pq" or not num.isdigit() or int(num) < 1:
            raise ValueError(f"bad polycyclic letter {tok!r}")
        out.append(int(num) if kind == "p" else -int(num))
    return tuple(out)


def format_monoid_word(m: Sequence[int]) -> str:
    if not m:
        return ONE
    return " ".join(f"p{x}" if x > 0 else f"q{-x}" for x in m)


def reduce(m: Sequence[int]) -> tuple:
    """Normal form: delete adjacent ``p_i q_i`` until none remain."""
    stack: list = []
    for x in m:
        if x == 0:
            raise ValueError("index 0 is not a polycyclic generator")
        if x < 0 and stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_identity(m: Sequence[int]) -> bool:
    return not reduce(m)


def stack_accepts(m: Sequence[int]) -> bool:
    """Read ``m`` as stack operations; True iff it never faults and ends empty."""
    stack = []
    for x in m:
        if x > 0:
            stack.append(x)
        elif not stack or stack.pop() != -x:
            return False
    return not stack


@dataclass(frozen=True, eq=False)
class ValenceAutomaton:
    """Edges ``(src, input word, monoid word, dst)``."""

    alphabet: Alphabet
    n_states: int
    edges: frozenset
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        edges = frozenset((p, tuple(x), tuple(m), q) for p, x, m, q in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        for p, x, m, q in edges:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise ValueError(f"edge {(p, x, m, q)} out of range")
            self.alphabet.check(x)
            if any(i == 0 for i in m):
                raise ValueError("polycyclic indices start at 1")

    def __repr__(self):
        return f"ValenceAutomaton({self.n_states} states, {len(self.edges)} edges)"

    @cached_property
    def cfg(self) -> Cfg:
        return to_cfg(self)

    def accepts(self, w: Sequence[str]) -> bool:
        return defined_language_member(self, w)

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.n_states,
            "initial": sorted(self.initial),
            "final": sorted(self.final),
            "edges": [[p, format_word(x), format_monoid_word(m), q] for p, x, m, q in sorted(self.edges)],
        }

    @classmethod
    def from_json(cls, data) -> "ValenceAutomaton":
        if isinstance(data, str):
            data = json.loads(data)
        edges = [(p, parse_word(x), parse_monoid_word(m), q) for p, x, m, q in data["edges"]]
        return cls(Alphabet.of(data["alphabet"]), data["states"], edges, data["initial"], data["final"])


def _split_edges(V: ValenceAutomaton) -> tuple:
    """Chains of steps carrying at most one input letter and one monoid letter."""
    n = V.n_states
    steps = []
    for p, x, m, q in sorted(V.edges):
        k = max(len(x), len(m), 1)
        prev = p
        for i in range(k):
            nxt = q if i == k - 1 else n
            if i < k - 1:
                n += 1
            steps.append((prev, x[i : i + 1], m[i] if i < len(m) else 0, nxt))
            prev = nxt
    return n, steps


def to_cfg(V: ValenceAutomaton) -> Cfg:
    """Grammar for the language defined by ``V``.

    Nonterminal ``("V", p, q)`` derives the inputs of runs from ``p`` to ``q``
    whose monoid label reduces to 1 without ever popping below the starting
    stack height.
    """
    n, steps = _split_edges(V)
    neutral = [(p, x, q) for p, x, s, q in steps if s == 0]
    pushes = [(p, x, s, q) for p, x, s, q in steps if s > 0]
    pops = [(p, x, -s, q) for p, x, s, q in steps if s < 0]

    def N(p, q):
        return ("V", p, q)

    prods = [(N(p, p), ()) for p in range(n)]
    for p, x, q in neutral:
        prods += [(N(p, r), x + (N(q, r),)) for r in range(n)]
    for p, x, i, p1 in pushes:
        for q1, y, j, q in pops:
            if i == j:
                prods += [(N(p, r), x + (N(p1, q1),) + y + (N(q, r),)) for r in range(n)]
    start = ("V", "start")
    prods += [(start, (N(s, f),)) for s in sorted(V.initial) for f in sorted(V.final)]
    return Cfg.build(V.alphabet, prods, start)


def defined_language_member(V: ValenceAutomaton, w: Sequence[str]) -> bool:
    return cyk_member(V.cfg.cnf, as_word(w))


def run_accepts(V: ValenceAutomaton, w: Sequence[str], max_stack: int = 32) -> bool:
    """Direct path search with a bounded stack.  Only a cross-check for small
    inputs: it can miss runs whose stack exceeds ``max_stack``."""
    n, steps = _split_edges(V)
    out = [[] for _ in range(n)]
    for p, x, s, q in steps:
        out[p].append((x, s, q))
    w = tuple(w)
    start = [(q, 0, ()) for q in V.initial]
    seen = set(start)
    stack = list(start)
    while stack:
        q, i, st = stack.pop()
        if i == len(w) and not st and q in V.final:
            return True
        for x, s, r in out[q]:
            if x and (i >= len(w) or w[i] != x[0]):
                continue
            if s > 0:
                if len(st) >= max_stack:
                    continue
                nst = st + (s,)
            elif s < 0:
                if not st or st[-1] != -s:
                    continue
                nst = st[:-1]
            else:
                nst = st
            node = (r, i + len(x), nst)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return False


def _chain(alphabet: Alphabet, stages: Iterable) -> ValenceAutomaton:
    """Stages are ``("loop", x, m)`` (self-loop on the current state) or
    ``("edge", x, m)`` (move to a fresh state); consecutive loops are joined
    by identity edges."""
    edges = []
    state = 0
    looped = False
    for kind, x, m in stages:
        x, m = as_word(x), parse_monoid_word(m)
        if kind == "loop":
            if looped:
                edges.append((state, (), (), state + 1))
                state += 1
            edges.append((state, x, m, state))
            looped = True
        else:
            edges.append((state, x, m, state + 1))
            state += 1
            looped = False
    return ValenceAutomaton(alphabet, state + 1, edges, {0}, {state})


def figure2_automaton() -> ValenceAutomaton:
    """Loops ``(a, p1)`` then ``(b, q1)``: defines ``{a^i b^i}``."""
    return _chain(Alphabet.of("ab"), [("loop", "a", "p1"), ("loop", "b", "q1")])


def figure3_automaton() -> ValenceAutomaton:
    """Successful labels ``(b^i a^j # b^(k'+k'') a^l # a^m b^n,
    p2^i p1^j q1^k' p2^k'' p1^l q1^m q2^n)``: the bicyclic table for ``b*a*``."""
    return _chain(Alphabet.of("ab").with_marker(), [
        ("loop", "b", "p2"),
        ("loop", "a", "p1"),
        ("edge", MARKER, ONE),
        ("loop", "b", "q1"),
        ("loop", "b", "p2"),
        ("loop", "a", "p1"),
        ("edge", MARKER, ONE),
        ("loop", "a", "q1"),
        ("loop", "b", "q2"),
    ])


__all__ = [
    "ValenceAutomaton", "reduce", "is_identity", "stack_accepts", "parse_monoid_word",
    "format_monoid_word", "to_cfg", "defined_language_member", "run_accepts",
    "figure2_automaton", "figure3_automaton", "push", "pop", "ONE", "EPS",
]
