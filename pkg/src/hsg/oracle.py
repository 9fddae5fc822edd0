"""Ground-truth semigroup arithmetic for the example semigroups.

An oracle maps words to canonical elements.  Elements are hashable and
carry a canonical string form (:meth:`SemigroupOracle.key`) so reports are
stable across runs.
"""

from __future__ import annotations

import json
import random
from typing import Sequence

from . import regular
from .regular import Nfa
from .words import (
    Alphabet,
    AlphabetError,
    CapExceeded,
    FreeHom,
    as_word,
    element_cap,
    format_word,
    parse_word,
)


class SemigroupOracle:
    """Base class.  Subclasses implement ``generator`` and ``product``."""

    kind = "abstract"
    monoid = False

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def generator(self, a: str):
        raise NotImplementedError

    def product(self, x, y):
        raise NotImplementedError

    def identity(self):
        raise ValueError(f"{self.kind} oracle is not a monoid")

    def evaluate(self, w: Sequence[str]):
        w = as_word(w)
        if not w:
            if not self.monoid:
                raise ValueError("the empty word has no value in a semigroup")
            return self.identity()
        x = None
        for a in w:
            if a not in self.alphabet:
                raise AlphabetError(f"unknown letter {a!r}")
            g = self.generator(a)
            x = g if x is None else self.product(x, g)
        return x

    def key(self, x) -> str:
        return str(x)

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({list(self.alphabet)})"


class FiniteOracle(SemigroupOracle):
    kind = "finite"

    def __init__(self, elements: Sequence, table: Sequence[Sequence[int]], generators: dict,
                 identity: int | None = None):
        super().__init__(Alphabet.of(list(generators)))
        self.elements = list(elements)
        self.table = [list(r) for r in table]
        self.generators = dict(generators)
        self._identity = identity
        self.monoid = identity is not None
        n = len(self.elements)
        if any(len(r) != n for r in self.table) or len(self.table) != n:
            raise ValueError("table must be n x n")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise ValueError("table entries out of range")
        if n <= 64:
            t = self.table
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if t[t[i][j]][k] != t[i][t[j][k]]:
                            raise ValueError(f"not associative at {(i, j, k)}")

    def generator(self, a):
        return self.generators[a]

    def product(self, x, y):
        return self.table[x][y]

    def identity(self):
        if self._identity is None:
            return super().identity()
        return self._identity

    def key(self, x):
        return str(self.elements[x])

    def to_json(self):
        d = {"kind": "finite", "elements": [str(e) for e in self.elements], "table": self.table,
             "generators": self.generators}
        if self._identity is not None:
            d["identity"] = self._identity
        return d


class FreeOracle(SemigroupOracle):
    kind = "free"

    def __init__(self, alphabet: Alphabet, monoid: bool = False):
        super().__init__(alphabet)
        self.monoid = monoid

    def generator(self, a):
        return (a,)

    def product(self, x, y):
        return x + y

    def identity(self):
        if not self.monoid:
            return super().identity()
        return ()

    def key(self, x):
        return format_word(x)

    def to_json(self):
        return {"kind": "free", "alphabet": list(self.alphabet), "monoid": self.monoid}


class BicyclicOracle(SemigroupOracle):
    """``<a, b | ab = 1>``; the element ``(i, j)`` is ``b^i a^j``."""

    kind = "bicyclic"
    monoid = True

    def __init__(self, a: str = "a", b: str = "b"):
        super().__init__(Alphabet((a, b)))
        self.a, self.b = a, b

    def generator(self, x):
        return (0, 1) if x == self.a else (1, 0)

    def product(self, x, y):
        i, j = x
        k, l = y
        if j >= k:
            return (i, j - k + l)
        return (i + k - j, l)

    def identity(self):
        return (0, 0)

    def normal_form(self, x) -> tuple:
        i, j = x
        return (self.b,) * i + (self.a,) * j

    def key(self, x):
        return f"b^{x[0]}a^{x[1]}"

    def to_json(self):
        return {"kind": "bicyclic", "letters": [self.a, self.b]}


class FreeCommutativeOracle(SemigroupOracle):
    """``{a, b | ab = ba}``; elements are letter counts."""

    kind = "freecomm"

    def __init__(self, a: str = "a", b: str = "b"):
        super().__init__(Alphabet((a, b)))
        self.a, self.b = a, b

    def generator(self, x):
        return (1, 0) if x == self.a else (0, 1)

    def product(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def key(self, x):
        return f"a^{x[0]}b^{x[1]}"

    def to_json(self):
        return {"kind": "freecomm", "letters": [self.a, self.b]}


class RewritingOracle(SemigroupOracle):
    """Elements are normal forms under rules the caller declares confluent
    and terminating."""

    kind = "rewriting"

    def __init__(self, alphabet: Alphabet, rules: Sequence, monoid: bool = False,
                 max_steps: int = 100_000):
        super().__init__(alphabet)
        self.rules = [(as_word(l), as_word(r)) for l, r in rules]
        for l, r in self.rules:
            alphabet.check(l)
            alphabet.check(r)
            if not l:
                raise ValueError("rule with empty left side")
        self.monoid = monoid
        self.max_steps = max_steps

    def normal_form(self, w: Sequence[str], rng: random.Random | None = None) -> tuple:
        w = tuple(w)
        for _ in range(self.max_steps):
            sites = []
            for l, r in self.rules:
                n = len(l)
                for i in range(len(w) - n + 1):
                    if w[i : i + n] == l:
                        sites.append((i, n, r))
                        if rng is None:
                            break
                if sites and rng is None:
                    break
            if not sites:
                return w
            i, n, r = rng.choice(sites) if rng else sites[0]
            w = w[:i] + r + w[i + n :]
        raise CapExceeded(f"rewriting did not terminate within {self.max_steps} steps")

    def generator(self, a):
        return self.normal_form((a,))

    def product(self, x, y):
        return self.normal_form(x + y)

    def identity(self):
        if not self.monoid:
            return super().identity()
        return ()

    def key(self, x):
        return format_word(x)

    def spot_check_confluence(self, samples: int = 200, maxlen: int = 10, seed: int = 0) -> bool:
        rng = random.Random(seed)
        letters = list(self.alphabet)
        for _ in range(samples):
            w = tuple(rng.choice(letters) for _ in range(rng.randint(1, maxlen)))
            if self.normal_form(w) != self.normal_form(w, rng):
                return False
        return True

    def to_json(self):
        return {"kind": "rewriting", "alphabet": list(self.alphabet), "monoid": self.monoid,
                "rules": [[format_word(l), format_word(r)] for l, r in self.rules]}


class _Adjoined:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, _Adjoined) and other.name == self.name

    def __hash__(self):
        return hash(("_Adjoined", self.name))


ZERO = _Adjoined("0")
ONE = _Adjoined("1")


class AdjoinedOracle(SemigroupOracle):
    """``S^Z`` (mode ``"zero"``) or ``S^I`` (mode ``"identity"``) with a new
    generator ``letter`` evaluating to the adjoined element."""

    def __init__(self, base: SemigroupOracle, letter: str = "x", mode: str = "zero"):
        if letter in base.alphabet:
            raise AlphabetError(f"letter {letter!r} already in the alphabet")
        if mode not in ("zero", "identity"):
            raise ValueError("mode is 'zero' or 'identity'")
        super().__init__(base.alphabet.union([letter]))
        self.base, self.letter, self.mode = base, letter, mode
        self.kind = "adjoin-" + mode
        self.monoid = base.monoid if mode == "zero" else True

    def generator(self, a):
        if a == self.letter:
            return ZERO if self.mode == "zero" else ONE
        return self.base.generator(a)

    def product(self, x, y):
        if self.mode == "zero":
            if x is ZERO or y is ZERO or x == ZERO or y == ZERO:
                return ZERO
        else:
            if x == ONE:
                return y
            if y == ONE:
                return x
        return self.base.product(x, y)

    def identity(self):
        return ONE if self.mode == "identity" else self.base.identity()

    def key(self, x):
        return repr(x) if isinstance(x, _Adjoined) else self.base.key(x)

    def to_json(self):
        return {"kind": self.kind, "base": self.base.to_json(), "letter": self.letter}


class ImageOracle(SemigroupOracle):
    """The subsemigroup generated by ``h(a)`` inside ``base``: evaluates ``h(w)``."""

    kind = "image"

    def __init__(self, hom: FreeHom, base: SemigroupOracle):
        super().__init__(hom.source)
        if set(hom.target) - set(base.alphabet):
            raise AlphabetError("homomorphism target must lie in the base alphabet")
        self.hom, self.base = hom, base
        self.monoid = base.monoid
        self._gens = {a: base.evaluate(hom.image[a]) for a in hom.source}

    def generator(self, a):
        return self._gens[a]

    def product(self, x, y):
        return self.base.product(x, y)

    def identity(self):
        return self.base.identity()

    def key(self, x):
        return self.base.key(x)

    def to_json(self):
        return {"kind": "image", "base": self.base.to_json(), "hom": self.hom.to_json()}


def oracle_from_json(data) -> SemigroupOracle:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data["kind"]
    if kind == "finite":
        return FiniteOracle(data["elements"], data["table"], data["generators"], data.get("identity"))
    if kind == "free":
        return FreeOracle(Alphabet.of(data["alphabet"]), data.get("monoid", False))
    if kind == "bicyclic":
        return BicyclicOracle(*data.get("letters", ["a", "b"]))
    if kind == "freecomm":
        return FreeCommutativeOracle(*data.get("letters", ["a", "b"]))
    if kind == "rewriting":
        return RewritingOracle(Alphabet.of(data["alphabet"]),
                               [(parse_word(l), parse_word(r)) for l, r in data["rules"]],
                               data.get("monoid", False))
    if kind in ("adjoin-zero", "adjoin-identity"):
        return AdjoinedOracle(oracle_from_json(data["base"]), data.get("letter", "x"), kind[len("adjoin-"):])
    if kind == "image":
        base = oracle_from_json(data["base"])
        img = {a: parse_word(x) for a, x in data["hom"].items()}
        hom = FreeHom(Alphabet.of(list(img)), base.alphabet, img, monoid=base.monoid)
        return ImageOracle(hom, base)
    raise ValueError(f"unknown oracle kind {kind!r}")


# ------------------------------------------------------------ searches


def ball(o: SemigroupOracle, radius: int, cap: int | None = None) -> dict:
    """Elements represented by words of length <= radius, with shortest length.

    In monoid mode the identity is included at length 0.  Insertion order is
    by length, then by the least representing word.
    """
    if radius < 1:
        raise ValueError("radius must be at least 1")
    cap = element_cap() if cap is None else cap
    dist: dict = {}
    frontier = []
    if o.monoid:
        dist[o.identity()] = 0
    for a in o.alphabet:
        g = o.generator(a)
        if g not in dist:
            dist[g] = 1
            frontier.append(g)
    for n in range(2, radius + 1):
        nxt = []
        for x in frontier:
            for a in o.alphabet:
                y = o.product(x, o.generator(a))
                if y not in dist:
                    dist[y] = n
                    nxt.append(y)
                    if len(dist) > cap:
                        raise CapExceeded(f"ball exceeds {cap} elements")
        frontier = nxt
    return dist


def combing_words(o: SemigroupOracle, R: Nfa, maxlen: int, cap: int | None = None) -> list:
    """All words of ``L(R)`` up to ``maxlen`` with their values, ordered by
    (length, letter order).  The empty word is kept only in monoid mode."""
    cap = element_cap() if cap is None else cap
    D = regular.trim(regular.determinize(R))
    if regular.is_empty(D):
        return []
    gens = {a: o.generator(a) for a in o.alphabet}
    out = []
    layer = [((), 0, o.identity() if o.monoid else None)]
    for n in range(maxlen + 1):
        for w, s, x in layer:
            if s in D.final and (w or o.monoid):
                out.append((w, x))
        if len(out) > cap:
            raise CapExceeded(f"more than {cap} combing words")
        if n == maxlen:
            break
        nxt = []
        for w, s, x in layer:
            for a, t in D.out[s]:
                g = gens[a]
                nxt.append((w + (a,), t, g if x is None else o.product(x, g)))
        nxt.sort(key=lambda e: o.alphabet.sort_key(e[0]))
        layer = nxt
    return out


def minimal_combing_words(o: SemigroupOracle, R: Nfa, maxlen: int, cap: int | None = None) -> dict:
    """For every element hit by an R-word of length <= maxlen: the least
    length and the lexicographically least witness of that length."""
    cap = element_cap() if cap is None else cap
    D = regular.trim(regular.determinize(R))
    if regular.is_empty(D):
        return {}
    gens = {a: o.generator(a) for a in o.alphabet}
    best: dict = {}
    start = (0, o.identity() if o.monoid else None)
    seen = {start}
    layer = [((), start)]
    for n in range(maxlen + 1):
        for w, (s, x) in layer:
            if s in D.final and (w or o.monoid) and x not in best:
                best[x] = (n, w)
        if n == maxlen:
            break
        nxt = []
        for w, (s, x) in layer:
            for a, t in D.out[s]:
                g = gens[a]
                node = (t, g if x is None else o.product(x, g))
                if node not in seen:
                    seen.add(node)
                    nxt.append((w + (a,), node))
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} (state, element) pairs")
        layer = nxt
    return best


def naive_minimal_words(o: SemigroupOracle, R: Nfa, maxlen: int) -> dict:
    """Reference version of :func:`minimal_combing_words` by plain enumeration."""
    best: dict = {}
    for w in regular.all_words(o.alphabet, maxlen, 0 if o.monoid else 1):
        if regular.member(R, w):
            x = o.evaluate(w)
            if x not in best:
                best[x] = (len(w), w)
    return best


__all__ = [
    "SemigroupOracle", "FiniteOracle", "FreeOracle", "BicyclicOracle", "FreeCommutativeOracle",
    "RewritingOracle", "AdjoinedOracle", "ImageOracle", "ZERO", "ONE", "oracle_from_json", "ball",
    "combing_words", "minimal_combing_words", "naive_minimal_words",
]
