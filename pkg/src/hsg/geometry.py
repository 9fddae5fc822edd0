"""Cayley graph measurements: thin triangles, logarithmic neighbourhoods,
intersections of path neighbourhoods, and combing comparison.

Distances are between vertices of a finite ball of the Cayley graph, with
edges taken undirected.  A truncated ball can only overestimate distances,
so every measurement is repeated in a ball two steps larger and must agree.
"""

from __future__ import annotations

import csv
import io
import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from .oracle import SemigroupOracle, ball, minimal_combing_words
from .words import CapExceeded, as_word, format_word


class _Star:
    def __repr__(self):
        return "*"

    def __eq__(self, other):
        return isinstance(other, _Star)

    def __hash__(self):
        return hash("_Star")


STAR = _Star()


class BallTooSmall(ValueError):
    """A path leaves the ball it is measured in."""


@dataclass(eq=False)
class CayleyBall:
    oracle: SemigroupOracle
    radius: int
    depth: dict = field(repr=False)  # vertex -> directed depth from *
    adj: dict = field(repr=False)  # vertex -> set of neighbours

    @property
    def star(self):
        return self.oracle.identity() if self.oracle.monoid else STAR

    @property
    def vertices(self):
        return self.depth.keys()

    def __len__(self):
        return len(self.depth)

    def __contains__(self, x):
        return x in self.depth

    @cached_property
    def _cache(self) -> dict:
        return {}

    def distances_from(self, sources) -> dict:
        """Undirected BFS distances from a vertex set."""
        key = frozenset(sources)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        dist = {s: 0 for s in key}
        dq = deque(key)
        while dq:
            x = dq.popleft()
            d = dist[x] + 1
            for y in self.adj[x]:
                if y not in dist:
                    dist[y] = d
                    dq.append(y)
        if len(self._cache) < 4096:
            self._cache[key] = dist
        return dist

    def distance(self, x, y) -> int:
        d = self.distances_from([x]).get(y)
        if d is None:
            raise BallTooSmall(f"{y!r} not reachable from {x!r} inside the ball")
        return d

    def path(self, w: Sequence[str], start=None) -> list:
        """Vertex sequence of ``w`` read from ``start`` (default ``*``)."""
        o = self.oracle
        x = self.star if start is None else start
        out = [x]
        for a in as_word(w):
            g = o.generator(a)
            x = g if x == STAR else o.product(x, g)
            if x not in self.depth:
                raise BallTooSmall(f"path {format_word(w)} leaves the ball of radius {self.radius}")
            out.append(x)
        return out


def build_ball(o: SemigroupOracle, radius: int, cap: int | None = None) -> CayleyBall:
    if radius < 1:
        raise ValueError("radius must be at least 1")
    depth = dict(ball(o, radius, cap))
    star = o.identity() if o.monoid else STAR
    depth.setdefault(star, 0)
    adj = {x: set() for x in depth}
    gens = [o.generator(a) for a in o.alphabet]
    for x in depth:
        for g in gens:
            y = g if x == STAR else o.product(x, g)
            if y in depth and y != x:
                adj[x].add(y)
                adj[y].add(x)
    return CayleyBall(o, radius, depth, adj)


@dataclass(frozen=True)
class Triangle:
    u: tuple
    v: tuple
    w: tuple
    basepoint: object = None  # None means *

    def check(self, o: SemigroupOracle) -> bool:
        return _value(o, self.u + self.v) == _value(o, self.w)

    def sides(self, B: CayleyBall) -> tuple:
        gu = B.path(self.u, self.basepoint)
        gv = B.path(self.v, gu[-1])
        gw = B.path(self.w, self.basepoint)
        return gu, gv, gw

    def to_json(self) -> dict:
        return {"u": format_word(self.u), "v": format_word(self.v), "w": format_word(self.w)}


def _value(o, w):
    if not w:
        return o.identity() if o.monoid else STAR
    return o.evaluate(w)


def _set_distance(B: CayleyBall, points, target) -> int:
    dist = B.distances_from(target)
    worst = 0
    for q in points:
        d = dist.get(q)
        if d is None:
            raise BallTooSmall("vertex not connected inside the ball")
        worst = max(worst, d)
    return worst


def side_distance(B: CayleyBall, t: Triangle, all_sides: bool = False) -> int:
    """Largest distance from a vertex of side ``w`` to sides ``u`` and ``v``;
    with ``all_sides`` the same for every side against the other two."""
    gu, gv, gw = t.sides(B)
    if not all_sides:
        return _set_distance(B, gw, gu + gv)
    return max(_set_distance(B, gw, gu + gv), _set_distance(B, gu, gv + gw), _set_distance(B, gv, gu + gw))


def _stable(o: SemigroupOracle, radius: int, measure: Callable, max_grow: int = 6):
    """Run ``measure(ball)`` at ``radius`` and ``radius + 2``; grow until both agree."""
    prev = None
    r = radius
    for _ in range(max_grow + 1):
        try:
            cur = measure(build_ball(o, r))
        except BallTooSmall:
            cur = None
        if cur is not None and cur == prev:
            return cur, r - 2
        prev = cur
        r += 2
    raise CapExceeded(f"measurement did not stabilise up to radius {r - 2}")


# ------------------------------------------------------------ delta


def minimal_triangles(o: SemigroupOracle, R, maxlen: int) -> list:
    """Triangles of minimal R-words (one witness per element) with total
    length <= maxlen, in a deterministic order."""
    best = minimal_combing_words(o, R, maxlen)
    items = sorted(best.items(), key=lambda e: o.alphabet.sort_key(e[1][1]))
    out = []
    for x, (n, u) in items:
        for y, (m, v) in items:
            if n + m > maxlen:
                continue
            hit = best.get(o.product(x, y))
            if hit and n + m + hit[0] <= maxlen:
                out.append(Triangle(u, v, hit[1]))
    return out


def delta_samples(o: SemigroupOracle, R, maxlen: int, all_sides: bool = False,
                  radius: int | None = None) -> list:
    tris = minimal_triangles(o, R, maxlen)
    radius = maxlen + 4 if radius is None else radius
    samples, _ = _stable(o, radius, lambda B: [side_distance(B, t, all_sides) for t in tris])
    return list(zip(tris, samples))


def measure_delta(o: SemigroupOracle, c, maxlen: int, all_sides: bool = False) -> tuple:
    """``(delta, worst triangle)`` over minimal R-triangles based at ``*``."""
    R = getattr(c, "R", c)
    samples = delta_samples(o, R, maxlen, all_sides)
    if not samples:
        return 0, None
    worst = max(samples, key=lambda e: e[1])
    return worst[1], worst[0]


# ------------------------------------------------------------ fits


def fit_log(samples: Sequence[tuple]) -> dict:
    """Constants with ``d <= k1 + k2 * log2(n)`` for every sample ``(n, d)``.

    ``k1`` is the largest distance seen at ``n <= 2``; ``k2`` is then the
    least nonnegative slope covering the rest.
    """
    pts = [(n, d) for n, d in samples if n >= 1]
    k1 = max((d for n, d in pts if n <= 2), default=0)
    k2 = 0.0
    for n, d in pts:
        if d > k1:
            k2 = max(k2, (d - k1) / math.log2(n))
    return {"k1": k1, "k2": round(k2, 6)}


def halving_sequence(n: int, steps: int = 20) -> list:
    """``b_0 = n``, ``b_{k+1} = (1 + b_k) / 2``."""
    b = [float(n)]
    for _ in range(steps):
        b.append((1 + b[-1]) / 2)
    return b


# ------------------------------------------------------------ neighbourhoods


def _words_by_value(o: SemigroupOracle, maxlen: int) -> list:
    out = []
    layer = [((), None)]
    gens = {a: o.generator(a) for a in o.alphabet}
    for _ in range(maxlen):
        layer = [(w + (a,), g if x is None else o.product(x, g)) for w, x in layer for a, g in gens.items()]
        out += layer
    return out


def log_neighborhood_samples(o: SemigroupOracle, R, maxlen: int, radius: int | None = None) -> list:
    """``(|w|, d, v0, w)``: ``d`` is the largest distance from a vertex of the
    minimal R-word ``v0`` to the path of ``w``, over all words ``w`` of length
    <= maxlen with the same value."""
    best = minimal_combing_words(o, R, maxlen)
    pairs = [(best[x][1], w) for w, x in _words_by_value(o, maxlen) if x in best]
    radius = maxlen + 4 if radius is None else radius

    def run(B):
        return [_set_distance(B, B.path(v0), B.path(w)) for v0, w in pairs]

    ds, _ = _stable(o, radius, run)
    return [(len(w), d, v0, w) for (v0, w), d in zip(pairs, ds)]


def measure_log_neighborhood(o: SemigroupOracle, c, maxlen: int) -> dict:
    R = getattr(c, "R", c)
    rows = log_neighborhood_samples(o, R, maxlen)
    samples = [(n, d) for n, d, _, _ in rows]
    worst = max(rows, key=lambda r: r[1], default=None)
    return {
        "kind": "lognhd",
        "samples": _histogram(samples),
        "fit": fit_log(samples),
        "worst_case": None if worst is None else {"v0": format_word(worst[2]), "w": format_word(worst[3]), "d": worst[1]},
    }


def _histogram(samples) -> list:
    """Per length, the largest distance seen and the number of samples."""
    agg = {}
    for n, d in samples:
        m, k = agg.get(n, (0, 0))
        agg[n] = (max(m, d), k + 1)
    return [{"n": n, "max": m, "count": k} for n, (m, k) in sorted(agg.items())]


# ------------------------------------------------------------ intersections


def _intersection_distance(B: CayleyBall, paths: Sequence, target, limit: int) -> int | None:
    o = B.oracle
    gens = [o.generator(a) for a in o.alphabet]
    dists = [B.distances_from(B.path(p)) for p in paths]
    star = B.star
    for d in range(limit + 1):
        ok = {x for x in B.vertices if all(dd.get(x, limit + 1) <= d for dd in dists)}
        if star not in ok:
            continue
        seen = {star}
        dq = deque([star])
        while dq:
            x = dq.popleft()
            if x == target and x != STAR:
                return d
            for g in gens:
                y = g if x == STAR else o.product(x, g)
                if y in ok and y not in seen:
                    seen.add(y)
                    dq.append(y)
    return None


def ball_intersection_distance(o: SemigroupOracle, paths: Sequence, target=None,
                               radius: int | None = None) -> int:
    """Least ``d`` such that some directed path from ``*`` to the target stays
    within distance ``d`` of every given path."""
    paths = [as_word(p) for p in paths]
    if not paths:
        raise ValueError("need at least one path")
    values = {_value(o, p) for p in paths}
    if len(values) != 1:
        raise ValueError("paths do not end at the same vertex")
    end = values.pop()
    if target is not None and target != end:
        raise ValueError("paths do not end at the target")
    longest = max(len(p) for p in paths)
    radius = 2 * longest + 2 if radius is None else radius

    def run(B):
        d = _intersection_distance(B, paths, end, 2 * radius)
        if d is None:
            raise BallTooSmall("no path inside the ball")
        return d

    d, _ = _stable(o, radius, run)
    return d


def all_paths(o: SemigroupOracle, target, maxlen: int) -> list:
    """Every word of length <= maxlen with value ``target``."""
    return [w for w, x in _words_by_value(o, maxlen) if x == target]


def sample_paths(o: SemigroupOracle, target, maxlen: int, k: int, seed: int = 0) -> list:
    paths = all_paths(o, target, maxlen)
    if len(paths) <= k:
        return paths
    return sorted(random.Random(seed).sample(paths, k), key=o.alphabet.sort_key)


# ------------------------------------------------------------ fellow travelling


def compare_samples(o: SemigroupOracle, R1, R2, maxlen: int, radius: int | None = None) -> list:
    b1 = minimal_combing_words(o, R1, maxlen)
    b2 = minimal_combing_words(o, R2, maxlen)
    pairs = [(b1[x][1], b2[x][1]) for x in b1 if x in b2]
    pairs.sort(key=lambda p: (o.alphabet.sort_key(p[0]), o.alphabet.sort_key(p[1])))
    radius = maxlen + 4 if radius is None else radius

    def run(B):
        out = []
        for w1, w2 in pairs:
            g1, g2 = B.path(w1), B.path(w2)
            out.append(max(_set_distance(B, g1, g2), _set_distance(B, g2, g1)))
        return out

    ds, _ = _stable(o, radius, run)
    return [(max(len(w1), len(w2)), d, w1, w2) for (w1, w2), d in zip(pairs, ds)]


def compare_combings(o: SemigroupOracle, c1, c2, maxlen: int) -> dict:
    R1, R2 = getattr(c1, "R", c1), getattr(c2, "R", c2)
    if set(R1.alphabet) != set(R2.alphabet):
        raise ValueError("combings use different generators")
    rows = compare_samples(o, R1, R2, maxlen)
    samples = [(n, d) for n, d, _, _ in rows]
    worst = max(rows, key=lambda r: r[1], default=None)
    return {
        "kind": "ft",
        "samples": _histogram(samples),
        "fit": fit_log(samples),
        "worst_case": None if worst is None else {"w1": format_word(worst[2]), "w2": format_word(worst[3]), "d": worst[1]},
    }


# ------------------------------------------------------------ output


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    rows = report.get("samples", [])
    if rows:
        wr = csv.DictWriter(buf, fieldnames=list(rows[0]))
        wr.writeheader()
        wr.writerows(rows)
    return buf.getvalue()


__all__ = [
    "STAR", "CayleyBall", "Triangle", "BallTooSmall", "build_ball", "side_distance",
    "minimal_triangles", "delta_samples", "measure_delta", "fit_log", "halving_sequence",
    "log_neighborhood_samples", "measure_log_neighborhood", "ball_intersection_distance",
    "all_paths", "sample_paths", "compare_samples", "compare_combings", "report_csv",
]
