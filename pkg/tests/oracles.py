"""Reference implementations used as referees in the tests.

Each one is deliberately naive and shares no code with the package beyond
the data classes it reads.
"""

from itertools import product


def nfa_accepts(A, w):
    """Plain simulation straight off the edge list."""
    def close(states):
        todo, seen = list(states), set(states)
        while todo:
            p = todo.pop()
            for (s, a, q) in A.edges:
                if s == p and a is None and q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    cur = close(A.initial)
    for x in w:
        cur = close({q for (s, a, q) in A.edges if s in cur and a == x})
    return bool(cur & set(A.final))


def render(tree):
    """Render an expression tree in the package's rational syntax.  Trees are
    nested tuples: ("sym", a), ("eps",), ("empty",), ("or", l, r),
    ("cat", l, r), ("star", e), ("plus", e)."""
    op = tree[0]
    if op == "sym":
        return tree[1]
    if op == "eps":
        return "@eps"
    if op == "empty":
        return "@empty"
    if op in ("or", "cat"):
        sep = "+" if op == "or" else ""
        return f"({render(tree[1])}{sep}{render(tree[2])})"
    return f"({render(tree[1])})" + ("*" if op == "star" else "^+")


def tree_words(tree, n):
    """Words of length <= n denoted by an expression tree (set semantics)."""
    op = tree[0]
    if op == "sym":
        return {(tree[1],)} if n >= 1 else set()
    if op == "eps":
        return {()}
    if op == "empty":
        return set()
    if op == "or":
        return tree_words(tree[1], n) | tree_words(tree[2], n)
    if op == "cat":
        L, R = tree_words(tree[1], n), tree_words(tree[2], n)
        return {x + y for x in L for y in R if len(x) + len(y) <= n}
    L = tree_words(tree[1], n)
    acc = {()}
    while True:
        new = acc | {x + y for x in acc for y in L if len(x) + len(y) <= n}
        if new == acc:
            break
        acc = new
    if op == "star":
        return acc
    return {x + y for x in L for y in acc if len(x) + len(y) <= n}


def cfg_words(g, maxlen):
    """Words of length <= maxlen derivable in ``g``, by fixpoint iteration on
    the original productions."""
    L = {A: set() for A in g.nonterminals}
    terms = set(g.terminals)
    changed = True
    while changed:
        changed = False
        for head, body in g.productions:
            parts = [{(s,)} if s in terms else L[s] for s in body]
            acc = {()}
            for part in parts:
                acc = {x + y for x in acc for y in part if len(x) + len(y) <= maxlen}
                if not acc:
                    break
            new = acc - L[head]
            if new:
                L[head] |= new
                changed = True
    return L[g.start]


def naive_reduce(m):
    """Delete adjacent ``p_i q_i`` by repeated scanning."""
    m = list(m)
    again = True
    while again:
        again = False
        for i in range(len(m) - 1):
            if m[i] > 0 and m[i + 1] == -m[i]:
                del m[i : i + 2]
                again = True
                break
    return tuple(m)


def transducer_pairs(T, maxin, maxout):
    """All (x, y) related by ``T`` with |x| <= maxin, |y| <= maxout, by
    exploring configurations (state, x read, y written)."""
    start = [(q, (), ()) for q in T.initial]
    seen = set(start)
    todo = list(start)
    out = set()
    while todo:
        q, x, y = todo.pop()
        if q in T.final:
            out.add((x, y))
        for (p, a, b, r) in T.edges:
            if p != q:
                continue
            nx, ny = x + tuple(a), y + tuple(b)
            if len(nx) > maxin or len(ny) > maxout:
                continue
            node = (r, nx, ny)
            if node not in seen:
                seen.add(node)
                todo.append(node)
    return out


def all_words(letters, maxlen, minlen=0):
    for n in range(minlen, maxlen + 1):
        for w in product(letters, repeat=n):
            yield tuple(w)


def bicyclic(w):
    """Value of a word over a, b as (i, j) meaning b^i a^j, by rewriting ab -> 1."""
    s = "".join(w)
    while "ab" in s:
        s = s.replace("ab", "")
    return (s.count("b"), s.count("a"))
