"""The bicyclic monoid <a, b | ab = 1> and its multiplication table.

Every element is b^i a^j for a unique pair (i, j), so R = b*a* is a regular
combing with no redundancy.  The table T = {u#v#w^r} is read off a valence
automaton over the polycyclic monoid, which is the same thing as a
context-free grammar.
"""

from hsg import hyper
from hsg.grammar import nonterminal_bound_k
from hsg.valence import figure2_automaton
from hsg.words import parse_word

# Warm-up: two stack loops recognise {a^i b^i}.
A = figure2_automaton()
print("a^i b^i automaton:", [w for w in ("", "ab", "aabb", "aab", "ba") if A.accepts(tuple(w))])

s = hyper.bicyclic_structure()
print("table grammar:", s.table.cfg, "->", s.table.cfg.cnf)

# b a^2 times b a = b a^2: the table holds baa#ba#aab
print("baa#ba#aab in T:", s.table.accepts(parse_word("baa#ba#aab")))

missing, extra = hyper.bicyclic_product_check(s.table, bound=6)
print("product rule, exponents <= 6:", "exact" if not (missing or extra) else (missing, extra))

for n in (4, 8, 12):
    rep = hyper.verify_table(s, n)
    print(f"maxlen {n:2}: {rep['checked']:6} triples, {rep['table_size']:4} in T, "
          f"{len(rep['disagreements'])} disagreements")

k = nonterminal_bound_k(s.table.cfg.cnf)
print("every CNF nonterminal derives a word of length <=", k)
