"""Free semigroups and a finitely generated subsemigroup of one.

In a free semigroup the table for R = Sigma^+ is {u#v#v^r u^r}.  The
subsemigroup of {a, b, c}^+ generated by c, ac, ca, ab, baba gets its table
by pulling the ambient table back along the rational transduction that
spells each generator out.
"""

from hsg import hyper
from hsg.grammar import words_upto
from hsg.words import format_word

f = hyper.free_structure("ab")
print(f.table.cfg.to_text())
print("some members:", [format_word(w) for w in words_upto(f.table.cfg, 6)[:6]])
print("free, maxlen 10:", len(hyper.verify_table(f, 10)["disagreements"]), "disagreements")

h = hyper.subfree_hom()
print("generators:", {k: format_word(v) for k, v in h.image.items()})
s = hyper.subfree_structure()
print("pulled-back table:", s.table.cfg)

# uv = c.ac = cac = ca.c = wu, so u#v#uw is in the table
print("u#v#uw in T:", s.table.accepts(tuple("u#v#uw")))
rep = hyper.verify_table(s, 9)
print(f"subfree, maxlen 9: {rep['checked']} triples, {rep['table_size']} in T, "
      f"{len(rep['disagreements'])} disagreements")
