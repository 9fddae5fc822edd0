"""Adjoining a zero or an identity, and getting back again.

S^Z uses the combing R + x and the table T + R#x#x + x#R#x + x#x#x.
Restricting to the old letters recovers a structure for S.
"""

from hsg import hyper

s = hyper.bicyclic_structure()
z = hyper.adjoin_zero(s)
for w in ("x#x#x", "baa#x#x", "x#baa#aab"):
    print(f"{w:10} {z.table.accepts(tuple(w))}")
print("S^Z, maxlen 10:", len(hyper.verify_table(z, 10)["disagreements"]), "disagreements")

back = hyper.restrict_structure(z, s.oracle.alphabet)
print("restricted, maxlen 10:", len(hyper.verify_table(back, 10)["disagreements"]), "disagreements")

# S^I for the free semigroup on {a, b}: x is the identity.  Erasing x from
# the combing and the table gives a structure for {a, b}^+ again.
si = hyper.free_with_identity_structure("ab")
print("S^I, maxlen 9:", len(hyper.verify_table(si, 9)["disagreements"]), "disagreements")
plain = hyper.restrict_identity(si)
print("x erased, maxlen 9:", len(hyper.verify_table(plain, 9)["disagreements"]), "disagreements")
