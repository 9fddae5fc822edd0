"""Word problems of groups and semigroups, for the integers.

With a and A = a^-1 the group word problem is V = {w : w = 0}.  The semigroup
word problem W = {w#v^r : w = v} is obtained from V by rational operations,
and V comes back from W using any nonempty word for the identity.
"""

from hsg import hyper
from hsg.grammar import words_upto
from hsg.oracle import ImageOracle
from hsg.words import Alphabet, FreeHom, format_word

sigma, inverse, V, Z = hyper.integers_example()
W = hyper.group_wp_to_semigroup(V, sigma, inverse)
print("W up to size 4:", [format_word(w) for w in words_upto(W, 5)][:12], "...")
print("W = oracle word problem (size <= 8):",
      set(words_upto(W, 9)) == set(hyper.word_problem_language(Z, 8)))

V2 = hyper.semigroup_wp_to_group(W, ("a", "A"), sigma)
print("round trip = V (length <= 8):", set(words_upto(V2, 8)) == set(words_upto(V, 8)))

# 2Z inside Z, generated by t = aa and T = AA
h = FreeHom(Alphabet(("t", "T")), sigma, {"t": ("a", "a"), "T": ("A", "A")})
W2 = hyper.subsemigroup_word_problem(W, h)
sub = ImageOracle(h, Z)
print("2Z word problem matches (size <= 8):",
      set(words_upto(W2, 9)) == set(hyper.word_problem_language(sub, 8)))
