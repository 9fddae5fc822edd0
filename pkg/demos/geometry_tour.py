"""Measurements in Cayley graphs.

Thin triangles for the bicyclic monoid, the failure of thinness for the free
commutative semigroup on two letters, and a comparison of two combings.
"""

from hsg import geometry, hyper, regular
from hsg.grammar import nonterminal_bound_k
from hsg.oracle import BicyclicOracle, FreeCommutativeOracle

s = hyper.bicyclic_structure()
k = nonterminal_bound_k(s.table.cfg.cnf)
for n in (8, 10, 12):
    d, worst = geometry.measure_delta(s.oracle, s.combing, n)
    print(f"bicyclic maxlen {n}: delta = {d} (bound 2k = {2 * k})")

print("ball of radius 2 in the bicyclic monoid:", len(geometry.build_ball(BicyclicOracle(), 2)), "vertices")

fc = FreeCommutativeOracle()
for n in (4, 6, 8, 10):
    d = geometry.ball_intersection_distance(fc, ["a" * n + "b" * n, "b" * n + "a" * n])
    print(f"a^{n}b^{n} vs b^{n}a^{n}: paths must stray {d} from one of them (n/2 = {n / 2})")

print("log neighbourhood fit:", geometry.measure_log_neighborhood(s.oracle, s.combing, 8)["fit"])
R2 = regular.compile("b*a* + b*a*ab", s.oracle.alphabet)
print("fellow travelling fit:", geometry.compare_combings(s.oracle, s.combing, R2, 10)["fit"])
