"""Algorithm G against plain linear algebra on a small random module."""

import random

from agdecode import GF, CostCounter, OrderSpec, algorithm_g, brute_force_minimal
from agdecode.groebner import dump_basis, leading_term, minimal_element

F = GF(2, 2, (1, 1, 1))
rng = random.Random(5)
s = 4
gens = []
for i in range(s):
    row = []
    for p in range(s):
        if p > i:
            row.append([])
        else:
            row.append([rng.randrange(4) for _ in range(4)] + [1])
    gens.append(row)
order = OrderSpec(3, (0, 7, 5, 12))

counter = CostCounter()
gb = algorithm_g(gens, order, F, counter)
print(dump_basis(gb, order))
print(counter.mults, "multiplications")

best = minimal_element(gb, order, F)
W = min(leading_term(g, order)[0] for g in gens)
oracle = brute_force_minimal(gens, order, F, W)
print("minimal weight, Groebner basis:", leading_term(best, order)[0])
print("minimal weight, linear algebra:", leading_term(oracle, order)[0])
