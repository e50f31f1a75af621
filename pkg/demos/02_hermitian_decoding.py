"""Interpolate and list decode on the [8,4] Hermitian code over GF(4)."""

import random

from agdecode import (CostCounter, a_priori_radius, build_code, encode, interpolate,
                      list_decode, load_curve, verify_multiplicity)

herm = load_curve("hermitian4.json")
code = build_code(herm.curve, herm.places, 4, herm.f)
print(f"[n, k] = [{code.n}, {code.k}]")
for m in range(1, 7):
    rad = a_priori_radius(code, m)
    print(f"  m = {m}: guaranteed radius {rad.tau}, ell = {rad.ell}")

rng = random.Random(7)
msg = [rng.randrange(4) for _ in range(code.k)]
word = encode(code, msg)
r = list(word)
r[5] = herm.curve.field.add(r[5], 2)
print("sent    ", word)
print("received", r)

counter = CostCounter()
Q = interpolate(code, r, 2, 2, counter)
print("Q(Z) =")
for line in Q.lines():
    print("   ", line)
print("weight", Q.weight(), "using", counter.mults, "field multiplications")
print("multiplicity 2 at every place:",
      all(verify_multiplicity(Q, P, ri, 2) for P, ri in zip(code.places, r)))

res = list_decode(code, r, m=2)
for cand in res.candidates:
    print("candidate", cand.message, "at distance", cand.distance)
