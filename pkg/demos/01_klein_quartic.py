"""A tour of the Klein quartic over GF(8): relations, the y_j basis, places."""

from agdecode import enumerate_places, load_curve, valuation_at

spacer = "-" * 60

klein = load_curve("klein.json")
c = klein.curve
print(c)
print("gaps of <3,5,7>:", c.semigroup.gaps)

print(spacer)
x1, x2, x3 = c.x(1), c.x(2), c.x(3)
print("x2 * x2 =", x2 * x2)
print("x3 * x2 =", x3 * x2)
print("x3 * x3 =", x3 * x3)

print(spacer)
print("free basis over F_8[x1]")
for j, (b, L, y) in enumerate(c.apery_data()):
    print(f"  y_{j} = {str(y):<4} pole order {b}")

print(spacer)
places, singular = enumerate_places(c)
print(len(places), "affine rational places,", len(singular), "singular")
for P in places:
    if P.lp != 1:
        print("  x1 is not a local parameter at", P.coords, "; use x%d" % P.lp)

f = klein.f
print("f =", f, " pole order", f.pole_order())
zeros = [P for P in places if f.evaluate(P.coords) == 0]
print("zeros of f:", len(zeros), " valuations", {valuation_at(f, P, 4) for P in zeros})
g = x1**8 + x1
print("x1^8 + x1 vanishes at", sum(1 for P in places if g.evaluate(P.coords) == 0),
      "places but has pole order", g.pole_order())
