"""Operation counts for the [21,10] Klein code with m = 40."""

from agdecode import build_code, load_curve
from agdecode.cost import compare_report, format_table
from agdecode.decoder import a_priori_radius

klein = load_curve("klein.json")
code = build_code(klein.curve, klein.places, 12, klein.f)
rad = a_priori_radius(code, 40)
print(f"m = 40: radius {rad.tau}, weight bound W = {rad.W}, Z-degree {rad.ell}")

# a published run uses ell = 54; the linear-system sizes are the same for 53
for ell in (53, 54):
    rows, extra = compare_report(code, 40, ell, 5)
    print()
    print(f"ell = {ell}, divisor A = {extra['A']}Q")
    print(format_table(rows))
