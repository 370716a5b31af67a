"""The piecewise-linear insertion bound and its quadratic competitor.

For a code of relative insdel distance delta and list size L, the bound maps
each deletion fraction tau_d to the largest guaranteed-tolerable insertion
fraction.  Everything here is exact rational arithmetic; floats appear only
for the square-root crossover constants.
"""

from fractions import Fraction

from insdel_lab import (
    comparison_report,
    hy_crossover_delta,
    hy_list_size,
    hy_quadratic2,
    insertion_bound,
    insertion_bound_piecewise,
    unique_decoding_bound,
)

delta, L = Fraction(9, 10), 2

print(f"== piece decomposition at delta={delta}, L={L} ==")
bound = insertion_bound_piecewise(delta, L)
for piece in bound.pieces:
    print(
        f"  r={piece.r}: [{piece.lower}, {piece.upper}]  "
        f"value = {piece.slope} * x + ({piece.intercept})"
    )
print(f"  breakpoints: {bound.breakpoints()}")
print(f"  value at x=1 (tau_d=0): {bound.evaluate(1)}")
print()

print("== the bound vs unique decoding, tau_d sweep ==")
print("  tau_d     rho        unique")
for k in range(10):
    tau = delta * k / 9
    rho = insertion_bound(delta, L, 1 - tau)
    unique = unique_decoding_bound(delta, tau) if tau < delta else Fraction(0)
    print(f"  {str(tau):8s} {str(rho):10s} {str(unique)}")
print()

# piece counts shrink to 1 once 1 - delta >= (L-1)/(L+1)
print("== piece count by delta, L=4 ==")
for dnum in range(1, 10):
    d = Fraction(dnum, 10)
    pieces = insertion_bound_piecewise(d, 4).pieces
    marker = "single" if len(pieces) == 1 else f"{len(pieces)} pieces"
    print(f"  delta={d}: {marker}")
print()

print("== against the quadratic bound ==")
report = comparison_report(0.9, 2)
print(f"  crossover delta1(L=2) = {report.delta1:.9f}")
print(f"  advantage window in tau_d: {report.interval}")
print(f"  P1 (first crossing)      : {report.p1}")
print(f"  P2 (window edge)         : {report.p2}")
x = Fraction(7, 10)
print(
    f"  at tau_d=3/10: linear bound {insertion_bound(delta, L, x)} "
    f"vs quadratic {hy_quadratic2(delta, L, x)}"
)
for L_probe in (2, 3, 5, 10):
    print(f"  delta1(L={L_probe}) = {hy_crossover_delta(L_probe):.6f}")
print()

print("== list sizes the quadratic bound certifies at delta=9/10 ==")
for tau_i in (Fraction(1, 2), Fraction(2, 1), Fraction(17, 2)):
    size = hy_list_size(delta, tau_i, 0)
    print(f"  tau_i={tau_i}: guaranteed list size {size}")
