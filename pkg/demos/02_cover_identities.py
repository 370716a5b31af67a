"""Cover counts and the elimination rows they support.

A v-cover of {1..j} is a family of distinct v-element subsets whose union is
the whole set.  Counting them drives an inclusion-exclusion coefficient with
a one-term closed form, and those coefficients assemble into integer rows
that cancel all intersection orders from 3 up to r+1.
"""

from math import comb

from insdel_lab import (
    alternating_binomial_sum,
    count_v_covers,
    elimination_row,
    enumerate_v_covers,
    inclusion_exclusion_coefficient,
    signed_cover_sum,
)

print("== cover counts A_{j,ell,v}: recursion vs brute force ==")
for j, ell, v in [(3, 2, 2), (4, 3, 2), (4, 2, 3), (5, 4, 2)]:
    fast = count_v_covers(j, ell, v)
    slow = enumerate_v_covers(j, ell, v)
    print(f"  j={j} ell={ell} v={v}: recursion {fast:4d} enumeration {slow:4d}")
print()

print("== signed sums collapse to one binomial ==")
print("  j\\v " + "".join(f"{v:6d}" for v in range(1, 7)))
for j in range(1, 7):
    cells = []
    for v in range(1, 7):
        value = inclusion_exclusion_coefficient(j, v)
        assert value == signed_cover_sum(j, v)  # oracle agreement
        cells.append(f"{value:6d}")
    print(f"  {j:3d} " + "".join(cells))
print("  closed form: (-1)^(j-v) C(j-1, v-1)")
print()

print("== telescoping check: always exactly 1 ==")
values = {alternating_binomial_sum(j, v) for j in range(1, 31) for v in range(1, j + 1)}
print(f"  distinct values over 1 <= v <= j <= 30: {values}")
print()

# Row r weights the u-fold union terms by r+1-u; pushing inclusion-exclusion
# through leaves r on order 1, -1 on order 2, and zeros through order r+1.
print("== elimination rows for list size 6 ==")
for r in range(1, 7):
    row = elimination_row(6, r)
    print(f"  r={r}: {row.coefficients}")
print()

print("== tail growth and the pairing margin ==")
row = elimination_row(10, 3)
for j in range(5, 11):
    margin = (j + 1) * abs(row.coefficient(j)) - abs(row.coefficient(j + 1))
    print(
        f"  j={j}: coeff {row.coefficient(j):6d}  "
        f"(j+1)|c_j| - |c_(j+1)| = {margin} (>= 3)"
    )
print()
print(f"sanity: comb(7, 2) * 8 = {comb(7, 2) * 8} intersections summed at order 9")
