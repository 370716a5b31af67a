"""Four code families and their insdel distances.

Builds binary and q-ary Varshamov-Tenengolts codes, Helberg codes, and
Reed-Solomon codes, then measures minimum Levenshtein distance by brute
force.  Also shows the on-disk code file format round-tripping.
"""

import tempfile
from pathlib import Path

from insdel_lab import (
    PrimeField,
    helberg,
    helberg_weights,
    min_levenshtein_distance,
    read_code,
    rs_code,
    rs_search_eval_points,
    vt_binary,
    vt_qary,
    write_code,
)

print("== binary VT codes ==")
for n in (4, 6, 8):
    code = vt_binary(n, 0)
    print(
        f"  VT_0({n}): {code.size:3d} codewords, "
        f"min insdel distance {min_levenshtein_distance(code)}"
    )
code = vt_binary(4, 0)
print(f"  VT_0(4) codewords: {[w.to_text() for w in code.sorted_words()]}")
print()

print("== q-ary VT, q=3 ==")
sizes = {}
for a in range(4):
    for b in range(3):
        try:
            sizes[(a, b)] = vt_qary(4, 3, a, b).size
        except ValueError:
            sizes[(a, b)] = 0
print(f"  class sizes for n=4: {sizes}")
print(f"  total {sum(sizes.values())} == 3^4 = {3 ** 4}")
best = vt_qary(4, 3, 0, 0)
print(f"  (a=0, b=0): {best.size} codewords, distance {min_levenshtein_distance(best)}")
print()

print("== Helberg codes ==")
print(f"  weights (q=2, s=2): {helberg_weights(2, 2, 8)}")
code = helberg(2, 5, 2, 0)
print(f"  q=2 n=5 s=2 a=0: {[w.to_text() for w in code.sorted_words()]}")
print(f"  distance {min_levenshtein_distance(code)} (guarantee: 2s+2 = 6)")
print()

print("== Reed-Solomon over F_5 ==")
field = PrimeField(5)
code = rs_code(field, 4, 2)
print(f"  n=4 k=2: {code.size} codewords, Hamming floor n-k+1 = 3")
print(f"  insdel distance with alpha = 0..3 : {min_levenshtein_distance(code)}")

cyclic = rs_code(field, 4, 2, alpha=(1, 2, 4, 3))  # powers of the generator 2
print(f"  insdel distance with cyclic alpha : {min_levenshtein_distance(cyclic)}")
# rotations of codewords stay codewords under cyclic evaluation points, and a
# rotation is one deletion plus one insertion away: distance collapses to 2.

search = rs_search_eval_points(field, 4, 2, budget=200, seed=0)
print(
    f"  searched eval points {search.alpha}: distance {search.achieved} "
    f"(target {search.target}, met: {search.met_target})"
)
print()

print("== code files ==")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "vt6.code"
    write_code(vt_binary(6, 0), path)
    text = path.read_text().splitlines()
    print(f"  header   : {text[0]}")
    print(f"  first row: {text[1]}")
    print(f"  round-trips: {read_code(path) == vt_binary(6, 0)}")
