"""
Normed division algebras: R, C, H, O
====================================

The four algebras where |xy| = |x| |y| holds with no zero divisors, and
what each one gives up: C loses self-conjugacy, H loses commutativity,
O loses associativity (but keeps alternativity).
"""

import numpy as np

from threefold.scalars import Octonion, Quaternion, conj, inv, mul_table

rng = np.random.default_rng(0)

# the norm is multiplicative in every dimension 1, 2, 4, 8
print("norm composition |xy| = |x||y|")
for dim in (1, 2, 4, 8):
    table = mul_table(dim)
    worst = 0.0
    for _ in range(200):
        x = rng.standard_normal(dim)
        y = rng.standard_normal(dim)
        xy = np.einsum("a,b,abc->c", x, y, table)
        worst = max(worst, abs(np.linalg.norm(xy) - np.linalg.norm(x) * np.linalg.norm(y)))
    print(f"  dim {dim}: worst defect over 200 random pairs = {worst:.2e}")

# quaternions: every nonzero element is invertible, but ij = -ji
i = Quaternion(0, 1, 0, 0)
j = Quaternion(0, 0, 1, 0)
print("\nquaternions are noncommutative:")
print(f"  i*j = {i * j}")
print(f"  j*i = {j * i}")

q = Quaternion(1, 2, -1, 0.5)
print(f"  q * inv(q) = {q * inv(q)}")
print(f"  conj(q)    = {conj(q)}")

# octonions: basis products follow the oriented Fano lines
units = [Octonion.from_array(row) for row in np.eye(8)]
print("\noctonion unit products e_i e_j (signed index of the result):")
octo = mul_table(8)
for a in range(1, 8):
    row = []
    for b in range(1, 8):
        coeffs = np.einsum("a,b,abc->c", units[a].coeffs, units[b].coeffs, octo)
        k = int(np.argmax(np.abs(coeffs)))
        row.append(f"{'+' if coeffs[k] > 0 else '-'}e{k}")
    print("  " + " ".join(f"{entry:>4s}" for entry in row))

# (e1 e2) e3 != e1 (e2 e3): the associator does not vanish off the Fano lines
lhs = (units[1] * units[2]) * units[3]
rhs = units[1] * (units[2] * units[3])
print("\noctonions are nonassociative:")
print(f"  (e1 e2) e3 = {lhs}")
print(f"  e1 (e2 e3) = {rhs}")
print(f"  associator norm = {(lhs - rhs).norm():g}")

# alternativity survives: the subalgebra generated by any two elements associates
worst = 0.0
for _ in range(500):
    x = rng.standard_normal(8)
    y = rng.standard_normal(8)
    xx = np.einsum("a,b,abc->c", x, x, octo)
    xy = np.einsum("a,b,abc->c", x, y, octo)
    defect = np.einsum("a,b,abc->c", xx, y, octo) - np.einsum("a,b,abc->c", x, xy, octo)
    worst = max(worst, float(np.linalg.norm(defect)))
print(f"\nalternativity (x x) y = x (x y): worst defect over 500 pairs = {worst:.2e}")
