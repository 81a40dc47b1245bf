"""
Hilbert spaces over R, C and H
==============================

Vectors are right modules: scalars act on the right so that matrices,
acting on the left, commute with the scalar action even when the
scalars do not commute with each other.
"""

import numpy as np

from threefold.hilbert import KMatrix, KVector, inner, is_unitary
from threefold.scalars import QUATERNION_UNITS, QUATERNIONS, Quaternion

rng = np.random.default_rng(1)

# a quaternionic 2-vector and a quaternionic 2x2 matrix
v = KVector(QUATERNIONS, rng.standard_normal((2, 4)))
t = KMatrix(QUATERNIONS, rng.standard_normal((2, 2, 4)))
q = Quaternion(0.5, -1.0, 2.0, 0.25)

# left matrix action and right scalar action commute: T(v q) = (T v) q
left_then_scale = t.apply(v).times(q)
scale_then_left = t.apply(v.times(q))
print("right-module law T(vq) = (Tv)q:")
print(f"  defect = {(left_then_scale - scale_then_left).norm():.2e}")

# the inner product is conjugate-linear in the first slot, right-linear in the second
w = KVector(QUATERNIONS, rng.standard_normal((2, 4)))
print("\ninner product sesquilinearity <v, w q> = <v, w> q:")
lhs = inner(v, w.times(q))
rhs = inner(v, w) * q
print(f"  <v, w q>  = {lhs}")
print(f"  <v, w> q  = {rhs}")

# adjoints satisfy <T* v, w> = <v, T w> with quaternion entries
lhs = inner(t.adjoint().apply(v), w)
rhs = inner(v, t.apply(w))
print("\nadjoint law <T* v, w> = <v, T w>:")
print(f"  defect = {(lhs - rhs).norm():.2e}")

# a quaternionic unitary: exp of a skew-adjoint matrix, built by hand here
# from a 1x1 example where the exponential is a unit quaternion
u = KMatrix.from_scalar_rows(QUATERNIONS, [[QUATERNION_UNITS["i"]]])
print("\nthe 1x1 matrix [i] is unitary:", is_unitary(u))
print("[i] squared is [-1]:")
print(f"  {(u @ u).entry(0, 0)}")

# norms: the standard basis is orthonormal
e0 = KVector.basis(QUATERNIONS, 2, 0)
e1 = KVector.basis(QUATERNIONS, 2, 1)
print("\nstandard basis over H:")
print(f"  <e0, e0> = {inner(e0, e0)}")
print(f"  <e0, e1> = {inner(e0, e1)}")
