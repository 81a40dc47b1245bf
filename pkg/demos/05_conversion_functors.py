"""
Six ways to change scalars
==========================

A complex Hilbert space is a real one with extra structure; a
quaternionic one is a complex one with extra structure.  Each of the
six conversions below preserves composition and adjoints, and the
forgetful directions remember where they came from through an
antilinear map or a pair of anticommuting structure matrices.
"""

import numpy as np

from threefold.hilbert import KMatrix
from threefold.scalars import COMPLEXES, QUATERNIONS, REALS
from threefold.structures import (
    AntilinearMap,
    complexify,
    quaternify,
    quaternify_real,
    underlying_complex,
    underlying_real,
    underlying_real_quat,
)

rng = np.random.default_rng(2)
n = 2

conversions = [
    ("complexify          R -> C", complexify(n), REALS),
    ("underlying_real     C -> R", underlying_real(n), COMPLEXES),
    ("underlying_complex  H -> C", underlying_complex(n), QUATERNIONS),
    ("quaternify          C -> H", quaternify(n), COMPLEXES),
    ("underlying_real     H -> R", underlying_real_quat(n), QUATERNIONS),
    ("quaternify          R -> H", quaternify_real(n), REALS),
]

print(f"starting from dimension n = {n}:")
for name, conv, system in conversions:
    s = KMatrix(system, rng.standard_normal((n, n, system.dim)))
    t = KMatrix(system, rng.standard_normal((n, n, system.dim)))
    hom = (conv.push(s @ t) - conv.push(s) @ conv.push(t)).norm()
    dag = (conv.push(s.adjoint()) - conv.push(s).adjoint()).norm()
    print(f"  {name}: dim {conv.dim_in} -> {conv.dim_out}, "
          f"homomorphism defect {hom:.1e}, dagger defect {dag:.1e}")

# the forgetful H -> C direction carries an antilinear J with J^2 = -1;
# every operator that comes from a quaternionic one commutes with it
conv = underlying_complex(n)
pushed = conv.push(KMatrix(QUATERNIONS, rng.standard_normal((n, n, 4))))
j = conv.j
print("\nunderlying_complex structure map:")
print(f"  J^2 + identity: {np.linalg.norm(j.square() + np.eye(2 * n)):.2e}")
print(f"  commutation defect with a pushed operator: {j.commutation_defect(pushed.to_complex()):.2e}")

# the complexification R -> C carries plain conjugation with J^2 = +1
conv = complexify(n)
j = conv.j
assert isinstance(j, AntilinearMap)
print("\ncomplexify structure map:")
print(f"  J^2 - identity: {np.linalg.norm(j.square() - np.eye(n)):.2e}")

# round trips recover the original operator exactly
conv = underlying_real_quat(n)
s = KMatrix(QUATERNIONS, rng.standard_normal((n, n, 4)))
print("\npull(push(S)) = S for H -> R -> H:")
print(f"  defect = {(conv.pull(conv.push(s)) - s).norm():.2e}")
