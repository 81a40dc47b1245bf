"""
Three kinds of irreducible representation
=========================================

Every irreducible unitary representation of a finite group is real,
complex or quaternionic.  Two independent routes detect which: the
Frobenius-Schur indicator (+1, 0, -1), and the invariant bilinear form,
whose symmetry determines an antiunitary J with J^2 = +1 or -1.
"""

import numpy as np

from threefold.groups import standard_fixtures
from threefold.representations import (
    classify,
    commutant_dimension,
    fs_indicator_finite,
    invariant_bilinear_form,
    structure_map,
)

print(f"{'rep':<14s} {'dim':>3s} {'fs':>6s} {'form':>10s} {'J^2':>4s}  kind")
print("-" * 52)
for group_name, (group, reps) in standard_fixtures().items():
    for rep_name, rep in reps:
        label = f"{group_name}/{rep_name}"
        if commutant_dimension(rep) != 1:
            print(f"{label:<14s} {rep.dim:>3d}  (reducible, skipped)")
            continue
        fs = fs_indicator_finite(rep)
        if abs(fs) < 1e-9:
            fs = 0.0
        form = invariant_bilinear_form(rep)
        if form is None:
            shape, jsq = "none", "-"
        else:
            shape = "symmetric" if form.symmetric else "antisym"
            _, sign = structure_map(rep, form)
            jsq = f"{sign:+d}"
        kind = classify(rep)
        print(f"{label:<14s} {rep.dim:>3d} {fs:>6.2f} {shape:>10s} {jsq:>4s}  {kind}")

print("""
Reading the table:
  fs = +1  <=>  symmetric invariant form   <=>  J^2 = +1  (real kind)
  fs =  0  <=>  no invariant form                          (complex kind)
  fs = -1  <=>  antisymmetric invariant form <=> J^2 = -1 (quaternionic kind)

The spinor representation of Q8 is the smallest quaternionic example.
Its structure map J anticommutes with multiplication by i, so i, J and
iJ act like the quaternions i, j, k on the representation space:""")

q8, q8_reps = standard_fixtures()["q8"]
spinor = dict(q8_reps)["spinor"]
jmap, sign = structure_map(spinor, invariant_bilinear_form(spinor))
print(f"  J^2 = {sign:+d} * identity")
print(f"  anticommutation defect of J with i: {jmap.anticommutation_defect(1j * np.eye(2)):.2e}")
