"""
Observables without the ambient associative algebra
===================================================

Self-adjoint matrices over R, C or H close under the symmetrized
product a o b = (ab + ba)/2, and so do 2x2 and 3x3 self-adjoint
octonionic matrices.  The product is commutative but not associative;
what survives is the Jordan identity, formal reality, and a positive
cone good enough to do states and expectation values.
"""

import numpy as np

from threefold.jordan import (
    JordanElement,
    check_jordan_identity,
    cone_margin,
    h2_spin_isomorphism,
    hermitian_kind,
    is_positive,
    jordan_product,
    max_ignorance,
    random_element,
    state_eval,
    trace,
    unit,
)

rng = np.random.default_rng(3)

# the Jordan identity holds in h3 over all four algebras, associativity fails
print("Jordan identity residual (and an associativity defect for contrast):")
for scalar_dim, tag in ((1, "h3(R)"), (2, "h3(C)"), (4, "h3(H)"), (8, "h3(O)")):
    kind = hermitian_kind(scalar_dim, 3)
    a = random_element(kind, rng)
    b = random_element(kind, rng)
    c = random_element(kind, rng)
    jordan = check_jordan_identity(a, b)
    assoc = (jordan_product(jordan_product(a, b), c)
             - jordan_product(a, jordan_product(b, c))).norm()
    print(f"  {tag}: identity {jordan:.1e}, (a o b) o c vs a o (b o c): {assoc:.3f}")

# positivity: squares land in the cone, sigma_3 does not
kind = hermitian_kind(2, 2)
sigma3 = JordanElement.from_complex(np.diag([1.0, -1.0]))
square = jordan_product(sigma3, sigma3)
print("\npositive cone in h2(C):")
print(f"  cone margin of sigma_3          = {cone_margin(sigma3):+.2f} (outside)")
print(f"  cone margin of sigma_3 o sigma_3 = {cone_margin(square):+.2f} (inside)")
print(f"  is_positive(square) = {is_positive(square)}")

# states: the maximally ignorant state is the normalized unit
rho = max_ignorance(kind)
print("\nmaximal-ignorance state of h2(C):")
print(f"  rho = unit / trace(unit), as a complex matrix:\n{rho.element.as_complex_matrix()}")
a = random_element(kind, rng)
print(f"  <a>_rho - trace(a)/trace(1) = {state_eval(rho, a) - trace(a) / trace(unit(kind)):.2e}")

# 2x2 self-adjoint matrices over K are spin factors in disguise
print("\nh2(K) is isomorphic to a spin factor for every K:")
for scalar_dim in (1, 2, 4, 8):
    iso = h2_spin_isomorphism(scalar_dim)
    worst = 0.0
    for _ in range(50):
        a = random_element(iso.source, rng)
        b = random_element(iso.source, rng)
        worst = max(worst, (iso(jordan_product(a, b))
                            - jordan_product(iso(a), iso(b))).norm())
    print(f"  h2(dim {scalar_dim}) -> {iso.target.label}: "
          f"worst homomorphism defect over 50 pairs = {worst:.1e}")

print("""
The spin-factor product is ((s, x) o (t, y)) = (st + x.y, sy + tx): the
lightcone geometry of special relativity, living inside the observable
algebra of a 2-level quantum system.""")
