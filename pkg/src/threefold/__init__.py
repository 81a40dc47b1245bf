"""Linear algebra for quantum theory over the real, complex and quaternionic scalars.

The package implements, over all three associative normed division algebras:

* scalar arithmetic, including octonions (:mod:`threefold.scalars`),
* finite-dimensional Hilbert spaces as right modules (:mod:`threefold.hilbert`),
* the six faithful conversions between the three kinds of Hilbert space and
  the antilinear structure maps they induce (:mod:`threefold.structures`),
* the real/complex/quaternionic classification of group representations by
  Frobenius-Schur indicator and by invariant bilinear form
  (:mod:`threefold.representations`, :mod:`threefold.su2`),
* formally real Jordan algebras, their trace forms, states and positive
  cones (:mod:`threefold.jordan`),
* one-parameter unitary groups and the fate of "multiply by i" in the real
  and quaternionic settings (:mod:`threefold.spectra`).
"""

from .scalars import (
    COMPLEXES,
    QUATERNIONS,
    REALS,
    Octonion,
    Quaternion,
    ScalarSystem,
)
from .hilbert import KMatrix, KVector
from .structures import (
    AntilinearMap,
    RepKind,
    classify_tensor,
    complexify,
    quaternify,
    quaternify_real,
    tensor_antilinear,
    underlying_complex,
    underlying_real,
    underlying_real_quat,
)
from .representations import (
    FiniteGroup,
    FiniteGroupRep,
    classify,
    fs_indicator_finite,
    invariant_bilinear_form,
    structure_map,
)
from .su2 import classify_spin, fs_indicator_su2, time_reversal_check
from .jordan import (
    JordanElement,
    JordanState,
    h2_spin_isomorphism,
    hermitian_kind,
    jordan_product,
    max_ignorance,
    spin_kind,
)
from .spectra import (
    OneParamGroup,
    exp_group,
    quaternionic_obstruction_witness,
    split_iA,
    symmetric_spectrum_check,
)

__all__ = [
    "COMPLEXES",
    "QUATERNIONS",
    "REALS",
    "Octonion",
    "Quaternion",
    "ScalarSystem",
    "KMatrix",
    "KVector",
    "AntilinearMap",
    "RepKind",
    "classify_tensor",
    "complexify",
    "quaternify",
    "quaternify_real",
    "tensor_antilinear",
    "underlying_complex",
    "underlying_real",
    "underlying_real_quat",
    "FiniteGroup",
    "FiniteGroupRep",
    "classify",
    "fs_indicator_finite",
    "invariant_bilinear_form",
    "structure_map",
    "classify_spin",
    "fs_indicator_su2",
    "time_reversal_check",
    "JordanElement",
    "JordanState",
    "h2_spin_isomorphism",
    "hermitian_kind",
    "jordan_product",
    "max_ignorance",
    "spin_kind",
    "OneParamGroup",
    "exp_group",
    "quaternionic_obstruction_witness",
    "split_iA",
    "symmetric_spectrum_check",
]

__version__ = "0.1.0"
