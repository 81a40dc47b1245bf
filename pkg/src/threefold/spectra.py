"""One-parameter unitary groups and the symmetry of real/quaternionic spectra.

A continuous one-parameter unitary group U(t) has a unique skew-adjoint
generator S with U(t) = exp(tS).  Over the complex numbers S splits as
S = iA with A self-adjoint, the usual observable.  Over the reals there is
no i; over the quaternions the candidate A(v) = S(v) i fails to be linear
whenever S is nonzero, because right multiplications by i and j
anticommute.  The observable content that survives in both cases is a
spectrum symmetric about zero: if J is the antiunitary structure map
commuting with S, then J maps the c-eigenspace of A = -iS onto the
(-c)-eigenspace.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import (
    InternalInconsistencyError,
    PreconditionError,
    ShapeError,
    UnsupportedError,
    ValidationError,
)
from .hilbert import KMatrix, KVector, eigh_complex, is_skew_adjoint
from .scalars import QUATERNION_UNITS
from .structures import AntilinearMap, underlying_complex

__all__ = [
    "OneParamGroup",
    "exp_group",
    "split_iA",
    "ObstructionReport",
    "quaternionic_obstruction_witness",
    "SpectrumReport",
    "symmetric_spectrum_check",
]


def exp_group(s, t):
    """U(t) = exp(tS) by scaling-and-squaring; quaternionic S via the complex form."""
    if s.rows != s.cols:
        raise ShapeError("exponential needs a square matrix")
    t = float(t)
    tag = s.system.tag
    if tag == "R":
        return KMatrix.from_real(expm(t * s.to_real()))
    if tag == "C":
        return KMatrix.from_complex(expm(t * s.to_complex()))
    conv = underlying_complex(s.rows)
    u = expm(t * conv.push(s).to_complex())
    return conv.pull(KMatrix.from_complex(u))


@dataclass(frozen=True)
class OneParamGroup:
    """A group t -> exp(tS) determined by its skew-adjoint generator."""

    generator: KMatrix

    def __post_init__(self):
        if self.generator.rows != self.generator.cols:
            raise ShapeError("generator must be square")
        if not is_skew_adjoint(self.generator, 1e-10):
            raise ValidationError("generator is not skew-adjoint")

    @property
    def system(self):
        return self.generator.system

    def at(self, t):
        return exp_group(self.generator, t)


def split_iA(s):
    """The self-adjoint A with S = iA; only the complex scalars allow it."""
    if s.system.tag != "C":
        raise UnsupportedError(
            f"S = iA needs complex scalars, not {s.system.tag}; "
            "real and quaternionic generators have no such split"
        )
    if s.rows != s.cols:
        raise ShapeError("split needs a square matrix")
    if not is_skew_adjoint(s, 1e-10):
        raise PreconditionError("S must be skew-adjoint")
    return KMatrix.from_complex(-1j * s.to_complex())


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of the search for a vector witnessing nonlinearity of A(v) = S(v) i."""

    found: bool
    vector: KVector | None
    defect: float
    threshold: float


def quaternionic_obstruction_witness(s, seed=0, trials=20):
    """Exhibit v with A(v j) != A(v) j for quaternionic skew-adjoint S != 0.

    A(v) := S(v) i is additive but anticommutes with right multiplication
    by j, so it is linear only when S = 0.  The witness is searched over
    the standard basis and seeded random vectors; any hit with defect
    above 0.1 * |S| * |v| is conclusive.
    """
    if s.system.tag != "H":
        raise UnsupportedError("the obstruction is quaternionic")
    if s.rows != s.cols:
        raise ShapeError("generator must be square")
    if not is_skew_adjoint(s, 1e-10):
        raise PreconditionError("S must be skew-adjoint")
    s_norm = s.norm()
    if s_norm == 0.0:
        return ObstructionReport(found=False, vector=None, defect=0.0, threshold=0.0)

    unit_i = QUATERNION_UNITS["i"]
    unit_j = QUATERNION_UNITS["j"]

    def a_of(v):
        return s.apply(v).times(unit_i)

    rng = np.random.default_rng(seed)
    candidates = [KVector.basis(s.system, s.rows, k) for k in range(s.rows)]
    candidates += [
        KVector(s.system, rng.standard_normal((s.rows, 4))) for _ in range(trials)
    ]
    best = None
    for v in candidates:
        defect = (a_of(v.times(unit_j)) - a_of(v).times(unit_j)).norm()
        threshold = 0.1 * s_norm * v.norm()
        if best is None or defect - threshold > best[0] - best[1]:
            best = (defect, threshold, v)
    defect, threshold, v = best
    if defect <= threshold:
        raise InternalInconsistencyError(
            "no obstruction vector found for a nonzero quaternionic generator"
        )
    return ObstructionReport(found=True, vector=v, defect=defect, threshold=threshold)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues of A = -iS with the negation pairing verified."""

    eigenvalues: np.ndarray
    pairing_defect: float
    eigenvector_defect: float

    @property
    def pairs(self):
        w = self.eigenvalues
        return [(w[k], w[len(w) - 1 - k]) for k in range(len(w) // 2)]


def symmetric_spectrum_check(s, structure, tol=1e-8):
    """Verify the spectrum of A = -iS is symmetric about 0 via the structure map.

    ``structure`` is the antiunitary J commuting with S, as produced by the
    complexification (real case) or underlying-complex (quaternionic case)
    conversions.  Sorted eigenvalues must satisfy c_k = -c_{n-1-k}, and J of
    a c-eigenvector must be a (-c)-eigenvector; violations raise
    InternalInconsistencyError since the symmetry is guaranteed.
    """
    jmap = structure if isinstance(structure, AntilinearMap) else structure.j
    if s.system.tag != "C":
        raise PreconditionError("check runs on the complex form; convert first")
    a = split_iA(s)
    s_c = s.to_complex()
    scale = max(1.0, float(np.linalg.norm(s_c)))
    if jmap.commutation_defect(s_c) > tol * scale:
        raise PreconditionError("structure map does not commute with the generator")

    w, v = eigh_complex(a)
    pairing = float(np.abs(w + w[::-1]).max()) if len(w) else 0.0
    if pairing > tol * scale:
        raise InternalInconsistencyError(
            f"spectrum is not symmetric about zero (defect {pairing:.2e})"
        )
    a_c = a.to_complex()
    v_c = v.to_complex()
    worst = 0.0
    for k in range(len(w)):
        u = jmap(v_c[:, k])
        worst = max(worst, float(np.linalg.norm(a_c @ u + w[k] * u)))
    if worst > tol * scale:
        raise InternalInconsistencyError(
            f"J of an eigenvector is not an eigenvector for the negated value ({worst:.2e})"
        )
    return SpectrumReport(eigenvalues=w, pairing_defect=pairing, eigenvector_defect=worst)
