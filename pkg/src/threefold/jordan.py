"""Formally real Jordan algebras: hermitian matrices and spin factors.

The simple finite-dimensional formally real Jordan algebras are the
hermitian matrix algebras h_n(R), h_n(C), h_n(H), the exceptional h_3(O),
and the spin factors R^n + R.  This module represents their elements
concretely, forms the symmetrized product a o b = (ab + ba)/2, and builds
the state machinery on top of the trace form: positivity, unit-trace
states, the maximal-ignorance state, and dual-cone sampling.

Conventions:
  - hermitian elements store an (n, n, dim) coefficient array over the
    scalar system; the lower triangle is reconstructed from the upper at
    construction time, so self-adjointness is exact by storage;
  - spin-factor elements store the flat vector (x_1, ..., x_n, t);
  - trace(a) is the trace of the left-multiplication operator b -> a o b
    on the real vector space, normalized per kind so that trace(1) equals
    the rank (n for matrix kinds, 2 for spin factors).  The normalization
    makes trace agree with the ordinary real matrix trace on matrix kinds
    and equal 2t on spin factors, and cancels from every ratio such as
    state evaluations.

Octonionic hermitian kinds are limited to 2x2 (for the spin-factor
isomorphism) and the exceptional 3x3; no eigen-theory is attempted for
them, so positivity checks raise UnsupportedError there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    InternalInconsistencyError,
    PreconditionError,
    ShapeError,
    UnsupportedError,
    ValidationError,
)
from .hilbert import KMatrix
from .scalars import QUATERNIONS, ScalarSystem, conj_signs, mul_table
from .structures import underlying_complex

__all__ = [
    "JordanKind",
    "JordanElement",
    "JordanState",
    "hermitian_kind",
    "spin_kind",
    "parse_kind",
    "unit",
    "zero",
    "basis",
    "coords",
    "from_coords",
    "random_element",
    "random_positive",
    "jordan_product",
    "check_jordan_identity",
    "trace",
    "trace_inner",
    "cone_margin",
    "is_positive",
    "state_eval",
    "max_ignorance",
    "dual_cone_margin",
    "h2_spin_isomorphism",
    "H2SpinIsomorphism",
]

_HERMITIAN_TAGS = {"hR": 1, "hC": 2, "hH": 4, "hO": 8}
_DIM_TAGS = {dim: tag for tag, dim in _HERMITIAN_TAGS.items()}


@dataclass(frozen=True)
class JordanKind:
    """One algebra from the classification: a hermitian matrix kind or a spin factor."""

    family: str
    n: int
    scalar_dim: int = 0

    def __post_init__(self):
        if self.family == "hermitian":
            if self.scalar_dim not in (1, 2, 4, 8):
                raise ValidationError(f"scalar dimension must be 1, 2, 4 or 8, got {self.scalar_dim}")
            if self.n < 1:
                raise ValidationError("matrix size must be at least 1")
            if self.scalar_dim == 8 and self.n not in (2, 3):
                raise ValidationError("octonionic hermitian kinds exist only at sizes 2 and 3")
        elif self.family == "spin":
            if self.n < 0:
                raise ValidationError("spin factor needs a nonnegative vector dimension")
            if self.scalar_dim != 0:
                raise ValidationError("spin factors carry no scalar system")
        else:
            raise ValidationError(f"unknown Jordan family {self.family!r}")

    @property
    def dim(self):
        """Real vector-space dimension of the algebra."""
        if self.family == "spin":
            return self.n + 1
        return self.n + self.scalar_dim * self.n * (self.n - 1) // 2

    @property
    def rank(self):
        return self.n if self.family == "hermitian" else 2

    @property
    def label(self):
        if self.family == "spin":
            return f"spin:{self.n}"
        return f"{_DIM_TAGS[self.scalar_dim]}:{self.n}"

    def __repr__(self):
        return self.label


def hermitian_kind(scalar, n):
    """Hermitian n x n matrices over a scalar system (or its dimension 1/2/4/8)."""
    dim = scalar.dim if isinstance(scalar, ScalarSystem) else int(scalar)
    return JordanKind("hermitian", int(n), dim)


def spin_kind(n):
    """Spin factor R^n + R."""
    return JordanKind("spin", int(n))


def parse_kind(text):
    """Parse a kind label such as 'hC:3' or 'spin:9'."""
    head, sep, tail = text.partition(":")
    if not sep or not tail.lstrip("-").isdigit():
        raise ValidationError(f"cannot parse Jordan kind {text!r}")
    n = int(tail)
    if head == "spin":
        return spin_kind(n)
    if head in _HERMITIAN_TAGS:
        return hermitian_kind(_HERMITIAN_TAGS[head], n)
    raise ValidationError(f"unknown Jordan family {head!r}")


def _hermitized(data, n, scalar_dim):
    out = np.array(data, dtype=float)
    idx = np.arange(n)
    out[idx, idx, 1:] = 0.0
    iu = np.triu_indices(n, 1)
    out[iu[1], iu[0], :] = out[iu[0], iu[1], :] * conj_signs(scalar_dim)
    return out


class JordanElement:
    """An algebra element; hermitian by storage for matrix kinds."""

    __slots__ = ("kind", "data")

    def __init__(self, kind, data, tol=1e-10):
        data = np.asarray(data, dtype=float)
        if kind.family == "spin":
            if data.shape != (kind.n + 1,):
                raise ShapeError(f"expected ({kind.n + 1},) for {kind}, got {data.shape}")
            clean = np.array(data)
        else:
            if data.shape != (kind.n, kind.n, kind.scalar_dim):
                raise ShapeError(
                    f"expected ({kind.n}, {kind.n}, {kind.scalar_dim}) for {kind}, got {data.shape}"
                )
            clean = _hermitized(data, kind.n, kind.scalar_dim)
            defect = np.linalg.norm(data - clean)
            if defect > tol * max(1.0, np.linalg.norm(data)):
                raise ValidationError(f"entries are not self-adjoint (defect {defect:.2e})")
        clean.flags.writeable = False
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", clean)

    def __setattr__(self, name, value):
        raise AttributeError("JordanElement is immutable")

    @classmethod
    def from_xt(cls, x, t):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return cls(spin_kind(x.size), np.concatenate([x, [float(t)]]))

    @classmethod
    def from_real(cls, matrix):
        matrix = np.asarray(matrix, dtype=float)
        return cls(hermitian_kind(1, matrix.shape[0]), matrix[:, :, None])

    @classmethod
    def from_complex(cls, matrix):
        matrix = np.asarray(matrix, dtype=complex)
        stacked = np.stack([matrix.real, matrix.imag], axis=-1)
        return cls(hermitian_kind(2, matrix.shape[0]), stacked)

    @property
    def x(self):
        if self.kind.family != "spin":
            raise ShapeError("x is a spin-factor field")
        return self.data[:-1]

    @property
    def t(self):
        if self.kind.family != "spin":
            raise ShapeError("t is a spin-factor field")
        return float(self.data[-1])

    def as_real_matrix(self):
        if self.kind != hermitian_kind(1, self.kind.n):
            raise ShapeError("as_real_matrix needs an hR kind")
        return np.array(self.data[:, :, 0])

    def as_complex_matrix(self):
        if self.kind != hermitian_kind(2, self.kind.n):
            raise ShapeError("as_complex_matrix needs an hC kind")
        return self.data[:, :, 0] + 1j * self.data[:, :, 1]

    def scale(self, s):
        return JordanElement(self.kind, float(s) * self.data)

    def __add__(self, other):
        _check_same_kind(self, other)
        return JordanElement(self.kind, self.data + other.data)

    def __sub__(self, other):
        _check_same_kind(self, other)
        return JordanElement(self.kind, self.data - other.data)

    def __neg__(self):
        return JordanElement(self.kind, -self.data)

    def norm(self):
        return float(np.linalg.norm(self.data))

    def is_close(self, other, tol=1e-10):
        _check_same_kind(self, other)
        return float(np.linalg.norm(self.data - other.data)) <= tol

    def __repr__(self):
        return f"JordanElement({self.kind}, norm={self.norm():.3g})"


def _check_same_kind(a, b):
    if a.kind != b.kind:
        raise ShapeError(f"kind mismatch: {a.kind} vs {b.kind}")


def unit(kind):
    if kind.family == "spin":
        data = np.zeros(kind.n + 1)
        data[-1] = 1.0
        return JordanElement(kind, data)
    data = np.zeros((kind.n, kind.n, kind.scalar_dim))
    idx = np.arange(kind.n)
    data[idx, idx, 0] = 1.0
    return JordanElement(kind, data)


def zero(kind):
    if kind.family == "spin":
        return JordanElement(kind, np.zeros(kind.n + 1))
    return JordanElement(kind, np.zeros((kind.n, kind.n, kind.scalar_dim)))


def coords(a):
    """Real coordinates: diagonal entries, then upper-triangle coefficient blocks."""
    if a.kind.family == "spin":
        return np.array(a.data)
    n = a.kind.n
    idx = np.arange(n)
    iu = np.triu_indices(n, 1)
    return np.concatenate([a.data[idx, idx, 0], a.data[iu].reshape(-1)])


def from_coords(kind, v):
    v = np.asarray(v, dtype=float)
    if v.shape != (kind.dim,):
        raise ShapeError(f"expected {kind.dim} coordinates for {kind}, got {v.shape}")
    if kind.family == "spin":
        return JordanElement(kind, v)
    n, d = kind.n, kind.scalar_dim
    data = np.zeros((n, n, d))
    idx = np.arange(n)
    data[idx, idx, 0] = v[:n]
    iu = np.triu_indices(n, 1)
    data[iu] = v[n:].reshape(-1, d)
    data[iu[1], iu[0], :] = data[iu] * conj_signs(d)
    return JordanElement(kind, data)


@lru_cache(maxsize=None)
def basis(kind):
    """Coordinate basis; coords(basis(kind)[k]) is the k-th standard vector."""
    eye = np.eye(kind.dim)
    return tuple(from_coords(kind, row) for row in eye)


def random_element(kind, rng):
    return from_coords(kind, rng.standard_normal(kind.dim))


def random_positive(kind, rng):
    """A strictly positive element: a Jordan square pushed into the open cone."""
    a = random_element(kind, rng)
    square = jordan_product(a, a)
    return square + unit(kind).scale(0.05 * (1.0 + square.norm()))


def jordan_product(a, b):
    """a o b = (ab + ba) / 2; on spin factors (tx' + t'x, x.x' + tt')."""
    _check_same_kind(a, b)
    kind = a.kind
    if kind.family == "spin":
        x, t = a.data[:-1], a.data[-1]
        y, s = b.data[:-1], b.data[-1]
        return JordanElement(kind, np.concatenate([s * x + t * y, [x @ y + t * s]]))
    table = mul_table(kind.scalar_dim)
    ab = np.einsum("ija,jkb,abc->ikc", a.data, b.data, table)
    ba = np.einsum("ija,jkb,abc->ikc", b.data, a.data, table)
    return JordanElement(kind, 0.5 * (ab + ba))


def check_jordan_identity(a, b):
    """Residual of (a^2 o b) o a = a^2 o (b o a)."""
    square = jordan_product(a, a)
    lhs = jordan_product(jordan_product(square, b), a)
    rhs = jordan_product(square, jordan_product(b, a))
    return (lhs - rhs).norm()


def trace(a):
    """Trace of the left-multiplication operator b -> a o b, normalized.

    The raw operator trace equals (dim / rank) times the natural trace (the
    real matrix trace on matrix kinds, 2t on spin factors); dividing by that
    constant pins trace(1) = rank.
    """
    base = basis(a.kind)
    total = 0.0
    for k, e in enumerate(base):
        total += coords(jordan_product(a, e))[k]
    return float(total) * a.kind.rank / a.kind.dim


def trace_inner(a, b):
    """The trace form <a, b> = trace(a o b); an inner product by formal reality."""
    return trace(jordan_product(a, b))


def _paired_eigenvalues(a, tol=1e-8):
    # each quaternionic eigenvalue shows up twice in the complex adjunct
    adjunct = underlying_complex(a.kind.n).push(KMatrix(QUATERNIONS, a.data))
    w = np.linalg.eigvalsh(adjunct.to_complex())
    pairs = w.reshape(-1, 2)
    scale = max(1.0, float(np.abs(w).max()))
    if np.abs(pairs[:, 1] - pairs[:, 0]).max() > tol * scale:
        raise InternalInconsistencyError("adjunct eigenvalues did not come in pairs")
    return pairs.mean(axis=1)


def cone_margin(a):
    """Distance-like slack of a from the boundary of the positive cone.

    Matrix kinds: the least eigenvalue (via the complex adjunct for H, with
    the doubled spectrum deduplicated).  Spin factors: min(t, t^2 - x.x),
    the future-lightcone inequalities.  Octonionic kinds are unsupported.
    """
    kind = a.kind
    if kind.family == "spin":
        x, t = a.data[:-1], float(a.data[-1])
        return min(t, t * t - float(x @ x))
    if kind.scalar_dim == 8:
        raise UnsupportedError("no eigen-theory for octonionic hermitian matrices")
    if kind.scalar_dim == 1:
        w = np.linalg.eigvalsh(a.data[:, :, 0])
    elif kind.scalar_dim == 2:
        w = np.linalg.eigvalsh(a.as_complex_matrix())
    else:
        w = _paired_eigenvalues(a)
    return float(w.min())


def is_positive(a, tol=1e-10):
    """Whether a lies strictly inside the positive cone."""
    return cone_margin(a) > tol


@dataclass(frozen=True)
class JordanState:
    """A positive unit-trace element; the algebra's notion of a mixed state.

    Positivity is verified where eigen-theory exists; for octonionic kinds
    only the unit trace is checked.
    """

    element: JordanElement

    def __post_init__(self):
        t = trace(self.element)
        if abs(t - 1.0) > 1e-10:
            raise ValidationError(f"state trace is {t}, not 1")
        kind = self.element.kind
        if not (kind.family == "hermitian" and kind.scalar_dim == 8):
            if cone_margin(self.element) < -1e-10:
                raise ValidationError("state is not positive semidefinite")

    @property
    def kind(self):
        return self.element.kind


def state_eval(rho, a):
    """Expectation <a> = trace(rho o a)."""
    element = rho.element if isinstance(rho, JordanState) else rho
    _check_same_kind(element, a)
    return trace_inner(element, a)


def max_ignorance(kind):
    """The state rho_0 = 1/trace(1) * 1."""
    one = unit(kind)
    return JordanState(one.scale(1.0 / trace(one)))


def dual_cone_margin(a, samples, seed=0):
    """min over positive b of <a, b>; negative values witness a outside the cone.

    ``samples`` is either a count of seeded random positive elements or an
    explicit iterable of elements.
    """
    if isinstance(samples, (int, np.integer)):
        if samples < 1:
            raise PreconditionError("need at least one sample")
        rng = np.random.default_rng(seed)
        probes = [random_positive(a.kind, rng) for _ in range(int(samples))]
    else:
        probes = list(samples)
        if not probes:
            raise PreconditionError("need at least one sample")
        for b in probes:
            _check_same_kind(a, b)
    return min(trace_inner(a, b) for b in probes)


class H2SpinIsomorphism:
    """The isomorphism h_2(K) = spin factor R^(1+dim K) + R.

    Forward map: [[t + x0, z*], [z, t - x0]] -> ((x0, coeffs of z), t).
    """

    __slots__ = ("source", "target")

    def __init__(self, scalar_dim):
        object.__setattr__(self, "source", hermitian_kind(scalar_dim, 2))
        object.__setattr__(self, "target", spin_kind(1 + scalar_dim))

    def __setattr__(self, name, value):
        raise AttributeError("H2SpinIsomorphism is immutable")

    def __call__(self, a):
        if a.kind != self.source:
            raise ShapeError(f"expected an element of {self.source}, got {a.kind}")
        t = 0.5 * (a.data[0, 0, 0] + a.data[1, 1, 0])
        x0 = 0.5 * (a.data[0, 0, 0] - a.data[1, 1, 0])
        return JordanElement(self.target, np.concatenate([[x0], a.data[1, 0, :], [t]]))

    def inverse(self, b):
        if b.kind != self.target:
            raise ShapeError(f"expected an element of {self.target}, got {b.kind}")
        d = self.source.scalar_dim
        x0, z, t = b.data[0], b.data[1:-1], b.data[-1]
        data = np.zeros((2, 2, d))
        data[0, 0, 0] = t + x0
        data[1, 1, 0] = t - x0
        data[1, 0, :] = z
        data[0, 1, :] = z * conj_signs(d)
        return JordanElement(self.source, data)

    def __repr__(self):
        return f"H2SpinIsomorphism({self.source} -> {self.target})"


def h2_spin_isomorphism(scalar):
    """Isomorphism of h_2 over R, C, H or O (pass a system, tag or dimension)."""
    if isinstance(scalar, ScalarSystem):
        dim = scalar.dim
    elif isinstance(scalar, str):
        tags = {"R": 1, "C": 2, "H": 4, "O": 8}
        if scalar not in tags:
            raise UnsupportedError(f"unknown scalar tag {scalar!r}")
        dim = tags[scalar]
    else:
        dim = int(scalar)
    if dim not in (1, 2, 4, 8):
        raise UnsupportedError(f"no division algebra of dimension {dim}")
    return H2SpinIsomorphism(dim)
