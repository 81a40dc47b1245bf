"""Division algebra arithmetic: frozen hand values and algebraic laws."""

import numpy as np
import pytest

from threefold.scalars import (
    FANO_LINES,
    Octonion,
    Quaternion,
    complex_part,
    conj,
    inv,
    mul,
    mul_table,
    norm,
)

ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def oct_unit(i):
    coeffs = np.zeros(8)
    coeffs[i] = 1.0
    return Octonion.from_array(coeffs)


def random_quaternion(rng):
    return Quaternion.from_array(rng.standard_normal(4))


def random_octonion(rng):
    return Octonion.from_array(rng.standard_normal(8))


# ---------------------------------------------------------------------------
# frozen hand values
# ---------------------------------------------------------------------------

def test_quaternion_units_multiply_cyclically():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert I * I == -ONE


def test_octonion_first_line():
    assert oct_unit(1) * oct_unit(2) == oct_unit(4)
    assert oct_unit(2) * oct_unit(1) == -oct_unit(4)


@pytest.mark.parametrize("line", FANO_LINES)
def test_octonion_fano_lines_are_oriented_cyclically(line):
    a, b, c = line
    assert oct_unit(a) * oct_unit(b) == oct_unit(c)
    assert oct_unit(b) * oct_unit(c) == oct_unit(a)
    assert oct_unit(c) * oct_unit(a) == oct_unit(b)
    assert oct_unit(b) * oct_unit(a) == -oct_unit(c)


def test_octonion_imaginary_units_square_to_minus_one():
    for i in range(1, 8):
        assert oct_unit(i) * oct_unit(i) == -oct_unit(0)


def test_norm_of_one_plus_i_plus_j_plus_k():
    assert norm(Quaternion(1.0, 1.0, 1.0, 1.0)) == pytest.approx(2.0, abs=1e-15)


def test_inverse_of_j():
    assert inv(J) == -J


def test_inverse_of_complex_scalar():
    assert inv(2 + 2j) == pytest.approx(0.25 - 0.25j, abs=1e-15)


def test_complex_part_of_quaternion():
    q = Quaternion(3.0, 4.0, 5.0, 6.0)
    assert complex_part(q) == pytest.approx(3.0 + 4.0j, abs=1e-15)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        inv(Quaternion())
    with pytest.raises(ZeroDivisionError):
        inv(Octonion())
    with pytest.raises(ZeroDivisionError):
        inv(0.0)


def test_noncommutativity_witness():
    assert I * J != J * I


def test_nonassociativity_witness():
    e1, e2, e3 = oct_unit(1), oct_unit(2), oct_unit(3)
    assert (e1 * e2) * e3 != e1 * (e2 * e3)
    assert ((e1 * e2) * e3) == -(e1 * (e2 * e3))


# ---------------------------------------------------------------------------
# algebraic laws on random samples
# ---------------------------------------------------------------------------

@pytest.fixture
def rng():
    return np.random.default_rng(20260814)


@pytest.mark.parametrize("sampler", [random_quaternion, random_octonion])
def test_norm_is_multiplicative(rng, sampler):
    for _ in range(1000):
        x, y = sampler(rng), sampler(rng)
        assert abs(norm(mul(x, y)) - norm(x) * norm(y)) < 1e-12


@pytest.mark.parametrize("sampler", [random_quaternion, random_octonion])
def test_conjugation_is_an_anti_homomorphism(rng, sampler):
    for _ in range(200):
        x, y = sampler(rng), sampler(rng)
        assert conj(mul(x, y)).is_close(mul(conj(y), conj(x)), tol=1e-12)
        assert conj(conj(x)) == x


@pytest.mark.parametrize("sampler", [random_quaternion, random_octonion])
def test_x_times_conj_x_is_norm_squared(rng, sampler):
    for _ in range(200):
        x = sampler(rng)
        n2 = norm(x) ** 2
        prod = mul(x, conj(x))
        unit = type(x)(1.0)
        assert prod.is_close(unit * n2, tol=1e-12 * max(1.0, n2))


def test_octonion_alternativity(rng):
    for _ in range(500):
        x, y = random_octonion(rng), random_octonion(rng)
        left = mul(x, mul(x, y))
        right = mul(mul(x, x), y)
        assert left.is_close(right, tol=1e-12 * max(1.0, norm(x) ** 2 * norm(y)))
        left = mul(mul(y, x), x)
        right = mul(y, mul(x, x))
        assert left.is_close(right, tol=1e-12 * max(1.0, norm(x) ** 2 * norm(y)))


@pytest.mark.parametrize("sampler", [random_quaternion, random_octonion])
def test_inverse_really_inverts(rng, sampler):
    for _ in range(100):
        x = sampler(rng)
        if norm(x) < 1e-3:
            continue
        unit = type(x)(1.0)
        assert mul(x, inv(x)).is_close(unit, tol=1e-10)
        assert mul(inv(x), x).is_close(unit, tol=1e-10)


def test_complex_arithmetic_agrees_with_python(rng):
    for _ in range(100):
        x = complex(rng.standard_normal(), rng.standard_normal())
        y = complex(rng.standard_normal(), rng.standard_normal())
        assert mul(x, y) == x * y
        assert conj(x) == x.conjugate()
        assert norm(x) == pytest.approx(abs(x), abs=1e-15)


def test_structure_tables_are_locked():
    # identity row/column and the signature of squares, all four algebras
    for dim in (1, 2, 4, 8):
        t = mul_table(dim)
        assert t.shape == (dim, dim, dim)
        for j in range(dim):
            e = np.zeros(dim)
            e[j] = 1.0
            assert np.array_equal(np.einsum("a,b,abc->c", np.eye(dim)[0], e, t), e)
            assert np.array_equal(np.einsum("a,b,abc->c", e, np.eye(dim)[0], t), e)
        for j in range(1, dim):
            e = np.zeros(dim)
            e[j] = 1.0
            sq = np.einsum("a,b,abc->c", e, e, t)
            assert np.array_equal(sq, -np.eye(dim)[0])
