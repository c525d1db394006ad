import numpy as np
import pytest

from weylsep import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveSemidefiniteError,
    WrongTraceError,
    kron,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    random_mixed,
    singular_values,
    validate_density,
)
from weylsep.states import example4, isotropic, max_entangled
from weylsep.weyl import weyl_op


def test_kron_identities():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_clock_diagonal():
    w = np.exp(2j * np.pi / 3)
    left = np.diag([1, w, w**2])
    out = kron(left, np.eye(3))
    expected = np.diag([1, 1, 1, w, w, w, w**2, w**2, w**2])
    np.testing.assert_allclose(out, expected, atol=1e-15)


def test_kron_shift_shift_swaps_paired_kets():
    # sigma_x (x) sigma_x permutes |00> <-> |11> and |01> <-> |10>
    out = kron(weyl_op(2, 0, 1), weyl_op(2, 0, 1))
    expected = np.fliplr(np.eye(4))
    np.testing.assert_allclose(out, expected, atol=1e-15)


def test_partial_trace_of_product_returns_factors():
    rho_a = random_mixed(2, 2, seed=11)
    rho_b = random_mixed(3, 3, seed=12)
    joint = validate_density(kron(rho_a.matrix, rho_b.matrix), [2, 3])
    np.testing.assert_allclose(partial_trace(joint, 0).matrix, rho_a.matrix, atol=1e-12)
    np.testing.assert_allclose(partial_trace(joint, 1).matrix, rho_b.matrix, atol=1e-12)


def test_partial_trace_max_entangled_is_maximally_mixed():
    red = partial_trace(max_entangled(3), 0)
    np.testing.assert_allclose(red.matrix, np.eye(3) / 3, atol=1e-14)


def test_partial_trace_singlet():
    red = partial_trace(example4(1.0), 0)
    np.testing.assert_allclose(red.matrix, np.diag([0.5, 0.5]), atol=1e-14)


def test_partial_trace_preserves_trace():
    for seed in range(20):
        rho = validate_density(random_mixed(6, 4, seed=seed).matrix, [2, 3])
        for keep in (0, 1):
            assert abs(np.trace(partial_trace(rho, keep).matrix) - 1) < 1e-12


def test_partial_trace_rejects_wrong_subsystem_count():
    rho = random_mixed(4, 2, seed=0)
    with pytest.raises(DimensionMismatchError):
        partial_trace(rho, 0)


def test_partial_transpose_involution():
    # a separable state keeps the intermediate PSD so it can be re-wrapped
    from weylsep import random_separable

    rho = random_separable(2, 3, 4, seed=3)
    for sys in (0, 1):
        once = partial_transpose(rho, sys)
        twice = partial_transpose(validate_density(once, [2, 3]), sys)
        assert np.max(np.abs(twice - rho.matrix)) <= 1e-15


def test_partial_transpose_product_states_stay_psd():
    for seed in range(50):
        rho_a = random_mixed(2, 2, seed=2 * seed)
        rho_b = random_mixed(2, 2, seed=2 * seed + 1)
        joint = validate_density(kron(rho_a.matrix, rho_b.matrix), [2, 2])
        assert min_eigenvalue(partial_transpose(joint, 1)) >= -1e-10


def test_partial_transpose_singlet_min_eigenvalue():
    pt = partial_transpose(example4(1.0), 1)
    assert abs(min_eigenvalue(pt) - (-0.5)) < 1e-12


def test_partial_transpose_detects_isotropic_entanglement():
    # p = 0.5 > 1/(d+1) at d = 2, so the partial transpose goes negative
    assert min_eigenvalue(partial_transpose(isotropic(2, 0.5), 1)) < -1e-3


def test_singular_values_identity():
    np.testing.assert_allclose(singular_values(np.eye(5)), np.ones(5), atol=1e-14)


def test_singular_values_rank_one():
    rng = np.random.default_rng(7)
    a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    b = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    s = singular_values(np.outer(a, b))
    assert abs(s[0] - np.linalg.norm(a) * np.linalg.norm(b)) < 1e-12
    assert np.all(s[1:] < 1e-12)


def test_sum_of_squared_singular_values_is_frobenius():
    rng = np.random.default_rng(13)
    for _ in range(100):
        m = rng.standard_normal((5, 7)) + 1j * rng.standard_normal((5, 7))
        s = singular_values(m)
        fro2 = np.linalg.norm(m) ** 2
        assert abs(np.sum(s**2) - fro2) <= 1e-10 * fro2


def test_min_eigenvalue_basics():
    assert min_eigenvalue(np.eye(3)) == pytest.approx(1.0)
    assert min_eigenvalue(np.diag([3.0, -2.0, 0.0])) == pytest.approx(-2.0)
    assert min_eigenvalue(weyl_op(2, 0, 1)) == pytest.approx(-1.0)


def test_min_eigenvalue_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        min_eigenvalue(np.array([[0, 1], [0, 0]], dtype=complex))


def test_validate_density_accepts_maximally_mixed():
    rho = validate_density(np.eye(4) / 4, [2, 2])
    assert rho.dims == (2, 2)
    assert rho.dim == 4


def test_validate_density_rejects_wrong_trace():
    with pytest.raises(WrongTraceError, match="trace"):
        validate_density(np.diag([1.0, 1.0]), [2])


def test_validate_density_rejects_negative_eigenvalue():
    with pytest.raises(NotPositiveSemidefiniteError, match="eigenvalue"):
        validate_density(np.diag([1.5, -0.5]), [2])


def test_validate_density_rejects_non_hermitian():
    m = np.array([[0.5, 0.5], [0.0, 0.5]], dtype=complex)
    with pytest.raises(NotHermitianError):
        validate_density(m, [2])


def test_validate_density_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        validate_density(np.eye(4) / 4, [2, 3])


def test_validate_density_rejects_non_finite():
    m = np.eye(2, dtype=complex) / 2
    m = m.copy()
    m[0, 0] = np.nan
    with pytest.raises(ValueError, match="finite"):
        validate_density(m, [2])


def test_density_matrix_is_read_only():
    rho = validate_density(np.eye(2) / 2, [2])
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0
