import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hpsynth.gates import X
from hpsynth.linalg import NotUnitaryError, embed_two_level, frobenius_distance, haar_random_unitary, unitarity_defect
from hpsynth.two_level import (
    PlaneRotation,
    TwoLevelFactor,
    assemble_two_level,
    decompose_plane_rotations,
    elimination_stages,
    factor_diagonal,
    plane_rotation_matrix,
    reconstruct_two_level,
    select_zeroing,
)


def product_of_embeddings(factors, n):
    # oracle: dense N x N products, leftmost factor first
    m = np.eye(n, dtype=complex)
    for f in factors:
        m = m @ np.asarray(embed_two_level(n, f.i, f.j, f.block))
    return m


def rotations_product(rotations, d, n):
    m = np.eye(n, dtype=complex)
    for t in rotations:
        m = m @ np.asarray(plane_rotation_matrix(n, t))
    return m @ np.diag(d)


def test_plane_rotation_matrix_examples():
    assert np.array_equal(plane_rotation_matrix(5, PlaneRotation(3, 1, 0.0, 0.0)), np.eye(5))
    m = plane_rotation_matrix(2, PlaneRotation(1, 0, math.pi / 2, 0.0))
    assert frobenius_distance(m, [[0, -1], [1, 0]]) < 1e-15
    rng = np.random.default_rng(4)
    for _ in range(20):
        t = PlaneRotation(3, 1, rng.uniform(-5, 5), rng.uniform(-5, 5))
        assert unitarity_defect(plane_rotation_matrix(4, t)) < 1e-14
    with pytest.raises(ValueError):
        plane_rotation_matrix(3, PlaneRotation(3, 0, 0.1, 0.2))
    with pytest.raises(ValueError):
        PlaneRotation(1, 1, 0.0, 0.0)


def test_plane_rotation_entries():
    phi, sigma = 0.4, 1.3
    m = np.asarray(plane_rotation_matrix(4, PlaneRotation(3, 1, phi, sigma)))
    assert m[1, 1] == m[3, 3] == math.cos(phi)
    assert m[1, 3] == -np.exp(-1j * sigma) * math.sin(phi)
    assert m[3, 1] == np.exp(1j * sigma) * math.sin(phi)


def adjoint_top_entry(v_top, v_diag, phi, sigma):
    # top entry after applying the adjoint rotation
    return v_top * math.cos(phi) + v_diag * np.exp(-1j * sigma) * math.sin(phi)


def test_select_zeroing_examples():
    case, phi, sigma = select_zeroing(0j, 0.6 + 0.8j)
    assert (case.case_id, phi, sigma) == (1, 0.0, 0.0)
    case, phi, sigma = select_zeroing(1 + 0j, 0j)
    assert (case.case_id, phi, sigma) == (2, math.pi / 2, 0.0)
    assert abs(adjoint_top_entry(1, 0, phi, sigma)) < 1e-15
    s = 1 / math.sqrt(2)
    case, phi, sigma = select_zeroing(complex(s), complex(s))
    assert case.case_id == 3
    assert sigma == 0.0
    assert phi == pytest.approx(-math.pi / 4, abs=1e-15)
    assert abs(adjoint_top_entry(s, s, phi, sigma)) < 1e-15


@settings(max_examples=200, deadline=None)
@given(
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
)
def test_select_zeroing_contract(v_top, v_diag):
    case, phi, sigma = select_zeroing(v_top, v_diag)
    assert abs(adjoint_top_entry(v_top, v_diag, phi, sigma)) < 1e-10 * max(1, abs(v_top) + abs(v_diag))
    if case.case_id == 3:
        assert -math.pi / 2 < phi <= 0


def test_decompose_examples():
    rots, d = decompose_plane_rotations(np.eye(4))
    assert len(rots) == 6 and all(t.phi == 0 for t in rots)
    assert np.array_equal(d, np.ones(4))
    for seed in range(10):
        v = haar_random_unitary(2, seed)
        rots, d = decompose_plane_rotations(v)
        assert len(rots) == 1 and len(d) == 2
        assert frobenius_distance(rotations_product(rots, d, 2), v) < 1e-12
    v = haar_random_unitary(8, 99)
    rots, d = decompose_plane_rotations(v)
    assert len(rots) == 28
    assert frobenius_distance(rotations_product(rots, d, 8), v) < 1e-9


def test_decompose_elimination_order():
    rots, _ = decompose_plane_rotations(haar_random_unitary(4, 0))
    assert [(t.p, t.q) for t in rots] == [(3, 2), (3, 1), (3, 0), (2, 1), (2, 0), (1, 0)]


def test_decompose_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        decompose_plane_rotations(np.ones((3, 3)))


@pytest.mark.parametrize("n", [2, 3, 5, 8, 16])
def test_triangularization_progress(n):
    for col, rots, w in elimination_stages(haar_random_unitary(n, n)):
        assert len(rots) == col
        assert np.all(np.abs(w[:col, col]) < 1e-10)
        # unitarity then forces the rest of row col to vanish too
        assert np.all(np.abs(w[col, :col]) < 1e-10)
        assert abs(abs(w[col, col]) - 1) < 1e-10


def test_factor_diagonal_examples():
    fs = factor_diagonal(np.ones(4))
    assert len(fs) == 3 and all(np.array_equal(f, np.eye(4)) for f in fs)
    (f,) = factor_diagonal([1j, -1])
    assert np.array_equal(f, np.diag([1j, -1]))
    fs = factor_diagonal([1, 1j, -1, -1j])
    assert np.array_equal(fs[0], np.diag([1, 1j, 1, 1]))
    assert np.array_equal(fs[1], np.diag([1, 1, -1, 1]))
    assert np.array_equal(fs[2], np.diag([1, 1, 1, -1j]))
    assert np.array_equal(np.asarray(fs[0]) @ fs[1] @ fs[2], np.diag([1, 1j, -1, -1j]))
    with pytest.raises(ValueError):
        factor_diagonal([1])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=2, max_size=16))
def test_factor_diagonal_product_exact(angles):
    d = np.exp(1j * np.array(angles))
    prod = np.eye(len(d), dtype=complex)
    for f in factor_diagonal(d):
        prod = prod @ np.asarray(f)
    # products with 1 and 0 are exact
    assert np.array_equal(prod, np.diag(d))


def test_assemble_identity():
    fs = assemble_two_level(np.eye(4))
    assert len(fs) == 6
    assert all(np.array_equal(f.block, np.eye(2)) for f in fs)


def test_assemble_swap():
    v = embed_two_level(4, 3, 2, X.matrix())
    fs = assemble_two_level(v)
    assert frobenius_distance(reconstruct_two_level(fs, 4), v) < 1e-15
    blocks = {(f.i, f.j): np.asarray(f.block) for f in fs}
    # the swap is a rotation by pi/2; its sign on |3> travels with d_3 into factor (3, 0)
    assert frobenius_distance(blocks[(3, 2)], [[0, -1], [1, 0]]) < 1e-15
    assert frobenius_distance(blocks[(3, 0)], np.diag([1, -1])) < 1e-15
    for key in [(3, 1), (2, 1), (2, 0), (1, 0)]:
        assert frobenius_distance(blocks[key], np.eye(2)) < 1e-12


def test_assemble_order_and_merge():
    v = haar_random_unitary(4, 5)
    rots, d = decompose_plane_rotations(v)
    fs = assemble_two_level(v)
    assert [(f.i, f.j) for f in fs] == [(3, 2), (3, 1), (3, 0), (2, 1), (2, 0), (1, 0)]
    for f, t in zip(fs, rots):
        if t.q != 0:
            assert np.array_equal(f.block, t.block())
    by_key = {(f.i, f.j): np.asarray(f.block) for f in fs}
    assert frobenius_distance(by_key[(3, 0)], rots[2].block() @ np.diag([1, d[3]])) < 1e-15
    assert frobenius_distance(by_key[(1, 0)], rots[5].block() @ np.diag([d[0], d[1]])) < 1e-15


@pytest.mark.parametrize("n,tol", [(2, 1e-12), (3, 1e-9), (4, 1e-9), (8, 1e-9), (16, 1e-8)])
def test_assemble_round_trip(n, tol):
    for seed in range(5):
        v = haar_random_unitary(n, 1000 + seed)
        fs = assemble_two_level(v)
        assert len(fs) == n * (n - 1) // 2
        assert frobenius_distance(reconstruct_two_level(fs, n), v) < tol
        assert frobenius_distance(product_of_embeddings(fs, n), v) < tol


def test_reconstruct_examples():
    assert np.array_equal(reconstruct_two_level([], 3), np.eye(3))
    b = haar_random_unitary(2, 8)
    f = TwoLevelFactor(2, 0, b)
    assert frobenius_distance(reconstruct_two_level([f], 3), embed_two_level(3, 2, 0, b)) < 1e-15
    with pytest.raises(ValueError):
        reconstruct_two_level([f], 2)
    with pytest.raises(ValueError):
        TwoLevelFactor(1, 1, np.eye(2))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_phase_factors_commute_with_lower_rotations(n):
    for seed in range(3):
        rots, d = decompose_plane_rotations(haar_random_unitary(n, seed))
        ds = factor_diagonal(d)
        for i in range(2, n):
            di = np.asarray(ds[i - 1])
            for t in rots:
                if t.p < i:
                    tm = np.asarray(plane_rotation_matrix(n, t))
                    assert frobenius_distance(di @ tm, tm @ di) < 1e-12


def test_assemble_rejects_small_or_non_unitary():
    with pytest.raises(ValueError):
        assemble_two_level(np.eye(1))
    with pytest.raises(NotUnitaryError):
        assemble_two_level(2 * np.eye(2))
