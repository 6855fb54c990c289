"""Smoke tests for the Python bindings."""

import numpy as np
import pytest

import jarlskog as jk


def test_walsh3_matches_the_explicit_matrix():
    s3 = np.sqrt(3.0)
    expected = np.array(
        [
            [1, 1, 1],
            [1, (-1 - 1j * s3) / 2, (-1 + 1j * s3) / 2],
            [1, (-1 + 1j * s3) / 2, (-1 - 1j * s3) / 2],
        ]
    ) / s3
    assert np.max(np.abs(jk.walsh(3) - expected)) < 1e-14
    assert jk.unitary_error(jk.walsh(3)) < 1e-13


def test_clock_shift_commutation():
    n = 7
    s1, s3 = jk.sigma1(n), jk.sigma3(n)
    sigma = jk.primitive_root(n)
    assert np.max(np.abs(s3 @ s1 - sigma * (s1 @ s3))) < 1e-13


def test_walsh_conjugates_clock_into_shift():
    for n in (2, 5, 12):
        w = jk.walsh(n)
        assert np.max(np.abs(w @ jk.sigma3(n) @ w.conj().T - jk.sigma1(n))) < 1e-12
        assert np.max(np.abs(w @ w - jk.k_matrix(n))) < 1e-12


def test_block_module_agrees_with_series_exponential():
    z = [0.3 + 0.4j, -0.2 + 0.1j]
    x = np.zeros((5, 5), dtype=complex)
    x[0, 2], x[1, 2] = z[0], z[1]
    x[2, 0], x[2, 1] = -np.conj(z[0]), -np.conj(z[1])
    assert np.max(np.abs(jk.exp_skew_block(5, 3, z) - jk.mat_exp_series(x, 64))) < 1e-12


def test_recipe_walsh4_composes_with_nine_modules():
    r = jk.recipe_walsh(4)
    assert r.module_count == 9
    assert r.provenance == "Eq. 41"
    err, ok = jk.verify_recipe(r)
    assert ok and err < 1e-12
    assert np.max(np.abs(jk.compose_sequence(r.sequence) - jk.walsh(4))) < 1e-12


def test_recipe_walsh_unsupported_dimension():
    with pytest.raises(jk.UnsupportedDimensionError):
        jk.recipe_walsh(6)


def test_recipes_for_shift_clock_reversal():
    for n in (2, 3, 8):
        for make in (jk.recipe_sigma1, jk.recipe_sigma3, jk.recipe_k):
            err, ok = jk.verify_recipe(make(n))
            assert ok, (make, n, err)
    assert jk.recipe_sigma1(8).module_count == 8


def test_decompose_roundtrip():
    u = jk.haar_random_unitary(9, 2026)
    d = jk.decompose(u)
    assert d.residual < 1e-9
    assert np.max(np.abs(jk.compose_sequence(d.sequence) - u)) < 1e-9
    with pytest.raises(jk.NonUnitaryError):
        jk.decompose(2.0 * np.eye(3, dtype=complex))


def test_euler_u2_factored_angles():
    m, (p1, p2, rot, pr) = jk.euler_u2(0.4, -1.1, 0.3 + 0.2j)
    left = np.diag(np.exp(1j * np.array([p1, p2])))
    middle = np.array([[np.cos(rot), np.sin(rot)], [-np.sin(rot), np.cos(rot)]])
    right = np.diag(np.exp(1j * np.array([-pr, pr])))
    assert np.max(np.abs(left @ middle @ right - m)) < 1e-13


def test_factor_sequence_construction_and_file_roundtrip(tmp_path):
    seq = jk.FactorSequence(
        3,
        [
            jk.PhaseModule([0.1, 0.2, 0.3]),
            jk.BlockModule(3, [1 / np.sqrt(2), 1j / np.sqrt(2)], 0.7),
        ],
    )
    m = jk.compose_sequence(seq)
    assert jk.unitary_error(m) < 1e-13

    fpath = str(tmp_path / "factors.json")
    jk.save_factors(fpath, seq)
    again = jk.load_factors(fpath)
    assert np.max(np.abs(jk.compose_sequence(again) - m)) == 0.0

    mpath = str(tmp_path / "matrix.json")
    jk.save_matrix(mpath, m)
    assert np.array_equal(jk.load_matrix(mpath), m)
