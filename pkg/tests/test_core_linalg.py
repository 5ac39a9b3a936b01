import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rvnorm.core_linalg import (PLAIN, STAR, ComplexMatrix, HermitianMatrix, all_word_traces,
                                char_poly, eig_hermitian, matrix_to_json, power_traces,
                                read_matrix, trace_word)
from rvnorm.errors import BadParameter
from rvnorm.suites import random_complex, random_hermitian, random_unitary

PHI = (1 + math.sqrt(5)) / 2
FIB = [[1.0, 1.0], [1.0, 0.0]]


def test_matrix_validation():
    with pytest.raises(BadParameter):
        ComplexMatrix(np.ones((2, 3)))
    with pytest.raises(BadParameter):
        ComplexMatrix([[np.nan]])
    with pytest.raises(BadParameter):
        HermitianMatrix([[0, 1], [2, 0]])
    m = ComplexMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        m.array[0, 0] = 5


def test_hermitian_symmetrized_exactly():
    a = np.array([[1.0, 2.0 + 1e-14], [2.0, 3.0]])
    h = HermitianMatrix(a)
    assert np.array_equal(h.array, h.array.conj().T)
    assert h.defect == pytest.approx(1e-14, rel=0.5)


def test_eig_examples():
    assert eig_hermitian(np.diag([1.0, 3.0, 2.0])).eigenvalues == (3.0, 2.0, 1.0)
    w = eig_hermitian(FIB).as_array()
    assert np.allclose(w, [PHI, 1 - PHI], atol=1e-14)
    k = np.ones((3, 3)) - np.eye(3)
    assert np.allclose(eig_hermitian(k).as_array(), [2, -1, -1], atol=1e-13)


def test_eig_against_numpy(rng):
    for _ in range(50):
        n = int(rng.integers(1, 9))
        a = random_hermitian(rng, n)
        s = eig_hermitian(a)
        w = s.as_array()
        assert np.all(np.diff(w) <= 0)
        assert np.allclose(w, np.linalg.eigvalsh(a)[::-1], atol=1e-10)
        fro = np.linalg.norm(a)
        assert s.residual <= 1e-10 * (1 + fro)
        assert abs(w.sum() - np.trace(a).real) <= 1e-9 * (1 + fro)
        assert abs((w ** 2).sum() - fro ** 2) <= 1e-9 * (1 + fro)


def test_eig_unitary_invariance(rng):
    for n in (2, 4, 7):
        a = random_hermitian(rng, n)
        u = random_unitary(rng, n)
        w1 = eig_hermitian(a).as_array()
        w2 = eig_hermitian(u.conj().T @ a @ u).as_array()
        assert np.allclose(w1, w2, atol=1e-8)


def test_eig_degenerate_and_zero():
    assert eig_hermitian(np.zeros((3, 3))).eigenvalues == (0.0, 0.0, 0.0)
    w = eig_hermitian(2 * np.eye(4)).as_array()
    assert np.allclose(w, 2)


def test_power_sums_match_traces(rng):
    for _ in range(20):
        a = random_hermitian(rng, int(rng.integers(1, 6)))
        w = eig_hermitian(a).as_array()
        pt = power_traces(HermitianMatrix(a), 8)
        fro = np.linalg.norm(a)
        for k in range(1, 9):
            assert abs(pt[k - 1] - np.sum(w ** k)) <= 1e-8 * (1 + fro ** k)


def test_char_poly_examples(rng):
    assert np.allclose(char_poly(FIB), [1, -1, -1])
    for n in (1, 3, 5):
        expected = [math.comb(n, k) * (-1) ** k for k in range(n + 1)]
        assert np.allclose(char_poly(np.eye(n)), expected)
    a = HermitianMatrix(random_hermitian(rng, 4))
    c = char_poly(a)
    assert c.dtype == float
    roots = np.sort(np.roots(c).real)[::-1]
    assert np.allclose(roots, eig_hermitian(a).as_array(), atol=1e-8)


def test_char_poly_vanishes_on_spectrum(rng):
    for _ in range(20):
        n = int(rng.integers(1, 7))
        a = HermitianMatrix(random_hermitian(rng, n))
        c = char_poly(a)
        fro = np.linalg.norm(a.array)
        for lam in eig_hermitian(a):
            assert abs(np.polyval(c, lam)) <= 1e-6 * (1 + fro) ** n


def test_char_poly_complex_matches_numpy(rng):
    z = random_complex(rng, 4)
    assert np.allclose(char_poly(z), np.poly(z), atol=1e-10)


def test_trace_word_examples():
    z = np.array([[0, 1], [0, 0]])
    assert trace_word(z, (PLAIN, STAR)) == 1
    shift = np.roll(np.eye(3), 1, axis=1)
    assert trace_word(shift, (PLAIN, STAR, PLAIN, STAR)) == pytest.approx(3)
    with pytest.raises(BadParameter):
        trace_word(z, ())


def test_trace_word_hermitian_real(rng):
    a = random_hermitian(rng, 4)
    assert abs(trace_word(a, (PLAIN,)).imag) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([PLAIN, STAR]), min_size=1, max_size=7),
       st.integers(0, 2 ** 32 - 1))
def test_trace_word_cyclic(word, seed):
    z = random_complex(np.random.default_rng(seed), 3)
    base = trace_word(z, tuple(word))
    for r in range(1, len(word)):
        rot = tuple(word[r:] + word[:r])
        assert abs(trace_word(z, rot) - base) <= 1e-10 * (1 + abs(base))


def test_all_word_traces(rng):
    z = random_complex(rng, 3)
    table = all_word_traces(z, 4)
    assert len(table) == 2 + 4 + 8 + 16
    for w, v in table.items():
        assert abs(v - trace_word(z, w)) < 1e-10


def test_power_traces_examples():
    assert np.allclose(power_traces(np.diag([1.0, 2.0]), 2), [3, 5])
    assert np.allclose(power_traces(FIB, 4), [1, 3, 4, 7])
    assert np.allclose(power_traces(np.zeros((3, 3)), 4), 0)
    with pytest.raises(BadParameter):
        power_traces(FIB, 0)


def test_read_matrix_roundtrip(rng):
    z = random_complex(rng, 3)
    import json
    m = read_matrix(json.dumps(matrix_to_json(z)))
    assert np.allclose(m.array, z)
    m = read_matrix("1,2\n2,5\n")
    assert np.allclose(m.array, [[1, 2], [2, 5]])
    with pytest.raises(BadParameter):
        read_matrix('{"n": 2, "entries": [[1, 0]]}')
