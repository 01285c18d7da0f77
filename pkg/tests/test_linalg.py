import numpy as np
import pytest
from hypothesis import given, strategies as st

from currentrep import linalg
from currentrep.errors import NoSolution


def test_identity_rank_and_kernel():
    eye = np.eye(4, dtype=np.int64)
    assert linalg.rank(eye, 3) == 4
    assert linalg.kernel(eye, 3).shape == (0, 4)


def test_zero_matrix_rank():
    assert linalg.rank(np.zeros((3, 5), dtype=np.int64), 5) == 0


def test_adjoint_of_e_on_sl2():
    # ad(e) in the basis {e, h, f}: [e,e]=0, [e,h]=-2e, [e,f]=h
    p = 3
    ad_e = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]])  # columns = images mod 3
    ad_e = np.array([[0, (-2) % p, 0], [0, 0, 1], [0, 0, 0]])
    assert linalg.rank(ad_e, p) == 2
    ker = linalg.kernel(ad_e, p)
    assert ker.shape[0] == 1 and ker[0][0] == 1 and ker[0][1] == 0 and ker[0][2] == 0


def test_solve_inconsistent():
    A = np.array([[1, 0], [1, 0]])
    with pytest.raises(NoSolution):
        linalg.solve(A, np.array([1, 2]), 3)


@given(st.integers(0, 10 ** 6))
def test_rref_blocked_matches_naive(seed):
    rng = np.random.default_rng(seed)
    p = int(rng.choice([2, 3, 5]))
    rows = int(rng.integers(1, 60))
    cols = int(rng.integers(1, 60))
    r = int(rng.integers(1, min(rows, cols) + 1))
    A = linalg.matmul(rng.integers(0, p, (rows, r)), rng.integers(0, p, (r, cols)), p)
    R1, p1 = linalg._rref_naive(A.copy(), p)
    R2, p2 = linalg._rref_blocked(A.copy(), p, nb=7)
    assert p1 == p2
    assert np.array_equal(R1, R2)


@given(st.integers(0, 10 ** 6))
def test_kernel_annihilates(seed):
    rng = np.random.default_rng(seed)
    p = int(rng.choice([2, 3, 5]))
    A = rng.integers(0, p, (12, 17))
    K = linalg.kernel(A, p)
    assert K.shape[0] == 17 - linalg.rank(A, p)
    if K.shape[0]:
        assert not np.any(linalg.matmul(A, K.T, p))


@given(st.integers(0, 10 ** 6))
def test_solve_particular(seed):
    rng = np.random.default_rng(seed)
    p = 5
    A = rng.integers(0, p, (9, 7))
    x = rng.integers(0, p, 7)
    b = linalg.matvec(A, x, p)
    sol = linalg.solve(A, b, p)
    assert np.array_equal(linalg.matvec(A, sol, p), b)


def test_echelon_incremental_matches_batch():
    rng = np.random.default_rng(0)
    p = 3
    rows = rng.integers(0, p, (20, 12))
    ech = linalg.Echelon(12, p)
    for r in rows:
        ech.add_rows(r.reshape(1, -1))
    R, piv = linalg.rref(rows, p)
    assert np.array_equal(ech.rows, R)
    assert ech.pivots == piv
    coords = ech.coords(rows)
    assert np.array_equal(linalg.matmul(coords, ech.rows, p), rows % p)
