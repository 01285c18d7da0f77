"""Dense exact linear algebra over the prime field F_p.

Matrices are numpy integer arrays with entries reduced to [0, p).  Matrix
products are computed through BLAS in floating point and reduced mod p
afterwards; this is exact as long as ``inner_dim * (p-1)**2`` stays below the
mantissa capacity, which is checked on every call.  Row reduction is a
vectorised Gauss-Jordan elimination.
"""

from __future__ import annotations

import numpy as np

from .errors import NoSolution

_F32_CAP = 2 ** 24  # exact integer range of float32
_F64_CAP = 2 ** 53  # exact integer range of float64


def asmod(a, p: int) -> np.ndarray:
    """Coerce to an int64 array with entries reduced into [0, p)."""
    return np.asarray(a, dtype=np.int64) % p


def matmul(a, b, p: int) -> np.ndarray:
    """Exact product ``a @ b`` over F_p via floating-point BLAS."""
    a = asmod(a, p)
    b = asmod(b, p)
    inner = a.shape[-1]
    bound = inner * (p - 1) ** 2
    if bound < _F32_CAP:
        out = np.matmul(a.astype(np.float32), b.astype(np.float32))
    elif bound < _F64_CAP:
        out = np.matmul(a.astype(np.float64), b.astype(np.float64))
    else:  # fall back to object-free exact integer matmul (slow, never hit at desk scale)
        return np.matmul(a, b) % p
    return out.astype(np.int64) % p


def matvec(a, v, p: int) -> np.ndarray:
    return matmul(a, np.asarray(v).reshape(-1, 1), p).ravel()


def matpow(a, k: int, p: int) -> np.ndarray:
    """Exact k-th power of a square matrix over F_p (binary powering)."""
    a = asmod(a, p)
    n = a.shape[0]
    out = np.eye(n, dtype=np.int64)
    while k > 0:
        if k & 1:
            out = matmul(out, a, p)
        a = matmul(a, a, p)
        k >>= 1
    return out


def _rref_naive(R: np.ndarray, p: int):
    """In-place reduced row echelon form; R must already be reduced mod p."""
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv_ = pow(int(R[r, c]), p - 2, p)
        if inv_ != 1:
            R[r] = (R[r] * inv_) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit] = (R[hit] - np.outer(col[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def _rref_track(W: np.ndarray, p: int):
    """Row echelon of a narrow slab, tracking which input rows became pivots."""
    rows, cols = W.shape
    where = np.arange(rows)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(W[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            W[[r, i]] = W[[i, r]]
            where[[r, i]] = where[[i, r]]
        inv_ = pow(int(W[r, c]), p - 2, p)
        if inv_ != 1:
            W[r] = (W[r] * inv_) % p
        col = W[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            W[hit] = (W[hit] - np.outer(col[hit], W[r])) % p
        pivots.append(c)
        r += 1
    return pivots, where[:r]


def _rref_blocked(R: np.ndarray, p: int, nb: int = 96):
    """Blocked Gauss-Jordan: pivots found on a narrow slab, bulk updates via GEMM."""
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    c0 = 0
    while c0 < cols and r < rows:
        c1 = min(c0 + nb, cols)
        slab_pivots, worig = _rref_track(R[r:, c0:c1].copy(), p)
        if slab_pivots:
            k = len(slab_pivots)
            orig_rows = (worig + r).tolist()
            pivcols = [c0 + c for c in slab_pivots]
            P0 = R[orig_rows, :]
            # the unique reduced basis of the chosen rows' span with identity
            # on the pivot columns
            Pfull = matmul(inv(P0[:, pivcols], p), P0, p)
            mask = np.ones(rows, dtype=bool)
            mask[orig_rows] = False
            coef = R[mask][:, pivcols]
            if np.any(coef):
                R[mask] = (R[mask] - matmul(coef, Pfull, p)) % p
            chosen = set(orig_rows)
            others = [i for i in range(r, rows) if i not in chosen]
            rest = R[others].copy() if others else None
            R[r:r + k] = Pfull
            if others:
                R[r + k:] = rest
            pivots.extend(pivcols)
            r += k
        c0 = c1
    return R[:r], pivots


def rref(a, p: int):
    """Reduced row echelon form over F_p.

    Returns ``(R, pivots)`` where R holds the nonzero rows (each pivot column
    reduced to a standard basis column) and ``pivots`` lists the pivot column
    indices, so ``len(pivots)`` is the rank.
    """
    R = asmod(a, p).copy()
    if R.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = R.shape
    if rows <= 128 or cols <= 160:
        return _rref_naive(R, p)
    return _rref_blocked(R, p)


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def kernel(a, p: int) -> np.ndarray:
    """Basis of the right null space, one vector per row.

    The basis is in reduced echelon shape with respect to the free columns.
    """
    a = asmod(a, p)
    rows, cols = a.shape
    R, piv = rref(a, p)
    free = [c for c in range(cols) if c not in piv]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
        for i, pc in enumerate(piv):
            out[k, pc] = (-int(R[i, c])) % p
    return out


def left_kernel(a, p: int) -> np.ndarray:
    return kernel(asmod(a, p).T, p)


def solve(a, b, p: int) -> np.ndarray:
    """Solve ``a @ x = b`` exactly; raises :class:`NoSolution` if inconsistent.

    b may be a vector or a matrix of stacked right-hand-side columns; a
    particular solution is returned (free variables set to zero).
    """
    a = asmod(a, p)
    b = asmod(b, p)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    rows, cols = a.shape
    aug = np.hstack([a, b])
    R, piv = rref(aug, p)
    for c in piv:
        if c >= cols:
            raise NoSolution("inconsistent linear system")
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, cols:]
    return x.ravel() if vec else x


def inv(a, p: int) -> np.ndarray:
    """Exact inverse of a square matrix over F_p."""
    a = asmod(a, p)
    n = a.shape[0]
    aug = np.hstack([a, np.eye(n, dtype=np.int64)])
    R, piv = rref(aug, p)
    if piv != list(range(n)):
        raise NoSolution("matrix is singular over F_p")
    return R[:, n:]


def mat_solve(m, mode: str, p: int, rhs=None):
    """Dispatcher over the dense solver toolbox.

    mode is one of ``rref`` -> (R, pivots), ``kernel`` -> row basis,
    ``rank`` -> int, ``solve`` -> particular solution for ``rhs``.
    """
    if mode == "rref":
        return rref(m, p)
    if mode == "kernel":
        return kernel(m, p)
    if mode == "rank":
        return rank(m, p)
    if mode == "solve":
        if rhs is None:
            raise ValueError("solve mode needs rhs")
        return solve(m, rhs, p)
    raise ValueError(f"unknown mode {mode!r}")


class Echelon:
    """Growing reduced row echelon basis of a subspace of F_p^n.

    Supports batch insertion with GEMM-based reduction, membership residuals
    and coordinate extraction.  Used heavily by the spinning routines.
    """

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def residual(self, w: np.ndarray) -> np.ndarray:
        """Reduce row vectors against the current basis (no insertion)."""
        w = asmod(w, self.p)
        single = w.ndim == 1
        if single:
            w = w.reshape(1, -1)
        if self.dim:
            coef = w[:, self.pivots]
            w = (w - matmul(coef, self.rows, self.p)) % self.p
        return w[0] if single else w

    def add_rows(self, w: np.ndarray) -> np.ndarray:
        """Insert row vectors; returns reduced echelon rows that were new."""
        p = self.p
        w = self.residual(w)
        if w.ndim == 1:
            w = w.reshape(1, -1)
        R, piv = rref(w, p)
        if not piv:
            return np.zeros((0, self.n), dtype=np.int64)
        if self.dim:
            # clear the new pivot columns from the old rows
            coef = self.rows[:, piv]
            if np.any(coef):
                self.rows = (self.rows - matmul(coef, R, p)) % p
        self.rows = np.vstack([self.rows, R])
        self.pivots.extend(piv)
        order = np.argsort(self.pivots, kind="stable")
        self.rows = self.rows[order]
        self.pivots = [self.pivots[i] for i in order]
        return R

    def contains(self, w) -> bool:
        return not np.any(self.residual(w))

    def coords(self, w: np.ndarray) -> np.ndarray:
        """Coordinates of row vectors in the echelon basis; raises if outside."""
        w = asmod(w, self.p)
        single = w.ndim == 1
        if single:
            w = w.reshape(1, -1)
        coef = w[:, self.pivots] if self.dim else np.zeros((w.shape[0], 0), dtype=np.int64)
        rem = (w - matmul(coef, self.rows, self.p)) % self.p if self.dim else w
        if np.any(rem):
            raise NoSolution("vector outside the spanned subspace")
        return coef[0] if single else coef
