"""Vectorized numpy implementations of the hot kernels.

Conventions shared with the numba twin: a group of order N with r cyclic
factors is described by ``coords`` (N, r) int64, ``orders`` (r,) and
``strides`` (r,) so that ``index = coords @ strides`` (first coordinate most
significant, which makes index order lexicographic). Quadratic forms are int64
numerators ``qnum`` over a common denominator ``den``.
"""
import numpy as np

_CHUNK = 256


def _sum_index(cx, cz, orders, strides):
    # cx: (a, r), cz: (b, r) -> (a, b) indices of cx[i] + cz[j]
    s = (cx[:, None, :] + cz[None, :, :]) % orders
    return s @ strides


def check_quadratic(coords, orders, strides, qnum, den, gens):
    """Return (code, x, y, z); code 0 means all axioms hold."""
    n = coords.shape[0]
    if qnum[0] % den != 0:
        return np.array([1, 0, 0, 0], dtype=np.int64)
    neg = ((-coords) % orders) @ strides
    bad = np.flatnonzero((qnum[neg] - qnum) % den)
    if bad.size:
        return np.array([2, bad[0], 0, 0], dtype=np.int64)
    for g in gens:
        cg = coords[g]
        xg = ((coords + cg) % orders) @ strides
        gz = ((coords + cg) % orders) @ strides  # same vector, indexed by z
        for start in range(0, n, _CHUNK):
            stop = min(n, start + _CHUNK)
            xs = np.arange(start, stop)
            xz = _sum_index(coords[xs], coords, orders, strides)
            xgz = _sum_index(coords[xg[xs]], coords, orders, strides)
            # b(x+g, z) - b(x, z) - b(g, z)
            d = (qnum[xgz] - qnum[xg[xs]][:, None] - qnum[xz] + qnum[xs][:, None]
                 - qnum[gz][None, :] + qnum[g] + qnum[None, :])
            hit = np.argwhere(d % den)
            if hit.size:
                i, z = hit[0]
                return np.array([3, xs[i], g, z], dtype=np.int64)
    return np.array([0, 0, 0, 0], dtype=np.int64)


def orth_mask(coords, orders, strides, qnum, den, gens):
    """Mask of x with b(x, g) = 0 for every g in gens."""
    mask = np.ones(coords.shape[0], dtype=np.bool_)
    for g in gens:
        xg = ((coords + coords[g]) % orders) @ strides
        mask &= (qnum[xg] - qnum - qnum[g]) % den == 0
    return mask


def gauss_sum(qnum, den):
    phase = 2.0 * np.pi * (qnum % den).astype(np.float64) / den
    return complex(np.cos(phase).sum(), np.sin(phase).sum())


def map_images(coords, images, orders_b, strides_b):
    """Indices in the target of sum_i x_i * images[i] for every source element."""
    tgt = (coords @ images) % orders_b
    return tgt @ strides_b


def is_isometry(coords, images, orders_b, strides_b, qa, qb):
    idx = map_images(coords, images, orders_b, strides_b)
    if not np.array_equal(qb[idx], qa):
        return False
    return np.unique(idx).size == idx.size


def power_iteration(mat, tol, maxiter):
    """Shifted power iteration with Collatz-Wielandt bracketing.

    Returns (eigenvalue, vector, converged).
    """
    n = mat.shape[0]
    m = mat + np.eye(n)
    v = np.ones(n) / np.sqrt(n)
    lam = 0.0
    for _ in range(maxiter):
        w = m @ v
        if np.any(v <= 0.0):
            return lam, v, False
        ratios = w / v
        lo, hi = ratios.min(), ratios.max()
        lam = 0.5 * (lo + hi) - 1.0
        v = w / np.linalg.norm(w)
        if hi - lo < tol:
            return lam, v, True
    return lam, v, False


def associativity_defect(structure):
    """First (i, j, k, l) where (X_i X_j) X_k and X_i (X_j X_k) differ, else -1s."""
    left = np.einsum("ijm,mkl->ijkl", structure, structure)
    right = np.einsum("jkm,iml->ijkl", structure, structure)
    hit = np.argwhere(left != right)
    if hit.size:
        return hit[0].astype(np.int64)
    return np.full(4, -1, dtype=np.int64)
