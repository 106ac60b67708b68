"""Loop kernels compiled with numba; same contracts as the numpy module."""
import numpy as np
from numba import njit


@njit(cache=True)
def _add(coords, orders, strides, i, j):
    idx = 0
    for k in range(orders.shape[0]):
        idx += ((coords[i, k] + coords[j, k]) % orders[k]) * strides[k]
    return idx


@njit(cache=True)
def check_quadratic(coords, orders, strides, qnum, den, gens):
    out = np.zeros(4, dtype=np.int64)
    n = coords.shape[0]
    r = orders.shape[0]
    if qnum[0] % den != 0:
        out[0] = 1
        return out
    for x in range(n):
        neg = 0
        for k in range(r):
            neg += ((orders[k] - coords[x, k]) % orders[k]) * strides[k]
        if (qnum[neg] - qnum[x]) % den != 0:
            out[0] = 2
            out[1] = x
            return out
    for gi in range(gens.shape[0]):
        g = gens[gi]
        for x in range(n):
            xg = _add(coords, orders, strides, x, g)
            for z in range(n):
                xz = _add(coords, orders, strides, x, z)
                gz = _add(coords, orders, strides, g, z)
                xgz = _add(coords, orders, strides, xg, z)
                d = qnum[xgz] - qnum[xg] - qnum[xz] + qnum[x] - qnum[gz] + qnum[g] + qnum[z]
                if d % den != 0:
                    out[0] = 3
                    out[1] = x
                    out[2] = g
                    out[3] = z
                    return out
    return out


@njit(cache=True)
def orth_mask(coords, orders, strides, qnum, den, gens):
    n = coords.shape[0]
    mask = np.ones(n, dtype=np.bool_)
    for x in range(n):
        for gi in range(gens.shape[0]):
            g = gens[gi]
            xg = _add(coords, orders, strides, x, g)
            if (qnum[xg] - qnum[x] - qnum[g]) % den != 0:
                mask[x] = False
                break
    return mask


@njit(cache=True)
def _gauss_sum(qnum, den):
    re = 0.0
    im = 0.0
    two_pi = 2.0 * np.pi
    for x in range(qnum.shape[0]):
        phase = two_pi * ((qnum[x] % den) / den)
        re += np.cos(phase)
        im += np.sin(phase)
    return re, im


def gauss_sum(qnum, den):
    re, im = _gauss_sum(qnum, den)
    return complex(re, im)


@njit(cache=True)
def map_images(coords, images, orders_b, strides_b):
    n = coords.shape[0]
    ra = images.shape[0]
    rb = orders_b.shape[0]
    idx = np.zeros(n, dtype=np.int64)
    for x in range(n):
        acc = 0
        for j in range(rb):
            s = 0
            for i in range(ra):
                s += coords[x, i] * images[i, j]
            acc += (s % orders_b[j]) * strides_b[j]
        idx[x] = acc
    return idx


@njit(cache=True)
def is_isometry(coords, images, orders_b, strides_b, qa, qb):
    n = coords.shape[0]
    ra = images.shape[0]
    rb = orders_b.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    for x in range(n):
        acc = 0
        for j in range(rb):
            s = 0
            for i in range(ra):
                s += coords[x, i] * images[i, j]
            acc += (s % orders_b[j]) * strides_b[j]
        if qb[acc] != qa[x] or seen[acc]:
            return False
        seen[acc] = True
    return True


@njit(cache=True)
def power_iteration(mat, tol, maxiter):
    n = mat.shape[0]
    v = np.ones(n) / np.sqrt(n)
    w = np.zeros(n)
    lam = 0.0
    for _ in range(maxiter):
        for i in range(n):
            s = v[i]
            for j in range(n):
                s += mat[i, j] * v[j]
            w[i] = s
        lo = np.inf
        hi = -np.inf
        for i in range(n):
            if v[i] <= 0.0:
                return lam, v, False
            q = w[i] / v[i]
            lo = min(lo, q)
            hi = max(hi, q)
        lam = 0.5 * (lo + hi) - 1.0
        norm = np.sqrt(np.sum(w * w))
        v = w / norm
        if hi - lo < tol:
            return lam, v, True
    return lam, v, False


@njit(cache=True)
def associativity_defect(structure):
    n = structure.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    left = 0
                    right = 0
                    for m in range(n):
                        left += structure[i, j, m] * structure[m, k, l]
                        right += structure[j, k, m] * structure[i, m, l]
                    if left != right:
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        out[3] = l
                        return out
    return out
