"""Based rings with non-negative structure constants and their FP dimensions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .abelian import FiniteAbelianGroup
from .errors import ArgumentError, InconsistentRingError, PreconditionError

FP_TOL = 1e-9
POWER_TOL = 1e-12
POWER_MAXITER = 100_000


class FusionRing:
    """Basis ``labels`` (index 0 is the unit), involution ``dual`` and
    structure constants ``N[i, j, k]`` = multiplicity of X_k in X_i X_j."""

    def __init__(self, labels, structure, dual=None, *, validate=True):
        self.labels = tuple(str(s) for s in labels)
        n = len(self.labels)
        arr = np.asarray(structure, dtype=np.int64)
        if arr.shape != (n, n, n):
            raise ArgumentError(f"structure constants must have shape {(n, n, n)}, got {arr.shape}")
        arr.setflags(write=False)
        self.N = arr
        self.dual = tuple(int(d) for d in (dual if dual is not None else range(n)))
        self.unit = 0
        if validate:
            self._validate()

    @property
    def rank(self) -> int:
        return len(self.labels)

    def _validate(self):
        n, N = self.rank, self.N
        if np.any(N < 0):
            i, j, k = np.argwhere(N < 0)[0]
            raise InconsistentRingError(f"negative structure constant N[{i},{j},{k}]", witness=(i, j, k))
        if sorted(self.dual) != list(range(n)) or any(self.dual[self.dual[i]] != i for i in range(n)):
            raise InconsistentRingError("dual is not an involution")
        eye = np.eye(n, dtype=np.int64)
        if not (np.array_equal(N[0], eye) and np.array_equal(N[:, 0, :], eye)):
            raise InconsistentRingError("index 0 does not act as the unit")
        for i in range(n):
            want = np.zeros(n, dtype=np.int64)
            want[self.dual[i]] = 1
            if not np.array_equal(N[i, :, 0], want):
                raise InconsistentRingError(
                    f"X_{self.labels[i]} X_j contains the unit exactly for j = dual(i) only; fails at i={i}",
                    witness=(i,))
        bad = kernels.associativity_defect(N)
        if bad[0] >= 0:
            i, j, k, l = (int(v) for v in bad)
            lab = self.labels
            raise InconsistentRingError(
                f"not associative: coefficient of {lab[l]} in ({lab[i]} {lab[j]}) {lab[k]} "
                f"differs from {lab[i]} ({lab[j]} {lab[k]})", witness=(i, j, k, l))

    def fusion_matrix(self, i: int) -> np.ndarray:
        """Left multiplication by X_i on coefficient vectors."""
        return self.N[i].T.astype(np.float64)

    @cached_property
    def fp(self) -> "FPData":
        return fpdims(self)

    def __repr__(self):
        return f"FusionRing({' '.join(self.labels)})"


@dataclass(frozen=True)
class FPData:
    dims: tuple[float, ...]
    total: float
    residual: float  # max_j |N_j R - FPdim(X_j) R|


def _perron_vector(mat: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eig(mat)
    k = int(np.argmax(vals.real))
    v = vecs[:, k].real
    return v / v[np.argmax(np.abs(v))]


def fpdims(r: FusionRing) -> FPData:
    """FP dimension of every basis element, checked as a common eigenvector."""
    n = r.rank
    dims = np.ones(n)
    converged = True
    for i in range(1, n):
        lam, _, ok = kernels.power_iteration(r.fusion_matrix(i), POWER_TOL, POWER_MAXITER)
        if not ok:
            converged = False
            break
        dims[i] = lam
    if not converged:
        total_matrix = sum(r.fusion_matrix(i) for i in range(n))
        v = _perron_vector(total_matrix)
        dims = v / v[r.unit]
    residual = regular_residual(r, dims)
    if residual > FP_TOL or np.any(dims < 1 - FP_TOL):
        raise InconsistentRingError(
            f"FP vector is not a common eigenvector (residual {residual:.3e})")
    return FPData(tuple(float(d) for d in dims), float(np.sum(dims ** 2)), residual)


def regular_residual(r: FusionRing, dims) -> float:
    d = np.asarray(dims, dtype=np.float64)
    return max((float(np.max(np.abs(r.fusion_matrix(j) @ d - d[j] * d))) for j in range(r.rank)), default=0.0)


def regular_object(r: FusionRing) -> np.ndarray:
    """Coefficients of ``R = sum_i FPdim(X_i) X_i``."""
    data = r.fp
    R = np.array(data.dims)
    if abs(float(R @ R) - data.total) > FP_TOL * max(1.0, data.total):
        raise InconsistentRingError("FPdim(R) differs from the total dimension")
    return R


def fp_homomorphism_defect(r: FusionRing) -> float:
    """max |sum_l N_ij^l d_l - d_i d_j|."""
    d = np.array(r.fp.dims)
    prod = np.einsum("ijl,l->ij", r.N.astype(np.float64), d)
    return float(np.max(np.abs(prod - np.outer(d, d))))


def product_ring(r1: FusionRing, r2: FusionRing) -> FusionRing:
    n1, n2 = r1.rank, r2.rank
    labels = [f"{a}.{b}" for a in r1.labels for b in r2.labels]
    N = np.einsum("ijk,abc->iajbkc", r1.N, r2.N).reshape(n1 * n2, n1 * n2, n1 * n2)
    dual = [r1.dual[i] * n2 + r2.dual[a] for i in range(n1) for a in range(n2)]
    out = FusionRing(labels, N, dual)
    if abs(out.fp.total - r1.fp.total * r2.fp.total) > FP_TOL * max(1.0, out.fp.total):
        raise InconsistentRingError("FP dimension is not multiplicative on the product")
    return out


def verlinde_sl2(k: int) -> FusionRing:
    """Truncated Clebsch-Gordan rules at level k (labels are twice the spin)."""
    if k < 1:
        raise ArgumentError(f"level must be >= 1, got {k}")
    n = k + 1
    N = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for l in range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2):
                N[i, j, l] = 1
    return FusionRing([str(i) for i in range(n)], N)


def pointed_ring(g: FiniteAbelianGroup) -> FusionRing:
    n = g.order
    N = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        x = g.element(i)
        for j in range(n):
            N[i, j, g.index(g.add(x, g.element(j)))] = 1
    dual = [g.index(g.neg(g.element(i))) for i in range(n)]
    labels = [",".join(map(str, g.element(i))) or "0" for i in range(n)]
    return FusionRing(labels, N, dual)


def fibonacci() -> FusionRing:
    N = np.zeros((2, 2, 2), dtype=np.int64)
    N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = 1
    N[1, 1, 0] = N[1, 1, 1] = 1
    return FusionRing(["1", "tau"], N)


def ising() -> FusionRing:
    # 1, e(psilon), s(igma)
    N = np.zeros((3, 3, 3), dtype=np.int64)
    for j in range(3):
        N[0, j, j] = N[j, 0, j] = 1
    N[1, 1, 0] = 1
    N[1, 2, 2] = N[2, 1, 2] = 1
    N[2, 2, 0] = N[2, 2, 1] = 1
    return FusionRing(["1", "e", "s"], N)


def subring(r: FusionRing, indices) -> FusionRing:
    """Based subring on the given basis indices (must contain the unit, be closed)."""
    idx = list(indices)
    if idx[0] != r.unit:
        raise ArgumentError("the unit must come first")
    keep = np.zeros(r.rank, dtype=bool)
    keep[idx] = True
    sub = r.N[np.ix_(idx, idx)]
    if np.any(sub[:, :, ~keep]):
        raise ArgumentError("basis subset is not closed under multiplication")
    pos = {old: new for new, old in enumerate(idx)}
    try:
        dual = [pos[r.dual[i]] for i in idx]
    except KeyError:
        raise ArgumentError("basis subset is not closed under duality") from None
    return FusionRing([r.labels[i] for i in idx], sub[:, :, idx], dual)


def based_isomorphic(r1: FusionRing, r2: FusionRing) -> bool:
    """Brute force over unit-fixing relabelings."""
    if r1.rank != r2.rank:
        return False
    n = r1.rank
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        if np.array_equal(r1.N, r2.N[np.ix_(p, p, p)]):
            return True
    return False


def etale_dimension_ledger(fpdim_c: float, fpdim_a: float, tol: float = FP_TOL):
    """``(FPdim C_A, FPdim C_A^0, is_lagrangian)`` for a connected etale algebra A."""
    if fpdim_a < 1 - tol:
        raise PreconditionError(f"FPdim(A) = {fpdim_a} < 1")
    if fpdim_a * fpdim_a > fpdim_c * (1 + tol):
        raise PreconditionError(f"FPdim(A)^2 = {fpdim_a ** 2} exceeds FPdim(C) = {fpdim_c}")
    local = fpdim_c / (fpdim_a * fpdim_a)
    return fpdim_c / fpdim_a, local, abs(local - 1.0) <= tol


BUILTIN_RINGS = {
    "fib": fibonacci,
    "ising": ising,
}


def builtin_ring(name: str) -> FusionRing:
    """``fib``, ``ising``, ``sl2:k`` or ``group:n1,n2,...``."""
    from .parsing import parse_orders

    if name in BUILTIN_RINGS:
        return BUILTIN_RINGS[name]()
    head, sep, rest = name.partition(":")
    if sep and head == "sl2" and rest.isdigit():
        return verlinde_sl2(int(rest))
    if sep and head == "group":
        return pointed_ring(parse_orders(rest))
    raise ArgumentError(f"unknown ring {name!r}")
