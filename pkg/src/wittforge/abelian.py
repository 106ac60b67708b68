"""Finite abelian groups given as products of cyclic groups.

A group is ``Z/n_1 + ... + Z/n_r`` with the presentation kept exactly as
given; elements are tuples of residues. Subgroups carry explicit member sets,
quotients and subgroup presentations go through the Smith normal form of an
integer relation matrix.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .config import max_group_order
from .errors import DimensionError, InvalidGroupError, TooLargeError

Element = tuple[int, ...]


# --------------------------------------------------------------------------
# Smith normal form over unbounded Python integers
# --------------------------------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return ``(U, D, V)`` with ``U @ m @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative entries
    and ``d_1 | d_2 | ...``. All matrices are lists of lists of ints.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(row) != cols for row in a):
        raise DimensionError("ragged integer matrix")
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        if k:
            a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        if k:
            for row in a:
                row[dst] += k * row[src]
            for row in v:
                row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        # pivot: smallest non-zero magnitude in the remaining block
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return u, a, v
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                add_row(t, i, -(a[i][t] // p))
                dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                add_col(t, j, -(a[t][j] // p))
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


def _unimodular_inverse(u):
    """Exact inverse of a unimodular integer matrix via Gauss-Jordan on rationals."""
    from fractions import Fraction

    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(u)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    out = [[row[n + j] for j in range(n)] for row in aug]
    if any(x.denominator != 1 for row in out for x in row):
        raise ArithmeticError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


# --------------------------------------------------------------------------
# Groups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        for n in orders:
            if n < 1:
                raise InvalidGroupError(f"cyclic order must be >= 1, got {n}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    @cached_property
    def strides(self) -> np.ndarray:
        s = np.ones(self.rank, dtype=np.int64)
        for i in range(self.rank - 2, -1, -1):
            s[i] = s[i + 1] * self.orders[i + 1]
        return s

    @cached_property
    def orders_array(self) -> np.ndarray:
        return np.array(self.orders, dtype=np.int64).reshape(self.rank)

    @cached_property
    def coords(self) -> np.ndarray:
        """All elements as an (order, rank) array in lexicographic order."""
        cap = max_group_order()
        if self.order > cap:
            raise TooLargeError(f"group of order {self.order} exceeds the enumeration cap {cap}")
        if self.rank == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*[np.arange(n, dtype=np.int64) for n in self.orders], indexing="ij")
        out = np.stack([g.reshape(-1) for g in grids], axis=1)
        out.setflags(write=False)
        return out

    @cached_property
    def generator_indices(self) -> np.ndarray:
        """Indices of the standard generators of non-trivial cyclic factors."""
        return np.array([self.strides[i] for i, n in enumerate(self.orders) if n > 1], dtype=np.int64)

    def elements(self) -> Iterator[Element]:
        return itertools.product(*(range(n) for n in self.orders))

    def element(self, index: int) -> Element:
        out = []
        for n in reversed(self.orders):
            index, r = divmod(index, n)
            out.append(r)
        return tuple(reversed(out))

    def index(self, x: Element) -> int:
        x = self.reduce(x)
        idx = 0
        for xi, n in zip(x, self.orders):
            idx = idx * n + xi
        return idx

    def reduce(self, x: Iterable[int]) -> Element:
        x = tuple(int(v) for v in x)
        if len(x) != self.rank:
            raise DimensionError(f"element {x} has {len(x)} coordinates, group has {self.rank}")
        return tuple(v % n for v, n in zip(x, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionError(f"cannot add {x} and {y} in a group of rank {self.rank}")
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return self.reduce(-v for v in x)

    def scalar(self, k: int, x: Element) -> Element:
        return self.reduce(k * v for v in x)

    def element_order(self, x: Element) -> int:
        x = self.reduce(x)
        return math.lcm(1, *(n // math.gcd(v, n) for v, n in zip(x, self.orders)))

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors ``d_1 | d_2 | ...`` with trivial factors dropped."""
        _, d, _ = smith_normal_form([[n if i == j else 0 for j in range(self.rank)] for i, n in enumerate(self.orders)])
        return tuple(sorted(d[i][i] for i in range(self.rank) if d[i][i] > 1))

    def is_isomorphic(self, other: FiniteAbelianGroup) -> bool:
        return self.invariant_factors == other.invariant_factors

    def __str__(self):
        if not self.orders or all(n == 1 for n in self.orders):
            return "trivial"
        return " + ".join(f"Z/{n}" for n in self.orders)


def make_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


def element_add(g: FiniteAbelianGroup, x: Element, y: Element) -> Element:
    return g.add(x, y)


def element_neg(g: FiniteAbelianGroup, x: Element) -> Element:
    return g.neg(x)


def element_scalar(g: FiniteAbelianGroup, k: int, x: Element) -> Element:
    return g.scalar(k, x)


# --------------------------------------------------------------------------
# Homomorphisms given by integer matrices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupMap:
    """Homomorphism ``source -> target``; column i is the image of generator i."""

    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    matrix: tuple[tuple[int, ...], ...]  # (target.rank, source.rank)

    def __call__(self, x: Element) -> Element:
        x = self.source.reduce(x)
        return self.target.reduce(sum(row[i] * x[i] for i in range(len(x))) for row in self.matrix)

    @cached_property
    def images(self) -> np.ndarray:
        """(source.rank, target.rank) array: row i is the image of generator i."""
        arr = np.array(self.matrix, dtype=np.int64).reshape(self.target.rank, self.source.rank)
        return np.ascontiguousarray(arr.T)

    def index_map(self) -> np.ndarray:
        """Target index of the image of every source element (by source index)."""
        return kernels.map_images(self.source.coords, self.images, self.target.orders_array, self.target.strides)

    def compose(self, other: GroupMap) -> GroupMap:
        """``self o other``."""
        if other.target != self.source:
            raise DimensionError("maps are not composable")
        m = _matmul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        m = [[v % n for v in row] for row, n in zip(m, self.target.orders)] if m else []
        return GroupMap(other.source, self.target, tuple(tuple(r) for r in m))

    def is_bijective(self) -> bool:
        if self.source.order != self.target.order:
            return False
        idx = self.index_map()
        return np.unique(idx).size == idx.size


def _map_from_images(source, target, images) -> GroupMap:
    matrix = tuple(tuple(int(images[i][j]) for i in range(source.rank)) for j in range(target.rank))
    return GroupMap(source, target, matrix)


# --------------------------------------------------------------------------
# Subgroups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    parent: FiniteAbelianGroup
    members: frozenset
    generators: tuple[Element, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=np.bool_)
        for x in self.members:
            m[self.parent.index(x)] = True
        return m

    def is_trivial(self) -> bool:
        return self.order == 1


def _closure(g: FiniteAbelianGroup, start: Iterable[Element], gens: Sequence[Element]) -> set:
    members = set(start)
    frontier = list(members)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.add(x, s)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


def subgroup_generated(g: FiniteAbelianGroup, gens: Sequence[Element]) -> Subgroup:
    gens = tuple(g.reduce(x) for x in gens)
    members = _closure(g, [g.identity], gens)
    return Subgroup(g, frozenset(members), gens)


def subgroup_from_mask(g: FiniteAbelianGroup, mask: np.ndarray) -> Subgroup:
    """Subgroup with the given member mask; picks a small generating set greedily."""
    idx = np.flatnonzero(mask)
    candidates = sorted((g.element(int(i)) for i in idx), key=lambda x: (-g.element_order(x), x))
    members = {g.identity}
    gens = []
    for x in candidates:
        if x not in members:
            gens.append(x)
            members = _closure(g, members, gens)
    if len(members) != idx.size:
        raise ValueError("mask is not closed under addition")
    return Subgroup(g, frozenset(members), tuple(gens))


def whole_group(g: FiniteAbelianGroup) -> Subgroup:
    gens = tuple(g.element(int(i)) for i in g.generator_indices)
    return Subgroup(g, frozenset(g.elements()), gens)


def trivial_subgroup(g: FiniteAbelianGroup) -> Subgroup:
    return Subgroup(g, frozenset([g.identity]), ())


def _kernel_basis(m):
    """Generating set (columns) of the integer kernel of ``m`` (rows x cols)."""
    cols = len(m[0]) if m else 0
    if not m:
        return [[int(i == j) for i in range(cols)] for j in range(cols)]
    _, d, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(len(d), cols)) if d[i][i] != 0)
    return [[v[i][j] for i in range(cols)] for j in range(rank, cols)]


def quotient(g: FiniteAbelianGroup, h: Subgroup) -> tuple[FiniteAbelianGroup, GroupMap]:
    """``g / h`` in invariant-factor form together with the projection."""
    r = g.rank
    gens = list(h.generators) or [g.identity]
    rel = [[g.orders[i] if i == j else 0 for j in range(r)] + [x[i] for x in gens] for i in range(r)]
    u, d, _ = smith_normal_form(rel)
    keep = [i for i in range(r) if d[i][i] != 1]
    q = FiniteAbelianGroup(tuple(d[i][i] for i in keep))
    matrix = tuple(tuple(u[i][j] % d[i][i] for j in range(r)) for i in keep)
    return q, GroupMap(g, q, matrix)


def subgroup_as_group(h: Subgroup) -> tuple[FiniteAbelianGroup, GroupMap]:
    """Invariant-factor presentation of ``h`` with an injective map into its parent."""
    g = h.parent
    gens = [x for x in h.generators if any(x)]
    k, r = len(gens), g.rank
    if k == 0:
        return FiniteAbelianGroup(()), GroupMap(FiniteAbelianGroup(()), g, tuple(() for _ in range(r)))
    big = [[x[i] for x in gens] + [g.orders[i] if i == j else 0 for j in range(r)] for i in range(r)]
    relations = [col[:k] for col in _kernel_basis(big)]
    rel = [[col[i] for col in relations] for i in range(k)]
    u, d, _ = smith_normal_form(rel)
    uinv = _unimodular_inverse(u)
    keep = [i for i in range(k) if i >= len(d[0]) or d[i][i] != 1]
    orders = []
    for i in keep:
        di = d[i][i] if i < len(d[0]) else 0
        if di == 0:
            raise ArithmeticError("subgroup of a finite group presented as infinite")
        orders.append(di)
    p = FiniteAbelianGroup(tuple(orders))
    columns = []
    for i in keep:
        columns.append(g.reduce(sum(uinv[j][i] * gens[j][t] for j in range(k)) for t in range(r)))
    emb = _map_from_images(p, g, columns)
    if p.order != h.order:
        raise ArithmeticError("subgroup presentation has the wrong order")
    return p, emb


# --------------------------------------------------------------------------
# Isomorphism enumeration
# --------------------------------------------------------------------------

def _search(a, b, candidates, accept: Callable[[np.ndarray], bool],
            partial_ok: Callable[[int, list], bool] | None = None) -> Iterator[GroupMap]:
    """Backtracking over generator images drawn from ``candidates``."""
    ra = a.rank
    chosen: list = []

    def rec(depth):
        if depth == ra:
            images = np.array(chosen, dtype=np.int64).reshape(ra, b.rank)
            if accept(images):
                yield _map_from_images(a, b, chosen)
            return
        for y in candidates[depth]:
            chosen.append(y)
            if partial_ok is None or partial_ok(depth, chosen):
                yield from rec(depth + 1)
            chosen.pop()

    yield from rec(0)


def isomorphisms(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> Iterator[GroupMap]:
    """Lazily enumerate all group isomorphisms ``a -> b``."""
    if a.order != b.order or a.invariant_factors != b.invariant_factors:
        return iter(())
    by_order: dict[int, list] = {}
    for y in b.elements():
        by_order.setdefault(b.element_order(y), []).append(y)
    candidates = [by_order.get(n, []) for n in a.orders]

    def accept(images):
        idx = kernels.map_images(a.coords, images, b.orders_array, b.strides)
        return np.unique(idx).size == idx.size

    return _search(a, b, candidates, accept)
