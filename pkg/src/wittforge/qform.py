"""Pre-metric groups: finite abelian groups with a quadratic form into Q/Z.

Values are stored additively: ``q(x) = t`` here stands for the root of unity
``exp(2 pi i t)``. Internally a form is an int64 table of numerators over one
common denominator, indexed like ``FiniteAbelianGroup.coords``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .abelian import (
    Element,
    FiniteAbelianGroup,
    GroupMap,
    Subgroup,
    _map_from_images,
    _search,
    quotient,
    subgroup_as_group,
    subgroup_from_mask,
    subgroup_generated,
    whole_group,
)
from .errors import ArgumentError, NotAQuadraticFormError, PreconditionError

QmodZ = Fraction


def qmodz(value) -> Fraction:
    """Canonical residue of ``value`` in [0, 1) as an exact fraction."""
    if isinstance(value, str):
        value = Fraction(value.strip())
    return Fraction(value) % 1


def _lcm_den(values) -> int:
    return math.lcm(1, *(v.denominator for v in values))


@dataclass(frozen=True, eq=False)
class PreMetricGroup:
    group: FiniteAbelianGroup
    qnum: np.ndarray
    den: int

    def __post_init__(self):
        arr = np.asarray(self.qnum, dtype=np.int64) % self.den
        arr.setflags(write=False)
        object.__setattr__(self, "qnum", arr)

    @property
    def order(self) -> int:
        return self.group.order

    def q(self, x: Element) -> Fraction:
        return Fraction(int(self.qnum[self.group.index(x)]), self.den)

    def table(self) -> dict:
        """The full value table; for C(A, q) this is also the ribbon twist."""
        return {self.group.element(i): Fraction(int(v), self.den) for i, v in enumerate(self.qnum)}

    def with_den(self, den: int) -> np.ndarray:
        if den % self.den:
            raise ValueError(f"{den} is not a multiple of {self.den}")
        return self.qnum * (den // self.den)

    @cached_property
    def generator_values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(self.qnum[i]), self.den) for i in self.group.strides)

    def describe(self) -> str:
        g = self.group
        if g.order == 1:
            return "trivial"
        parts = [f"Z/{n}" for n in g.orders]
        qs = ",".join(str(v) for v in self.generator_values)
        offs = []
        for i in range(g.rank):
            for j in range(i + 1, g.rank):
                ei = tuple(int(k == i) for k in range(g.rank))
                ej = tuple(int(k == j) for k in range(g.rank))
                bij = bilinear(self, ei, ej)
                if bij:
                    offs.append(f"b{i + 1},{j + 1}={bij}")
        text = f"{' + '.join(parts)} q={qs}"
        return text + (" " + " ".join(offs) if offs else "")

    def __repr__(self):
        return f"PreMetricGroup({self.describe()})"


def _validated(g: FiniteAbelianGroup, qnum: np.ndarray, den: int) -> PreMetricGroup:
    pm = PreMetricGroup(g, qnum, den)
    code, x, y, z = (int(v) for v in kernels.check_quadratic(
        g.coords, g.orders_array, g.strides, pm.qnum, den, g.generator_indices))
    if code == 1:
        raise NotAQuadraticFormError(f"q(0) = {pm.q(g.identity)} is not 0", witness=(g.identity,))
    if code == 2:
        ex = g.element(x)
        raise NotAQuadraticFormError(
            f"q(-x) != q(x) at x={ex}: q(x)={pm.q(ex)}, q(-x)={pm.q(g.neg(ex))}", witness=(ex,))
    if code == 3:
        ex, ey, ez = g.element(x), g.element(y), g.element(z)
        raise NotAQuadraticFormError(
            f"b is not bilinear at (x, y, z) = ({ex}, {ey}, {ez}): "
            f"b(x+y,z)={bilinear(pm, g.add(ex, ey), ez)} but "
            f"b(x,z)+b(y,z)={(bilinear(pm, ex, ez) + bilinear(pm, ey, ez)) % 1}",
            witness=(ex, ey, ez),
        )
    return pm


def from_table(g: FiniteAbelianGroup, q: Mapping | Callable) -> PreMetricGroup:
    """Build and validate a pre-metric group from a full value table."""
    values = []
    for x in g.elements():
        try:
            v = q(x) if callable(q) else q[x]
        except KeyError:
            raise ArgumentError(f"quadratic form table has no value for {x}") from None
        values.append(qmodz(v))
    den = _lcm_den(values)
    qnum = np.array([v.numerator * (den // v.denominator) for v in values], dtype=np.int64)
    return _validated(g, qnum, den)


def from_gram(g: FiniteAbelianGroup, qdiag: Sequence, boff: Mapping | None = None) -> PreMetricGroup:
    """Expand generator data into a full table, then validate it.

    ``qdiag[i]`` is q of the i-th standard generator, ``boff[(i, j)]`` (0-based,
    i < j) the bilinear pairing of generators i and j.
    """
    if len(qdiag) != g.rank:
        raise ArgumentError(f"need {g.rank} diagonal values, got {len(qdiag)}")
    diag = [qmodz(v) for v in qdiag]
    offs = {}
    for (i, j), v in (boff or {}).items():
        if not (0 <= i < g.rank and 0 <= j < g.rank) or i == j:
            raise ArgumentError(f"invalid off-diagonal index ({i}, {j})")
        key = (min(i, j), max(i, j))
        offs[key] = qmodz(v)
    den = _lcm_den(diag + list(offs.values()))
    c = g.coords.astype(np.int64)
    qnum = np.zeros(g.order, dtype=np.int64)
    for i, v in enumerate(diag):
        qnum += c[:, i] * c[:, i] * (v.numerator * (den // v.denominator))
        qnum %= den
    for (i, j), v in offs.items():
        qnum += c[:, i] * c[:, j] * (v.numerator * (den // v.denominator))
        qnum %= den
    return _validated(g, qnum, den)


def normalized(pm: PreMetricGroup) -> PreMetricGroup:
    """Same form over the smallest common denominator."""
    d = math.gcd(pm.den, *(int(v) for v in np.unique(pm.qnum)))
    if d <= 1:
        return pm
    return PreMetricGroup(pm.group, pm.qnum // d, pm.den // d)


def zero_form(g: FiniteAbelianGroup) -> PreMetricGroup:
    return PreMetricGroup(g, np.zeros(g.order, dtype=np.int64), 1)


def trivial() -> PreMetricGroup:
    return zero_form(FiniteAbelianGroup(()))


def cyclic(n: int, value) -> PreMetricGroup:
    """``Z/n`` with ``q(l) = value * l^2``."""
    return from_gram(FiniteAbelianGroup((n,)), [value])


def bilinear(pm: PreMetricGroup, x: Element, y: Element) -> Fraction:
    g = pm.group
    return (pm.q(g.add(x, y)) - pm.q(x) - pm.q(y)) % 1


def _orth_mask(pm: PreMetricGroup, gen_idx) -> np.ndarray:
    g = pm.group
    gen_idx = np.asarray(gen_idx, dtype=np.int64)
    if gen_idx.size == 0:
        return np.ones(g.order, dtype=np.bool_)
    return kernels.orth_mask(g.coords, g.orders_array, g.strides, pm.qnum, pm.den, gen_idx)


def radical(pm: PreMetricGroup) -> Subgroup:
    return subgroup_from_mask(pm.group, _orth_mask(pm, pm.group.generator_indices))


def is_nondegenerate(pm: PreMetricGroup) -> bool:
    return int(_orth_mask(pm, pm.group.generator_indices).sum()) == 1


def is_anisotropic(pm: PreMetricGroup) -> bool:
    return not np.any(pm.qnum[1:] == 0)


def isotropic_elements(pm: PreMetricGroup) -> np.ndarray:
    """Indices of non-zero elements with q = 0, in lexicographic order."""
    return np.flatnonzero(pm.qnum == 0)[1:] if pm.qnum.size else np.zeros(0, dtype=np.int64)


def orthogonal_complement(pm: PreMetricGroup, h: Subgroup) -> Subgroup:
    g = pm.group
    idx = [g.index(x) for x in h.generators] or [g.index(x) for x in h.members]
    return subgroup_from_mask(g, _orth_mask(pm, idx))


def is_isotropic(pm: PreMetricGroup, h: Subgroup) -> bool:
    return all(pm.qnum[pm.group.index(x)] == 0 for x in h.members)


def _require_nondegenerate(pm: PreMetricGroup, what: str):
    if not is_nondegenerate(pm):
        raise PreconditionError(f"{what} needs a non-degenerate form; {pm.describe()} is degenerate")


def m_subquotient(pm: PreMetricGroup, h: Subgroup) -> PreMetricGroup:
    """The metric group ``H^perp / H`` with the induced form."""
    _require_nondegenerate(pm, "m_subquotient")
    if not is_isotropic(pm, h):
        raise PreconditionError("subgroup is not isotropic")
    g = pm.group
    perp = orthogonal_complement(pm, h)
    p, emb = subgroup_as_group(perp)
    in_parent = emb.index_map()
    q_p = pm.qnum[in_parent]
    back = {int(t): s for s, t in enumerate(in_parent)}
    h_in_p = subgroup_generated(p, [p.element(back[g.index(x)]) for x in h.generators])
    quo, proj = quotient(p, h_in_p)
    pidx = proj.index_map()
    q_t = np.full(quo.order, -1, dtype=np.int64)
    q_t[pidx] = q_p
    if not np.array_equal(q_t[pidx], q_p):
        raise PreconditionError("induced form is not constant on cosets")
    return PreMetricGroup(quo, q_t, pm.den)


def direct_sum(pm1: PreMetricGroup, pm2: PreMetricGroup) -> PreMetricGroup:
    g = FiniteAbelianGroup(pm1.group.orders + pm2.group.orders)
    den = math.lcm(pm1.den, pm2.den)
    q = (pm1.with_den(den)[:, None] + pm2.with_den(den)[None, :]).reshape(-1)
    return PreMetricGroup(g, q, den)


def direct_sum_all(forms: Sequence[PreMetricGroup]) -> PreMetricGroup:
    out = trivial()
    for f in forms:
        out = direct_sum(out, f)
    return out


def reverse(pm: PreMetricGroup) -> PreMetricGroup:
    return PreMetricGroup(pm.group, -pm.qnum, pm.den)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sylow_embedding(g: FiniteAbelianGroup, p: int) -> GroupMap:
    """Natural embedding of the Sylow p-subgroup, one cyclic factor per p-part."""
    parts, images = [], []
    for i, n in enumerate(g.orders):
        pk = 1
        while n % (pk * p) == 0:
            pk *= p
        if pk > 1:
            parts.append(pk)
            images.append(tuple(n // pk if t == i else 0 for t in range(g.rank)))
    sub = FiniteAbelianGroup(tuple(parts))
    return _map_from_images(sub, g, images)


def prime_part(pm: PreMetricGroup, p: int) -> PreMetricGroup:
    if not _is_prime(p):
        raise ArgumentError(f"{p} is not prime")
    _require_nondegenerate(pm, "prime_part")
    emb = sylow_embedding(pm.group, p)
    return PreMetricGroup(emb.source, pm.qnum[emb.index_map()], pm.den)


def _value_signature(pm: PreMetricGroup, den: int) -> np.ndarray:
    return np.sort(pm.with_den(den))


def find_isometry(pm1: PreMetricGroup, pm2: PreMetricGroup) -> GroupMap | None:
    """An isomorphism carrying q1 to q2, or None."""
    a, b = pm1.group, pm2.group
    if a.order != b.order or a.invariant_factors != b.invariant_factors:
        return None
    den = math.lcm(pm1.den, pm2.den)
    qa, qb = pm1.with_den(den), pm2.with_den(den)
    if not np.array_equal(np.sort(qa), np.sort(qb)):
        return None
    if a.order == 1:
        return _map_from_images(a, b, [b.identity] * a.rank)
    ordb = np.array([b.element_order(b.element(i)) for i in range(b.order)])
    gens_a = [a.element(int(s)) for s in a.strides]
    candidates = []
    for i, n in enumerate(a.orders):
        want = qa[a.strides[i]]
        idx = np.flatnonzero((ordb == n) & (qb == want))
        candidates.append([b.element(int(j)) for j in idx])

    def b_val(pm_qnum, grp, x, y):
        return (pm_qnum[grp.index(grp.add(x, y))] - pm_qnum[grp.index(x)] - pm_qnum[grp.index(y)]) % den

    pair_a = {(i, j): b_val(qa, a, gens_a[i], gens_a[j]) for i in range(a.rank) for j in range(i)}

    def partial_ok(depth, chosen):
        y = chosen[depth]
        return all(b_val(qb, b, y, chosen[j]) == pair_a[(depth, j)] for j in range(depth))

    def accept(images):
        return bool(kernels.is_isometry(a.coords, images, b.orders_array, b.strides, qa, qb))

    return next(_search(a, b, candidates, accept, partial_ok), None)


def isometric(pm1: PreMetricGroup, pm2: PreMetricGroup) -> bool:
    return find_isometry(pm1, pm2) is not None


def isotropic_subgroups(pm: PreMetricGroup) -> Iterator[Subgroup]:
    """Every isotropic subgroup (exhaustive; intended for small groups)."""
    g = pm.group
    iso = [g.element(int(i)) for i in isotropic_elements(pm)]
    seen = set()
    start = subgroup_generated(g, [])
    stack = [start]
    seen.add(start.members)
    while stack:
        h = stack.pop()
        yield h
        for x in iso:
            if x in h.members:
                continue
            cand = subgroup_generated(g, list(h.generators) + [x])
            if cand.members in seen or not is_isotropic(pm, cand):
                continue
            seen.add(cand.members)
            stack.append(cand)


__all__ = [
    "QmodZ",
    "qmodz",
    "PreMetricGroup",
    "from_table",
    "from_gram",
    "normalized",
    "zero_form",
    "trivial",
    "cyclic",
    "bilinear",
    "radical",
    "is_nondegenerate",
    "is_anisotropic",
    "isotropic_elements",
    "orthogonal_complement",
    "is_isotropic",
    "m_subquotient",
    "direct_sum",
    "direct_sum_all",
    "reverse",
    "prime_factors",
    "prime_part",
    "find_isometry",
    "isometric",
    "isotropic_subgroups",
    "whole_group",
]
