"""Text formats for metric groups and fusion rings.

Inline metric group: ``ORDERS:QDIAG[;i,j=FRAC...]`` with 1-based generator
indices, e.g. ``2:1/4`` or ``2,2:0,0;1,2=1/2``.

Metric group file (one directive per line, ``#`` comments)::

    group 2,2
    q 0,0
    b 1,2=1/2

or a full table instead of ``q``/``b``::

    group 4
    table 0=0 1=1/8 2=1/2 3=1/8

Ring file::

    labels 1 s e        # first label is the unit
    dual s=s            # optional, default self-dual
    s x s = 1 + e
    e x s = s           # a x b missing -> taken from b x a
    e x e = 1
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .abelian import FiniteAbelianGroup
from .errors import ParseError
from .qform import PreMetricGroup, from_gram, from_table


def parse_fraction(text: str, where=None) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact fraction: {text!r}", where) from None


def parse_int_list(text: str, where=None) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", where) from None


def parse_orders(text: str, where=None) -> FiniteAbelianGroup:
    orders = parse_int_list(text, where)
    if not orders:
        raise ParseError("empty group specification", where)
    return FiniteAbelianGroup(tuple(orders))


def parse_boff(items, where=None) -> dict:
    """``["1,2=1/2", ...]`` -> ``{(0, 1): Fraction(1, 2)}``."""
    out = {}
    for item in items:
        lhs, sep, rhs = item.partition("=")
        idx = parse_int_list(lhs, where)
        if not sep or len(idx) != 2:
            raise ParseError(f"expected i,j=fraction, got {item!r}", where)
        out[(idx[0] - 1, idx[1] - 1)] = parse_fraction(rhs, where)
    return out


def metric_from_args(group: str, q: str, b=None, where=None) -> PreMetricGroup:
    g = parse_orders(group, where)
    qs = [parse_fraction(t, where) for t in q.split(",")]
    return from_gram(g, qs, parse_boff(b or [], where))


def parse_group_spec(text: str) -> PreMetricGroup:
    head, *offs = text.split(";")
    orders, sep, q = head.partition(":")
    if not sep:
        raise ParseError(f"expected ORDERS:QDIAG, got {text!r}")
    return metric_from_args(orders, q, [o for o in offs if o.strip()], where=text)


def parse_metric_file(path) -> PreMetricGroup:
    path = Path(path)
    group = q = table = None
    offs = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{path}:{lineno}"
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            group = parse_orders(rest, where)
        elif key == "q":
            q = [parse_fraction(t, where) for t in rest.split(",")]
        elif key == "b":
            offs.extend(rest.split())
        elif key == "table":
            table = {}
            for item in rest.split():
                lhs, sep, rhs = item.partition("=")
                if not sep:
                    raise ParseError(f"expected element=value, got {item!r}", where)
                table[tuple(parse_int_list(lhs, where))] = parse_fraction(rhs, where)
        else:
            raise ParseError(f"unknown directive {key!r}", where)
    if group is None:
        raise ParseError("missing 'group' line", str(path))
    if table is not None:
        return from_table(group, table)
    if q is None:
        raise ParseError("need a 'q' or 'table' line", str(path))
    return from_gram(group, q, parse_boff(offs, str(path)))


def parse_ring_text(text: str, source="<ring>"):
    from .fusionring import FusionRing

    labels = None
    dual = {}
    products = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if line.startswith("labels"):
            labels = line.split()[1:]
            if not labels or len(set(labels)) != len(labels):
                raise ParseError("labels must be non-empty and distinct", where)
            continue
        if labels is None:
            raise ParseError("'labels' must come first", where)
        if line.startswith("dual"):
            for item in line.split()[1:]:
                a, sep, b = item.partition("=")
                if not sep or a not in labels or b not in labels:
                    raise ParseError(f"bad dual pair {item!r}", where)
                dual[a], dual[b] = b, a
            continue
        lhs, sep, rhs = line.partition("=")
        left = lhs.split(" x ")
        if not sep or len(left) != 2:
            raise ParseError(f"expected 'a x b = ...', got {line!r}", where)
        a, b = left[0].strip(), left[1].strip()
        for name in (a, b):
            if name not in labels:
                raise ParseError(f"unknown label {name!r}", where)
        coeffs = {}
        for term in rhs.split("+"):
            parts = term.split()
            if len(parts) == 1:
                mult, name = 1, parts[0]
            elif len(parts) == 2 and parts[0].isdigit():
                mult, name = int(parts[0]), parts[1]
            else:
                raise ParseError(f"bad term {term.strip()!r}", where)
            if name not in labels:
                raise ParseError(f"unknown label {name!r}", where)
            coeffs[name] = coeffs.get(name, 0) + mult
        products[(a, b)] = coeffs
    if labels is None:
        raise ParseError("missing 'labels' line", source)
    n = len(labels)
    pos = {name: i for i, name in enumerate(labels)}
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            if i == 0 or j == 0:
                table[i][j][j if i == 0 else i] = 1
                continue
            coeffs = products.get((a, b), products.get((b, a)))
            if coeffs is None:
                raise ParseError(f"missing product {a} x {b}", source)
            for name, mult in coeffs.items():
                table[i][j][pos[name]] = mult
    duals = [pos[dual.get(name, name)] for name in labels]
    return FusionRing(tuple(labels), table, duals)


def parse_ring_file(path):
    path = Path(path)
    return parse_ring_text(path.read_text(encoding="utf-8"), str(path))
