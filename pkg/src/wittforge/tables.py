"""Line-oriented tables of conformal embeddings, cosets and Witt relations.

Embedding line::

    su(m):n x su(n):m <= su(m*n):1 | m=2..20, n=2..20

Coset line::

    Vir:m=n = (A1:1 x A1:n) / (A1:n+1) | n=1..30

Relation line::

    item5 | A1:6^2 * A1:2^-3

Ranks, matrix sizes and levels may be integer expressions in the parameters
(``+ - * /`` and parentheses; ``/`` must divide exactly). A parameter bound
may refer to earlier parameters (``i=3..n-3``). ``## section: NAME`` starts a
section; ``#`` starts a comment.

Per instantiation, a term with a parameter-dependent rank or level that falls
outside its family (``D(2*n)`` at n=1, level 0, inexact division) removes the
instantiation from the run. A fixed symbol with no simple Lie algebra behind
it (``D1``, ``so(2)``) is reported as SKIPPED, never guessed.
"""
from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator

from .affine import (
    LevelledAlgebra,
    central_charge,
    is_valid_type,
    parse_relation,
    relation_charge,
    resolve_alias,
    virasoro_charge,
)
from .errors import ParseError, UnsupportedSymbolError, WittForgeError
from .report import VerificationReport

DATA_FILES = {
    "embeddings": "conformal_embeddings.txt",
    "cosets": "cosets.txt",
    "relations": "sl2_relations.txt",
}


def data_path(name: str) -> Path:
    return Path(str(resources.files("wittforge") / "data" / name))


# --------------------------------------------------------------------------
# Integer expressions
# --------------------------------------------------------------------------

class NonIntegral(ValueError):
    pass


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


@dataclass(frozen=True)
class IntExpr:
    text: str
    tree: ast.AST = field(compare=False, repr=False)
    names: frozenset = frozenset()

    @classmethod
    def parse(cls, text: str, where=None) -> IntExpr:
        try:
            tree = ast.parse(text.strip(), mode="eval").body
        except SyntaxError:
            raise ParseError(f"bad integer expression {text!r}", where) from None
        names = set()
        for node in ast.walk(tree):
            if isinstance(node, ast.Name):
                names.add(node.id)
            elif isinstance(node, ast.BinOp):
                if not isinstance(node.op, _ALLOWED_BINOPS):
                    raise ParseError(f"operator not allowed in {text!r}", where)
            elif isinstance(node, ast.UnaryOp):
                if not isinstance(node.op, (ast.USub, ast.UAdd)):
                    raise ParseError(f"operator not allowed in {text!r}", where)
            elif isinstance(node, ast.Constant):
                if not isinstance(node.value, int) or isinstance(node.value, bool):
                    raise ParseError(f"only integer literals allowed in {text!r}", where)
            elif not isinstance(node, (ast.Load, ast.operator, ast.unaryop)):
                raise ParseError(f"unsupported syntax in {text!r}", where)
        return cls(text.strip(), tree, frozenset(names))

    @property
    def parametric(self) -> bool:
        return bool(self.names)

    def __call__(self, env: dict) -> int:
        value = self._eval(self.tree, env)
        if value.denominator != 1:
            raise NonIntegral(f"{self.text} = {value} at {env}")
        return int(value)

    def _eval(self, node, env) -> Fraction:
        if isinstance(node, ast.Constant):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ParseError(f"unbound parameter {node.id!r} in {self.text!r}")
            return Fraction(env[node.id])
        if isinstance(node, ast.UnaryOp):
            v = self._eval(node.operand, env)
            return -v if isinstance(node.op, ast.USub) else v
        a, b = self._eval(node.left, env), self._eval(node.right, env)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if b == 0:
            raise NonIntegral(f"division by zero in {self.text}")
        return a / b


# --------------------------------------------------------------------------
# Term templates
# --------------------------------------------------------------------------

_DYNKIN_CONST = re.compile(r"^([A-G])(\d+)$")
_DYNKIN_EXPR = re.compile(r"^([A-G])\((.+)\)$")
_MATRIX = re.compile(r"^(su|sl|so|sp)\((.+)\)$")


class OutOfDomain(Exception):
    """Instantiation leaves the family's domain; dropped from the run."""


@dataclass(frozen=True)
class TermTemplate:
    head: str
    arg: IntExpr
    level: IntExpr
    text: str

    @classmethod
    def parse(cls, text: str, where=None) -> TermTemplate:
        s = text.strip()
        name, sep, level = s.rpartition(":")
        if not sep or not name:
            raise ParseError(f"expected <algebra>:<level>, got {text!r}", where)
        name = name.replace(" ", "")
        lvl = IntExpr.parse(level, where)
        if name in ("u1", "u(1)"):
            return cls("u1", IntExpr.parse("1"), lvl, s)
        for pattern in (_DYNKIN_CONST, _DYNKIN_EXPR, _MATRIX):
            m = pattern.match(name)
            if m:
                return cls(m.group(1), IntExpr.parse(m.group(2), where), lvl, s)
        raise ParseError(f"unrecognised algebra symbol {name!r}", where)

    def instantiate(self, env: dict) -> LevelledAlgebra:
        try:
            arg = self.arg(env)
            level = self.level(env)
        except NonIntegral as exc:
            if self.arg.parametric or self.level.parametric:
                raise OutOfDomain(str(exc)) from None
            raise
        if level < 1 and self.head != "u1":
            if self.level.parametric:
                raise OutOfDomain(f"level {level} in {self.text}")
            raise ParseError(f"non-positive level in {self.text}")
        if self.head in "ABCDEFG" and self.arg.parametric and not is_valid_type(self.head, arg):
            raise OutOfDomain(f"{self.head}{arg} outside its family")
        if self.head in ("su", "sl") and self.arg.parametric and arg < 2:
            raise OutOfDomain(f"{self.head}({arg}) is trivial")
        if self.head == "sp" and self.arg.parametric and (arg < 2 or arg % 2):
            raise OutOfDomain(f"sp({arg}) outside its family")
        return LevelledAlgebra(self.head, arg, level)


def _product(text: str, where) -> list[TermTemplate]:
    parts = re.split(r"\s+x\s+", text.strip())
    if not parts or not all(p.strip() for p in parts):
        raise ParseError(f"empty product {text!r}", where)
    return [TermTemplate.parse(p, where) for p in parts]


def _parse_ranges(text: str, where) -> list[tuple[str, IntExpr, IntExpr]]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        m = re.fullmatch(r"([a-z]\w*)\s*=\s*(.+?)\s*\.\.\s*(.+)", item)
        if not m:
            raise ParseError(f"expected name=lo..hi, got {item!r}", where)
        out.append((m.group(1), IntExpr.parse(m.group(2), where), IntExpr.parse(m.group(3), where)))
    return out


def _instantiations(params, clamp=None) -> Iterator[dict]:
    def rec(i, env):
        if i == len(params):
            yield dict(env)
            return
        name, lo_e, hi_e = params[i]
        lo, hi = lo_e(env), hi_e(env)
        if clamp is not None:
            lo, hi = max(lo, clamp[0]), min(hi, clamp[1])
        for v in range(lo, hi + 1):
            env[name] = v
            yield from rec(i + 1, env)
        env.pop(name, None)

    yield from rec(0, {})


# --------------------------------------------------------------------------
# Entries
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingEntry:
    parts: tuple[TermTemplate, ...]
    target: tuple[TermTemplate, ...]
    params: tuple = ()
    source: str = "<inline>"
    line: int = 0
    section: str = ""
    text: str = ""


@dataclass(frozen=True)
class CosetEntry:
    virasoro: IntExpr
    numerator: tuple[TermTemplate, ...]
    denominator: tuple[TermTemplate, ...]
    params: tuple = ()
    source: str = "<inline>"
    line: int = 0
    section: str = ""
    text: str = ""


@dataclass(frozen=True)
class RelationEntry:
    name: str
    relation: str
    conjectural: bool = False
    source: str = "<inline>"
    line: int = 0
    section: str = ""


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_embedding_line(line: str, source="<inline>", lineno=0, section="") -> EmbeddingEntry:
    where = f"{source}:{lineno}" if lineno else source
    body, _, ranges = line.partition("|")
    lhs, sep, rhs = body.partition("<=")
    if not sep:
        raise ParseError(f"expected '<parts> <= <target>', got {line!r}", where)
    return EmbeddingEntry(tuple(_product(lhs, where)), tuple(_product(rhs, where)),
                          tuple(_parse_ranges(ranges, where)), source, lineno, section, line.strip())


_COSET = re.compile(r"^Vir:m=(?P<m>[^=]+?)\s*=\s*\((?P<num>.+)\)\s*/\s*\((?P<den>.+)\)$")


def parse_coset_line(line: str, source="<inline>", lineno=0, section="") -> CosetEntry:
    where = f"{source}:{lineno}" if lineno else source
    body, _, ranges = line.partition("|")
    m = _COSET.match(body.strip())
    if not m:
        raise ParseError(f"expected 'Vir:m=M = (num) / (den)', got {line!r}", where)
    return CosetEntry(IntExpr.parse(m.group("m"), where), tuple(_product(m.group("num"), where)),
                      tuple(_product(m.group("den"), where)), tuple(_parse_ranges(ranges, where)),
                      source, lineno, section, line.strip())


def parse_relation_line(line: str, source="<inline>", lineno=0, section="") -> RelationEntry:
    where = f"{source}:{lineno}" if lineno else source
    fields = [f.strip() for f in line.split("|")]
    if len(fields) not in (2, 3) or not fields[0]:
        raise ParseError(f"expected 'name | relation [| conjectural]', got {line!r}", where)
    conj = len(fields) == 3 and fields[2] == "conjectural"
    if len(fields) == 3 and not conj:
        raise ParseError(f"unknown flag {fields[2]!r}", where)
    parse_relation(fields[1])
    return RelationEntry(fields[0], fields[1], conj, source, lineno, section)


_PARSERS = {
    "embeddings": parse_embedding_line,
    "cosets": parse_coset_line,
    "relations": parse_relation_line,
}


def load_table(path, kind: str) -> list:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    parser = _PARSERS[kind]
    section = ""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        m = re.match(r"^##\s*section:\s*(.+)$", stripped)
        if m:
            section = m.group(1).strip()
            continue
        line = _strip_comment(raw)
        if line:
            entries.append(parser(line, path.name, lineno, section))
    return entries


# --------------------------------------------------------------------------
# Verification
# --------------------------------------------------------------------------

def _charge_sum(terms: list[LevelledAlgebra]) -> Fraction:
    return sum((central_charge(t) for t in terms), Fraction(0))


def _fmt_params(env: dict) -> str:
    return "[" + ",".join(f"{k}={v}" for k, v in env.items()) + "]" if env else ""


def _u1_reading(terms: list[LevelledAlgebra]) -> Fraction:
    total = Fraction(0)
    for t in terms:
        if t.head == "D" and t.arg == 1:
            total += 1
        else:
            total += central_charge(t)
    return total


def _instantiate(templates, env):
    return [t.instantiate(env) for t in templates]


def _unsupported(terms) -> str | None:
    for t in terms:
        try:
            resolve_alias(t)
        except UnsupportedSymbolError as exc:
            return str(exc)
    return None


def verify_embedding(e: EmbeddingEntry, param_range=None) -> VerificationReport:
    """Exact central-charge equality for every instantiation of the entry."""
    report = VerificationReport()
    dropped = 0
    for env in _instantiations(e.params, param_range):
        sid = f"{e.source}:{e.line}{_fmt_params(env)}"
        key = (e.source, e.line, tuple(env.values()))
        try:
            parts = _instantiate(e.parts, env)
            target = _instantiate(e.target, env)
        except OutOfDomain:
            dropped += 1
            continue
        except WittForgeError as exc:
            report.add(sid, "ERROR", str(exc), key)
            continue
        text = " x ".join(map(str, parts)) + " <= " + " x ".join(map(str, target))
        reason = _unsupported(parts + target)
        if reason:
            detail = f"{text}: {reason}"
            if any(t.head == "D" and t.arg == 1 for t in parts + target) and _unsupported(
                    [t for t in parts + target if not (t.head == "D" and t.arg == 1)]) is None:
                lhs, rhs = _u1_reading(parts), _u1_reading(target)
                detail += f" (informational, reading D1 as u(1): {lhs} {'=' if lhs == rhs else '!='} {rhs})"
            report.add(sid, "SKIPPED", detail, key)
            continue
        lhs, rhs = _charge_sum(parts), _charge_sum(target)
        if lhs == rhs:
            report.add(sid, "OK", f"{text}: c = {lhs}", key)
        else:
            report.add(sid, "FAIL", f"{text}: c(parts) = {lhs} != c(target) = {rhs}", key)
    if dropped:
        report.notes.append(f"{e.source}:{e.line}: {dropped} instantiation(s) outside the family domain")
    return report


def verify_coset(e: CosetEntry, param_range=None) -> VerificationReport:
    """``c(num) - c(den) = c_m`` exactly, with ``0 < c < 1``."""
    report = VerificationReport()
    dropped = 0
    for env in _instantiations(e.params, param_range):
        sid = f"{e.source}:{e.line}{_fmt_params(env)}"
        key = (e.source, e.line, tuple(env.values()))
        try:
            num = _instantiate(e.numerator, env)
            den = _instantiate(e.denominator, env)
            m = e.virasoro(env)
        except (OutOfDomain, NonIntegral):
            dropped += 1
            continue
        except WittForgeError as exc:
            report.add(sid, "ERROR", str(exc), key)
            continue
        if m < 1:
            if e.virasoro.parametric:
                dropped += 1
                continue
            report.add(sid, "ERROR", f"Virasoro index {m} < 1", key)
            continue
        text = f"Vir:m={m} = ({' x '.join(map(str, num))}) / ({' x '.join(map(str, den))})"
        reason = _unsupported(num + den)
        if reason:
            report.add(sid, "SKIPPED", f"{text}: {reason}", key)
            continue
        diff = _charge_sum(num) - _charge_sum(den)
        cm = virasoro_charge(m)
        if diff == cm and 0 < diff < 1:
            report.add(sid, "OK", f"{text}: c = {diff}", key)
        else:
            report.add(sid, "FAIL", f"{text}: c(num) - c(den) = {diff}, c_{m} = {cm}", key)
    if dropped:
        report.notes.append(f"{e.source}:{e.line}: {dropped} instantiation(s) outside the family domain")
    return report


def verify_relation(e: RelationEntry) -> VerificationReport:
    report = VerificationReport()
    sid = f"{e.source}:{e.line}[{e.name}]"
    key = (e.source, e.line, ())
    try:
        c = relation_charge(parse_relation(e.relation))
    except WittForgeError as exc:
        report.add(sid, "ERROR", str(exc), key)
        return report
    tag = " (conjectural)" if e.conjectural else ""
    if c.is_zero():
        report.add(sid, "OK", f"{e.relation}: charge 0 mod 8{tag}", key)
    else:
        report.add(sid, "FAIL", f"{e.relation}: charge {c} mod 8, expected 0{tag}", key)
    return report


_VERIFIERS = {
    "embeddings": lambda e, r: verify_embedding(e, r),
    "cosets": lambda e, r: verify_coset(e, r),
    "relations": lambda e, r: verify_relation(e),
}


def verify_file(path, kind: str, param_range=None) -> VerificationReport:
    report = VerificationReport(title=f"{kind}: {Path(path).name}")
    for entry in load_table(path, kind):
        report.extend(_VERIFIERS[kind](entry, param_range))
    return report


def verify_all(param_range=None) -> VerificationReport:
    report = VerificationReport(title="all shipped tables")
    for kind, name in DATA_FILES.items():
        report.extend(verify_file(data_path(name), kind, param_range))
    return report
