"""Plain-text instance files.

Grammar (blank lines and ``#`` comments are ignored)::

    H n         n+1 lines "a_1 ... a_n b"          rows of A x <= b
    V n         n+1 lines "x_1 ... x_n"            vertices
    CONE n      n lines "g_1 ... g_n"              one generator per line
    CONEIP n m  m lines "a_1 ... a_n b", then
                "APEX p_1 ... p_n" (rationals "p/q" allowed), then
                n generator lines
    OBJ c_1 ... c_n                                optional last line, any kind

Every generator line of CONE and CONEIP is a column of the generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import linalg as la
from .cone_ip import ConeIpInstance
from .cones import Cone, HSimplex, ShiftedCone, VSimplex
from .errors import InputError, ParseError

KINDS = ("H", "V", "CONE", "CONEIP")

Payload = Union[HSimplex, VSimplex, Cone, ConeIpInstance]


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    payload: Payload
    objective: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.objective is not None:
            object.__setattr__(self, "objective", tuple(int(x) for x in self.objective))


class _Line:
    def __init__(self, number: int, text: str):
        self.number = number
        self.tokens = []   # (column, token)
        col = 0
        for part in text.split(" "):
            if part:
                self.tokens.append((col + 1, part))
            col += len(part) + 1

    def error(self, msg, col=None):
        return ParseError(msg, self.number, col)


def _lines(text: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].replace("\t", " ").rstrip()
        if body.strip():
            out.append(_Line(i, body))
    return out


def _int(line: _Line, col: int, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise line.error(f"expected an integer, got {tok!r}", col) from None


def _rational(line: _Line, col: int, tok: str) -> Fraction:
    num, sep, den = tok.partition("/")
    try:
        if sep:
            d = int(den)
            if d == 0:
                raise line.error("zero denominator", col)
            return Fraction(int(num), d)
        return Fraction(int(num))
    except ValueError:
        raise line.error(f"expected a rational p/q, got {tok!r}", col) from None


def _row(line: _Line, count: int, rational=False, skip=0):
    toks = line.tokens[skip:]
    if len(toks) != count:
        col = toks[count][0] if len(toks) > count else None
        raise line.error(f"expected {count} numbers, found {len(toks)}", col)
    conv = _rational if rational else _int
    return [conv(line, c, t) for c, t in toks]


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def next(self, what: str) -> _Line:
        if self.pos >= len(self.lines):
            last = self.lines[-1].number if self.lines else 0
            raise ParseError(f"unexpected end of input, expected {what}", last + 1)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def peek_keyword(self) -> Optional[str]:
        if self.pos >= len(self.lines):
            return None
        return self.lines[self.pos].tokens[0][1].upper()


def _header(line: _Line):
    col, kind = line.tokens[0]
    kind = kind.upper()
    if kind not in KINDS:
        raise line.error(f"unknown instance kind {line.tokens[0][1]!r}; expected one of "
                         + ", ".join(KINDS), col)
    want = 3 if kind == "CONEIP" else 2
    if len(line.tokens) != want:
        raise line.error(f"header '{kind}' takes {want - 1} size argument(s)")
    sizes = [_int(line, c, t) for c, t in line.tokens[1:]]
    for (c, _), v in zip(line.tokens[1:], sizes):
        if v < 1:
            raise line.error("sizes must be positive", c)
    return kind, sizes


def parse(text: str) -> InstanceFile:
    r = _Reader(_lines(text))
    head = r.next("a header line")
    kind, sizes = _header(head)
    n = sizes[0]
    try:
        if kind == "H":
            rows = [_row(r.next("a constraint row"), n + 1) for _ in range(n + 1)]
            payload = HSimplex([row[:n] for row in rows], [row[n] for row in rows])
        elif kind == "V":
            pts = [_row(r.next("a vertex"), n) for _ in range(n + 1)]
            payload = VSimplex.from_points(pts)
        elif kind == "CONE":
            gens = [_row(r.next("a generator"), n) for _ in range(n)]
            payload = Cone(la.from_columns(gens))
        else:
            m = sizes[1]
            rows = [_row(r.next("a constraint row"), n + 1) for _ in range(m)]
            line = r.next("an APEX line")
            if line.tokens[0][1].upper() != "APEX":
                raise line.error("expected APEX", line.tokens[0][0])
            apex = _row(line, n, rational=True, skip=1)
            gens = [_row(r.next("a generator"), n) for _ in range(n)]
            payload = ShiftedCone(apex, Cone(la.from_columns(gens)))
    except ParseError:
        raise
    except InputError as e:
        raise ParseError(str(e), head.number) from None
    obj = None
    if r.peek_keyword() == "OBJ":
        obj = tuple(_row(r.next("OBJ"), n, skip=1))
    if r.pos < len(r.lines):
        extra = r.lines[r.pos]
        raise extra.error("unexpected trailing content", extra.tokens[0][0])
    if kind == "CONEIP":
        try:
            payload = ConeIpInstance([row[:n] for row in rows], [row[n] for row in rows],
                                     payload, obj)
        except InputError as e:
            raise ParseError(str(e), head.number) from None
    return InstanceFile(kind, payload, obj)


def fmt_number(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _join(v) -> str:
    return " ".join(fmt_number(x) for x in v)


def emit(inst: InstanceFile) -> str:
    p = inst.payload
    out = []
    if inst.kind == "H":
        out.append(f"H {p.n}")
        out += [_join(list(a) + [b]) for a, b in zip(p.A, p.b)]
    elif inst.kind == "V":
        out.append(f"V {p.n}")
        out += [_join(pt) for pt in p.points()]
    elif inst.kind == "CONE":
        out.append(f"CONE {p.dim}")
        out += [_join(g) for g in p.generators]
    elif inst.kind == "CONEIP":
        out.append(f"CONEIP {p.n} {len(p.A)}")
        out += [_join(list(a) + [b]) for a, b in zip(p.A, p.b)]
        out.append("APEX " + _join(p.shifted.apex))
        out += [_join(g) for g in p.shifted.cone.generators]
    else:
        raise InputError(f"unknown instance kind {inst.kind!r}")
    if inst.objective is not None:
        out.append("OBJ " + _join(inst.objective))
    return "\n".join(out) + "\n"


def wrap(obj, objective=None) -> InstanceFile:
    """InstanceFile around a domain object."""
    if isinstance(obj, HSimplex):
        return InstanceFile("H", obj, objective)
    if isinstance(obj, VSimplex):
        return InstanceFile("V", obj, objective)
    if isinstance(obj, Cone):
        return InstanceFile("CONE", obj, objective)
    if isinstance(obj, ConeIpInstance):
        return InstanceFile("CONEIP", obj, obj.c)
    raise InputError(f"cannot serialise {type(obj).__name__}")
