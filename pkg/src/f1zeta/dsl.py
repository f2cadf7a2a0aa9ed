"""A small text format for monoids and schemes.

Example::

    option saturation_cap = 4096
    monoid M { table [[0,1],[1,1]] identity 0 zero 1 names [1, a] }
    monoid P { gens a, b rels a^2 = a, a*b = 1 zero cap 100 }
    monoid B = split(free=1, cone=0, torsion=[2], zero=false)
    scheme X = projective(2)
    scheme Y { charts U = B, V = B; glue U.p{} ~ V.p{}; }

Points are written ``chart.p{...}``.  The listed items generate an ideal
of the chart, which must be prime.  Items of a split chart are ``t<j>`` and
``0``; items of a finite chart are element names, or element indices when
no element carries that name.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import DSLSyntaxError, IncompatibleGluing, SemanticError, SizeExceeded
from .monoid import (
    FiniteMonoid,
    MonoidChart,
    Presentation,
    SplitMonoid,
    saturate_with_generators,
    verify_monoid,
)
from .abelian import is_divisibility_chain
from .scheme import (
    F1Scheme,
    affine_space,
    d_scheme,
    glue,
    mu,
    point,
    proj_space,
    spec,
    torus,
)
from .spectrum import MAX_CONE_RANK, MAX_FINITE_SIZE, FinitePrime, SplitPrime, is_face

# -- lexer ---------------------------------------------------------------------------

KEYWORDS = {
    "monoid", "scheme", "option", "table", "identity", "zero", "names",
    "gens", "rels", "cap", "charts", "glue", "split", "true", "false",
}
PUNCT = set("{}[](),;=~.^*")
_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<string>\"[^\"\n]*\")|(?P<punct>.)")


@dataclass(frozen=True)
class Token:
    kind: str  # int, ident, string, punct, eof
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        col = m.start() - line_start + 1
        kind = m.lastgroup
        if kind == "punct":
            if m.group() not in PUNCT:
                raise DSLSyntaxError(f"unexpected character {m.group()!r}", line, col)
            tokens.append(Token("punct", m.group(), line, col))
        elif kind == "string":
            tokens.append(Token("string", m.group()[1:-1], line, col))
        elif kind is not None:
            tokens.append(Token(kind, m.group(), line, col))
        newlines = m.group().count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + m.group().rindex("\n") + 1
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


# -- AST -----------------------------------------------------------------------------

Word = tuple  # ((generator, exponent), ...); empty for the identity


@dataclass(frozen=True)
class Atom:
    value: str
    kind: str  # ident, int or string


@dataclass(frozen=True)
class TableBody:
    table: tuple[tuple[int, ...], ...]
    identity: int
    zero: int | None = None
    names: tuple[Atom, ...] | None = None


@dataclass(frozen=True)
class PresentationBody:
    gens: tuple[str, ...]
    rels: tuple[tuple[Word, Word], ...] = ()
    zero: bool = False
    cap: int | None = None


@dataclass(frozen=True)
class SplitBody:
    free: int = 0
    cone: int = 0
    torsion: tuple[int, ...] = ()
    zero: bool = False


@dataclass(frozen=True)
class MonoidDef:
    name: str
    body: Union[TableBody, PresentationBody, SplitBody]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BuiltinCall:
    func: str
    args: tuple  # ints, or one monoid name for spec(...)


@dataclass(frozen=True)
class PointRef:
    chart: str
    items: tuple[Atom, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ChartedBody:
    charts: tuple[tuple[str, str], ...]  # (chart name, monoid name)
    glues: tuple[tuple[PointRef, PointRef], ...] = ()


@dataclass(frozen=True)
class SchemeDef:
    name: str
    body: Union[BuiltinCall, ChartedBody]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OptionDef:
    name: str
    value: int
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SchemeFile:
    items: tuple[Union[MonoidDef, SchemeDef, OptionDef], ...]

    def monoid_defs(self) -> list[MonoidDef]:
        return [d for d in self.items if isinstance(d, MonoidDef)]

    def scheme_defs(self) -> list[SchemeDef]:
        return [d for d in self.items if isinstance(d, SchemeDef)]

    def options(self) -> dict[str, int]:
        return {d.name: d.value for d in self.items if isinstance(d, OptionDef)}


# -- parser --------------------------------------------------------------------------


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return DSLSyntaxError(f"{message}, found {found}", tok.line, tok.column)

    def advance(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("punct", "ident") and self.tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.advance()

    def name(self, what: str = "a name") -> str:
        if self.tok.kind != "ident" or self.tok.text in KEYWORDS:
            raise self.error(f"expected {what}")
        return self.advance().text

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        return int(self.advance().text)

    def atom(self) -> Atom:
        t = self.tok
        if t.kind in ("ident", "int", "string"):
            self.pos += 1
            return Atom(t.text, t.kind)
        raise self.error("expected a name, number or quoted string")

    def comma_list(self, item, close: str) -> list:
        out = []
        if self.at(close):
            return out
        out.append(item())
        while self.accept(","):
            out.append(item())
        return out

    # file := (monoid_def | scheme_def | option_def)*
    def parse_file(self) -> SchemeFile:
        items = []
        while self.tok.kind != "eof":
            if self.at("monoid"):
                items.append(self.monoid_def())
            elif self.at("scheme"):
                items.append(self.scheme_def())
            elif self.at("option"):
                items.append(self.option_def())
            else:
                raise self.error("expected 'monoid', 'scheme' or 'option'")
        return SchemeFile(tuple(items))

    def option_def(self) -> OptionDef:
        line = self.expect("option").line
        name = self.name("an option name")
        self.expect("=")
        return OptionDef(name, self.integer(), line)

    def monoid_def(self) -> MonoidDef:
        line = self.expect("monoid").line
        name = self.name("a monoid name")
        if self.accept("="):
            return MonoidDef(name, self.split_expr(), line)
        self.expect("{")
        if self.at("table"):
            body = self.table_body()
        elif self.at("gens"):
            body = self.presentation_body()
        else:
            raise self.error("expected 'table' or 'gens'")
        self.expect("}")
        return MonoidDef(name, body, line)

    def table_body(self) -> TableBody:
        self.expect("table")
        self.expect("[")
        rows = self.comma_list(self.table_row, "]")
        self.expect("]")
        self.expect("identity")
        identity = self.integer()
        zero = names = None
        if self.accept("zero"):
            zero = self.integer()
        if self.accept("names"):
            self.expect("[")
            names = tuple(self.comma_list(self.atom, "]"))
            self.expect("]")
        return TableBody(tuple(rows), identity, zero, names)

    def table_row(self) -> tuple[int, ...]:
        self.expect("[")
        row = self.comma_list(self.integer, "]")
        self.expect("]")
        return tuple(row)

    def presentation_body(self) -> PresentationBody:
        self.expect("gens")
        gens = [self.name("a generator name")]
        while self.accept(","):
            gens.append(self.name("a generator name"))
        rels = []
        if self.accept("rels"):
            rels.append(self.relation())
            while self.accept(","):
                rels.append(self.relation())
        zero = self.accept("zero")
        cap = self.integer() if self.accept("cap") else None
        return PresentationBody(tuple(gens), tuple(rels), zero, cap)

    def relation(self) -> tuple[Word, Word]:
        lhs = self.word()
        self.expect("=")
        return lhs, self.word()

    def word(self) -> Word:
        if self.tok.kind == "int":
            if self.tok.text != "1":
                raise self.error("expected a word or '1'")
            self.advance()
            return ()
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return tuple(factors)

    def factor(self) -> tuple[str, int]:
        g = self.name("a generator")
        return (g, self.integer()) if self.accept("^") else (g, 1)

    def split_expr(self) -> SplitBody:
        self.expect("split")
        self.expect("(")
        values: dict = {}
        for key, value in self.comma_list(self.split_arg, ")"):
            if key in values:
                raise self.error(f"repeated argument {key!r}")
            values[key] = value
        self.expect(")")
        return SplitBody(**values)

    def split_arg(self):
        t = self.tok
        if t.kind != "ident" or t.text not in ("free", "cone", "torsion", "zero"):
            raise self.error("expected one of free, cone, torsion, zero")
        self.advance()
        self.expect("=")
        if t.text == "torsion":
            self.expect("[")
            orders = tuple(self.comma_list(self.integer, "]"))
            self.expect("]")
            return "torsion", orders
        if t.text == "zero":
            if self.accept("true"):
                return "zero", True
            self.expect("false")
            return "zero", False
        return t.text, self.integer()

    def scheme_def(self) -> SchemeDef:
        line = self.expect("scheme").line
        name = self.name("a scheme name")
        if self.accept("="):
            func = self.name("a builder name")
            self.expect("(")
            args = self.comma_list(self.builder_arg, ")")
            self.expect(")")
            return SchemeDef(name, BuiltinCall(func, tuple(args)), line)
        self.expect("{")
        self.expect("charts")
        charts = []
        while True:
            chart = self.name("a chart name")
            self.expect("=")
            charts.append((chart, self.name("a monoid name")))
            if not self.accept(","):
                break
        self.expect(";")
        glues = []
        while self.accept("glue"):
            a = self.point_ref()
            self.expect("~")
            glues.append((a, self.point_ref()))
            self.expect(";")
        self.expect("}")
        return SchemeDef(name, ChartedBody(tuple(charts), tuple(glues)), line)

    def builder_arg(self):
        return self.integer() if self.tok.kind == "int" else self.name("an argument")

    def point_ref(self) -> PointRef:
        line = self.tok.line
        chart = self.name("a chart name")
        self.expect(".")
        if self.tok.text != "p":
            raise self.error("expected 'p'")
        self.advance()
        self.expect("{")
        items = tuple(self.comma_list(self.atom, "}"))
        self.expect("}")
        return PointRef(chart, items, line)


def parse(text: str) -> SchemeFile:
    """Parse and semantically check a file."""
    ast = Parser(text).parse_file()
    check(ast)
    return ast


# -- pretty-printer ------------------------------------------------------------------


def _fmt_atom(a: Atom) -> str:
    return f'"{a.value}"' if a.kind == "string" else a.value


def _fmt_word(w: Word) -> str:
    if not w:
        return "1"
    return "*".join(g if e == 1 else f"{g}^{e}" for g, e in w)


def _fmt_point(p: PointRef) -> str:
    return f"{p.chart}.p{{{', '.join(_fmt_atom(a) for a in p.items)}}}"


def format_file(ast: SchemeFile) -> str:
    lines = []
    for item in ast.items:
        if isinstance(item, OptionDef):
            lines.append(f"option {item.name} = {item.value}")
        elif isinstance(item, MonoidDef):
            b = item.body
            if isinstance(b, SplitBody):
                lines.append(
                    f"monoid {item.name} = split(free={b.free}, cone={b.cone}, "
                    f"torsion=[{', '.join(map(str, b.torsion))}], zero={str(b.zero).lower()})"
                )
                continue
            lines.append(f"monoid {item.name} {{")
            if isinstance(b, TableBody):
                rows = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in b.table)
                lines.append(f"  table [{rows}]")
                lines.append(f"  identity {b.identity}")
                if b.zero is not None:
                    lines.append(f"  zero {b.zero}")
                if b.names is not None:
                    lines.append(f"  names [{', '.join(_fmt_atom(a) for a in b.names)}]")
            else:
                lines.append(f"  gens {', '.join(b.gens)}")
                if b.rels:
                    lines.append("  rels " + ", ".join(f"{_fmt_word(l)} = {_fmt_word(r)}" for l, r in b.rels))
                if b.zero:
                    lines.append("  zero")
                if b.cap is not None:
                    lines.append(f"  cap {b.cap}")
            lines.append("}")
        else:
            b = item.body
            if isinstance(b, BuiltinCall):
                lines.append(f"scheme {item.name} = {b.func}({', '.join(map(str, b.args))})")
                continue
            lines.append(f"scheme {item.name} {{")
            lines.append("  charts " + ", ".join(f"{c} = {m}" for c, m in b.charts) + ";")
            for p, q in b.glues:
                lines.append(f"  glue {_fmt_point(p)} ~ {_fmt_point(q)};")
            lines.append("}")
    return "\n".join(lines) + "\n"


# -- semantic checks -----------------------------------------------------------------

OPTION_LIMITS = {
    "saturation_cap": (1, 1 << 16),
    "oracle_generators": (1, 12),
    "oracle_space": (1, 1 << 28),
    "spectrum_size": (1, MAX_FINITE_SIZE),
    "spectrum_cone": (0, MAX_CONE_RANK),
    "k0_cap": (1, 24),
}
DEFAULT_OPTIONS = {
    "saturation_cap": 4096,
    "oracle_generators": 8,
    "oracle_space": 1 << 26,
    "spectrum_size": MAX_FINITE_SIZE,
    "spectrum_cone": MAX_CONE_RANK,
    "k0_cap": 12,
}

# builder -> (arity, minimum integer argument, maximum)
BUILDERS = {
    "projective": (1, 0, 6),
    "affine": (1, 0, MAX_CONE_RANK),
    "torus": (1, 0, 64),
    "mu": (1, 1, 4096),
    "dk": (1, 2, 4096),
    "point": (0, 0, 0),
    "spec": (1, None, None),
}


def check(ast: SchemeFile) -> None:
    """Raise SemanticError on the first problem that needs no computation."""
    seen_options: set[str] = set()
    monoids: dict[str, MonoidDef] = {}
    schemes: set[str] = set()
    for item in ast.items:
        if isinstance(item, OptionDef):
            if item.name not in OPTION_LIMITS:
                raise SemanticError(item.name, f"unknown option; known: {', '.join(sorted(OPTION_LIMITS))}")
            if item.name in seen_options:
                raise SemanticError(item.name, "option set twice")
            lo, hi = OPTION_LIMITS[item.name]
            if not lo <= item.value <= hi:
                raise SemanticError(item.name, f"value {item.value} outside [{lo}, {hi}]")
            seen_options.add(item.name)
        elif isinstance(item, MonoidDef):
            if item.name in monoids or item.name in schemes:
                raise SemanticError(item.name, "defined twice")
            _check_monoid(item)
            monoids[item.name] = item
        else:
            if item.name in monoids or item.name in schemes:
                raise SemanticError(item.name, "defined twice")
            _check_scheme(item, monoids)
            schemes.add(item.name)


def _check_monoid(d: MonoidDef) -> None:
    b = d.body
    if isinstance(b, TableBody):
        n = len(b.table)
        if n == 0:
            raise SemanticError(d.name, "empty Cayley table")
        if any(len(r) != n for r in b.table):
            raise SemanticError(d.name, f"Cayley table is not {n}x{n}")
        if any(v >= n for r in b.table for v in r):
            raise SemanticError(d.name, "Cayley table entry out of range")
        if b.identity >= n:
            raise SemanticError(d.name, "identity index out of range")
        if b.zero is not None and b.zero >= n:
            raise SemanticError(d.name, "zero index out of range")
        if b.names is not None:
            if len(b.names) != n:
                raise SemanticError(d.name, f"{len(b.names)} names for {n} elements")
            if len({a.value for a in b.names}) != n:
                raise SemanticError(d.name, "duplicate element names")
    elif isinstance(b, PresentationBody):
        if len(set(b.gens)) != len(b.gens):
            raise SemanticError(d.name, "duplicate generators")
        for l, r in b.rels:
            for g, _ in l + r:
                if g not in b.gens:
                    raise SemanticError(d.name, f"relation uses undeclared generator {g!r}")
        if b.cap is not None and not 1 <= b.cap <= OPTION_LIMITS["saturation_cap"][1]:
            raise SemanticError(d.name, f"cap {b.cap} outside [1, {OPTION_LIMITS['saturation_cap'][1]}]")
    else:
        if any(t < 2 for t in b.torsion) or not is_divisibility_chain(b.torsion):
            raise SemanticError(d.name, f"torsion {list(b.torsion)} is not a divisibility chain of orders >= 2")
        if b.cone > MAX_CONE_RANK:
            raise SemanticError(d.name, f"cone rank {b.cone} above {MAX_CONE_RANK}")


def _check_scheme(d: SchemeDef, monoids: dict[str, MonoidDef]) -> None:
    b = d.body
    if isinstance(b, BuiltinCall):
        if b.func not in BUILDERS:
            raise SemanticError(d.name, f"unknown builder {b.func!r}")
        arity, lo, hi = BUILDERS[b.func]
        if len(b.args) != arity:
            raise SemanticError(d.name, f"{b.func} takes {arity} argument(s), got {len(b.args)}")
        if b.func == "spec":
            if not isinstance(b.args[0], str) or b.args[0] not in monoids:
                raise SemanticError(d.name, f"spec of undefined monoid {b.args[0]!r}")
        elif arity:
            v = b.args[0]
            if not isinstance(v, int) or not lo <= v <= hi:
                raise SemanticError(d.name, f"{b.func} needs an integer in [{lo}, {hi}]")
        return
    names = [c for c, _ in b.charts]
    if len(set(names)) != len(names):
        raise SemanticError(d.name, "duplicate chart names")
    for c, m in b.charts:
        if m not in monoids:
            raise SemanticError(d.name, f"chart {c} uses undefined monoid {m!r}")
    for p, q in b.glues:
        for ref in (p, q):
            if ref.chart not in names:
                raise SemanticError(d.name, f"glue references undeclared chart {ref.chart!r}")


# -- elaboration ---------------------------------------------------------------------


@dataclass
class MonoidEntry:
    name: str
    chart: MonoidChart
    presentation: Presentation | None = None


@dataclass
class Workspace:
    ast: SchemeFile
    options: dict[str, int]
    monoids: dict[str, MonoidEntry]
    schemes: dict[str, F1Scheme]

    def monoid(self, name: str) -> MonoidEntry:
        if name not in self.monoids:
            raise SemanticError(name, "no such monoid")
        return self.monoids[name]

    def scheme(self, name: str) -> F1Scheme:
        if name not in self.schemes:
            raise SemanticError(name, "no such scheme")
        return self.schemes[name]


def _word_vector(gens: tuple[str, ...], w: Word) -> tuple[int, ...]:
    vec = [0] * len(gens)
    for g, e in w:
        vec[gens.index(g)] += e
    return tuple(vec)


def _build_monoid(d: MonoidDef, options: dict[str, int]) -> MonoidEntry:
    b = d.body
    if isinstance(b, SplitBody):
        return MonoidEntry(d.name, SplitMonoid(b.free, b.cone, b.torsion, b.zero))
    if isinstance(b, TableBody):
        names = tuple(a.value for a in b.names) if b.names is not None else ()
        m = FiniteMonoid(len(b.table), b.table, b.identity, b.zero, names)
        problems = verify_monoid(m)
        if problems:
            raise SemanticError(d.name, f"not a commutative monoid ({problems[0]})")
        return MonoidEntry(d.name, m)
    p = Presentation(
        b.gens,
        tuple((_word_vector(b.gens, l), _word_vector(b.gens, r)) for l, r in b.rels),
        b.zero,
    )
    cap = b.cap if b.cap is not None else options["saturation_cap"]
    m, _ = saturate_with_generators(p, cap)
    return MonoidEntry(d.name, m, p)


def _check_spectrum_caps(name: str, chart: MonoidChart, options: dict[str, int]) -> None:
    if isinstance(chart, FiniteMonoid) and chart.size > options["spectrum_size"]:
        raise SizeExceeded(f"{name}: {chart.size} elements exceed the spectrum cap {options['spectrum_size']}")
    if isinstance(chart, SplitMonoid) and chart.cone_rank > options["spectrum_cone"]:
        raise SizeExceeded(f"{name}: cone rank {chart.cone_rank} exceeds the cap {options['spectrum_cone']}")


def resolve_point(scheme: str, chart: MonoidChart, ref: PointRef):
    """The prime generated by the listed items; it must be prime."""
    if isinstance(chart, SplitMonoid):
        cone, zero = set(), False
        for a in ref.items:
            if a.value == "0" and chart.has_zero:
                zero = True
            elif re.fullmatch(r"t\d+", a.value) and int(a.value[1:]) < chart.cone_rank:
                cone.add(int(a.value[1:]))
            else:
                raise SemanticError(scheme, f"{_fmt_point(ref)}: {a.value!r} is not a cone coordinate or zero of the chart")
        return SplitPrime(frozenset(cone), zero)
    mask = 0
    for a in ref.items:
        if a.value in chart.element_names:
            x = chart.element_names.index(a.value)
        elif a.kind == "int" and int(a.value) < chart.size:
            x = int(a.value)
        else:
            raise SemanticError(scheme, f"{_fmt_point(ref)}: no element {a.value!r}")
        for y in range(chart.size):
            mask |= 1 << chart.cayley[y][x]
    full = (1 << chart.size) - 1
    if not is_face(chart, full & ~mask):
        raise SemanticError(scheme, f"{_fmt_point(ref)} does not generate a prime ideal")
    return FinitePrime(mask)


def _build_scheme(d: SchemeDef, monoids: dict[str, MonoidEntry], options: dict[str, int]) -> F1Scheme:
    b = d.body
    if isinstance(b, BuiltinCall):
        if b.func == "spec":
            entry = monoids[b.args[0]]
            _check_spectrum_caps(d.name, entry.chart, options)
            return spec(entry.chart, d.name, entry.presentation)
        if b.func == "affine" and b.args[0] > options["spectrum_cone"]:
            raise SizeExceeded(f"{d.name}: cone rank {b.args[0]} exceeds the cap {options['spectrum_cone']}")
        build = {
            "projective": proj_space,
            "affine": affine_space,
            "torus": torus,
            "mu": mu,
            "dk": d_scheme,
            "point": point,
        }[b.func]
        x = build(*b.args)
        if b.func in ("mu", "dk"):
            _check_spectrum_caps(d.name, x.charts[0], options)
        return F1Scheme(x.charts, x.identifications, d.name, x.chart_names, x.presentations)
    chart_names = [c for c, _ in b.charts]
    entries = [monoids[m] for _, m in b.charts]
    for c, e in zip(chart_names, entries):
        _check_spectrum_caps(f"{d.name}.{c}", e.chart, options)
    idents = []
    for p, q in b.glues:
        i, j = chart_names.index(p.chart), chart_names.index(q.chart)
        idents.append(
            ((i, resolve_point(d.name, entries[i].chart, p)), (j, resolve_point(d.name, entries[j].chart, q)))
        )
    x = F1Scheme(
        tuple(e.chart for e in entries),
        tuple(idents),
        d.name,
        tuple(chart_names),
        tuple(e.presentation for e in entries),
    )
    try:
        glue(x)
    except IncompatibleGluing as exc:
        raise SemanticError(d.name, str(exc)) from None
    return x


def elaborate(ast: SchemeFile) -> Workspace:
    """Build runtime monoids and schemes; resource caps raise ResourceError subclasses."""
    options = dict(DEFAULT_OPTIONS)
    options.update(ast.options())
    monoids: dict[str, MonoidEntry] = {}
    schemes: dict[str, F1Scheme] = {}
    for item in ast.items:
        if isinstance(item, MonoidDef):
            monoids[item.name] = _build_monoid(item, options)
        elif isinstance(item, SchemeDef):
            schemes[item.name] = _build_scheme(item, monoids, options)
    return Workspace(ast, options, monoids, schemes)


def load(text: str) -> Workspace:
    return elaborate(parse(text))
