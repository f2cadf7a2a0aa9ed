from __future__ import annotations

from importlib import resources
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1zeta.abelian import FgAbelianGroup
from f1zeta.dsl import (
    BuiltinCall,
    MonoidDef,
    OptionDef,
    PresentationBody,
    SchemeDef,
    SchemeFile,
    SplitBody,
    TableBody,
    format_file,
    load,
    parse,
)
from f1zeta.errors import DSLSyntaxError, SemanticError, SizeExceeded
from f1zeta.monoid import FiniteMonoid, SplitMonoid
from f1zeta.report import render_scheme, scheme_report, to_json
from f1zeta.scheme import glue
from f1zeta.spectrum import spectrum, stalk_units
from f1zeta.zeta import zeta_polynomial

GOLDEN = Path(__file__).parent / "golden"
CORPUS = ("basic.f1", "monoids.f1", "glued.f1")


def corpus_text(name):
    return resources.files("f1zeta").joinpath(f"data/corpus/{name}").read_text()


def test_table_monoid():
    ast = parse("monoid M { table [[0,1],[1,1]] identity 0 }")
    d = ast.monoid_defs()[0]
    assert isinstance(d.body, TableBody) and len(d.body.table) == 2
    m = load("monoid M { table [[0,1],[1,1]] identity 0 }").monoid("M").chart
    assert isinstance(m, FiniteMonoid) and m.size == 2


def test_builder_call():
    d = parse("scheme X = projective(2)").scheme_defs()[0]
    assert d.body == BuiltinCall("projective", (2,))
    assert len(glue(load("scheme X = projective(2)").scheme("X"))) == 7


def test_split_descriptor():
    text = "monoid B = split(free=1, cone=0, torsion=[2], zero=false)"
    assert parse(text).monoid_defs()[0].body == SplitBody(1, 0, (2,), False)
    chart = load(text).monoid("B").chart
    assert chart == SplitMonoid(1, 0, (2,), False)
    primes = spectrum(chart)
    assert len(primes) == 1
    assert stalk_units(chart, primes[0]) == FgAbelianGroup(1, (2,))


def test_presentation_and_options():
    ws = load("option saturation_cap = 100\nmonoid N { gens x, y rels x^2 = x, y^3 = y zero cap 50 }")
    assert ws.options["saturation_cap"] == 100
    entry = ws.monoid("N")
    assert entry.presentation is not None and entry.presentation.has_zero
    body = ws.ast.monoid_defs()[0].body
    assert isinstance(body, PresentationBody) and body.cap == 50


@pytest.mark.parametrize("name", CORPUS)
def test_round_trip(name):
    ast = parse(corpus_text(name))
    assert parse(format_file(ast)) == ast
    assert format_file(parse(format_file(ast))) == format_file(ast)


@pytest.mark.parametrize("name", CORPUS)
def test_pretty_print_golden(name):
    expected = (GOLDEN / f"{name[:-3]}.formatted.f1").read_text()
    assert format_file(parse(corpus_text(name))) == expected


@pytest.mark.parametrize("scheme", ["P1", "P2", "Mu6", "D3", "Gm2"])
def test_zeta_report_golden(scheme):
    ws = load(corpus_text("basic.f1"))
    assert render_scheme(scheme_report(ws.scheme(scheme))) == (GOLDEN / f"zeta_{scheme}.txt").read_text()


def test_json_report_golden():
    ws = load(corpus_text("glued.f1"))
    assert to_json(scheme_report(ws.scheme("PlaneLine"))) == (GOLDEN / "zeta_PlaneLine.json").read_text()


def test_charted_schemes_match_builders():
    ws = load(corpus_text("glued.f1"))
    assert str(zeta_polynomial(ws.scheme("P1"))) == "x + 1"
    assert glue(ws.scheme("P1")) is not None
    assert str(zeta_polynomial(ws.scheme("TwoLines"))) == "2x"
    assert str(zeta_polynomial(ws.scheme("PlaneLine"))) == "x^2"
    assert str(zeta_polynomial(ws.scheme("IdemDouble"))) == "2"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("scheme X = projective(", 1, 23),
        ("monoid M { table [[0,1],[1,1]] identity 0 } @", 1, 45),
        ("monoid M {\n  gens a\n  rels a^ = a\n}", 3, 11),
        ("scheme", 1, 7),
        ("frobnicate X", 1, 1),
        ('monoid M { table [[0]] identity 0 names ["unterminated] }', 1, 42),
    ],
)
def test_syntax_error_positions(text, line, column):
    with pytest.raises(DSLSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize(
    "text, name",
    [
        ("monoid M { table [[0,1],[1,1]] identity 0 }\nmonoid M = split()", "M"),
        ("scheme X = projective(9)", "X"),
        ("scheme X = dk(1)", "X"),
        ("scheme X = spec(Nope)", "X"),
        ("scheme X = wobble(2)", "X"),
        ("monoid B = split(torsion=[4, 2])", "B"),
        ("monoid B = split(torsion=[1])", "B"),
        ("monoid M { table [[0,1],[1]] identity 0 }", "M"),
        ("monoid M { table [[0,1],[1,1]] identity 0 names [a, a] }", "M"),
        ("monoid M { gens a rels b = a }", "M"),
        ("option frobs = 3", "frobs"),
        ("option k0_cap = 99", "k0_cap"),
        ("monoid L = split(cone=1)\nscheme X { charts U = L; glue W.p{} ~ U.p{}; }", "X"),
        ("monoid L = split(cone=1)\nscheme X { charts U = L, U = L; }", "X"),
    ],
)
def test_semantic_errors(text, name):
    with pytest.raises(SemanticError) as info:
        parse(text)
    assert info.value.name == name


@pytest.mark.parametrize(
    "text",
    [
        # not associative
        "monoid M { table [[0,1,2],[1,2,0],[2,0,0]] identity 0 }\nscheme X = spec(M)",
        # t5 is not a coordinate of a line
        "monoid L = split(cone=1)\nscheme X { charts U = L, V = L; glue U.p{t5} ~ V.p{}; }",
        # stalks disagree
        "monoid L = split(cone=1)\nscheme X { charts U = L, V = L; glue U.p{t0} ~ V.p{}; }",
        # {g} generates the whole group, not a prime
        "monoid C { table [[0,1],[1,0]] identity 0 names [1, g] }\nscheme X { charts U = C, V = C; glue U.p{g} ~ V.p{}; }",
    ],
)
def test_elaboration_semantic_errors(text):
    with pytest.raises(SemanticError):
        load(text)


def test_missing_names():
    ws = load("scheme X = point()")
    with pytest.raises(SemanticError):
        ws.scheme("Y")
    with pytest.raises(SemanticError):
        ws.monoid("M")


def test_spectrum_caps_from_options():
    with pytest.raises(SizeExceeded):
        load("option spectrum_cone = 2\nscheme X = affine(3)")
    with pytest.raises(SizeExceeded):
        load("option spectrum_size = 4\nscheme X = mu(6)")


names = st.from_regex(r"[A-Z][a-z0-9]{0,4}", fullmatch=True).filter(
    lambda s: s not in {"monoid", "scheme", "option"}
)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.one_of(
            st.builds(lambda f, c, t, z: SplitBody(f, c, t, z), st.integers(0, 3), st.integers(0, 4), st.sampled_from([(), (2,), (2, 4), (3, 6)]), st.booleans()),
            st.builds(
                lambda g, e: PresentationBody(g, (((("a", e),), ()),) if "a" in g else ()),
                st.sampled_from([("a",), ("a", "b"), ("x",)]),
                st.integers(1, 5),
            ),
        ),
        min_size=1,
        max_size=5,
    ),
    st.lists(st.sampled_from(["projective", "affine", "torus", "mu"]), max_size=3),
)
def test_round_trip_generated(bodies, builders):
    items = [MonoidDef(f"M{k}", b) for k, b in enumerate(bodies)]
    items += [SchemeDef(f"S{k}", BuiltinCall(f, (k + 1,))) for k, f in enumerate(builders)]
    items.append(OptionDef("k0_cap", 7))
    ast = SchemeFile(tuple(items))
    assert parse(format_file(ast)) == ast
