"""Plain-dict reports for schemes and monoids, rendered as text or JSON."""

from __future__ import annotations

import json
from importlib import resources

from .abelian import FgAbelianGroup
from .errors import ResourceError
from .ktheory import gl_n, k0_q, k_plus
from .monoid import FiniteMonoid, MonoidChart
from .oracle import scheme_oracle_count
from .scheme import F1Scheme, glue, scheme_exponent
from .spectrum import spectrum, stalk_units
from .zeta import count_table, euler_char, zeta_factored, zeta_polynomial

SCHEMA_VERSION = 1


def group_dict(g: FgAbelianGroup) -> dict:
    return {"rank": g.rank, "invariant_factors": list(g.invariant_factors), "text": str(g)}


def point_rows(x: F1Scheme) -> list[dict]:
    rows = []
    for gp in glue(x):
        members = [f"{x.chart_names[p.chart]}.p{p.prime.label(x.charts[p.chart])}" for p in gp.members]
        rows.append(
            {
                "prime": members[0],
                "members": members,
                "rank": gp.rank,
                "invariant_factors": list(gp.stalk_units.invariant_factors),
            }
        )
    return rows


def scheme_report(x: F1Scheme, qs=None, oracle: bool = False, **bounds) -> dict:
    """Everything the zeta command prints; ``qs`` adds a count table."""
    N = zeta_polynomial(x)
    report = {
        "schema_version": SCHEMA_VERSION,
        "scheme": x.name,
        "N_monomial": list(N.coeffs_monomial),
        "N_shifted": list(N.coeffs_shifted),
        "N_text": str(N),
        "N_shifted_text": N.shifted_str(),
        "exponent": scheme_exponent(x),
        "euler_characteristic": euler_char(x),
        "zeta": str(zeta_factored(x)),
        "points": point_rows(x),
    }
    if qs is not None:
        rows = count_table(x, qs)
        out = []
        for r in rows:
            row = {"q": r["q"], "count": r["count"], "N_q": r["N(q)"], "coprime": r["coprime"]}
            if oracle:
                try:
                    row["oracle"] = scheme_oracle_count(x, r["q"], **bounds)
                except ResourceError:
                    row["oracle"] = None
            out.append(row)
        report["counts"] = out
    return report


def spec_report(name: str, chart: MonoidChart) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "monoid": name,
        "description": str(chart),
        "points": [
            {"prime": p.label(chart), **group_dict(stalk_units(chart, p))} for p in spectrum(chart)
        ],
    }


def k_report(name: str, A: MonoidChart, k0_cap: int = 12, gl_ranks=range(1, 5)) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "monoid": name,
        "k_plus": [{"i": i, **group_dict(k_plus(A, i))} for i in range(8)],
    }
    if isinstance(A, FiniteMonoid):
        report["gl_orders"] = [{"n": n, "order": gl_n(A, n).order()} for n in gl_ranks]
        r = k0_q(A, k0_cap)
        report["k0_q"] = {
            **group_dict(r.group),
            "generators": list(r.generator_labels),
            "free_on_indecomposables": str(r.free_on_indecomposables),
            "agree": r.agree,
            "objects": r.object_count,
            "relations": r.relation_count,
            "unique_decomposition": r.inventory.unique_decomposition,
        }
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def load_schema() -> dict:
    text = resources.files("f1zeta").joinpath("data/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def render_scheme(report: dict) -> str:
    lines = [
        f"scheme {report['scheme']}",
        f"N(x) = {report['N_text']}",
        f"N(x) = {report['N_shifted_text']}  (in powers of x-1)",
        f"exponent e = {report['exponent']}",
        f"chi = {report['euler_characteristic']}",
        f"zeta = {report['zeta']}",
        "",
        f"{'point':<28} {'rank':>4}  invariant factors",
    ]
    for p in report["points"]:
        factors = ", ".join(map(str, p["invariant_factors"])) or "-"
        lines.append(f"{' ~ '.join(p['members']):<28} {p['rank']:>4}  {factors}")
    if "counts" in report:
        lines += ["", render_counts(report["counts"]).rstrip("\n")]
    return "\n".join(lines) + "\n"


def render_counts(rows: list[dict]) -> str:
    has_oracle = any("oracle" in r for r in rows)
    head = f"{'q':>5} {'count':>12} {'N(q)':>12} {'coprime':>8}" + (f" {'oracle':>12}" if has_oracle else "")
    lines = [head]
    for r in rows:
        line = f"{r['q']:>5} {r['count']:>12} {r['N_q']:>12} {('yes' if r['coprime'] else 'no'):>8}"
        if has_oracle:
            line += f" {('-' if r.get('oracle') is None else r['oracle']):>12}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_spec(report: dict) -> str:
    lines = [f"monoid {report['monoid']} = {report['description']}", f"{'prime':<24} stalk units"]
    for p in report["points"]:
        lines.append(f"{p['prime']:<24} {p['text']}")
    return "\n".join(lines) + "\n"


def render_k(report: dict) -> str:
    lines = [f"monoid {report['monoid']}"]
    for row in report.get("gl_orders", []):
        lines.append(f"|GL_{row['n']}| = {row['order']}")
    for row in report["k_plus"]:
        lines.append(f"K+_{row['i']} = {row['text']}")
    if "k0_q" in report:
        k = report["k0_q"]
        lines.append(f"K0 (relations) = {k['text']}")
        lines.append(f"K0 (free on indecomposables) = {k['free_on_indecomposables']}")
        lines.append(f"indecomposable projectives: {', '.join(k['generators'])}")
        lines.append(f"agree = {str(k['agree']).lower()}, objects = {k['objects']}, relations = {k['relations']}")
    return "\n".join(lines) + "\n"
