"""
Renderers shared by the CLI and the golden-file builder.

Text output is meant to be grep-able and diff-able: rationals as p/q, powers
with ^, harmonics as cos(kt). JSON goes through the pydantic schemas, LaTeX
through sympy, CSV through the csv module.
"""

import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sympy
from pydantic import BaseModel

from models.schemas import (
    KernelResponse,
    LemmaResponse,
    PowerExpansionSchema,
    RealTrigSeriesSchema,
    SuiteReportSchema,
    TrigPolynomialSchema,
)
from services.reciprocal import RealTrigSeries
from services.trigpoly import Base, PowerExpansion, TrigPolynomial


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"
    CSV = "csv"


def to_json(schema: BaseModel) -> str:
    return json.dumps(schema.model_dump(mode="json"), indent=2)


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


# --- Labels ---

def harmonic_label(base: Base, n: int) -> str:
    """cos(t), cos(2t), ..."""
    return f"{Base(base).value}(t)" if n == 1 else f"{Base(base).value}({n}t)"


def power_label(base: Base, n: int) -> str:
    """cos^4(t)"""
    return f"{Base(base).value}^{n}(t)"


def _power_monomial(base: Base, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return f"{base.value}(t)"
    return f"{base.value}(t)^{exponent}"


def _join(terms: List[Tuple[Fraction, str]]) -> str:
    """Signed sum of coefficient*monomial; an empty monomial is a constant"""
    if not terms:
        return "0"
    pieces = []
    for i, (value, monomial) in enumerate(terms):
        magnitude = abs(value)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if i == 0:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f"{'-' if value < 0 else '+'} {body}")
    return " ".join(pieces)


# --- Text ---

def trig_text(p: TrigPolynomial) -> str:
    """cos terms by descending harmonic, then sin terms, then the constant"""
    terms = [(v, harmonic_label(Base.COS, n)) for n, v in sorted(p.cos_terms.items(), reverse=True)]
    terms += [(v, harmonic_label(Base.SIN, n)) for n, v in sorted(p.sin_terms.items(), reverse=True)]
    if p.constant:
        terms.append((p.constant, ""))
    return _join(terms)


def expansion_text(p: PowerExpansion) -> str:
    """Ascending exponents, wrapped in cos(t)*(...) when the cofactor is set"""
    body = _join([(v, _power_monomial(p.base, e)) for e, v in p.coeffs.items()])
    if p.cos_cofactor:
        return f"cos(t)*({body})"
    return body


# --- LaTeX ---

_t = sympy.Symbol("t", real=True)


def _sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _sympy_trig(base: Base, argument):
    return sympy.cos(argument) if Base(base) is Base.COS else sympy.sin(argument)


def trig_latex(p: TrigPolynomial, base: Base, n: int) -> str:
    rhs = _sympy_rational(p.constant)
    for k, v in p.cos_terms.items():
        rhs += _sympy_rational(v) * sympy.cos(k * _t)
    for k, v in p.sin_terms.items():
        rhs += _sympy_rational(v) * sympy.sin(k * _t)
    lhs = sympy.Pow(_sympy_trig(base, _t), n, evaluate=False)
    return sympy.latex(sympy.Eq(lhs, rhs, evaluate=False))


def expansion_latex(p: PowerExpansion, n: int) -> str:
    x = _sympy_trig(p.base, _t)
    rhs = sympy.Integer(0)
    for e, v in p.coeffs.items():
        rhs += _sympy_rational(v) * x ** e
    if p.cos_cofactor:
        rhs = sympy.Mul(sympy.cos(_t), rhs, evaluate=False)
    lhs = _sympy_trig(p.base, n * _t)
    return sympy.latex(sympy.Eq(lhs, rhs, evaluate=False))


# --- Public renderers ---

def render_power_fourier(p: TrigPolynomial, base: Base, n: int, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    label = power_label(base, n)
    if fmt is OutputFormat.JSON:
        return to_json(TrigPolynomialSchema.from_poly(p, label=label))
    if fmt is OutputFormat.LATEX:
        return trig_latex(p, base, n)
    if fmt is OutputFormat.CSV:
        rows = [("constant", 0, str(p.constant))]
        rows += [("cos", k, str(v)) for k, v in p.cos_terms.items()]
        rows += [("sin", k, str(v)) for k, v in p.sin_terms.items()]
        return _csv(("kind", "harmonic", "coefficient"), rows)
    return f"{label} = {trig_text(p)}"


def render_multiple_angle(p: PowerExpansion, n: int, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    label = harmonic_label(p.base, n)
    if fmt is OutputFormat.JSON:
        return to_json(PowerExpansionSchema.from_expansion(p, label=label))
    if fmt is OutputFormat.LATEX:
        return expansion_latex(p, n)
    if fmt is OutputFormat.CSV:
        rows = [(e, str(v), p.cos_cofactor) for e, v in p.coeffs.items()]
        return _csv(("exponent", "coefficient", "cos_cofactor"), rows)
    return f"{label} = {expansion_text(p)}"


def render_reciprocal(series: RealTrigSeries, target: str, a: float, N: int, fmt: OutputFormat,
                      show_tail: bool = False) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return to_json(RealTrigSeriesSchema.from_series(series, target, a, N))
    if fmt is OutputFormat.CSV:
        rows = [(0, repr(series.constant), repr(0.0))]
        rows += [(n, repr(series.cos_coeff(n)), repr(series.sin_coeff(n))) for n in range(1, N + 1)]
        return _csv(("harmonic", "cos", "sin"), rows)
    if fmt is OutputFormat.LATEX:
        rhs = sympy.Float(series.constant)
        for n in range(1, N + 1):
            if series.cos_coeff(n):
                rhs += sympy.Float(series.cos_coeff(n)) * sympy.cos(n * _t)
            if series.sin_coeff(n):
                rhs += sympy.Float(series.sin_coeff(n)) * sympy.sin(n * _t)
        lhs = 1 / (sympy.Float(a) - _sympy_trig(Base(target), _t))
        return sympy.latex(sympy.Eq(lhs, rhs, evaluate=False))

    lines = [f"1/(a - {target} t), a = {a!r}, N = {N}", f"constant = {series.constant!r}"]
    for n in range(1, N + 1):
        if target == "cos" or n % 2 == 0:
            lines.append(f"cos[{n}] = {series.cos_coeff(n)!r}")
        else:
            lines.append(f"sin[{n}] = {series.sin_coeff(n)!r}")
    if show_tail:
        lines.append(f"tail_bound = {series.tail_bound!r}")
    return "\n".join(lines)


def render_kernel(response: KernelResponse, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return to_json(response)
    if fmt is OutputFormat.CSV:
        return _csv(("kind", "n", "s", "mode", "value"),
                    [(response.kind, response.n, response.s, response.mode, response.value)])
    if fmt is OutputFormat.LATEX:
        symbol = {"alpha": r"\alpha", "alpha-prime": r"\alpha'", "alpha-dprime": r"\alpha''"}[response.kind]
        return f"{symbol}_{{{response.n},{response.s}}} = {response.value}"
    return f"{response.kind}({response.n}, {response.s}) = {response.value}"


def render_lemma(response: LemmaResponse, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    params = ", ".join(f"{k}={v}" for k, v in response.params.items())
    if fmt is OutputFormat.JSON:
        return to_json(response)
    if fmt is OutputFormat.CSV:
        return _csv(("lemma", "params", "closed_form", "brute_force", "holds"),
                    [(response.lemma, params, response.closed_form, response.brute_force, response.holds)])
    if fmt is OutputFormat.LATEX:
        relation = "=" if response.holds else r"\neq"
        return f"{response.brute_force} {relation} {response.closed_form}"
    verdict = "holds" if response.holds else "FAILS"
    return (f"lemma {response.lemma} ({params}): brute force {response.brute_force}, "
            f"closed form {response.closed_form}, {verdict}")


def render_suite(report: SuiteReportSchema, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return to_json(report)
    if fmt is OutputFormat.CSV:
        rows = [
            (c.suite, c.name, c.passed, "" if c.max_error is None else repr(c.max_error), c.detail)
            for c in report.checks
        ]
        return _csv(("suite", "name", "passed", "max_error", "detail"), rows)
    lines = []
    for check in report.checks:
        mark = "✅" if check.passed else "❌"
        detail = f": {check.detail}" if check.detail else ""
        lines.append(f"{mark} [{check.suite}] {check.name}{detail}")
    failed = sum(1 for c in report.checks if not c.passed)
    summary = "PASS" if report.passed else "FAIL"
    lines.append(f"{summary}: {len(report.checks) - failed}/{len(report.checks)} checks passed (tol={report.tol:g})")
    if fmt is OutputFormat.LATEX:
        # no mathematical content to typeset; fall back to plain lines
        return "\n".join(f"% {line}" for line in lines)
    return "\n".join(lines)
