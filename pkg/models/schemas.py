from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from services.reciprocal import RealTrigSeries
from services.trigpoly import Base, PowerExpansion, TrigPolynomial
from services.verify import VerificationReport


def _check_rational(value: str) -> str:
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {value!r}") from e
    return value


def _check_rational_map(values: Dict[int, str]) -> Dict[int, str]:
    for index, value in values.items():
        _check_rational(value)
    return values


class TrigPolynomialSchema(BaseModel):
    """Rationals are carried as "p/q" strings so they survive JSON unchanged"""
    label: Optional[str] = Field(None, description="What the polynomial represents, e.g. cos^4(t)")
    constant: str = Field(..., description="Constant term a0/2 as a rational string")
    cos: Dict[int, str] = Field(default_factory=dict, description="Harmonic -> coefficient of cos(nt)")
    sin: Dict[int, str] = Field(default_factory=dict, description="Harmonic -> coefficient of sin(nt)")

    @field_validator("constant")
    @classmethod
    def check_constant(cls, v: str) -> str:
        return _check_rational(v)

    @field_validator("cos", "sin")
    @classmethod
    def check_terms(cls, v: Dict[int, str]) -> Dict[int, str]:
        return _check_rational_map(v)

    @classmethod
    def from_poly(cls, p: TrigPolynomial, label: Optional[str] = None) -> "TrigPolynomialSchema":
        return cls(
            label=label,
            constant=str(p.constant),
            cos={n: str(v) for n, v in p.cos_terms.items()},
            sin={n: str(v) for n, v in p.sin_terms.items()},
        )

    def to_poly(self) -> TrigPolynomial:
        return TrigPolynomial(
            Fraction(self.constant),
            {n: Fraction(v) for n, v in self.cos.items()},
            {n: Fraction(v) for n, v in self.sin.items()},
        )


class PowerExpansionSchema(BaseModel):
    label: Optional[str] = Field(None, description="What the expansion represents, e.g. sin(3t)")
    base: Base = Field(..., description="cos or sin: the power basis")
    coeffs: Dict[int, str] = Field(default_factory=dict, description="Exponent -> rational coefficient")
    cos_cofactor: bool = Field(default=False, description="Whether the whole polynomial is multiplied by cos(t)")

    @field_validator("coeffs")
    @classmethod
    def check_coeffs(cls, v: Dict[int, str]) -> Dict[int, str]:
        return _check_rational_map(v)

    @classmethod
    def from_expansion(cls, p: PowerExpansion, label: Optional[str] = None) -> "PowerExpansionSchema":
        return cls(
            label=label,
            base=p.base,
            coeffs={e: str(v) for e, v in p.coeffs.items()},
            cos_cofactor=p.cos_cofactor,
        )

    def to_expansion(self) -> PowerExpansion:
        return PowerExpansion(self.base, {e: Fraction(v) for e, v in self.coeffs.items()}, self.cos_cofactor)


class RealTrigSeriesSchema(BaseModel):
    target: str = Field(..., description="cos for 1/(a - cos t), sin for 1/(a - sin t)")
    a: float = Field(..., description="Parameter with |a| > 1")
    N: int = Field(..., ge=0, description="Number of harmonics kept")
    constant: float = Field(..., description="Constant term a0/2")
    cos: List[float] = Field(default_factory=list, description="cos(nt) coefficients for n = 1..N")
    sin: List[float] = Field(default_factory=list, description="sin(nt) coefficients for n = 1..N")
    tail_bound: float = Field(..., ge=0, description="Sum of |a_n| over n > N")

    @classmethod
    def from_series(cls, series: RealTrigSeries, target: str, a: float, N: int) -> "RealTrigSeriesSchema":
        return cls(
            target=target,
            a=a,
            N=N,
            constant=series.constant,
            cos=list(series.cos_terms),
            sin=list(series.sin_terms),
            tail_bound=series.tail_bound,
        )


class VerificationReportSchema(BaseModel):
    max_abs_error: float = Field(..., ge=0)
    errors_constant: float = Field(..., ge=0)
    errors_cos: List[float] = Field(default_factory=list)
    errors_sin: List[float] = Field(default_factory=list)
    samples_used: Optional[int] = Field(None, ge=0, description="Quadrature nodes behind the numeric side, null when it was not sampled")
    harmonics_checked: int = Field(..., ge=0)

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationReportSchema":
        return cls(
            max_abs_error=report.max_abs_error,
            errors_constant=report.errors_constant,
            errors_cos=report.errors_cos,
            errors_sin=report.errors_sin,
            samples_used=report.samples_used,
            harmonics_checked=report.harmonics_checked,
        )


class KernelResponse(BaseModel):
    kind: str = Field(..., description="alpha, alpha-prime or alpha-dprime")
    n: int = Field(..., ge=0)
    s: int = Field(..., ge=0)
    mode: str = Field(..., description="closed or brute")
    value: int = Field(..., description="Exact kernel value")


class LemmaResponse(BaseModel):
    lemma: str = Field(..., description="2, cooc or cheie")
    params: Dict[str, int] = Field(default_factory=dict)
    closed_form: int
    brute_force: int
    holds: bool


class CheckResultSchema(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""
    max_error: Optional[float] = Field(None, description="Largest deviation seen, for numeric checks")


class SuiteReportSchema(BaseModel):
    suite: str = Field(..., description="Requested suite name")
    passed: bool
    tol: float
    samples: int
    checks: List[CheckResultSchema] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report) -> "SuiteReportSchema":
        """Build from a workflow.verification_suite.SuiteReport"""
        return cls(
            suite=report.suite,
            passed=report.passed,
            tol=report.tol,
            samples=report.samples,
            checks=[
                CheckResultSchema(suite=c.suite, name=c.name, passed=c.passed, detail=c.detail,
                                  max_error=c.max_error)
                for c in report.checks
            ],
        )


class ReciprocalRequest(BaseModel):
    target: str = Field(default="cos", pattern="^(cos|sin)$", description="cos or sin")
    a: float = Field(..., description="Parameter with |a| > 1")
    terms: int = Field(default=10, ge=0, le=10000, description="Harmonics to return")


class VerifyRequest(BaseModel):
    suite: str = Field(default="all", description="Suite name from the catalogue")
    tol: float = Field(default=1e-9, gt=0)
    samples: int = Field(default=4096, ge=1)
    quick: bool = Field(default=True, description="Shrink the sweep boxes")
