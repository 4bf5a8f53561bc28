from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
import uvicorn

from config import DEFAULT_SETTINGS, load_api_settings
from models.schemas import (
    KernelResponse,
    PowerExpansionSchema,
    RealTrigSeriesSchema,
    ReciprocalRequest,
    SuiteReportSchema,
    TrigPolynomialSchema,
    VerificationReportSchema,
    VerifyRequest,
)
from services.coefficient_cache import coefficient_cache
from services.errors import DomainError, EvaluationError
from services.expansions import multiple_angle, power_fourier
from services.formatters import harmonic_label, power_label
from services.kernels import KernelKind, SummationMode, kernel_value
from services.reciprocal import ReciprocalParams, recip_function, recip_series
from services.trigpoly import Base
from services.verify import compare, numeric_fourier
from workflow.verification_suite import VerificationSuite

app = FastAPI(
    title="Trig Fourier Lab API",
    description="Exact multiple-angle, power-reduction and reciprocal Fourier expansions with oracle checks",
    version="1.0.0"
)

# Add CORS middleware so browser notebooks can call the API
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _bad_request(e: ValueError) -> HTTPException:
    return HTTPException(status_code=400, detail=str(e))


@app.get("/")
async def root():
    """Health check endpoint"""
    return {"message": "Trig Fourier Lab API is running"}


@app.get("/kernels/{kind}", response_model=KernelResponse)
def get_kernel(kind: KernelKind, n: int, s: int, brute: bool = False):
    """alpha, alpha' or alpha'' at (n, s), closed form unless brute is set"""
    mode = SummationMode.BRUTE_FORCE if brute else SummationMode.CLOSED_FORM
    try:
        value = kernel_value(kind, n, s, mode)
    except DomainError as e:
        raise _bad_request(e)
    return KernelResponse(kind=kind.value, n=n, s=s, mode=mode.value, value=value)


@app.get("/multiple-angle/{base}", response_model=PowerExpansionSchema)
def get_multiple_angle(base: Base, n: int):
    try:
        expansion = multiple_angle(base, n)
    except DomainError as e:
        raise _bad_request(e)
    return PowerExpansionSchema.from_expansion(expansion, label=harmonic_label(base, n))


@app.get("/power-fourier/{base}", response_model=TrigPolynomialSchema)
def get_power_fourier(base: Base, n: int):
    try:
        poly = power_fourier(base, n)
    except DomainError as e:
        raise _bad_request(e)
    return TrigPolynomialSchema.from_poly(poly, label=power_label(base, n))


@app.post("/reciprocal", response_model=RealTrigSeriesSchema)
def post_reciprocal(request: ReciprocalRequest):
    """Truncated Fourier series of 1/(a - cos t) or 1/(a - sin t)"""
    try:
        p = ReciprocalParams(request.a)
        series = recip_series(p, request.terms, request.target)
    except DomainError as e:
        raise _bad_request(e)
    return RealTrigSeriesSchema.from_series(series, request.target, p.a, request.terms)


@app.post("/reciprocal/check", response_model=VerificationReportSchema)
def post_reciprocal_check(request: ReciprocalRequest):
    """Compare the closed-form series against trapezoidal quadrature"""
    try:
        p = ReciprocalParams(request.a)
        series = recip_series(p, request.terms, request.target)
        samples = max(DEFAULT_SETTINGS.samples, 2 * request.terms + 1)
        numeric = numeric_fourier(recip_function(p, request.target), request.terms, samples)
        report = compare(series, numeric, request.terms)
    except (DomainError, EvaluationError) as e:
        raise _bad_request(e)
    return VerificationReportSchema.from_report(report)


@app.post("/verify", response_model=SuiteReportSchema)
def post_verify(request: VerifyRequest):
    """Run an oracle suite; quick mode is the default over HTTP"""
    settings = DEFAULT_SETTINGS.model_copy(update={"tolerance": request.tol, "samples": request.samples})
    if request.quick:
        settings = settings.quick()
    try:
        report = VerificationSuite(settings).run(request.suite)
    except (DomainError, EvaluationError) as e:
        raise _bad_request(e)
    return SuiteReportSchema.from_report(report)


@app.get("/cache/stats")
async def cache_stats():
    """Coefficient cache statistics"""
    return coefficient_cache.get_stats()


@app.delete("/cache")
async def clear_cache():
    removed = coefficient_cache.clear()
    return {"message": f"Cleared {removed} cached expansions", "removed": removed}


if __name__ == "__main__":
    settings = load_api_settings()
    uvicorn.run(
        "app:app",
        host=settings.host,
        port=settings.port,
    )
