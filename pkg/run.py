"""
Command-line front end: generators, oracles and the verification suites.

    python run.py power-fourier --base cos --n 4
    python run.py multiple-angle --base sin --n 3 --format json
    python run.py reciprocal --target cos --a 2 --terms 3 --tail-bound
    python run.py verify --suite all --tol 1e-9
    python run.py serve

Exit codes: 0 success, 1 failed verification, 2 usage or domain error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config import DEFAULT_SETTINGS, load_api_settings
from models.schemas import KernelResponse, LemmaResponse, SuiteReportSchema
from services.errors import DomainError, EvaluationError
from services.expansions import (
    chebyshev_oracle,
    moivre_cos_oracle,
    moivre_sin_oracle,
    multiple_angle,
    power_fourier,
    power_product_oracle,
)
from services.formatters import (
    OutputFormat,
    render_kernel,
    render_lemma,
    render_multiple_angle,
    render_power_fourier,
    render_reciprocal,
    render_suite,
)
from services.kernels import KernelKind, SummationMode, cheie_sum, cooc_sum, kernel_value, lemma2_sum
from services.reciprocal import ReciprocalParams, recip_series
from services.trigpoly import Base
from workflow.verification_suite import VerificationSuite

logger = logging.getLogger("run")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SUITES = ["all", "fixtures", "kernels", "lemmas", "expansions", "pointwise", "reciprocal", "erratum"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value,
                        help="Output format (default: text).")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr; repeat for debug output.")

    parser = argparse.ArgumentParser(
        prog="run.py",
        description="Exact multiple-angle, power-reduction and reciprocal Fourier expansions with oracle checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", parents=[common], help="Binomial kernels alpha, alpha', alpha''.")
    p.add_argument("--kind", choices=[k.value for k in KernelKind], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="Evaluate the defining sum instead of the closed form.")

    p = sub.add_parser("lemma", parents=[common], help="Binomial-sum identities, closed form against brute force.")
    p.add_argument("--id", dest="lemma_id", choices=["2", "cooc", "cheie"], required=True)
    p.add_argument("--k", type=int, help="k for lemma 2")
    p.add_argument("--s", type=int, help="s for lemma 2")
    p.add_argument("--ell", type=int, help="ell for cooc and cheie")
    p.add_argument("--t", type=int, help="t for cooc")
    p.add_argument("--n", type=int, help="n for cheie")

    p = sub.add_parser("multiple-angle", parents=[common], help="cos(nt) or sin(nt) as a polynomial in cos t / sin t.")
    p.add_argument("--base", choices=[b.value for b in Base], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", choices=["chebyshev", "moivre"],
                   help="Print the oracle's expansion; exit 1 if it differs from the closed form.")

    p = sub.add_parser("power-fourier", parents=[common], help="cos^n(t) or sin^n(t) as a trigonometric polynomial.")
    p.add_argument("--base", choices=[b.value for b in Base], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", choices=["product"],
                   help="Print the product-to-sum oracle; exit 1 if it differs from the closed form.")

    p = sub.add_parser("reciprocal", parents=[common], help="Fourier series of 1/(a - cos t) or 1/(a - sin t).")
    p.add_argument("--target", choices=["cos", "sin"], default="cos")
    p.add_argument("--a", type=float, required=True, help="Parameter with |a| > 1.")
    p.add_argument("--terms", type=int, default=10, help="Harmonics to print (default: 10).")
    p.add_argument("--tail-bound", action="store_true", dest="tail_bound",
                   help="Also print the bound on the truncation error.")

    p = sub.add_parser("verify", parents=[common], help="Run the oracle suites.")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--tol", type=float, default=DEFAULT_SETTINGS.tolerance,
                   help=f"Absolute tolerance for quadrature comparisons (default: {DEFAULT_SETTINGS.tolerance:g}).")
    p.add_argument("--samples", type=int, default=DEFAULT_SETTINGS.samples,
                   help=f"Quadrature nodes (default: {DEFAULT_SETTINGS.samples}).")
    p.add_argument("--quick", action="store_true", help="Shrink every sweep box.")
    p.add_argument("--workers", type=int, default=DEFAULT_SETTINGS.workers, help="Suites run in parallel.")

    sub.add_parser("serve", parents=[common], help="Start the HTTP API with uvicorn.")
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _emit(text: str):
    sys.stdout.write(text + "\n")


def cmd_kernel(args) -> int:
    mode = SummationMode.BRUTE_FORCE if args.brute else SummationMode.CLOSED_FORM
    value = kernel_value(args.kind, args.n, args.s, mode)
    response = KernelResponse(kind=args.kind, n=args.n, s=args.s, mode=mode.value, value=value)
    _emit(render_kernel(response, args.format))
    return EXIT_OK


def _need(args, *names: str):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise DomainError(f"lemma {args.lemma_id} needs {', '.join(missing)}")


def cmd_lemma(args) -> int:
    if args.lemma_id == "2":
        _need(args, "k", "s")
        params = {"k": args.k, "s": args.s}
        closed = lemma2_sum(args.k, args.s)
        brute = lemma2_sum(args.k, args.s, SummationMode.BRUTE_FORCE)
    elif args.lemma_id == "cooc":
        _need(args, "ell", "t")
        params = {"ell": args.ell, "t": args.t}
        closed = 1 if args.t == 0 else 0
        brute = cooc_sum(args.ell, args.t)
    else:
        _need(args, "n", "ell")
        params = {"n": args.n, "ell": args.ell}
        closed = cheie_sum(args.n, args.ell)
        brute = cheie_sum(args.n, args.ell, SummationMode.BRUTE_FORCE)
    response = LemmaResponse(lemma=args.lemma_id, params=params, closed_form=closed, brute_force=brute,
                             holds=closed == brute)
    _emit(render_lemma(response, args.format))
    return EXIT_OK if response.holds else EXIT_FAILED


def cmd_multiple_angle(args) -> int:
    base = Base(args.base)
    expansion = multiple_angle(base, args.n)
    if args.oracle is None:
        _emit(render_multiple_angle(expansion, args.n, args.format))
        return EXIT_OK
    if args.oracle == "chebyshev":
        if base is not Base.COS:
            raise DomainError("the Chebyshev oracle only covers cos(nt)")
        oracle = chebyshev_oracle(args.n)
    else:
        oracle = moivre_cos_oracle(args.n) if base is Base.COS else moivre_sin_oracle(args.n)
    _emit(render_multiple_angle(oracle, args.n, args.format))
    if oracle != expansion:
        logger.warning("❌ %s oracle disagrees with the closed form for %s(%dt)", args.oracle, base.value, args.n)
        return EXIT_FAILED
    return EXIT_OK


def cmd_power_fourier(args) -> int:
    base = Base(args.base)
    poly = power_fourier(base, args.n)
    if args.oracle is None:
        _emit(render_power_fourier(poly, base, args.n, args.format))
        return EXIT_OK
    oracle = power_product_oracle(base, args.n)
    _emit(render_power_fourier(oracle, base, args.n, args.format))
    if oracle != poly:
        logger.warning("❌ product oracle disagrees with the closed form for %s^%d", base.value, args.n)
        return EXIT_FAILED
    return EXIT_OK


def cmd_reciprocal(args) -> int:
    p = ReciprocalParams(args.a)
    series = recip_series(p, args.terms, args.target)
    _emit(render_reciprocal(series, args.target, p.a, args.terms, args.format, show_tail=args.tail_bound))
    return EXIT_OK


def cmd_verify(args) -> int:
    settings = DEFAULT_SETTINGS.model_copy(update={
        "tolerance": args.tol,
        "samples": args.samples,
        "workers": args.workers,
    })
    if args.tol <= 0 or args.samples < 1 or args.workers < 1:
        raise DomainError("--tol must be > 0, --samples and --workers must be >= 1")
    if args.quick:
        settings = settings.quick()
    report = VerificationSuite(settings).run(args.suite)
    _emit(render_suite(SuiteReportSchema.from_report(report), args.format))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_serve(args) -> int:
    import uvicorn

    api = load_api_settings()
    print(f"🚀 Starting API on http://{api.host}:{api.port}", file=sys.stderr)
    uvicorn.run("app:app", host=api.host, port=api.port)
    return EXIT_OK


COMMANDS = {
    "kernel": cmd_kernel,
    "lemma": cmd_lemma,
    "multiple-angle": cmd_multiple_angle,
    "power-fourier": cmd_power_fourier,
    "reciprocal": cmd_reciprocal,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, execute one subcommand and return its exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage to stderr
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, EvaluationError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
