"""Command-line interface.

Subcommands: check (cone condition + consequences), isotropy (freeness and
stratum census), verify (numerical point certificates), generate (weights
from cone data), enumerate (search weight systems), cohomology (tables).

Reports are JSON on stdout. Exit codes: 0 all checks pass, 1 a
mathematical check fails, 2 input or usage error. Reports are byte-stable
across reruns; measured wall time is only emitted with --timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import cohomology as coh
from . import isotropy as iso
from . import quadric as quad
from . import weights as wt
from .conegeom import scalar_to_json

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    pass


def _load_json_source(source: str) -> dict:
    """Inline JSON (starts with '{') or a file path."""
    text = source
    if not source.lstrip().startswith("{"):
        path = Path(source)
        if not path.exists():
            raise InputError(f"config file not found: {source}")
        text = path.read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("top-level JSON object expected")
    return obj


def _cone_data(source: str) -> wt.DerivedConeData:
    obj = _load_json_source(source)
    if "A" not in obj or "B" not in obj:
        raise InputError("cone data needs keys 'A' and 'B'")
    try:
        return wt.cone_data(obj["A"], obj["B"])
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _problem(source: str) -> tuple[wt.WeightSystem | None, wt.DerivedConeData]:
    """A weight system config {"wL", "wR"} or raw cone data {"A", "B"}.

    Cone data describes the weighted torus action directly; a weight
    system additionally pins the homomorphism pair (and may rescale the
    cone data by the integrality denominator).
    """
    obj = _load_json_source(source)
    if "wL" in obj or "wR" in obj:
        try:
            ws = wt.WeightSystem.from_json(obj)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return ws, wt.derive(ws)
    if "A" in obj and "B" in obj:
        try:
            return None, wt.cone_data(obj["A"], obj["B"])
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from exc
    raise InputError("config needs either wL/wR (weights) or A/B (cone data)")


def _emit(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if out_path:
        Path(out_path).write_text(text)


def _report(command: str, config: dict, results: dict, passed: bool, wall: float) -> dict:
    return {
        "command": command,
        "config": config,
        "results": results,
        "pass": passed,
        "wall_time_s": wall,
    }


def _monomial(v) -> str:
    parts = []
    for name, e in zip(("t1", "t2"), v):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def cmd_check(args) -> tuple[int, dict, bool]:
    ws, d = _problem(args.config)
    report = wt.check_cone_condition(d)
    results = {
        "weights": None if ws is None else ws.to_json(),
        "derived": d.to_json(),
        "condition": report.to_json(),
        "interpolation": None,
    }
    passed = report.holds
    if report.holds:
        spec = wt.interpolation_spec(d, wt.default_interpolation_times(args.interp_steps))
        ok = wt.check_interpolation_path(d, spec)
        results["interpolation"] = {
            "base_coefficients": [scalar_to_json(spec.a), scalar_to_json(spec.b)],
            "times": [scalar_to_json(t) for t in spec.times],
            "ok": ok,
        }
        passed = passed and ok
    return (EXIT_PASS if passed else EXIT_FAIL), results, passed


def cmd_isotropy(args) -> tuple[int, dict, bool]:
    ws, d = _problem(args.config)
    if not d.is_integer:
        raise InputError("isotropy analysis requires integer cone data")
    if not wt.cone_condition_holds(d):
        return EXIT_FAIL, {"error": "cone condition fails; isotropy analysis requires it"}, False
    verdict = iso.freeness_check(d, ws)
    if ws is not None:
        classification = iso.classify_quotient(ws).value
    else:
        classification = (
            iso.Classification.FREE_FLAG_CASE.value
            if verdict.free
            else iso.Classification.ORBIFOLD_CASE.value
        )
    census = iso.singular_stratum_census(d)
    results = {
        "weights": None if ws is None else ws.to_json(),
        "derived": d.to_json(),
        "freeness": verdict.to_json(),
        "classification": classification,
        "census": iso.census_to_json(census),
    }
    return EXIT_PASS, results, True


def cmd_verify(args) -> tuple[int, dict, bool]:
    if args.samples < 1:
        raise InputError("--samples must be >= 1")
    ws, d = _problem(args.config)
    condition_ok = wt.cone_condition_holds(d)
    tol = quad.Tolerances(residual=args.tol, zero=args.tol_zero, pos=args.tol_pos)
    # certify even without the cone condition when points exist, so that
    # failures surface as regular=false certificates rather than silence
    try:
        points = quad.certification_sample(d, args.samples, args.seed)
    except (ValueError, RuntimeError) as exc:
        return EXIT_FAIL, {"cone_condition": condition_ok, "error": f"sampling failed: {exc}"}, False
    apex = wt.check_level_set_conditions(d).apex_functional
    certificates = []
    bound_residual = 0.0
    all_passed = condition_ok
    for p in points:
        cert = quad.certify_point(d, p, tol=tol)
        certificates.append(cert.to_json())
        all_passed = all_passed and cert.passed
        if apex is not None:
            # apex functional applied to the moment value must return its
            # value on C: a scale-covariant restatement of the residual
            phi = quad.moment_map(d, p)
            lhs = float(apex[0]) * phi[0] + float(apex[1]) * phi[1]
            rhs = float(apex[0] * Fraction(d.c[0]) + apex[1] * Fraction(d.c[1]))
            bound_residual = max(bound_residual, abs(lhs - rhs))
    if apex is not None and bound_residual > 1e-10:
        all_passed = False
    results = {
        "weights": None if ws is None else ws.to_json(),
        "cone_condition": condition_ok,
        "samples": args.samples,
        "seed": args.seed,
        "boundedness_residual": bound_residual,
        "certificates": certificates,
        "all_passed": all_passed,
    }
    return (EXIT_PASS if all_passed else EXIT_FAIL), results, all_passed


def cmd_generate(args) -> tuple[int, dict, bool]:
    d = _cone_data(args.config)
    solution = wt.weights_from_cone_data(d.a, d.b)
    results = solution.to_json()
    results["rho_L"] = [_monomial(v) for v in solution.system.wl]
    results["rho_R"] = [_monomial(v) for v in solution.system.wr]
    results["derived_check"] = wt.derive(solution.system).to_json()
    return EXIT_PASS, results, True


def cmd_enumerate(args) -> tuple[int, dict, bool]:
    if args.bound < 0:
        raise InputError("--bound must be >= 0")
    count = 0
    free_count = 0
    for ws in wt.enumerate_admissible_systems(args.bound):
        d = wt.derive(ws)
        classification = iso.classify_quotient(ws)
        free = classification is iso.Classification.FREE_FLAG_CASE
        count += 1
        free_count += 1 if free else 0
        line = dict(ws.to_json())
        line["free"] = free
        line["classification"] = classification.value
        sys.stdout.write(json.dumps(line, sort_keys=True) + "\n")
    results = {"bound": args.bound, "count": count, "free_count": free_count}
    return EXIT_PASS, results, True


def _parse_beta(args):
    if args.beta is not None:
        try:
            parts = [Fraction(p.strip()) for p in args.beta.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --beta: {exc}") from exc
        if len(parts) != 2:
            raise InputError("--beta needs two comma-separated rationals")
        if parts[0] == 0 and parts[1] == 0:
            raise InputError("beta must be nonzero")
        return (parts[0], parts[1])
    if args.branch == "degenerate":
        return coh.DEGENERATE_BETA
    return coh.GENERIC_BETA


def cmd_cohomology(args) -> tuple[int, dict, bool]:
    beta = _parse_beta(args)
    algebra = coh.basic_model()
    basic_betti = [algebra.dim(k) for k in range(algebra.top + 1)]
    derham = coh.dga_cohomology(coh.build_derham_model())
    hodge = coh.hodge_model(beta)
    beta_str = [repr(b) if isinstance(b, coh.Eisenstein) else scalar_to_json(b) for b in beta]
    passed = (
        tuple(basic_betti) == coh.BASIC_BETTI
        and derham == coh.SU3_DERHAM_BETTI
        and hodge.branch in ((0, 0, 0), (1, 2, 1))
    )
    results = {
        "basic_betti": basic_betti,
        "derham_betti": list(derham),
        "derham_matches_su3": derham == coh.SU3_DERHAM_BETTI,
        "hodge": hodge.to_json(),
        "beta": beta_str,
    }
    return (EXIT_PASS if passed else EXIT_FAIL), results, passed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3kahler",
        description="Exact cone-condition checks and numerical transverse-Kahler "
        "certification for double-sided torus actions on SU(3).",
    )
    parser.add_argument("--out", help="also write the JSON report to this path")
    parser.add_argument(
        "--timing", action="store_true", help="emit measured wall time (breaks byte-stability)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    config_help = 'weight system {"wL","wR"} or cone data {"A","B"}, inline JSON or path'

    p = sub.add_parser("check", help="cone condition, consequences, interpolation path")
    p.add_argument("--config", required=True, help=config_help)
    p.add_argument("--interp-steps", type=int, default=8, help="samples = k/steps, k=0..steps")

    p = sub.add_parser("isotropy", help="freeness, classification, stratum census")
    p.add_argument("--config", required=True, help=config_help)

    p = sub.add_parser("verify", help="pointwise numerical certificates")
    p.add_argument("--config", required=True, help=config_help)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9, help="level-set residual tolerance")
    p.add_argument("--tol-zero", type=float, default=1e-8)
    p.add_argument("--tol-pos", type=float, default=1e-6)

    p = sub.add_parser("generate", help="weight systems from cone data")
    p.add_argument("--config", required=True, help='{"A": [...], "B": [...]} (inline or path)')

    p = sub.add_parser("enumerate", help="stream weight systems passing the cone condition")
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("cohomology", help="basic/de Rham Betti tables and Hodge diamond")
    p.add_argument("--beta", help='two rationals "p/q,r/s" for the (1,0)-generator image')
    p.add_argument("--branch", choices=("generic", "degenerate"), default="generic")

    return parser


_COMMANDS = {
    "check": cmd_check,
    "isotropy": cmd_isotropy,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
    "cohomology": cmd_cohomology,
}


def _config_echo(args) -> dict:
    skip = {"command", "out", "timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        code, results, passed = _COMMANDS[args.command](args)
    except InputError as exc:
        wall = time.perf_counter() - start if args.timing else 0.0
        _emit(_report(args.command, _config_echo(args), {"error": str(exc)}, False, wall), args.out)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as exc:
        wall = time.perf_counter() - start if args.timing else 0.0
        _emit(_report(args.command, _config_echo(args), {"error": str(exc)}, False, wall), args.out)
        return EXIT_FAIL
    wall = time.perf_counter() - start if args.timing else 0.0
    _emit(_report(args.command, _config_echo(args), results, passed, wall), args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
