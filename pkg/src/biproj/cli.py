"""Command-line front end.

Every command prints a structured JSON report to stdout (key order fixed, all
numbers exact; non-integer rationals rendered "p/q") and diagnostics to
stderr.  Exit codes: 0 success, 2 invalid input, 3 criterion violation
(non-ACM input where ACM is required), 4 oracle mismatch.  Given identical
flags, two runs produce byte-identical output; there is no environment-
variable configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .catalog import enumerate_canonical, merge_swap_equivalent
from .cohomology import AmbientSpace, euler_characteristic, line_bundle_cohomology
from .errors import InvalidSpecError, NotAcmError
from .koszul import genus_of_curve, hilbert_polynomial
from .oracle import DEFAULT_PRIME, DEFAULT_TRIALS, verify_spec
from .specs import (
    dualizing_bidegree,
    is_acm,
    is_acm_order,
    is_canonical_ample,
    is_regular_sequence_criterion,
    make_spec,
    regular_criterion_warning,
)
from .tower import hilbert_scheme_dimension, stabilizer_is_finite

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CRITERION = 3
EXIT_ORACLE_MISMATCH = 4


def parse_bidegrees(text: str) -> list[tuple[int, int]]:
    """Parse 'a,b;a,b;...' with whitespace tolerated anywhere."""
    pairs = []
    for position, chunk in enumerate(text.split(";"), start=1):
        stripped = chunk.strip()
        pieces = [p.strip() for p in stripped.split(",")]
        if len(pieces) != 2 or not all(pieces):
            raise InvalidSpecError(
                f"bidegree pair {position} ({stripped!r}): expected two "
                "comma-separated integers like '1,2'"
            )
        try:
            pairs.append((int(pieces[0]), int(pieces[1])))
        except ValueError:
            raise InvalidSpecError(
                f"bidegree pair {position} ({stripped!r}): entries must be integers"
            ) from None
    return pairs


def _render(value):
    """Exact JSON-friendly rendering: Fractions become ints when integral and
    'p/q' strings otherwise; tuples become lists."""
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, dict):
        return {k: _render(v) for k, v in value.items()}
    return value


def _report(command: str, inputs: dict, result: dict) -> dict:
    return {
        "command": command,
        "version": __version__,
        "input": _render(inputs),
        "result": _render(result),
    }


def _run_cohomology(args) -> tuple[dict, int]:
    space = AmbientSpace(args.m, args.n)
    d = (args.a, args.b)
    result = {
        "h": list(line_bundle_cohomology(space, d)),
        "euler_characteristic": euler_characteristic(space, d),
    }
    inputs = {"m": args.m, "n": args.n, "a": args.a, "b": args.b}
    return _report("cohomology", inputs, result), EXIT_OK


def _run_check(args) -> tuple[dict, int]:
    pairs = parse_bidegrees(args.bidegrees)
    spec = make_spec(args.m, args.n, pairs)
    result = {
        "regular_sequence": is_regular_sequence_criterion(spec),
        "acm_order": is_acm_order(spec),
        "acm": is_acm(spec),
        "canonical_ample": is_canonical_ample(spec),
        "dualizing_bidegree": list(dualizing_bidegree(spec)),
        "stabilizer_finite": stabilizer_is_finite(spec),
        "criterion_hypothesis_warning": regular_criterion_warning(spec),
    }
    inputs = {"m": args.m, "n": args.n, "bidegrees": [list(d) for d in spec.bidegrees]}
    return _report("check", inputs, result), EXIT_OK


def _run_hilbert(args) -> tuple[dict, int]:
    pairs = parse_bidegrees(args.bidegrees)
    spec = make_spec(args.m, args.n, pairs)
    poly = hilbert_polynomial(spec)
    result = {
        "hilbert_polynomial": str(poly),
        "coefficients": list(poly.coefficients),
        "degree": poly.degree,
    }
    if poly.degree == 1:
        genus = genus_of_curve(spec)
        result["genus"] = genus
        if dualizing_bidegree(spec) == (1, 1):
            result["canonical_degree_check"] = {
                "leading_coefficient": poly.leading_coefficient,
                "two_g_minus_two": 2 * genus - 2,
            }
    inputs = {"m": args.m, "n": args.n, "bidegrees": [list(d) for d in spec.bidegrees]}
    return _report("hilbert", inputs, result), EXIT_OK


def _run_tower(args) -> tuple[dict, int]:
    pairs = parse_bidegrees(args.bidegrees)
    spec = make_spec(args.m, args.n, pairs)
    report = hilbert_scheme_dimension(spec)
    result = {
        "levels": [
            {
                "bidegree": list(level.bidegree),
                "multiplicity": level.multiplicity,
                "ambient_sections": level.ambient_sections,
                "kernel_dim": level.kernel_dim,
                "bundle_rank": level.bundle_rank,
                "fiber_dim": level.fiber_dim,
            }
            for level in report.levels
        ],
        "hilbert_dim": report.hilbert_dim,
        "group_dim": report.group_dim,
        "moduli_dim": report.moduli_dim,
        "stabilizer_finite": report.stabilizer_finite,
    }
    inputs = {"m": args.m, "n": args.n, "bidegrees": [list(d) for d in spec.bidegrees]}
    return _report("tower", inputs, result), EXIT_OK


def _run_enumerate(args) -> tuple[dict, int]:
    space = AmbientSpace(args.m, args.n)
    entries = enumerate_canonical(space)
    if args.merge_swap:
        entries = merge_swap_equivalent(entries)
    result = {
        "count": len(entries),
        "entries": [
            {
                "bidegrees": [list(d) for d in entry.spec.bidegrees],
                "genus": entry.genus,
                "hilbert_dim": entry.hilbert_dim,
                "moduli_dim": entry.moduli_dim,
                "stabilizer_finite": entry.stabilizer_finite,
            }
            for entry in entries
        ],
    }
    inputs = {"m": args.m, "n": args.n, "merge_swap": bool(args.merge_swap)}
    return _report("enumerate", inputs, result), EXIT_OK


def _run_verify(args) -> tuple[dict, int]:
    pairs = parse_bidegrees(args.bidegrees)
    spec = make_spec(args.m, args.n, pairs)
    report = verify_spec(
        spec, args.dmax, prime=args.prime, seed=args.seed, trials=args.trials
    )
    result = {
        "prime": report.prime,
        "seed": report.seed,
        "trials": report.trials,
        "rows": [
            {
                "d": row.d,
                "predicted": row.predicted,
                "observed": list(row.observed),
                "pass": row.passed,
            }
            for row in report.rows
        ],
        "all_pass": report.all_pass,
    }
    inputs = {
        "m": args.m,
        "n": args.n,
        "bidegrees": [list(d) for d in spec.bidegrees],
        "dmax": args.dmax,
        "prime": args.prime,
        "seed": args.seed,
        "trials": args.trials,
    }
    code = EXIT_OK if report.all_pass else EXIT_ORACLE_MISMATCH
    return _report("verify", inputs, result), code


def _pretty_lines(report: dict) -> list[str]:
    lines = [f"{report['command']} (biproj {report['version']})"]
    lines.append("input:")
    for key, value in report["input"].items():
        lines.append(f"  {key} = {value}")
    lines.append("result:")
    result = report["result"]
    for key, value in result.items():
        if key in ("levels", "rows", "entries"):
            lines.append(f"  {key}:")
            for item in value:
                cells = "  ".join(f"{k}={v}" for k, v in item.items())
                lines.append(f"    {cells}")
        elif isinstance(value, dict):
            lines.append(f"  {key}:")
            for sub, sub_value in value.items():
                lines.append(f"    {sub} = {sub_value}")
        else:
            lines.append(f"  {key} = {value}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biproj",
        description=(
            "Exact computations for complete intersections on P^m x P^n: "
            "cohomology of twists, ACM criteria, Hilbert polynomials, "
            "parameter-space dimensions and finite-field verification."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, bidegrees=True):
        p.add_argument("--m", type=int, required=True, help="dimension of the first factor")
        p.add_argument("--n", type=int, required=True, help="dimension of the second factor")
        if bidegrees:
            p.add_argument(
                "--bidegrees",
                required=True,
                help="semicolon-separated 'a,b' pairs, e.g. '1,1;3,3'",
            )
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--out", metavar="PATH", help="also write the report to PATH")

    p = sub.add_parser("cohomology", help="cohomology vector of O(a,b)")
    p.add_argument("--m", type=int, required=True, help="dimension of the first factor")
    p.add_argument("--n", type=int, required=True, help="dimension of the second factor")
    p.add_argument("--a", type=int, required=True, help="first twist (may be negative)")
    p.add_argument("--b", type=int, required=True, help="second twist (may be negative)")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    p.add_argument("--out", metavar="PATH", help="also write the report to PATH")
    p.set_defaults(run=_run_cohomology)

    p = sub.add_parser("check", help="regular-sequence / ACM / canonical criteria")
    add_common(p)
    p.set_defaults(run=_run_check)

    p = sub.add_parser("hilbert", help="Hilbert polynomial (and genus for curves)")
    add_common(p)
    p.set_defaults(run=_run_hilbert)

    p = sub.add_parser("tower", help="parameter-space and moduli dimensions")
    add_common(p)
    p.set_defaults(run=_run_tower)

    p = sub.add_parser("enumerate", help="catalog of canonical ample patterns")
    add_common(p, bidegrees=False)
    p.add_argument(
        "--merge-swap",
        action="store_true",
        help="merge entries equivalent under swapping the two factors",
    )
    p.set_defaults(run=_run_enumerate)

    p = sub.add_parser("verify", help="finite-field check of the dimension counts")
    add_common(p)
    p.add_argument("--dmax", type=int, required=True, help="verify twists (d,d) for d = 0..dmax")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME, help=f"field size (default {DEFAULT_PRIME})")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help=f"independent trials per twist (default {DEFAULT_TRIALS})")
    p.set_defaults(run=_run_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.run(args)
    except NotAcmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CRITERION
    except InvalidSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if args.pretty:
        text = "\n".join(_pretty_lines(report)) + "\n"
    else:
        text = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
