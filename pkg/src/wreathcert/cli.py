"""Batch verification front end.

Every check is a subcommand with reproducible, machine-readable output;
JSON is the source of truth and the human-readable text is a rendering
of the same report object.

Exit codes: 0 success/PASS, 1 a check ran and failed, 2 usage error,
3 certificate verdict INDETERMINATE, 4 I/O error, 5 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .certificate import (
    MAXIMAL,
    CertificateFormatError,
    build_certificate,
    certificate_from_json,
    certificate_problems,
    certificate_to_json,
)
from .congruence import ABORTED, norm_congruence_check, wieferich_check, wieferich_scan
from .cyclotomic import require_odd_prime, require_ring_prime
from .dynamics import (
    DEFAULT_MAX_POLY_COEFFS,
    eisenstein_check,
    fixed_point_check,
    max_feasible_poly_level,
    orbit_congruence_check,
)
from .errors import SizeLimitError
from .factoring import FactorConfig

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3
EXIT_IO = 4
EXIT_CAP = 5


def _int_arg(text: str, validate, describe: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    try:
        validate(value)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"{describe}: {exc}")
    return value


def _odd_prime(text: str) -> int:
    return _int_arg(text, require_odd_prime, "not an odd prime")


def _ring_prime(text: str) -> int:
    return _int_arg(text, require_ring_prime, "unusable ring prime")


def _positive(text: str) -> int:
    def check(v):
        if v < 1:
            raise ValueError("must be at least 1")
    return _int_arg(text, check, "bad value")


def _scan_limit(text: str) -> int:
    def check(v):
        if v < 3:
            raise ValueError("must be at least 3")
    return _int_arg(text, check, "bad scan limit")


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_norm_congruence(args) -> int:
    report = norm_congruence_check(args.p, args.max_n)
    if args.json:
        _emit_json(asdict(report))
    else:
        print(f"norm congruence for p={report.p}: expected residue {report.expected} mod {report.p ** 2}")
        for item in report.items:
            shown = "-" if item.residue is None else item.residue
            line = f"  n={item.index}  residue={shown}  {item.status}"
            if item.note:
                line += f"  ({item.note})"
            print(line)
        print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    if any(item.status == ABORTED for item in report.items):
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_wieferich(args) -> int:
    if args.check is not None:
        p = args.check
        residue = pow(2, p - 1, p * p)
        print(f"wieferich({p}) = {'true' if wieferich_check(p) else 'false'}")
        print(f"2^(p-1) mod p^2 = {residue}")
        return EXIT_OK
    found = wieferich_scan(args.scan)
    for p in found:
        print(p)
    if not found:
        print(f"no wieferich primes up to {args.scan}", file=sys.stderr)
    return EXIT_OK


def cmd_certificate(args) -> int:
    cfg = FactorConfig(trial_bound=args.trial_bound, rho_budget=args.rho_budget, rho_seed=args.seed)
    try:
        cert = build_certificate(args.p, args.max_n, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = certificate_to_json(cert)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"p={cert.p} n={cert.n} verdict={cert.verdict} -> {args.out}")
    return EXIT_OK if cert.verdict == MAXIMAL else EXIT_INDETERMINATE


def cmd_verify(args) -> int:
    try:
        with open(args.infile, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"cannot read {args.infile}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        cert = certificate_from_json(text)
    except CertificateFormatError as exc:
        for problem in exc.problems:
            print(f"malformed certificate: {problem}", file=sys.stderr)
        return EXIT_USAGE
    problems = certificate_problems(cert)
    if problems:
        for problem in problems:
            print(f"verification failed: {problem}", file=sys.stderr)
        return EXIT_FAIL
    print(f"certificate verifies: p={cert.p} n={cert.n} verdict={cert.verdict}")
    return EXIT_OK


def cmd_structure(args) -> int:
    try:
        reports = [
            eisenstein_check(args.p, args.n),
            fixed_point_check(args.p, args.n),
            orbit_congruence_check(args.p, args.n),
        ]
    except SizeLimitError as exc:
        feasible = max_feasible_poly_level(args.p, DEFAULT_MAX_POLY_COEFFS)
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        print(f"largest feasible n for p={args.p} is {feasible}", file=sys.stderr)
        return EXIT_CAP
    print(f"structure checks for p={args.p}, n={args.n}")
    for report in reports:
        print(f"  {report.check:<18} {report.status}")
        for failure in report.failures:
            print(f"    {failure}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathcert",
        description="verify orbit congruences and build maximality certificates over Z[zeta_p]",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=_positive,
        default=1,
        help="worker hint; results are identical for any value (current implementation is sequential)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser(
        "norm-congruence",
        parents=[common],
        help="check norm(phi^n(1)) = 2^p - 1 mod p^2 along the orbit",
    )
    p_norm.add_argument("--p", type=_ring_prime, required=True)
    p_norm.add_argument("--max-n", type=_positive, required=True)
    p_norm.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_norm.set_defaults(func=cmd_norm_congruence)

    p_wief = sub.add_parser("wieferich", parents=[common], help="check or scan for Wieferich primes")
    group = p_wief.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", type=_odd_prime, metavar="P")
    group.add_argument("--scan", type=_scan_limit, metavar="LIMIT")
    p_wief.set_defaults(func=cmd_wieferich)

    p_cert = sub.add_parser(
        "certificate",
        parents=[common],
        help="build a maximality certificate and write it as JSON",
    )
    p_cert.add_argument("--p", type=_odd_prime, required=True)
    p_cert.add_argument("--max-n", type=_positive, required=True)
    p_cert.add_argument("--trial-bound", type=_positive, default=FactorConfig.trial_bound)
    p_cert.add_argument("--rho-budget", type=_positive, default=FactorConfig.rho_budget)
    p_cert.add_argument("--seed", type=int, default=FactorConfig.rho_seed)
    p_cert.add_argument("--out", required=True, metavar="FILE")
    p_cert.set_defaults(func=cmd_certificate)

    p_verify = sub.add_parser("verify", parents=[common], help="re-check a serialized certificate")
    p_verify.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_verify.set_defaults(func=cmd_verify)

    p_struct = sub.add_parser(
        "structure",
        parents=[common],
        help="run the Eisenstein, fixed-point and orbit-congruence checks",
    )
    p_struct.add_argument("--p", type=_ring_prime, required=True)
    p_struct.add_argument("--n", type=_positive, required=True)
    p_struct.set_defaults(func=cmd_structure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
