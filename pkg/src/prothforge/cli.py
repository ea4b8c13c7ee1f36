"""Command-line front end.

Subcommands: certify, verify, table, mersenne, sample-sgp, estimate.
Exit codes: 0 success (certify: certified; verify: accepted), 1 for an
inconclusive certification or a rejected certificate, 2 for a composite
witness, 3 memory budget exceeded, 64 usage or parse errors.  Nothing
is written to stdout on a nonzero exit; reasons go to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from prothforge.certificates import (
    Certificate,
    Status,
    TestId,
    certify,
    verify_certificate,
)
from prothforge.config import MemoryBudgetError
from prothforge.density import estimate_report
from prothforge.logreal import LogReal
from prothforge.report import render_plot, rows_to_csv, table_rows
from prothforge.safeprimes import (
    classify_sgp,
    interval_index,
    mersenne_sgp_scan,
    sample_consecutive_primes,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="prothforge")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="search for a primality certificate")
    p.add_argument("N", type=int)
    p.add_argument("--p", type=int, default=None, help="force the prime power base p")
    p.add_argument("--test", type=str, default=None,
                   help="run only this test id instead of the ladder")
    p.add_argument("--base", type=int, default=None, help="force the witness base a")
    p.add_argument("--j", type=int, default=None, help="force the exponent shift j")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("file", type=str)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="interval counts and model estimates")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=str, required=True, metavar="LO..HI")
    p.add_argument("--csv", type=str, default=None, help="also write the rows here")
    p.add_argument("--plot", type=str, default=None,
                   help="render counts vs. models to this image file")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("mersenne", help="scan Mersenne primes for 2K(2^q-1)+1 primes")
    p.add_argument("--max-exponent", type=int, required=True)
    p.set_defaults(func=_cmd_mersenne)

    p = sub.add_parser("sample-sgp", help="classify consecutive primes of a given size")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_sample_sgp)

    p = sub.add_parser("estimate", help="the five density estimators as JSON")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_estimate)
    return parser


def _cmd_certify(args) -> int:
    test = None
    if args.test is not None:
        try:
            test = TestId(args.test)
        except ValueError:
            raise _UsageError(f"unknown test id {args.test!r}") from None
    base_list = [args.base] if args.base is not None else None
    outcome = certify(args.N, p=args.p, base_list=base_list, test=test, j=args.j)
    if outcome.status is Status.CERTIFIED:
        print(outcome.certificate.to_json())
        return 0
    if outcome.status is Status.INCONCLUSIVE:
        print(f"inconclusive: {outcome.reason}", file=sys.stderr)
        return 1
    print(f"composite: {outcome.reason}", file=sys.stderr)
    return 2


def _cmd_verify(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
        cert = Certificate.from_json(text)
    except (OSError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 64
    result = verify_certificate(cert)
    if result.accepted:
        print("accepted")
        return 0
    print(f"rejected: {result.reason}", file=sys.stderr)
    return 1


_RANGE_RE = re.compile(r"(\d+)\.\.(\d+)")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.fullmatch(text)
    if not m:
        raise _UsageError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise _UsageError(f"need 1 <= LO <= HI, got {text!r}")
    return lo, hi


def _cmd_table(args) -> int:
    lo, hi = _parse_range(args.n)
    rows = table_rows(args.a, lo, hi)
    text = rows_to_csv(rows)
    sys.stdout.write(text)
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.plot is not None:
        render_plot(rows, args.plot)
    return 0


def _cmd_mersenne(args) -> int:
    rows = mersenne_sgp_scan(args.max_exponent)
    out = ["q,two_k,digits"]
    for q, two_ks in rows:
        m = (1 << q) - 1
        for two_k in two_ks:
            digits = len(str(two_k * m + 1))
            out.append(f"{q},{two_k},{digits}")
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _cmd_sample_sgp(args) -> int:
    if args.digits < 10:
        raise _UsageError(f"--digits must be >= 10, got {args.digits}")
    if args.count < 10:
        raise _UsageError(f"--count must be >= 10, got {args.count}")
    start = 10 ** (args.digits - 1)
    primes = sample_consecutive_primes(start, args.count)
    out = ["p,interval,is_sgp,prime_two_ks"]
    hits = 0
    for p in primes:
        record = classify_sgp(p, args.a)
        n_p = interval_index(args.a, p)
        hits += 1 if record.is_sgp else 0
        two_ks = ";".join(str(2 * K) for K in record.prime_ks)
        out.append(f"{p},{n_p},{int(record.is_sgp)},{two_ks}")
    n_ref = interval_index(args.a, primes[0])
    from prothforge.density import alpha3, alpha4, alpha5

    a3 = alpha3(args.a, n_ref)
    a4 = alpha4(args.a, n_ref)
    a5 = alpha5(args.a, n_ref)
    frac = hits / len(primes)
    out.append(f"# sampled={len(primes)} start=10^{args.digits - 1} a={args.a}")
    out.append(f"# observed_sgp={hits} fraction={frac:.6f}")
    a3_text = "--" if a3 is None else f"{a3:.6f}"
    out.append(
        f"# interval n={n_ref}: alpha3={a3_text} alpha4={a4:.6f} alpha5={a5:.6f}"
    )
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _json_ready(value):
    if value is None or isinstance(value, (int, float)):
        return value
    if isinstance(value, LogReal):
        return value.sci(9)
    return float(value)


def _cmd_estimate(args) -> int:
    rep = estimate_report(args.a, args.n)
    payload = {
        "a": rep.a,
        "n": rep.n,
        "alpha1": _json_ready(rep.alpha1),
        "alpha2": _json_ready(rep.alpha2),
        "alpha3": _json_ready(rep.alpha3),
        "alpha4": _json_ready(rep.alpha4),
        "alpha5": _json_ready(rep.alpha5),
        "li_interval": _json_ready(rep.li_interval),
        "expected_sgp": {
            str(k): _json_ready(v) for k, v in sorted(rep.expected.items())
        },
    }
    print(json.dumps(payload, indent=2))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except MemoryBudgetError as exc:
        print(f"memory budget: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 64


if __name__ == "__main__":
    sys.exit(main())
