"""Command-line surface: bases, Groebner data, dimensions, actions, suites.

Every command emits a deterministic document with fixed key order
{"n", "m", "command", "result", "checks"}; with --json the document is
printed as JSON, otherwise as readable text.  The exit code is 0 exactly
when every check passes; usage and parse problems exit 2, resource-cap
violations exit 3.

Caps default to a group-enumeration limit of 10^4 elements and a
kernel-matrix limit of 10^6 entries; the environment variables
QUASICOV_MAX_GROUP_ORDER and QUASICOV_MAX_KERNEL_ENTRIES override them.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from math import factorial

from .errors import ResourceLimitError
from .group import (
    DEFAULT_MAX_GROUP_ORDER,
    classical_act,
    parse_group_element,
    quasi_act,
)
from .groebner import quasi_ideal_basis, standard_monomials
from .hilbert import (
    DEFAULT_MAX_KERNEL_ENTRIES,
    kernel_dims_until_zero,
    quotient_series,
    series_from_monomials,
    single_prefactor_series,
)
from .paths import catalan, quotient_basis
from .polynomials import parse_polynomial, render_polynomial
from .verify import SUITES, run_suite


@dataclass
class RunConfig:
    n: int
    m: int
    degree_bound: int | None = None
    as_json: bool = False
    out: str | None = None
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    max_kernel_entries: int = DEFAULT_MAX_KERNEL_ENTRIES


def _vector_text(nu) -> str:
    return "(" + ",".join(str(e) for e in nu) + ")"


def _histogram(vectors) -> list:
    if not vectors:
        return []
    top = max(sum(nu) for nu in vectors)
    hist = [0] * (top + 1)
    for nu in vectors:
        hist[sum(nu)] += 1
    return hist


def _document(config: RunConfig, command: str, result, checks) -> dict:
    return {
        "n": config.n,
        "m": config.m,
        "command": command,
        "result": result,
        "checks": checks,
    }


def _check(name, expected, actual):
    return {"name": name, "expected": expected, "actual": actual, "pass": expected == actual}


def cmd_basis(config: RunConfig) -> dict:
    vectors = quotient_basis(config.n, config.m)
    target = config.m**config.n * catalan(config.n)
    result = {
        "count": len(vectors),
        "histogram": _histogram(vectors),
        "monomials": [list(nu) for nu in vectors],
    }
    checks = [_check("count_equals_dimension_formula", target, len(vectors))]
    return _document(config, "basis", result, checks)


def cmd_groebner(config: RunConfig) -> dict:
    basis = quasi_ideal_basis(config.n, config.m, config.degree_bound)
    sms = standard_monomials(basis, basis.degree_bound)
    result = {
        "degree_bound": basis.degree_bound,
        "reduced": basis.reduced,
        "basis": [render_polynomial(g) for g in basis.generators],
        "leading_monomials": [list(nu) for nu in basis.leading_monomials()],
        "standard_monomials": {
            "count": len(sms.monomials),
            "complete": sms.complete,
            "histogram": sms.degree_histogram(),
            "monomials": [list(nu) for nu in sms.monomials],
        },
    }
    return _document(config, "groebner", result, [])


def cmd_dim(config: RunConfig, method: str) -> dict:
    target = config.m**config.n * catalan(config.n)
    if method == "groebner":
        basis = quasi_ideal_basis(config.n, config.m, config.degree_bound)
        sms = standard_monomials(basis, basis.degree_bound)
        if not sms.complete:
            raise ValueError(
                f"standard monomials not complete at bound {basis.degree_bound}; "
                "raise --degree-bound"
            )
        dimension = len(sms.monomials)
    elif method == "basis":
        dimension = len(quotient_basis(config.n, config.m))
    elif method == "harmonic":
        dims = kernel_dims_until_zero(
            config.n, config.m, "quasi", max_entries=config.max_kernel_entries
        )
        dimension = sum(dims)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = {"method": method, "dimension": dimension}
    checks = [_check("dimension_equals_formula", target, dimension)]
    return _document(config, "dim", result, checks)


def cmd_act(config: RunConfig, element_text: str, poly_text: str, action: str) -> dict:
    element = parse_group_element(element_text, config.n, config.m)
    poly = parse_polynomial(poly_text, config.n, order=config.m)
    act = quasi_act if action == "quasi" else classical_act
    image = act(element, poly)
    result = {
        "action": action,
        "element": element_text.strip(),
        "input": render_polynomial(poly),
        "output": render_polynomial(image),
    }
    return _document(config, "act", result, [])


def cmd_verify(config: RunConfig, suite: str) -> dict:
    checks = run_suite(
        suite,
        config.n,
        config.m,
        max_group_order=config.max_group_order,
        max_kernel_entries=config.max_kernel_entries,
    )
    overall = "pass" if all(c["pass"] for c in checks) else "fail"
    result = {"suite": suite, "status": overall}
    return _document(config, "verify", result, checks)


def cmd_series(config: RunConfig) -> dict:
    basis = quasi_ideal_basis(config.n, config.m, config.degree_bound)
    sms = standard_monomials(basis, basis.degree_bound)
    series = series_from_monomials(sms)
    closed = quotient_series(config.n, config.m)
    literal = single_prefactor_series(config.n, config.m)
    result = {
        "series": str(closed),
        "coefficients": list(closed.coefficients),
        "total": closed.total(),
        "single_prefactor_variant": {
            "series": str(literal),
            "coefficients": list(literal.coefficients),
            "matches": list(literal.coefficients) == list(closed.coefficients),
        },
    }
    checks = [
        _check(
            "standard_monomial_series_equals_closed_series",
            list(closed.coefficients),
            list(series.coefficients),
        )
    ]
    return _document(config, "series", result, checks)


def _render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}  n={doc['n']} m={doc['m']}"]

    def emit(value, indent=""):
        if isinstance(value, dict):
            for key, sub in value.items():
                if isinstance(sub, (dict, list)) and sub and not _is_scalar_list(sub):
                    lines.append(f"{indent}{key}:")
                    emit(sub, indent + "  ")
                else:
                    lines.append(f"{indent}{key}: {_scalar_text(sub)}")
        elif isinstance(value, list):
            for item in value:
                lines.append(f"{indent}- {_scalar_text(item)}")

    emit(doc["result"])
    for check in doc["checks"]:
        status = "pass" if check["pass"] else "FAIL"
        lines.append(
            f"check {check['name']}: {status} "
            f"(expected {_scalar_text(check['expected'])}, "
            f"actual {_scalar_text(check['actual'])})"
        )
    return "\n".join(lines)


def _is_scalar_list(value):
    return isinstance(value, list) and all(
        not isinstance(v, (dict, list)) for v in value
    )


def _scalar_text(value):
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " ".join(_vector_text(v) for v in value)
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasicov",
        description=(
            "Exact quotients by quasi-invariant ideals: bases, Groebner data, "
            "dimensions, group actions and verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bound=False):
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--m", type=int, required=True, help="cyclic order")
        if bound:
            p.add_argument("--degree-bound", type=int, default=None)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("basis", help="quotient basis from lattice-path combinatorics")
    common(p)

    p = sub.add_parser("groebner", help="reduced basis and standard monomials")
    common(p, bound=True)

    p = sub.add_parser("dim", help="quotient dimension by a chosen route")
    common(p, bound=True)
    p.add_argument("--method", choices=("groebner", "basis", "harmonic"), required=True)

    p = sub.add_parser("act", help="apply a group element to a polynomial")
    common(p)
    p.add_argument("--element", required=True, help='e.g. "tau=3,1,2;weights=1,0,1"')
    p.add_argument("--poly", required=True, help='e.g. "x1^2*x2"')
    p.add_argument("--action", choices=("quasi", "classical"), default="quasi")

    p = sub.add_parser("series", help="Hilbert series of the quotient")
    common(p, bound=True)

    p = sub.add_parser("verify", help="run a named verification suite")
    common(p)
    p.add_argument("--suite", choices=SUITES, required=True)

    return parser


def _config_from_args(args) -> RunConfig:
    if args.n < 1 or args.m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={args.n}, m={args.m}")
    max_group = int(os.environ.get("QUASICOV_MAX_GROUP_ORDER", DEFAULT_MAX_GROUP_ORDER))
    max_kernel = int(
        os.environ.get("QUASICOV_MAX_KERNEL_ENTRIES", DEFAULT_MAX_KERNEL_ENTRIES)
    )
    if max_group < 1 or max_kernel < 1:
        raise ValueError("resource caps must be positive")
    return RunConfig(
        n=args.n,
        m=args.m,
        degree_bound=getattr(args, "degree_bound", None),
        as_json=args.json,
        out=args.out,
        max_group_order=max_group,
        max_kernel_entries=max_kernel,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "basis":
            doc = cmd_basis(config)
        elif args.command == "groebner":
            doc = cmd_groebner(config)
        elif args.command == "dim":
            doc = cmd_dim(config, args.method)
        elif args.command == "act":
            doc = cmd_act(config, args.element, args.poly, args.action)
        elif args.command == "series":
            doc = cmd_series(config)
        elif args.command == "verify":
            doc = cmd_verify(config, args.suite)
        else:  # pragma: no cover - argparse enforces the choices
            raise ValueError(f"unknown command {args.command!r}")
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(doc, indent=2) if config.as_json else _render_text(doc)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    failed = [c for c in doc["checks"] if not c["pass"]]
    if failed:
        first = failed[0]
        print(
            f"failed check {first['name']}: expected {first['expected']}, "
            f"actual {first['actual']}",
            file=sys.stderr,
        )
        return 1
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
