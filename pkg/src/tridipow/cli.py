"""Command-line front end.

Usage::

    tridipow spectrum --family A --n 3 --a 1 --b 3
    tridipow power --family A --n 5 --a 1 --b 3 --r 4
    tridipow det --family A_DAGGER --n 10 --a 1 --b 0,1
    tridipow factor --sequence pell --n 12
    tridipow verify --max-n 16

Complex numbers are written ``re`` or ``re,im``. Reports go to stdout as
JSON (``--output json``, the default) or plain text (``--output pretty``).

Exit codes:
    0 - success
    2 - bad arguments or a precondition violation
    3 - a verification/cross-check failed
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any

import numpy as np

from . import errata, fibfact, numkit, powers, specmat, verify
from .specmat import Family, FamilySpec

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3

EIGEN_RTOL = 1e-10
DET_RTOL = 1e-9
FACTOR_RTOL = 1e-9


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"non-finite component in {text!r}")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def parse_family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# --- serialisation -------------------------------------------------------

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x!r}")
    return "%.17g" % x


def to_json(obj: Any) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits.

    Re-parsing the output and serialising again gives identical bytes.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"not serialisable: {type(obj).__name__}")


def cplx(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def matrix_payload(m: np.ndarray) -> dict:
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def spec_payload(spec: FamilySpec) -> dict:
    return {"family": spec.family.value, "n": spec.n, "a": cplx(spec.a), "b": cplx(spec.b)}


def report(command: str, inputs: dict, outputs: dict, residuals: dict, notes=()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "residuals": residuals,
        "errata_notes": list(notes),
    }


# --- commands ------------------------------------------------------------

def _spec_from(args) -> FamilySpec:
    return FamilySpec(args.family, args.n, args.a, args.b)


def cmd_spectrum(args) -> tuple[dict, bool]:
    spec = _spec_from(args)
    lam = specmat.eigenvalues(spec)
    res = [specmat.eigen_residual(spec, k) for k in range(1, spec.n + 1)]
    notes = errata.fixture_note(spec)
    if spec.n % 2 == 0 and spec.n >= 4:
        notes.append(errata.EVEN_N_EIGENVECTOR_SIGN)
    out = report(
        "spectrum",
        spec_payload(spec),
        {"eigenvalues": [cplx(z) for z in lam], "nodes": specmat.nodes(spec).tolist()},
        {"eigen_residuals": res, "max_eigen_residual": max(res), "tolerance": EIGEN_RTOL},
        notes,
    )
    return out, max(res) <= EIGEN_RTOL


def cmd_power(args) -> tuple[dict, bool]:
    spec = _spec_from(args)
    req = powers.PowerRequest(spec, args.r)
    try:
        result = powers.power(req, crosscheck_max_n=args.crosscheck_max_n)
        passed = True
    except powers.CrossCheckError as exc:
        print(json.dumps({"error": "cross_check_failed", "reason": str(exc)}), file=sys.stderr)
        result = powers.PowerResult(powers.power_closed(req), powers.Method.CLOSED_FORM, None)
        passed = False
    notes = errata.fixture_note(spec, args.r)
    if result.method is powers.Method.CLOSED_FORM:
        notes.append(errata.MODAL_INVERSE_WEIGHTS)
    inputs = spec_payload(spec)
    inputs["r"] = args.r
    out = report(
        "power",
        inputs,
        {"matrix": matrix_payload(result.value), "method": result.method.value},
        {"cross_check_residual": result.cross_check_residual},
        notes,
    )
    return out, passed


def cmd_det(args) -> tuple[dict, bool]:
    spec = _spec_from(args)
    by_recurrence = numkit.tridiag_det(specmat.build(spec))
    by_eigen = complex(np.prod(specmat.eigenvalues(spec)))
    resid = abs(by_recurrence - by_eigen) / max(1.0, abs(by_eigen))
    tol = DET_RTOL * max(1.0, spec.n / 15)
    out = report(
        "det",
        spec_payload(spec),
        {"det_recurrence": cplx(by_recurrence), "det_eigen_product": cplx(by_eigen)},
        {"relative": resid, "tolerance": tol},
        errata.fixture_note(spec),
    )
    return out, resid <= tol


def _exact_arg(x: complex):
    if x.imag == 0 and x.real.is_integer():
        return int(x.real)
    return x


def cmd_factor(args) -> tuple[dict, bool]:
    n, seq = args.n, args.sequence
    inputs: dict[str, Any] = {"sequence": seq, "n": n}
    notes: list[str] = []
    if seq == "fibpoly":
        if args.x is None:
            raise UsageError("--x is required for --sequence fibpoly")
        if n < 2:
            raise UsageError("fibpoly factorization needs n >= 2")
        x = _exact_arg(args.x)
        inputs["x"] = cplx(args.x)
        exact = fibfact.fib_poly(n, x)
        product = fibfact.fibpoly_factor_product(n + 1, x)
    else:
        if n < 1:
            raise UsageError("n must be >= 1")
        if seq == "fib":
            exact, product = fibfact.fib(n), fibfact.fib_factor_product(n)
        else:
            exact, product = fibfact.pell(n), fibfact.pell_factor_product(n)
        notes.append(errata.DAGGER_VARIANT_HYPOTHESIS)
    resid = abs(product - exact) / max(1.0, abs(exact))
    tol = FACTOR_RTOL * max(1.0, n / 40)
    exact_out = exact if isinstance(exact, int) else cplx(exact)
    out = report(
        "factor",
        inputs,
        {"exact": exact_out, "product": cplx(product)},
        {"relative": resid, "tolerance": tol},
        notes,
    )
    return out, resid <= tol


def cmd_verify(args) -> tuple[dict, bool]:
    max_n = args.max_n
    if max_n is None:
        env = os.environ.get("VERIFY_MAX_N")
        try:
            max_n = int(env) if env else verify.DEFAULT_MAX_N
        except ValueError:
            raise UsageError(f"VERIFY_MAX_N must be an integer, got {env!r}") from None
    if max_n < 2:
        raise UsageError("max-n must be >= 2")
    outcomes = verify.run_all(max_n)
    props = [
        {"name": o.name, "passed": o.passed, "worst": o.worst, "tolerance": o.tolerance, "cases": o.cases}
        for o in outcomes
    ]
    ok = all(o.passed for o in outcomes)
    out = report(
        "verify",
        {"max_n": max_n},
        {"properties": props, "passed": ok},
        {o.name: o.worst for o in outcomes},
        [errata.MODAL_INVERSE_WEIGHTS, errata.EVEN_N_EIGENVECTOR_SIGN],
    )
    return out, ok


# --- argument parsing ----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(json.dumps({"error": "usage", "reason": message}), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_spec_args(p: argparse.ArgumentParser, family_default: str | None = None):
    p.add_argument("--family", type=parse_family, required=family_default is None,
                   default=None if family_default is None else Family.parse(family_default),
                   help="A or A_DAGGER")
    p.add_argument("--n", type=int, required=True, help="matrix order")
    p.add_argument("--a", type=parse_complex, required=True, help="diagonal parameter, 're' or 're,im'")
    p.add_argument("--b", type=parse_complex, required=True, help="off-diagonal parameter (nonzero)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tridipow", description=__doc__.split("\n\n")[0])
    parser.add_argument("--output", choices=["json", "pretty"], default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="closed-form eigenvalues with eigenpair residuals")
    _add_spec_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("power", help="integer power of family A")
    _add_spec_args(p, family_default="A")
    p.add_argument("--r", type=int, required=True, help="integer exponent (may be negative)")
    p.add_argument("--crosscheck-max-n", type=int, default=powers.CROSSCHECK_MAX_N,
                   help="cross-check against the oracle up to this order")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("det", help="determinant via recurrence and via eigenvalue product")
    _add_spec_args(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("factor", help="Fibonacci/Pell values from complex eigenvalue products")
    p.add_argument("--sequence", choices=["fib", "pell", "fibpoly"], required=True)
    p.add_argument("--n", type=int, required=True, help="sequence index")
    p.add_argument("--x", type=parse_complex, default=None, help="argument for fibpoly")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", help="run the full property sweep")
    p.add_argument("--max-n", type=int, default=None, help="extend sweep ranges (env VERIFY_MAX_N)")
    p.set_defaults(func=cmd_verify)

    # --output is accepted after the subcommand as well
    for choice in sub.choices.values():
        choice.add_argument("--output", choices=["json", "pretty"], default=argparse.SUPPRESS)
    return parser


def render_pretty(rep: dict) -> str:
    lines = [f"command: {rep['command']}"]
    for section in ("inputs", "outputs", "residuals"):
        lines.append(f"{section}:")
        for key, val in rep[section].items():
            lines.append(f"  {key}: {_pretty_value(val)}")
    for note in rep["errata_notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _pretty_value(val) -> str:
    if isinstance(val, dict) and set(val) == {"re", "im"}:
        re_, im_ = val["re"], val["im"]
        if isinstance(re_, list):
            m = np.array(re_) + 1j * np.array(im_)
            with np.printoptions(precision=10, suppress=True):
                return "\n" + str(m if np.any(m.imag) else m.real)
        return f"{complex(re_, im_):.12g}"
    if isinstance(val, list) and val and isinstance(val[0], dict) and "name" in val[0]:
        return "".join(
            f"\n    [{'PASS' if v['passed'] else 'FAIL'}] {v['name']}: worst={v['worst']:.3e} tol={v['tolerance']:.0e}"
            for v in val
        )
    if isinstance(val, list):
        return ", ".join(_pretty_value(v) for v in val)
    if isinstance(val, float):
        return f"{val:.6g}"
    return str(val)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep, passed = args.func(args)
    except (UsageError, ValueError, IndexError, numkit.SingularMatrixError) as exc:
        print(json.dumps({"error": type(exc).__name__, "reason": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    if args.output == "json":
        print(to_json(rep))
    else:
        print(render_pretty(rep))
    return EXIT_OK if passed else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
