"""Command-line front end: ``alpert {gen,wavelets,verify,eval,transform}``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from pathlib import Path

import numpy as np

from .exact import SurdValue
from .refinement import (
    PATHS,
    build_coeff_matrices,
    resolve_subsubdiagonal,
    verify_orthogonality,
    verify_refinement_pointwise,
)
from .legendre import eval_scaling_vector
from .waveletsolve import (
    build_wavelet_matrices,
    dnm1_closed_form,
    dnm2_closed_form,
    eval_wavelet_vector,
    parity_basis_complete,
    verify_lemma_even,
    verify_wavelet_orthogonality,
    wavelet_moments,
    wavelet_row_nm3_closed_form,
)
from . import fourier, recurrences, transform

SCOPES = ("orthogonality", "recurrences", "fourier", "wavelets", "oracle")
THREADS_ENV = "ALPERT_THREADS"
FOURIER_TOL = {"two_scale": 1e-10, "addition": 1e-10, "derivative": 1e-9}


class UsageError(Exception):
    pass


# ---- formatting ---------------------------------------------------------

def format_decimal(x, digits: int) -> str:
    """``x`` rounded half-even to ``digits`` significant digits."""
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    if isinstance(x, SurdValue) and x.is_rational():
        x = x.as_rational()
    if isinstance(x, Fraction):
        wide = Context(prec=digits + 40)
        d = wide.divide(Decimal(x.numerator), Decimal(x.denominator))
    elif isinstance(x, SurdValue):
        d = Decimal(mp_str(x, digits + 20))
    else:
        d = Decimal(repr(float(x)))
    if not d:
        return "0"
    return format(ctx.plus(d), "g")


def mp_str(x: SurdValue, digits: int) -> str:
    import mpmath
    prec = int(digits * 3.33) + 64
    return mpmath.nstr(x.to_mpf(prec), digits, strip_zeros=False, min_fixed=-10**9, max_fixed=10**9)


def _matrix_json(M) -> list:
    return [[x.to_json() for x in row] for row in M]


def _matrix_str(M) -> list:
    return [[str(x) for x in row] for row in M]


def coeff_payload(C) -> dict:
    return {"order": C.order, "C1": _matrix_json(C.C1), "Cm1": _matrix_json(C.Cm1), "C1_text": _matrix_str(C.C1)}


def wavelet_payload(D) -> dict:
    if D.exact:
        D1, Dm1, text = _matrix_json(D.D1), _matrix_json(D.Dm1), _matrix_str(D.D1)
    else:
        import mpmath
        as_str = lambda M: [[mpmath.nstr(x, 70) for x in row] for row in M]
        D1, Dm1, text = as_str(D.D1), as_str(D.Dm1), as_str(D.D1)
    return {"order": D.order, "exact": D.exact, "fallback_rows": list(D.fallback_rows),
            "D1": D1, "Dm1": Dm1, "D1_text": text}


def matrices_csv(named: dict, digits: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["matrix", "i", "j", "value"])
    for name, M in named.items():
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                w.writerow([name, i, j, format_decimal(x, digits)])
    return buf.getvalue()


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


# ---- verification -------------------------------------------------------

def _oracle_suite(n: int) -> dict:
    built = {p: build_coeff_matrices(n, p) for p in PATHS}
    ref = built["oracle"]
    mismatched = [p for p, C in built.items() if C != ref]
    return {"ok": not mismatched, "paths": list(PATHS), "mismatched_paths": mismatched}


def _orthogonality_suite(n: int) -> dict:
    ortho = verify_orthogonality(n)
    pointwise = verify_refinement_pointwise(n)
    return {"ok": ortho and pointwise["ok"], "gram": ortho, "refinement_pointwise": pointwise["ok"]}


def _recurrence_suite(n: int) -> dict:
    rep = recurrences.recurrence_report(n)
    counts = {k: len(rep[k]) for k in ("geneigi", "geneigj", "recurij")}
    pdde = rep["pdde"]
    widest = pdde["maximal_range"]
    ok = not any(counts.values()) and rep["regenerated_equals_direct"] and (n < 2 or widest is not None)
    return {"ok": bool(ok), "violations": counts, "pdde_valid_ranges": pdde["valid_ranges"],
            "pdde_maximal_range": widest, "geneigj_boundary": rep["geneigj_boundary"],
            "regenerated_equals_direct": rep["regenerated_equals_direct"]}


def _fourier_suite(n: int) -> dict:
    res = fourier.fourier_report(n)
    residuals = {k: res[k] for k in FOURIER_TOL}
    return {"ok": all(residuals[k] < FOURIER_TOL[k] for k in FOURIER_TOL), "max_residuals": residuals,
            "tolerances": FOURIER_TOL}


def _wavelet_suite(n: int) -> dict:
    C = build_coeff_matrices(n)
    D = build_wavelet_matrices(C)
    out = {"exact": D.exact, "fallback_rows": list(D.fallback_rows),
           "orthogonality": verify_wavelet_orthogonality(C, D),
           "parity_basis_complete": parity_basis_complete(C, D)}
    if D.exact:
        out["vanishing_moments"] = all(not x for m in range(n + 1) for x in wavelet_moments(D, m))
        if n >= 2:
            out["row_n-1"] = list(D.D1[n - 1][n - 1:]) == dnm1_closed_form(n)
            out["row_n-2"] = list(D.D1[n - 2][n - 2:]) == dnm2_closed_form(n)
        if n >= 3:
            out["row_n-3"] = list(D.D1[n - 3][n - 3:]) == wavelet_row_nm3_closed_form(n)
    if n >= 2:
        lemma = verify_lemma_even(n)
        out["lemma_even_zero_pattern"] = lemma["zero_pattern"]
        out["lemma_even_correspondence"] = lemma["correspondence"]
    out["ok"] = all(v for k, v in out.items() if k not in ("exact", "fallback_rows", "lemma_even_correspondence"))
    return out


SUITES = {
    "orthogonality": _orthogonality_suite,
    "recurrences": _recurrence_suite,
    "fourier": _fourier_suite,
    "wavelets": _wavelet_suite,
    "oracle": _oracle_suite,
}


def discrepancies(n: int) -> dict:
    probe = max(n, 6)
    sub = resolve_subsubdiagonal(max(n, 12))
    pdde = recurrences.check_bessel_difference(build_coeff_matrices(probe))
    return {
        "cnm2_radicand": {"entry": sub["entry"], "formula": sub["formula"], "resolved_radicand": sub["resolved"],
                          "candidates": sub["radicands"], "checked": sub["range"],
                          "source": "integration oracle"},
        "pdde_range": {"maximal_range": pdde["maximal_range"], "valid_ranges": pdde["valid_ranges"],
                       "checked_order": probe},
    }


def verify_report(n: int, scopes=SCOPES, threads: int = 1) -> dict:
    scopes = [s for s in SCOPES if s in scopes]
    jobs = [(s, k) for s in scopes for k in range(n + 1)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(lambda job: SUITES[job[0]](job[1]), jobs))
    by_scope = {s: {} for s in scopes}
    for (s, k), r in zip(jobs, results):
        by_scope[s][str(k)] = r
    summary = {s: all(r["ok"] for r in by_scope[s].values()) for s in scopes}
    return {"n": n, "orders": list(range(n + 1)), "scopes": scopes, "passed": summary,
            "ok": all(summary.values()), "discrepancies": discrepancies(n), "results": by_scope}


# ---- subcommands --------------------------------------------------------

def _check_digits(d: int) -> int:
    if not 1 <= d <= 50:
        raise UsageError("--digits must lie in [1, 50]")
    return d


def _check_order(n: int) -> int:
    if n < 0:
        raise UsageError("order must be nonnegative")
    return n


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_gen(args, out) -> int:
    C = build_coeff_matrices(_check_order(args.n), args.path)
    if args.format == "csv":
        out.write(matrices_csv({"C1": C.C1, "Cm1": C.Cm1}, _check_digits(args.digits)))
    else:
        _emit(coeff_payload(C), out)
    return 0


def cmd_wavelets(args, out) -> int:
    D = build_wavelet_matrices(_check_order(args.n))
    if args.format == "csv":
        out.write(matrices_csv({"D1": D.D1, "Dm1": D.Dm1}, _check_digits(args.digits)))
    else:
        _emit(wavelet_payload(D), out)
    return 0


def cmd_verify(args, out) -> int:
    n = _check_order(args.n)
    scopes = []
    for item in args.scope or [",".join(SCOPES)]:
        for s in item.split(","):
            s = s.strip()
            if s not in SCOPES:
                raise UsageError(f"unknown verify scope {s!r}; choose from {', '.join(SCOPES)}")
            scopes.append(s)
    try:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer") from None
    report = verify_report(n, scopes, threads)
    _emit(report, out)
    return 0 if report["ok"] else 1


def cmd_eval(args, out) -> int:
    n = _check_order(args.n)
    digits = _check_digits(args.digits)
    t = _parse_rational(args.t)
    phi = eval_scaling_vector(n, t)
    # Psi_n(t) on [0, 1): the wavelet vector expressed on the unit interval
    psi = eval_wavelet_vector(build_wavelet_matrices(n), n, 2 * t - 1)
    payload = {
        "n": n, "t": str(t),
        "phi": [str(x) for x in phi], "psi": [str(x) for x in psi],
        "phi_float": [format_decimal(x, digits) for x in phi],
        "psi_float": [format_decimal(x, digits) for x in psi],
    }
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "phi", "psi"])
        for k in range(n + 1):
            w.writerow([k, payload["phi_float"][k], payload["psi_float"][k]])
        out.write(buf.getvalue())
    else:
        _emit(payload, out)
    return 0


def _read_values(path: str) -> np.ndarray:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    vals = []
    for line in text.splitlines():
        line = line.split(",")[0].strip()
        if not line:
            continue
        try:
            vals.append(float(line))
        except ValueError:
            raise UsageError(f"not a number in input: {line!r}") from None
    return np.array(vals)


def cmd_transform(args, out) -> int:
    n, m = _check_order(args.order), args.levels
    if m < 0:
        raise UsageError("--levels must be nonnegative")
    if args.threshold is not None and args.threshold < 0:
        raise UsageError("--threshold must be nonnegative")
    vals = _read_values(args.input)
    try:
        if args.input_kind == "samples":
            s = transform.project_samples(vals, n, m)
        else:
            if vals.size != (1 << m) * (n + 1):
                raise UsageError(f"expected {(1 << m) * (n + 1)} coefficients, got {vals.size}")
            s = vals.reshape(1 << m, n + 1)
    except transform.TransformError as exc:
        raise UsageError(str(exc)) from None
    tree = transform.forward(s, n)
    payload = tree.to_dict()
    if args.threshold is not None:
        tree, kept = transform.threshold_compress(tree, args.threshold)
        payload = tree.to_dict()
        payload["threshold"] = args.threshold
        payload["kept"] = kept
    text = json.dumps(payload, indent=2) + "\n"
    if args.output in (None, "-"):
        out.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alpert", description="Exact Alpert multiwavelet matrices and transforms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt=True):
        sp.add_argument("n", type=int, help="order (polynomial degree)")
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
            sp.add_argument("--digits", type=int, default=17, help="significant digits for float export, 1..50")

    g = sub.add_parser("gen", help="refinement matrices C1, C-1")
    common(g)
    g.add_argument("--path", choices=PATHS, default="2f1-half", help="formula used for the entries")
    common(sub.add_parser("wavelets", help="wavelet matrices D1, D-1"))
    v = sub.add_parser("verify", help="run verification suites on orders 0..n")
    common(v, fmt=False)
    v.add_argument("--scope", action="append", help=f"comma list from {', '.join(SCOPES)}; repeatable")
    e = sub.add_parser("eval", help="scaling and wavelet vectors at a rational point t in [0,1)")
    common(e)
    e.add_argument("t", help="rational point such as 1/3")
    t = sub.add_parser("transform", help="forward multiwavelet transform of finest-level data")
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--levels", type=int, required=True)
    t.add_argument("--input", required=True, help="CSV file, one value per line ('-' for stdin)")
    t.add_argument("--output", help="JSON file (default stdout)")
    t.add_argument("--threshold", type=float)
    t.add_argument("--input-kind", choices=("samples", "coeffs"), default="coeffs")
    return p


COMMANDS = {"gen": cmd_gen, "wavelets": cmd_wavelets, "verify": cmd_verify, "eval": cmd_eval,
            "transform": cmd_transform}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if hasattr(args, "digits"):
            _check_digits(args.digits)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
