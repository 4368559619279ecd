"""Command-line front end: ``hilbertia <command> [options]``.

Exit status is 0 on success, 1 on a domain error (reducible input, exhausted
budget, non-regular point, timeout) and 2 on a usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from fractions import Fraction
from itertools import islice
from typing import Sequence

from . import __version__
from .errors import AlgebraError, PolySyntaxError
from .factor import (Verdict, factor_bipoly_small, factor_unipoly, is_irreducible_bi,
                     is_irreducible_uni)
from .galois import galois_group_deg_le4, specialization_group_experiment
from .hilbert import SearchStrategy, hilbert_count, hilbert_stream, t_search
from .kronecker import (KroneckerParams, full_specialization,
                        kronecker_forward, kronecker_inverse, specialize_first_var_irreducible)
from .poly import BiPoly, UniPoly, as_multi
from .series import (local_form, majorant_dominates, majorant_residual, majorant_series,
                     root_series, divided_difference_ratio, interpolate_rational)
from .text import format_factor, format_poly, infer_variables, parse_poly, read_poly_file


class UsageError(Exception):
    pass


class _Timeout(Exception):
    pass


def _q(x) -> str:
    """Rational as a string: '3', '-1/2'."""
    return str(Fraction(x))


def _num(x) -> str:
    if isinstance(x, complex):
        return repr(x)
    return _q(x)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _scalar(text: str):
    """Rational when possible, else a Python complex literal such as 1.4142+0j."""
    try:
        return Fraction(text.strip())
    except ValueError:
        try:
            return complex(text.strip().replace(" ", ""))
        except ValueError as exc:
            raise UsageError(f"not a number: {text!r}") from exc


@contextmanager
def _deadline(seconds: float | None):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def fire(signum, frame):
        raise _Timeout()

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


class Reporter:
    """Collects one command's result and prints text or a JSON report."""

    def __init__(self, args: argparse.Namespace, out=None):
        self.args = args
        self.out = out or sys.stdout
        self.lines: list[str] = []
        self.result = None
        self.stats: dict = {}

    def line(self, text: str) -> None:
        self.lines.append(text)
        if not self.args.json:
            print(text, file=self.out, flush=True)

    def finish(self, input_desc) -> None:
        if self.args.json:
            report = {
                "command": self.args.command,
                "input": input_desc,
                "result": self.result,
                "stats": self.stats,
                "version": __version__,
            }
            print(json.dumps(report, sort_keys=False), file=self.out, flush=True)


def _variables(args, text: str) -> tuple[str, ...]:
    if getattr(args, "vars", None):
        return tuple(v.strip() for v in args.vars.split(",") if v.strip())
    return infer_variables(text)


def _polys(args) -> list[tuple[str, object, tuple[str, ...]]]:
    """(source, parsed, variables) for --poly or every line of --file."""
    items = []
    if args.poly is not None:
        names = _variables(args, args.poly)
        items.append((args.poly, parse_poly(args.poly, names), names))
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
        lines = [ln for ln in lines if ln]
        names = _variables(args, " ".join(lines))
        for line, poly in zip(lines, read_poly_file(args.file, names)):
            items.append((line, poly, names))
    if not items:
        raise UsageError("give --poly or --file")
    return items


def _one_poly(args):
    if args.poly is None:
        raise UsageError("--poly is required")
    names = _variables(args, args.poly)
    return parse_poly(args.poly, names), names


def _bipoly(poly, names) -> BiPoly:
    if isinstance(poly, BiPoly):
        return poly
    if isinstance(poly, UniPoly) and names == ("Y",):
        return BiPoly.from_unipoly_in_y(poly)
    if isinstance(poly, UniPoly):
        return BiPoly.from_unipoly_in_x(poly)
    raise UsageError("expected a polynomial in two variables (use --vars X,Y)")


# ---------------------------------------------------------------------------
# commands


def cmd_factor(args, rep: Reporter) -> None:
    results = []
    for src, poly, names in _polys(args):
        if isinstance(poly, UniPoly):
            fac = factor_unipoly(poly)
            text = str(fac)
            results.append({"unit": _q(fac.unit),
                            "factors": [[format_poly(g, names), m] for g, m in fac.factors]})
        elif isinstance(poly, BiPoly):
            fac = factor_bipoly_small(poly, args.max_deg_y, args.max_deg_x)
            body = "".join(format_factor(g, names) + (f"^{m}" if m > 1 else "")
                           for g, m in fac.factors)
            x_part = format_poly(fac.x_part, names[:1])
            if not fac.factors:
                text = x_part
            elif fac.x_part == UniPoly([1]):
                text = body
            else:
                text = format_factor(fac.x_part, names[:1]) + body
            results.append({"x_part": x_part,
                            "factors": [[format_poly(g, names), m] for g, m in fac.factors]})
        else:
            raise UsageError("factor handles one or two variables")
        rep.line(text)
    rep.result = results[0] if len(results) == 1 else results


def cmd_irred(args, rep: Reporter) -> None:
    results = []
    for src, poly, names in _polys(args):
        if isinstance(poly, UniPoly):
            ok = is_irreducible_uni(poly)
            rep.line("irreducible" if ok else "reducible")
            results.append({"irreducible": ok})
        else:
            f = _bipoly(poly, names)
            cert = is_irreducible_bi(f, args.budget)
            entry = {"verdict": cert.verdict.value, "content_ok": cert.content_ok,
                     "witness_b": None if cert.witness_b is None else _q(cert.witness_b),
                     "reducible_witness": None}
            text = cert.verdict.value
            if cert.verdict is Verdict.IRREDUCIBLE:
                text += f" (witness b = {cert.witness_b})"
            elif cert.reducible_witness:
                u, v = cert.reducible_witness
                pair = [format_poly(u, names), format_poly(v, names)]
                entry["reducible_witness"] = pair
                text += f" ({pair[0]}) * ({pair[1]})"
            rep.line(text)
            results.append(entry)
    rep.result = results[0] if len(results) == 1 else results


def _strategy(args) -> SearchStrategy:
    kind = {"shifted": "shifted_reciprocal"}.get(args.strategy, args.strategy)
    s0 = _rational(args.s0) if args.s0 is not None else None
    return SearchStrategy(kind, args.budget, s0=s0, start=args.start)


def cmd_hilbert(args, rep: Reporter) -> None:
    poly, names = _one_poly(args)
    f = _bipoly(poly, names)
    if args.range is not None:
        lo, hi = args.range
        stats = hilbert_count(f, lo, hi)
        rep.result = {"tested": stats.tested, "irreducible_count": stats.irreducible_count,
                      "nonregular_count": stats.nonregular_count,
                      "examples": [_q(b) for b in stats.examples]}
        rep.line(f"tested {stats.tested} irreducible {stats.irreducible_count} "
                 f"nonregular {stats.nonregular_count}")
        return
    if args.tsearch is not None:
        s0 = _rational(args.tsearch[0])
        t_max = int(args.tsearch[1])
        rows = t_search(f, s0, t_max)
        rep.result = [[t, _q(b), ok] for t, b, ok in rows]
        reducible = [t for t, _, ok in rows if not ok]
        rep.stats = {"reducible_t": reducible}
        for t, b, ok in rows:
            rep.line(f"{t} {b} {'irreducible' if ok else 'reducible'}")
        return
    found: list[Fraction] = []
    stream = hilbert_stream(f, _strategy(args))
    try:
        for b in islice(stream, args.count):
            found.append(b)
            if not args.json:
                print(("" if len(found) == 1 else " ") + _q(b), end="", flush=True,
                      file=rep.out)
    finally:
        if not args.json and found:
            print(file=rep.out, flush=True)
        rep.result = [_q(b) for b in found]
        rep.stats = {"yielded": len(found)}


def cmd_kron(args, rep: Reporter) -> None:
    if args.inverse:
        poly, names = _one_poly(args)
        g = _bipoly(poly, names)
        params = KroneckerParams(args.d, args.k)
        f = kronecker_inverse(g, params)
        text = format_poly(f)
        rep.result = text
        rep.line(text)
        return
    poly, names = _one_poly(args)
    f = as_multi(poly)
    if args.specialize:
        if args.p is not None:
            pnames = tuple(names[:-1])
            p = as_multi(parse_poly(args.p, pnames))
            point = full_specialization(f, p, args.budget)
            rep.result = [_q(b) for b in point]
            rep.line(" ".join(rep.result))
            return
        values = specialize_first_var_irreducible(f, args.budget, d=args.d)
        rep.result = [_q(b) for b in values]
        rep.stats = {"emitted": len(values), "budget": args.budget}
        rep.line(" ".join(rep.result))
        return
    if args.d is None:
        raise UsageError("--d is required for --forward")
    params = KroneckerParams(args.d, f.nvars)
    g = kronecker_forward(f, params)
    text = format_poly(g)
    rep.result = text
    rep.line(text)


def cmd_series(args, rep: Reporter) -> None:
    if args.majorant is not None:
        s = majorant_series(args.majorant, args.order)
        rep.result = [_q(c) for c in s.coeffs]
        rep.stats = {"residual_zero": all(c == 0 for c in majorant_residual(args.majorant, s))}
        rep.line(" ".join(rep.result))
        return
    poly, names = _one_poly(args)
    f = _bipoly(poly, names)
    b = _scalar(args.b)
    y0 = _scalar(args.y0)
    if args.check:
        ok = majorant_dominates(f, b, y0, args.order)
        lf = local_form(f, b, y0)
        rep.result = {"dominates": ok, "A": lf.A}
        rep.line(f"A = {lf.A}: {'dominated' if ok else 'NOT dominated'} up to order {args.order}")
        return
    s = root_series(f, b, y0, args.order)
    rep.result = [_num(c) for c in s.coeffs]
    rep.line(" ".join(rep.result))


def cmd_divdiff(args, rep: Reporter) -> None:
    r = divided_difference_ratio(_rational_list(args.nodes), _rational_list(args.values))
    rep.result = _q(r)
    rep.line(rep.result)


def cmd_interp(args, rep: Reporter) -> None:
    g = interpolate_rational(_rational_list(args.nodes), _rational_list(args.values))
    rep.result = format_poly(g)
    rep.line(rep.result)


def cmd_galois(args, rep: Reporter) -> None:
    if args.experiment:
        table = specialization_group_experiment(args.degree, args.box, args.samples, args.seed)
        rep.result = table
        rep.line(" ".join(f"{k}={v}" for k, v in table.items()))
        return
    results = []
    for src, poly, names in _polys(args):
        if not isinstance(poly, UniPoly):
            raise UsageError("galois classify needs a univariate polynomial")
        label = galois_group_deg_le4(poly)
        results.append({"group": label.name, "order": label.order})
        rep.line(label.name)
    rep.result = results[0] if len(results) == 1 else results


# ---------------------------------------------------------------------------
# argument parsing


def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="print a JSON report")
    p.add_argument("--budget", type=int, default=d(None),
                   help="candidates to test in searches (default depends on command)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random sampling")
    p.add_argument("--timeout-seconds", type=float, default=d(None),
                   help="stop after this many seconds, keeping partial output")


def _poly_args(p: argparse.ArgumentParser, file_ok: bool = True) -> None:
    p.add_argument("--poly", help="polynomial text, e.g. 'Y^2 - X'")
    p.add_argument("--vars", help="comma-separated variable names (default: inferred)")
    if file_ok:
        p.add_argument("--file", help="file with one polynomial per line, '#' comments")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbertia",
                                     description="Exact irreducibility and specialization tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("factor", help="factor over Q (one or two variables)")
    _poly_args(p)
    p.add_argument("--max-deg-y", type=int, default=6)
    p.add_argument("--max-deg-x", type=int, default=12)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("irred", help="irreducibility test or certificate")
    _poly_args(p)
    p.set_defaults(func=cmd_irred, default_budget=100)

    p = sub.add_parser("hilbert", help="values b with f(b, Y) irreducible")
    _poly_args(p, file_ok=False)
    p.add_argument("--count", type=int, default=10, help="values to print (stream mode)")
    p.add_argument("--strategy", choices=["naturals", "integers", "rationals", "shifted"],
                   default="naturals")
    p.add_argument("--start", type=int, default=0, help="first natural for --strategy naturals")
    p.add_argument("--s0", help="base point for --strategy shifted")
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"),
                   help="count mode: exact statistics over integers LO..HI")
    p.add_argument("--tsearch", nargs=2, metavar=("S0", "TMAX"),
                   help="report irreducibility at S0 + 1/t for t = 1..TMAX")
    p.set_defaults(func=cmd_hilbert, default_budget=1000)

    p = sub.add_parser("kron", help="Kronecker specialization")
    _poly_args(p, file_ok=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--forward", action="store_true", help="S_d(f) (default)")
    mode.add_argument("--inverse", action="store_true", help="inverse on W_d (needs --d, --k)")
    mode.add_argument("--specialize", action="store_true",
                      help="values b with f(b, X2, ...) irreducible; with --p, a full point")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--p", help="side condition p(b1..b_{k-1}) != 0 for --specialize")
    p.set_defaults(func=cmd_kron, default_budget=100)

    p = sub.add_parser("series", help="root series, majorant, domination check")
    _poly_args(p, file_ok=False)
    p.add_argument("--b", default="0")
    p.add_argument("--y0", default="0")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--majorant", type=int, metavar="A", help="print the majorant series for A")
    p.add_argument("--check", action="store_true", help="check |b_k| <= A_k")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("divdiff", help="W_m / V_m for nodes and values")
    p.add_argument("--nodes", required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_divdiff)

    p = sub.add_parser("interp", help="interpolating polynomial")
    p.add_argument("--nodes", required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("galois", help="Galois group (degree <= 4) or specialization experiment")
    _poly_args(p)
    p.add_argument("--experiment", action="store_true")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--box", type=int, default=20)
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=cmd_galois)

    for action in sub.choices.values():
        _add_global(action, suppress=True)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.budget is None:
        args.budget = getattr(args, "default_budget", 100)
    rep = Reporter(args, out)
    input_desc = {k: v for k, v in vars(args).items()
                  if k not in ("func", "default_budget") and v is not None}
    try:
        with _deadline(args.timeout_seconds):
            args.func(args, rep)
    except _Timeout:
        rep.stats["timed_out"] = True
        rep.finish(input_desc)
        print(f"error: timed out after {args.timeout_seconds} s", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        rep.stats["interrupted"] = True
        rep.finish(input_desc)
        return 130
    except (UsageError, PolySyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.finish(input_desc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
