"""Command-line front end.

Digit lists on the command line are little-endian (a0 first); displayed
digit strings are big-endian, matching the usual way numbers are written.
Exit codes: 0 success, 1 bad input, 2 broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import convert as conv
from . import furstenberg as fb
from . import grid as grid_mod
from . import poly as poly_mod
from . import yangbaxter as yb_mod
from .core import DigitString, MixedRadixBasis, PreconditionError, decompose

SCHEMA_PREFIX = "mixedradix"


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError as exc:
        raise PreconditionError(f"expected comma-separated integers, got {text!r}") from exc


def _fracs(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",") if t != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"expected comma-separated rationals, got {text!r}") from exc


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"expected a rational like 7/13, got {text!r}") from exc


def _depth(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise PreconditionError(f"expected a depth like 4x4, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise PreconditionError(f"expected a depth like 4x4, got {text!r}") from exc


def _digit_display(digits, radices) -> str:
    # big-endian; concatenated when every digit is a single character
    big = list(reversed(list(digits)))
    if all(b <= 10 for b in radices):
        return "".join(str(a) for a in big)
    return ":".join(str(a) for a in big)


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj))


def _cmd_convert(args) -> int:
    p, q = args.src, args.dst
    if (args.digits is None) == (args.value is None):
        raise PreconditionError("provide exactly one of --digits or --value")
    if args.digits is not None:
        digits = _ints(args.digits)
    else:
        n = int(args.value)
        if n < 0:
            raise PreconditionError(f"--value must be non-negative, got {n}")
        digits = []
        while n:
            n, a = divmod(n, p)
            digits.append(a)
        digits = digits or [0]
    out = conv.convert_radix(digits, p, q, mode=args.mode, engine=args.engine)
    stats = conv.conversion_stats()
    if args.format == "json":
        obj = {
            "schema": f"{SCHEMA_PREFIX}/convert/1",
            "from": p,
            "to": q,
            "digits": out,
        }
        if args.stats:
            obj["stats"] = {
                "psi_applications": stats.psi_applications,
                "divisions_in_inner_loop": stats.divisions_in_inner_loop,
                "columns": stats.columns,
            }
        _emit_json(obj)
    else:
        print(f"{_digit_display(out, [q])} (base {q})")
        if args.stats:
            print(
                f"psi applications: {stats.psi_applications}, "
                f"inner-loop divisions: {stats.divisions_in_inner_loop}, "
                f"columns: {stats.columns}"
            )
    return 0


def _cmd_decompose(args) -> int:
    basis = MixedRadixBasis(_ints(args.basis))
    d = decompose(args.n, basis)
    if args.format == "json":
        obj = json.loads(d.to_json())
        obj["schema"] = f"{SCHEMA_PREFIX}/digits/1"
        _emit_json(obj)
    else:
        print(_digit_display(d.digits, basis.radices))
    return 0


def _cmd_grid(args) -> int:
    dec = grid_mod.decoration_of_integer(args.n, args.p, args.q, args.l1, args.l2)
    if args.word is not None:
        w = grid_mod.BasisWord(args.word, args.p, args.q)
        d = grid_mod.read_along_path(dec, w)
        if args.format == "json":
            obj = json.loads(d.to_json())
            obj["schema"] = f"{SCHEMA_PREFIX}/digits/1"
            _emit_json(obj)
        else:
            print(d.human())
        return 0
    if args.format == "json":
        obj = json.loads(dec.to_json())
        obj["schema"] = f"{SCHEMA_PREFIX}/decoration/1"
        _emit_json(obj)
    else:
        print(grid_mod.render_grid(dec))
    return 0


def _report_out(rep, args) -> int:
    if args.format == "json":
        _emit_json(
            {
                "schema": f"{SCHEMA_PREFIX}/report/1",
                "holds": rep.holds,
                "checked": rep.checked,
                "counterexample": list(rep.counterexample) if rep.counterexample else None,
            }
        )
    else:
        verdict = "holds" if rep.holds else f"FAILS at {rep.counterexample}"
        print(f"{verdict} (checked {rep.checked})")
    if not rep.holds:
        raise AssertionError("consistency check produced a counterexample")
    return 0


def _cmd_yb(args) -> int:
    if args.kind == "psi":
        p1, p2, p3 = _ints(args.radices)
        return _report_out(yb_mod.yb_check_psi(p1, p2, p3), args)
    if args.kind == "phi":
        a1, a2, a3 = _fracs(args.nodes)
        return _report_out(
            yb_mod.yb_check_phi(a1, a2, a3, samples=args.samples, seed=args.seed), args
        )
    # cube: both braid words on the digits of one integer
    radices = _ints(args.radices)
    if len(radices) != 3:
        raise PreconditionError(f"need exactly 3 radices, got {len(radices)}")
    return _report_out(yb_mod.braid_transform_consistency(args.n, tuple(radices)), args)


def _cmd_poly(args) -> int:
    p = poly_mod.ExactPoly(_fracs(args.coeffs))
    if args.kind == "eval":
        val = p(_frac(args.y))
        print(json.dumps({"schema": f"{SCHEMA_PREFIX}/value/1", "value": str(val)})
              if args.format == "json" else val)
        return 0
    if args.kind == "derivs":
        ds = poly_mod.derivatives(p, _frac(args.y), args.k)
        if args.format == "json":
            _emit_json({"schema": f"{SCHEMA_PREFIX}/values/1", "values": [str(d) for d in ds]})
        else:
            print(" ".join(str(d) for d in ds))
        return 0
    basis = poly_mod.PolyBasis(_fracs(args.nodes))
    nc = poly_mod.to_newton(p, basis)
    if args.format == "json":
        _emit_json(
            {
                "schema": f"{SCHEMA_PREFIX}/newton/1",
                "nodes": [str(a) for a in basis.nodes],
                "coeffs": [str(c) for c in nc.coeffs],
            }
        )
    else:
        print(" ".join(str(c) for c in nc.coeffs))
    return 0


def _render_quadrant(w: fb.QuadrantWindow) -> str:
    # top-right corner is the origin; leftmost column is the deepest
    width = max(
        [len(str(a)) for row in w.beta_h for a in row]
        + [len(str(a)) for row in w.beta_v for a in row]
        + [1]
    )
    lines = []
    for j in range(w.depth_n + 1):
        lines.append(
            " " * ((width + 1) // 2)
            + " ".join(str(w.beta_h[i][j]).rjust(width) for i in range(w.depth_m - 1, -1, -1))
        )
        if j < w.depth_n:
            lines.append(
                " ".join(str(w.beta_v[i][j]).rjust(width) for i in range(w.depth_m, -1, -1))
            )
    return "\n".join(lines)


def _cmd_furstenberg(args) -> int:
    if args.kind == "orbit":
        tables = [fb.orbit(args.k, args.r, args.p)]
        if args.q is not None:
            tables.append(fb.orbit(args.k, args.r, args.q))
        if args.format == "json":
            _emit_json(
                {
                    "schema": f"{SCHEMA_PREFIX}/orbit/1",
                    "orbits": [
                        {"r": t.r, "p": t.p, "numerators": list(t.numerators)} for t in tables
                    ],
                }
            )
        else:
            for t in tables:
                print(" ".join(str(x) for x in t.numerators))
        return 0
    if args.kind == "quadrant":
        m, n = _depth(args.depth)
        w = fb.quadrant(_frac(args.x), args.p, args.q, m, n)
        if args.format == "json":
            obj = w.to_json_obj()
            obj["schema"] = f"{SCHEMA_PREFIX}/quadrant/1"
            if args.rudolph:
                obj["rudolph"] = fb.rudolph_array(w)
                obj["rudolph_diagonal"] = list(fb.rudolph_diagonal(w))
            _emit_json(obj)
        else:
            if args.render:
                print(_render_quadrant(w))
            else:
                print("base-p row:", " ".join(str(a) for a in w.top_row))
                print("base-q column:", " ".join(str(a) for a in w.right_column))
            if args.rudolph:
                print("rudolph diagonal:", " ".join(str(a) for a in fb.rudolph_diagonal(w)))
        return 0
    m, n = _depth(args.depth)
    stack = fb.layer_fill(args.k, args.r, args.p, args.q, m, n)
    if args.format == "json":
        _emit_json(
            {
                "schema": f"{SCHEMA_PREFIX}/layers/1",
                "p": stack.p,
                "q": stack.q,
                "r": stack.r,
                "layer1": stack.layer1.to_json_obj(),
                "layer2": stack.layer2.to_json_obj(),
                "transversal": [list(row) for row in stack.transversal],
            }
        )
    else:
        print("transversal row 0:", " ".join(str(x) for x in stack.transversal[0]))
        print("transversal column 0:", " ".join(str(r[0]) for r in stack.transversal))
        print("layer 1:")
        print(_render_quadrant(stack.layer1))
        print("layer 2: all zeros")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mixedradix",
        description="Mixed radix digit toolbox (digit lists are little-endian, "
        "display is big-endian)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("convert", help="change the radix of a digit string")
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.add_argument("--digits", help="little-endian digits a0,a1,...")
    p.add_argument("--value", help="decimal value instead of digits")
    p.add_argument("--mode", choices=("height", "carry"), default="height")
    p.add_argument("--engine", choices=("auto", "numba", "python"), default="auto")
    p.add_argument("--stats", action="store_true")
    fmt(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("decompose", help="digits of n in a mixed radix basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", required=True, help="radices b1,b2,...")
    fmt(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("grid", help="edge-decorated rectangle of an integer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--word", help="path word over P/Q to read digits along")
    fmt(p)
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("yb", help="Yang-Baxter consistency checks")
    ysub = p.add_subparsers(dest="kind", required=True)
    y = ysub.add_parser("psi", help="digit rewrite, exhaustive")
    y.add_argument("--radices", required=True, help="p1,p2,p3")
    fmt(y)
    y.set_defaults(func=_cmd_yb)
    y = ysub.add_parser("phi", help="polynomial shear, symbolic + sampled")
    y.add_argument("--nodes", required=True, help="a1,a2,a3 (rationals)")
    y.add_argument("--samples", type=int, default=100)
    y.add_argument("--seed", type=int, default=0)
    fmt(y)
    y.set_defaults(func=_cmd_yb)
    y = ysub.add_parser("cube", help="both braid words on the digits of n")
    y.add_argument("--n", type=int, required=True)
    y.add_argument("--radices", required=True, help="p1,p2,p3")
    fmt(y)
    y.set_defaults(func=_cmd_yb)

    p = sub.add_parser("poly", help="polynomial Newton bases and derivatives")
    psub = p.add_subparsers(dest="kind", required=True)
    pp = psub.add_parser("eval")
    pp.add_argument("--coeffs", required=True, help="c0,c1,... (rationals)")
    pp.add_argument("--y", required=True)
    fmt(pp)
    pp.set_defaults(func=_cmd_poly)
    pp = psub.add_parser("derivs")
    pp.add_argument("--coeffs", required=True)
    pp.add_argument("--y", required=True)
    pp.add_argument("--k", type=int, required=True)
    fmt(pp)
    pp.set_defaults(func=_cmd_poly)
    pp = psub.add_parser("newton")
    pp.add_argument("--coeffs", required=True)
    pp.add_argument("--nodes", required=True, help="a1,a2,... (rationals)")
    fmt(pp)
    pp.set_defaults(func=_cmd_poly)

    p = sub.add_parser("furstenberg", help="quadrant windows and orbits")
    fsub = p.add_subparsers(dest="kind", required=True)
    f = fsub.add_parser("orbit")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--q", type=int)
    fmt(f)
    f.set_defaults(func=_cmd_furstenberg)
    f = fsub.add_parser("quadrant")
    f.add_argument("--x", required=True, help="rational in [0,1), e.g. 7/13")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--depth", required=True, help="MxN")
    f.add_argument("--render", action="store_true")
    f.add_argument("--rudolph", action="store_true")
    fmt(f)
    f.set_defaults(func=_cmd_furstenberg)
    f = fsub.add_parser("layers")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--depth", required=True, help="MxN")
    fmt(f)
    f.set_defaults(func=_cmd_furstenberg)

    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; keep 2 for invariant violations only
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
