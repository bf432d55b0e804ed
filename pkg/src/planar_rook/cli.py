"""Command-line interface: ``planar-rook <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a violated invariant
and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import characters as ch
from . import verify as verify_mod
from .algebra import element_to_json, x_of
from .diagram import (
    apply,
    compose,
    count,
    elements,
    enumerate_diagrams,
    parse_diagram,
    to_compact,
    to_json,
    to_mask,
    vertical_edge_count,
)
from .reprs import bratteli, irrep_to_json, rho, rho_algebra

# tractability bounds per command
MAX_COUNT_N = 12
MAX_LIST_N = 8
MAX_REP_N = 12
MAX_CENTER_N = 5
MAX_REGULAR_N = 8
MAX_TABLE_N = 60
MAX_BRATTELI_ROWS = 60
MAX_TENSOR_N = 60


class UsageError(Exception):
    pass


def _bound(name: str, value: int, hi: int, lo: int = 0):
    if not lo <= value <= hi:
        raise UsageError(f"{name} must be in {lo}..{hi}, got {value}")


def _read_arg(text: str) -> str:
    if not text.lstrip().startswith("{") and os.path.isfile(text):
        with open(text) as f:
            return f.read()
    return text


def _diagram(text: str):
    try:
        return parse_diagram(_read_arg(text))
    except ValueError as e:
        raise UsageError(f"bad diagram {text!r}: {e}") from None


def _subset(text: str, n: int) -> int:
    text = _read_arg(text).strip()
    try:
        if text.startswith("["):
            items = json.loads(text)
        else:
            items = [int(t) for t in text.split(",") if t.strip()]
        return to_mask(items, n)
    except (ValueError, json.JSONDecodeError) as e:
        raise UsageError(f"bad subset {text!r}: {e}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def cmd_enumerate(args) -> str:
    if args.count_only:
        _bound("--n", args.n, MAX_COUNT_N)
        return str(count(args.n, args.rank))
    _bound("--n", args.n, MAX_LIST_N)
    ds = enumerate_diagrams(args.n, args.rank)
    if args.format == "json":
        return _dump([to_json(d) for d in ds])
    return "\n".join(to_compact(d) for d in ds)


def cmd_compose(args) -> str:
    a, b = _diagram(args.a), _diagram(args.b)
    if a.n != b.n:
        raise UsageError(f"size mismatch: {a.n} != {b.n}")
    d = compose(a, b)
    return _dump(to_json(d)) if args.format == "json" else to_compact(d)


def cmd_apply(args) -> str:
    d = _diagram(args.diagram)
    image = apply(d, _subset(args.set, d.n))
    return _dump(None if image is None else elements(image))


def _check_n(args, d):
    if args.n is not None and d.n != args.n:
        raise UsageError(f"diagram has size {d.n} but --n is {args.n}")


def cmd_rep(args) -> str:
    _bound("--n", args.n, MAX_REP_N)
    _bound("--k", args.k, args.n)
    d = _diagram(args.diagram)
    _check_n(args, d)
    if args.x_basis:
        m = rho_algebra(args.n, args.k, x_of(d))
    else:
        m = rho(args.n, args.k, d)
    return _dump(irrep_to_json(args.n, args.k, m))


def cmd_char_table(args) -> str:
    _bound("--n", args.n, MAX_TABLE_N)
    table = ch.character_table(args.n)
    if args.format == "json":
        return _dump(table.to_json())
    return table.to_csv().rstrip("\n")


def cmd_bratteli(args) -> str:
    _bound("--rows", args.rows, MAX_BRATTELI_ROWS)
    g = bratteli(args.rows)
    if args.format == "json":
        return _dump(g.to_json())
    return g.to_dot().rstrip("\n")


def cmd_tensor(args) -> str:
    _bound("--n", args.n, MAX_TENSOR_N)
    _bound("--i", args.i, args.n)
    _bound("--j", args.j, args.n)
    return _dump(ch.tensor_multiplicities(args.n, args.i, args.j).to_json())


def cmd_center(args) -> str:
    _bound("--n", args.n, MAX_CENTER_N)
    out = []
    for ell, z in enumerate(ch.center_basis(args.n)):
        out.append({"l": ell, "central": ch.is_central(z), "element": element_to_json(z)})
    return _dump({"n": args.n, "center": out})


def cmd_xbasis(args) -> str:
    return _dump(element_to_json(x_of(_diagram(args.diagram))))


def cmd_trace(args) -> str:
    d = _diagram(args.diagram)
    _check_n(args, d)
    n = d.n
    ell = vertical_edge_count(d)
    if args.regular:
        _bound("--n", n, MAX_REGULAR_N)
        return _dump({"n": n, "l": ell, "psi": ch.regular_trace(n, d)})
    _bound("--n", n, MAX_REP_N)
    return _dump({"n": n, "l": ell, "chi": [ch.chi(n, k, d) for k in range(n + 1)]})


def cmd_verify(args):
    _bound("--n-max", args.n_max, verify_mod.MAX_N)
    suites = verify_mod.SUITES if args.suite == "all" else (args.suite,)
    results = verify_mod.run(args.n_max, suites, args.seed)
    lines = [f"# verify n_max={args.n_max} suite={args.suite} seed={args.seed}"]
    lines += [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    lines.append(f"# {len(results) - len(failed)}/{len(results)} checks passed")
    return "\n".join(lines), (1 if failed else 0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-rook", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list the diagrams of P_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--rank", type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--format", choices=("lines", "json"), default="lines")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("compose", help="product of two diagrams (A on top of B)")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--format", choices=("compact", "json"), default="compact")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("apply", help="image of a vertex set under a diagram")
    s.add_argument("--diagram", required=True)
    s.add_argument("--set", required=True, help='e.g. "2,5" or "[2,5]"')
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("rep", help="matrix of a diagram on V^n_k")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--diagram", required=True)
    s.add_argument("--x-basis", action="store_true", help="act by x_d instead of d")
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("char-table", help="irreducible character table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_char_table)

    s = sub.add_parser("bratteli", help="Bratteli diagram of the tower P_0 < P_1 < ...")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_bratteli)

    s = sub.add_parser("tensor", help="decompose V^n_i (x) V^n_j")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("center", help="center basis z_0..z_n with a centrality check")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_center)

    s = sub.add_parser("xbasis", help="expand x_d in the diagram basis")
    s.add_argument("--diagram", required=True)
    s.set_defaults(func=cmd_xbasis)

    s = sub.add_parser("trace", help="irreducible (or regular) character values at a diagram")
    s.add_argument("--n", type=int)
    s.add_argument("--diagram", required=True)
    s.add_argument("--regular", action="store_true")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("verify", help="run the invariant suites")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--suite", choices=("all",) + verify_mod.SUITES, default="all")
    s.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"planar-rook: error: {e}", file=sys.stderr)
        return 2
    out, status = result if isinstance(result, tuple) else (result, 0)
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
