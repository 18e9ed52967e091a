"""Command-line front end (``twyang``)."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from . import kgraph
from .branching import restrict
from .errors import BadArguments, TwyangError
from .fixtures import SCOPES, run as run_fixtures
from .pairs import (
    catalogue,
    dumps_catalogue,
    instantiate,
    parse_pair,
    symmetric_space_sum,
)
from .rootdata import DEFAULT_MAX_WEIGHTS, build_root_system, casimir, dimension, parse_lie_type, parse_weight
from .tensor import format_weight, tensor_decompose
from .yangrep import ADJOINT

# representative parameters used by `pairs` for the parametrised families
_EXAMPLE = {"AIII": (8, 3), "AI": (6,), "AII": (8,), "BDI": (10, 3), "DIII": (10,), "CII": (5, 2), "CI": (4,)}
_SERIES_FILTER = {"su": "A", "a": "A", "so": "BD", "b": "BD", "d": "BD", "sp": "C", "c": "C"}


def q(x, decimals: Optional[int] = None) -> str:
    x = Fraction(x)
    s = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if decimals is not None and x.denominator != 1:
        s += f" (~{float(x):.{decimals}f})"
    return s


def theta(x, decimals: Optional[int] = None) -> str:
    return f"{q(x, decimals)} iπ"


def _vrep(text: str):
    if text in (None, ""):
        raise BadArguments("--vrep is required")
    if text == ADJOINT:
        return text
    try:
        return int(text)
    except ValueError:
        raise BadArguments(f"bad --vrep {text!r}") from None


def _pair(args):
    if not args.pair:
        raise BadArguments("--pair is required")
    pair = parse_pair(args.pair)
    if getattr(args, "charge_scale", None):
        pair = pair.with_charge_scale(Fraction(args.charge_scale))
    return pair


def _graph(args):
    pair = _pair(args)
    v = _vrep(args.vrep)
    mode = getattr(args, "labels", "auto")
    if mode == "auto":
        # BDI tables use exterior degrees; spinor and adjoint modules do not
        N = pair.params[0] if pair.family == "BDI" else 0
        mode = "exterior" if v != "adj" and 1 <= v <= (N - 3) // 2 else "dynkin"
    if mode == "exterior":
        if v == "adj":
            raise BadArguments("exterior labels take an exterior degree")
        return kgraph.orthogonal_graph(pair, v, args.max_weights)
    if v == "adj":
        return kgraph.branching_graph(pair, kgraph.adjoint_plus_trivial(pair.g), args.max_weights)
    return kgraph.graph_for(pair, v, args.max_weights)


# -- subcommands ------------------------------------------------------------------------

def cmd_pairs(args) -> int:
    fams = catalogue()
    f = (args.g or "").strip().lower()
    if f:
        if f in ("e6", "e7", "e8", "f4", "g2"):
            fams = [x for x in fams if x.exceptional and instantiate(x.name).g.name == f]
        else:
            series = _SERIES_FILTER.get(f.rstrip("0123456789"))
            if series is None:
                raise BadArguments(f"unknown algebra filter {args.g!r}")
            fams = [x for x in fams if not x.exceptional and x.g_series in series]
        if not fams:
            raise BadArguments(f"no family matches {args.g!r}")
    for fam in fams:
        pair = instantiate(fam.name, _EXAMPLE.get(fam.name, ()))
        cs = ", ".join(q(c) for c in pair.c_coeffs)
        if pair.c_u1 is not None:
            cs += f"; u1: {q(pair.c_u1)}"
        eg = "" if fam.exceptional else " e.g."
        print(f"{fam.name:6} {pair.label:18} K={fam.k_heading:28} c=({cs}) sum={q(symmetric_space_sum(pair))}{eg}")
    return 0


def cmd_kgraph(args) -> int:
    g = _graph(args)
    if args.format == "dot":
        sys.stdout.write(kgraph.render_dot(g))
    elif args.format == "json":
        sys.stdout.write(kgraph.render_json(g))
    else:
        print(kgraph.render_text(g, ascii_only=args.ascii))
        for flag in g.flags:
            print(f"# flag: {flag}", file=sys.stderr)
    return 0


def cmd_spectral(args) -> int:
    g = _graph(args)
    try:
        sk = kgraph.spectral_k(g, args.reference, strict=True)
    except kgraph.Disconnected as exc:
        print(f"warning: {exc}", file=sys.stderr)
        sk = exc.result
    for i in range(len(g.nodes)):
        line = f"{g.node_label(i)}: tau = {sk.tau[i]}"
        if args.at is not None:
            line += f"  at θ = {theta(args.at)}: {q(sk.value(i, Fraction(args.at)), args.decimals)}"
        print(line)
    return 0


def cmd_truncations(args) -> int:
    g = _graph(args)
    reps = kgraph.truncations(g)
    if not reps:
        print("no truncations")
    for t in reps:
        comps = " | ".join("{" + ", ".join(g.node_label(i) for i in comp) + "}" for comp in t.components)
        print(f"|Δ| = {q(t.delta)}  θ = {theta(t.theta[0], args.decimals)}, {theta(t.theta[1], args.decimals)}: {comps}")
    return 0


def cmd_verify(args) -> int:
    results = run_fixtures(args.scope, args.max_rank)
    for r in results:
        tail = f"  {r.detail}" if r.detail else ""
        print(f"{r.status:7} {r.case}{tail}")
    counts = {s: sum(1 for r in results if r.status == s) for s in ("PASS", "FLAGGED", "FAIL")}
    print(f"# {counts['PASS']} passed, {counts['FLAGGED']} flagged, {counts['FAIL']} failed")
    return 1 if counts["FAIL"] else 0


def cmd_casimir(args) -> int:
    t = parse_lie_type(args.g)
    rs = build_root_system(t)
    w = parse_weight(args.weight, t.rank)
    print(q(casimir(rs, w), args.decimals))
    return 0


def cmd_dim(args) -> int:
    t = parse_lie_type(args.g)
    rs = build_root_system(t)
    print(dimension(rs, parse_weight(args.weight, t.rank)))
    return 0


def cmd_tensor(args) -> int:
    t = parse_lie_type(args.g)
    rs = build_root_system(t)
    if not args.weight or len(args.weight) != 2:
        raise BadArguments("tensor needs --weight twice")
    a, b = (parse_weight(w, t.rank) for w in args.weight)
    for w, m in sorted(tensor_decompose(rs, a, b, args.max_weights).items(), key=lambda x: (-dimension(rs, x[0]), x[0])):
        print(f"{m} x ({format_weight(w, t)})  dim {dimension(rs, w)}")
    return 0


def cmd_branch(args) -> int:
    pair = _pair(args)
    if not args.weight:
        raise BadArguments("--weight is required")
    w = parse_weight(args.weight[0], pair.g.rank)
    for x, m in sorted(restrict(pair, w, args.max_weights).items()):
        print(f"{m} x {pair.fmt(x)}  dim {pair.h.dimension(x)}")
    return 0


def cmd_check(args) -> int:
    print(q(symmetric_space_sum(_pair(args))))
    return 0


def cmd_magic(args) -> int:
    cell = kgraph.magic_square(args.row, Fraction(args.m))
    print(f"row {cell.row}, m={q(cell.m)}: {cell.pair}; dim K = {cell.k_dim} (formula {q(cell.k_dim_formula)})")
    for k, f in cell.formula.items():
        c = cell.computed.get(k)
        print(f"  {k}: computed {'-' if c is None else q(c)}, formula {q(f)}: {cell.verdict[k]}")
    if cell.note:
        print(f"  note: {cell.note}")
    return 0


def cmd_catalogue(args) -> int:
    from .exceptional import derive_all

    sys.stdout.write(dumps_catalogue(list(derive_all().values())))
    return 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twyang", description="Branching graphs and rational K-matrices of twisted Yangians.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *opts):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        for o in opts:
            if o == "pair":
                sp.add_argument("--pair", help="e.g. f4/b4, so10/so3xso7 or BDI(10,3)")
                sp.add_argument("--charge-scale", dest="charge_scale", help="rescale the u(1) charge (debug)")
            elif o == "vrep":
                sp.add_argument("--vrep", help="fundamental index, or 'adj' for adjoint + trivial")
                sp.add_argument("--labels", choices=("auto", "dynkin", "exterior"), default="auto",
                                help="BDI: S(O(M) x O(N-M)) exterior degrees (auto: for tensor-type v_r)")
            elif o == "g":
                sp.add_argument("--g", help="Lie algebra, e.g. b4, e6, su5")
            elif o == "weight":
                sp.add_argument("--weight", action="append", help="comma-separated Dynkin labels")
        sp.add_argument("--max-weights", dest="max_weights", type=int, default=DEFAULT_MAX_WEIGHTS)
        sp.add_argument("--decimals", type=int, default=None, help="also print decimal approximations")
        return sp

    add("pairs", cmd_pairs, "list catalogue families", "g")
    kg = add("kgraph", cmd_kgraph, "branching graph of a Y(g)-module", "pair", "vrep")
    kg.add_argument("--format", choices=("text", "dot", "json"), default="text")
    kg.add_argument("--ascii", action="store_true", help="ASCII-only text output")
    sk = add("spectral", cmd_spectral, "tau_W for every node", "pair", "vrep")
    sk.add_argument("--reference", type=int, default=None)
    sk.add_argument("--at", default=None, help="evaluate at θ = x iπ")
    add("truncations", cmd_truncations, "special θ and surviving components", "pair", "vrep")
    v = add("verify", cmd_verify, "run the embedded regression fixtures")
    v.add_argument("--scope", choices=SCOPES, default="all")
    v.add_argument("--max-rank", dest="max_rank", type=int, default=8)
    add("casimir", cmd_casimir, "quadratic Casimir <λ, λ+2ρ>", "g", "weight")
    add("dim", cmd_dim, "Weyl dimension", "g", "weight")
    add("tensor", cmd_tensor, "tensor product decomposition", "g", "weight")
    add("branch", cmd_branch, "restriction to h", "pair", "weight")
    add("check-symmetric-space", cmd_check, "weighted Casimir-ratio sum (1/2 for symmetric pairs)", "pair")
    m = add("magic", cmd_magic, "magic-square comparison")
    m.add_argument("--row", type=int, required=True)
    m.add_argument("--m", required=True)
    add("catalogue", cmd_catalogue, "derive the exceptional catalogue JSON")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if isinstance(getattr(args, "weight", None), str):
        args.weight = [args.weight]
    if args.command in ("casimir", "dim"):
        if not args.weight:
            parser.error("--weight is required")
        args.weight = args.weight[0]
    if getattr(args, "g", None) is None and args.command in ("casimir", "dim", "tensor"):
        parser.error("--g is required")
    try:
        return args.fn(args)
    except TwyangError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
