"""Command line front end.

Every operation is exposed as a subcommand with deterministic output: JSON
by default, aligned text or CSV via --format.  Exit codes: 0 success, 1
domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .quadric import (
    QuadricContext,
    multigraded_hs_check,
    orthogonal_stable_decomposition,
    quadric_schur_dim,
)
from .resolutions import (
    efw_betti,
    efw_partitions,
    hk_solve,
    quadric_pure_resolution,
    rnc_pure_resolution,
    rnc_sequence,
    validate_purity,
)
from .sequences import (
    e_class,
    jt_minor,
    make_sequence,
    parse_sequence_spec,
    pf_check,
    schur_dimension_profile,
    segre,
    tensor_identity_check,
    tensor_product,
    veronese,
    veronese_identity_check,
)
from .shapes import SkewShape, trim
from .symfunc import SchurClass, dim_gl, dim_gl_skew, dim_super, lr_coefficient, skew_to_straight
from .zelevinsky import euler_characteristic, jt_complex_layout


class UsageError(Exception):
    pass


def _ints_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parts_arg(text: str) -> tuple[int, ...]:
    vals = _ints_arg(text)
    try:
        return trim(vals)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _seq_arg(text: str):
    try:
        return text, parse_sequence_spec(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _value_json(v):
    if isinstance(v, SchurClass):
        return v.to_json()
    return v


def _guard_cost(seq, lam, mu, pad, max_cost: int) -> None:
    need = max(len(lam), len(mu), 1)
    r = need if pad is None else int(pad)
    if seq.value_kind == "class" and r > max_cost:
        raise ValueError(f"determinant order {r} exceeds --max-cost {max_cost}")


def _cmd_pf_check(args):
    text, seq = args.seq
    rep = pf_check(seq, max_order=args.order, window=args.window, scan_skew=args.skew)
    payload = {"seq": text}
    payload.update(rep.to_json())
    return payload, None


def _cmd_jt_minor(args):
    text, seq = args.seq
    _guard_cost(seq, args.lam, args.mu, args.pad, args.max_cost)
    value = jt_minor(seq, SkewShape(args.lam, args.mu), args.pad)
    return {
        "seq": text,
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "pad": args.pad,
        "value": _value_json(value),
    }, None


def _cmd_lr(args):
    c = lr_coefficient(args.lam, args.mu, args.nu)
    return {"lambda": list(args.lam), "mu": list(args.mu), "nu": list(args.nu), "coefficient": c}, None


def _cmd_skew_expand(args):
    cls = skew_to_straight(SkewShape(args.lam, args.mu))
    return {"lambda": list(args.lam), "mu": list(args.mu), "terms": cls.to_json()}, None


def _cmd_dim(args):
    lam, mu = args.lam, args.mu
    payload = {"kind": args.kind, "lambda": list(lam), "mu": list(mu)}
    if args.kind == "gl":
        if args.m is None:
            raise UsageError("dim gl needs --m")
        value = dim_gl_skew(SkewShape(lam, mu), args.m) if mu else dim_gl(lam, args.m)
        payload["m"] = args.m
    elif args.kind == "super":
        if args.r is None or args.s is None:
            raise UsageError("dim super needs --r and --s")
        value = dim_super(lam, args.r, args.s, mu)
        payload["r"] = args.r
        payload["s"] = args.s
    else:
        if args.m is None:
            raise UsageError("dim quadric needs --m")
        value = quadric_schur_dim(QuadricContext(args.m), SkewShape(lam, mu), method=args.method)
        payload["m"] = args.m
        payload["method"] = args.method
    payload["value"] = value
    return payload, None


def _cmd_veronese(args):
    text, seq = args.seq
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    derived = veronese(seq, args.d)
    _guard_cost(derived, args.lam, args.mu, args.pad, args.max_cost)
    shape = SkewShape(args.lam, args.mu)
    value = jt_minor(derived, shape, args.pad)
    ok = veronese_identity_check(seq, args.d, shape, args.pad)
    return {
        "seq": text,
        "d": args.d,
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "pad": args.pad,
        "value": _value_json(value),
        "identity_ok": ok,
    }, None


def _cmd_tensor(args):
    atext, a = args.a
    btext, b = args.b
    derived = tensor_product(a, b)
    _guard_cost(derived, args.lam, args.mu, args.pad, args.max_cost)
    shape = SkewShape(args.lam, args.mu)
    value = jt_minor(derived, shape, args.pad)
    ok = tensor_identity_check(a, b, shape, args.pad)
    return {
        "a": atext,
        "b": btext,
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "pad": args.pad,
        "value": _value_json(value),
        "identity_ok": ok,
    }, None


def _cmd_segre(args):
    atext, a = args.a
    btext, b = args.b
    derived = segre(a, b)
    _guard_cost(derived, args.lam, args.mu, args.pad, args.max_cost)
    value = jt_minor(derived, SkewShape(args.lam, args.mu), args.pad)
    return {
        "a": atext,
        "b": btext,
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "pad": args.pad,
        "value": _value_json(value),
    }, None


def _cmd_e_class(args):
    text, seq = args.seq
    value = e_class(seq, args.d)
    return {"seq": text, "d": args.d, "value": _value_json(value)}, None


def _cmd_schur_profile(args):
    text, seq = args.seq
    profile = schur_dimension_profile(seq, args.r_max, args.s_max)
    return {
        "seq": text,
        "r_max": args.r_max,
        "s_max": args.s_max,
        "profile": list(profile) if profile is not None else None,
    }, None


def _cmd_ortho_decomp(args):
    ctx = QuadricContext(args.m)
    dec = orthogonal_stable_decomposition(ctx, args.lam)
    return {
        "m": args.m,
        "lambda": list(args.lam),
        "entries": dec.to_json(),
        "dimension": dec.dimension(),
        "schur_dim": quadric_schur_dim(ctx, args.lam),
    }, None


def _cmd_hs_check(args):
    return multigraded_hs_check(args.m, args.n, args.trunc), None


def _cmd_efw(args):
    count = args.count if args.count is not None else args.e_dim + 1
    parts = efw_partitions(args.shifts, count)
    table = efw_betti(args.shifts, args.e_dim, args.count)
    return {
        "shifts": list(args.shifts),
        "e_dim": args.e_dim,
        "partitions": [list(p.parts) for p in parts],
        "table": table.to_json(),
    }, table.to_csv()


def _build_table(args):
    if args.ring == "quadric":
        if args.m is None:
            raise UsageError(f"{args.cmd} quadric needs --m")
        seq = make_sequence("quadric", m=args.m)
        table = quadric_pure_resolution(args.m, args.shifts, args.tail)
        params = {"ring": "quadric", "m": args.m, "shifts": list(args.shifts)}
    elif args.ring == "rnc":
        if args.d is None:
            raise UsageError(f"{args.cmd} rnc needs --d")
        seq = rnc_sequence(args.d)
        table = rnc_pure_resolution(args.d, args.shifts, args.tail)
        params = {"ring": "rnc", "d": args.d, "shifts": list(args.shifts)}
    else:
        if args.e_dim is None:
            raise UsageError(f"{args.cmd} poly needs --dim")
        seq = make_sequence("poly", m=args.e_dim).dim_view()
        table = efw_betti(args.shifts, args.e_dim, args.count)
        params = {"ring": "poly", "dim": args.e_dim, "shifts": list(args.shifts)}
    return seq, table, params


def _cmd_resolve(args):
    _, table, params = _build_table(args)
    payload = dict(params)
    payload["table"] = table.to_json()
    return payload, table.to_csv()


def _cmd_hk_solve(args):
    sol = hk_solve(args.twists, args.n)
    return sol.to_json(), None


def _cmd_validate(args):
    seq, table, params = _build_table(args)
    rep = validate_purity(table, seq, tail_horizon=args.horizon, margin=args.margin)
    payload = dict(params)
    payload["table"] = table.to_json()
    payload["purity"] = rep.to_json()
    return payload, table.to_csv()


def _cmd_zelevinsky(args):
    text, seq = args.seq
    n = args.n
    if n is None:
        n = max(len(args.lam), len(args.mu), 1)
    _guard_cost(seq, args.lam, args.mu, n, args.max_cost)
    layout = jt_complex_layout(seq, args.lam, args.mu, n)
    chi = euler_characteristic(layout)
    payload = layout.to_json()
    payload["seq"] = text
    payload["euler"] = _value_json(chi)
    payload["ok"] = chi == layout.minor
    return payload, None


def _add_shape_flags(p, mu_default=True):
    p.add_argument("--lambda", dest="lam", type=_parts_arg, required=True, help="outer partition, comma separated")
    if mu_default:
        p.add_argument("--mu", type=_parts_arg, default=(), help="inner partition, default empty")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jtkit", description="Total positivity certificates and pure resolution tables for graded sequences.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="json")
    common.add_argument("--max-cost", dest="max_cost", type=int, default=8, help="reject class determinants above this order")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("pf-check", parents=[common], help="scan minors for a negative witness")
    p.add_argument("--seq", type=_seq_arg, required=True)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--skew", action="store_true", help="also scan skew shapes")
    p.set_defaults(handler=_cmd_pf_check)

    p = sub.add_parser("jt-minor", parents=[common], help="one Jacobi-Trudi minor")
    p.add_argument("--seq", type=_seq_arg, required=True)
    _add_shape_flags(p)
    p.add_argument("--pad", type=int, default=None)
    p.set_defaults(handler=_cmd_jt_minor)

    p = sub.add_parser("lr", parents=[common], help="one Littlewood-Richardson coefficient")
    _add_shape_flags(p)
    p.add_argument("--nu", type=_parts_arg, required=True)
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("skew-expand", parents=[common], help="expand a skew Schur class into straight terms")
    _add_shape_flags(p)
    p.set_defaults(handler=_cmd_skew_expand)

    p = sub.add_parser("dim", parents=[common], help="Schur functor dimensions")
    p.add_argument("kind", choices=("gl", "super", "quadric"))
    _add_shape_flags(p)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--method", choices=("jt", "vertical_strip", "super"), default="jt")
    p.set_defaults(handler=_cmd_dim)

    p = sub.add_parser("veronese", parents=[common], help="minor of a Veronese subsequence plus the translation identity")
    p.add_argument("--seq", type=_seq_arg, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_shape_flags(p)
    p.add_argument("--pad", type=int, default=None)
    p.set_defaults(handler=_cmd_veronese)

    p = sub.add_parser("tensor", parents=[common], help="minor of a tensor product plus the Cauchy-Binet identity")
    p.add_argument("--a", type=_seq_arg, required=True)
    p.add_argument("--b", type=_seq_arg, required=True)
    _add_shape_flags(p)
    p.add_argument("--pad", type=int, default=None)
    p.set_defaults(handler=_cmd_tensor)

    p = sub.add_parser("segre", parents=[common], help="minor of a Segre product")
    p.add_argument("--a", type=_seq_arg, required=True)
    p.add_argument("--b", type=_seq_arg, required=True)
    _add_shape_flags(p)
    p.add_argument("--pad", type=int, default=None)
    p.set_defaults(handler=_cmd_segre)

    p = sub.add_parser("e-class", parents=[common], help="elementary class of a sequence")
    p.add_argument("--seq", type=_seq_arg, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_e_class)

    p = sub.add_parser("schur-profile", parents=[common], help="hook bound matching the vanishing of minors")
    p.add_argument("--seq", type=_seq_arg, required=True)
    p.add_argument("--r-max", dest="r_max", type=int, default=4)
    p.add_argument("--s-max", dest="s_max", type=int, default=4)
    p.set_defaults(handler=_cmd_schur_profile)

    p = sub.add_parser("ortho-decomp", parents=[common], help="stable-range orthogonal decomposition over a quadric")
    p.add_argument("--m", type=int, required=True)
    _add_shape_flags(p, mu_default=False)
    p.set_defaults(handler=_cmd_ortho_decomp, mu=())

    p = sub.add_parser("hs-check", parents=[common], help="multigraded Hilbert series verification")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trunc", type=int, default=8)
    p.set_defaults(handler=_cmd_hs_check)

    p = sub.add_parser("efw", parents=[common], help="partition ladder and Betti table over a polynomial ring")
    p.add_argument("--shifts", type=_ints_arg, required=True)
    p.add_argument("--dim", dest="e_dim", type=int, required=True)
    p.add_argument("--count", type=int, default=None)
    p.set_defaults(handler=_cmd_efw)

    for name, handler in (("resolve", _cmd_resolve), ("validate", _cmd_validate)):
        p = sub.add_parser(name, parents=[common], help=f"{name} a pure resolution table")
        p.add_argument("ring", choices=("quadric", "rnc", "poly"))
        p.add_argument("--shifts", type=_ints_arg, required=True)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--d", type=int, default=None)
        p.add_argument("--dim", dest="e_dim", type=int, default=None)
        p.add_argument("--tail", type=int, default=4)
        p.add_argument("--count", type=int, default=None)
        if name == "validate":
            p.add_argument("--horizon", type=int, default=24)
            p.add_argument("--margin", type=int, default=6)
        p.set_defaults(handler=handler)

    p = sub.add_parser("hk-solve", parents=[common], help="pure Betti vectors from the rank conditions")
    p.add_argument("--twists", type=_ints_arg, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(handler=_cmd_hk_solve)

    p = sub.add_parser("zelevinsky", parents=[common], help="layout of the Jacobi-Trudi complex")
    p.add_argument("--seq", type=_seq_arg, required=True)
    _add_shape_flags(p)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(handler=_cmd_zelevinsky)

    return parser


def _scalar_text(v) -> str:
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    return str(v)


def _is_flat(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(_is_flat(x) for x in v)
    return True


def _render_text(obj, indent: int, out: list) -> None:
    pad = " " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_flat(v):
                out.append(f"{pad}{k}: {_scalar_text(v)}")
            else:
                out.append(f"{pad}{k}:")
                _render_text(v, indent + 2, out)
    elif isinstance(obj, list):
        for item in obj:
            if _is_flat(item):
                out.append(f"{pad}- {_scalar_text(item)}")
            else:
                out.append(f"{pad}-")
                _render_text(item, indent + 2, out)
    else:
        out.append(f"{pad}{_scalar_text(obj)}")


def _table_text(table_json: dict) -> list:
    rows = table_json.get("rows", [])
    headers = ("index", "twist", "rank", "label")
    grid = [headers]
    for r in rows:
        grid.append((str(r["index"]), str(r["twist"]), str(r["rank"]), str(r.get("label", "") or "")))
    widths = [max(len(row[i]) for row in grid) for i in range(4)]
    out = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in grid]
    tail = table_json.get("tail")
    if tail:
        bits = [f"start {tail['start']}", f"rank {tail['rank']}", f"step {tail['step']}"]
        if "ratio" in tail:
            bits.append(f"ratio {tail['ratio']}")
        out.append("tail: " + ", ".join(bits))
    return out


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        payload, csv_text = args.handler(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "text":
        lines = []
        for k, v in payload.items():
            if k == "table" and isinstance(v, dict) and "rows" in v:
                lines.append("table:")
                lines.extend("  " + line for line in _table_text(v))
            elif _is_flat(v):
                lines.append(f"{k}: {_scalar_text(v)}")
            else:
                lines.append(f"{k}:")
                _render_text(v, 2, lines)
        print("\n".join(lines))
    else:
        if csv_text is None:
            print("usage error: --format csv is not available for this subcommand", file=sys.stderr)
            return 2
        sys.stdout.write(csv_text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
