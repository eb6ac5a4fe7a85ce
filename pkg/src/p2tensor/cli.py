"""Command-line front end: ``p2tensor <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .arith import format_rational, parse_rational
from .chern import ChernCharacter, chi, chi_tensor, dual, parse_character, serre_dual, tensor, twist
from .cohomology import (
    classify_region,
    cohomologically_orthogonal,
    generic_cohomology,
    hom_globally_generated,
    region_map,
    sufficient_multiple,
    tensor_globally_generated,
)
from .correspondence import NotStableError, corresponding_exceptionals, orthogonal_characters, resolution
from .exceptional import (
    DEFAULT_MAX_ORDER,
    DepthExceeded,
    ExceptionalSlope,
    decompose,
    delta,
    exceptional_from_index,
    exists_positive_dimensional_moduli,
    is_exceptional_character,
    locate,
    mutation_slopes,
    parse_dyadic,
)
from .kronecker import (
    decompose_general,
    euler_form,
    exceptional_orbit,
    expected_dimension,
    general_hom_ext,
    parse_shape,
    semistable_exists,
)
from .oracle import OracleConfig, OracleConfigError, delta_brute_force, kronecker_hom_oracle

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_STABLE = 3
EXIT_DEPTH = 4
EXIT_ORACLE = 5


def _q(x) -> str:
    return format_rational(Fraction(x))


def _dec(x: Fraction) -> str:
    return f"{float(x):.10f}"


def _dyadic(s: ExceptionalSlope) -> str:
    return f"{s.p}/2^{s.order}"


def _slope(s: Optional[ExceptionalSlope]):
    if s is None:
        return None
    return {"mu": _q(s.mu), "index": _dyadic(s)}


def _char(v: ChernCharacter) -> str:
    return str(v)


# output -------------------------------------------------------------------


def _flatten(record: Dict[str, object], prefix: str = "") -> Dict[str, object]:
    out: Dict[str, object] = {}
    for k, val in record.items():
        key = f"{prefix}{k}"
        if isinstance(val, dict):
            out.update(_flatten(val, key + "."))
        elif isinstance(val, list):
            out[key] = ";".join(str(x) for x in val)
        else:
            out[key] = "" if val is None else val
    return out


def _emit(record: Dict[str, object], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        flat = _flatten(record)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(flat.keys())
        w.writerow(_csv_cell(x) for x in flat.values())
    else:
        for k, val in _flatten(record).items():
            out.write(f"{k}: {_plain_cell(val)}\n")


def _emit_rows(header: Sequence[str], rows: Iterable[Sequence[object]], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(header, row))) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(_csv_cell(x) for x in row)
        return
    for row in rows:
        out.write(" ".join(_plain_cell(x) for x in row) + "\n")


def _csv_cell(x):
    return str(x).lower() if isinstance(x, bool) else x


def _plain_cell(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    return str(x)


# subcommands --------------------------------------------------------------


def cmd_chern(args, out) -> int:
    v = parse_character(args.character, integral=False)
    if args.twist:
        v = twist(v, args.twist)
    if args.dual:
        v = dual(v)
    if args.serre_dual:
        v = serre_dual(v)
    rec: Dict[str, object] = {"character": _char(v), "c2": _q(v.c2), "chi": _q(chi(v))}
    if not v.is_torsion:
        rec["mu"] = _q(v.mu)
        rec["delta"] = _q(v.delta)
    if args.with_:
        w = parse_character(args.with_, integral=False)
        rec["tensor"] = _char(tensor(v, w))
        rec["chi_tensor"] = _q(chi_tensor(v, w))
    _emit(rec, args.format, out)
    return EXIT_OK


def cmd_exceptional(args, out) -> int:
    s = exceptional_from_index(parse_dyadic(args.index))
    rec: Dict[str, object] = {
        "index": _dyadic(s),
        "mu": _q(s.mu),
        "rank": s.rank,
        "disc": _q(s.disc),
        "order": s.order,
        "half_width": str(s.half_width),
        "character": _char(s.character()),
    }
    a, b = decompose(s)
    rec["decomposition"] = [_q(a.mu), _q(b.mu)]
    if not s.is_integer:
        m = mutation_slopes(s)
        rec["mutation"] = {
            "alpha": _q(m.alpha.mu), "eta": _q(m.eta.mu),
            "zeta": _q(m.zeta.mu), "omega": _q(m.omega.mu),
        }
    _emit(rec, args.format, out)
    return EXIT_OK


def cmd_dlp(args, out) -> int:
    if args.action == "value":
        mu = parse_rational(args.mu)
        res = locate(mu, args.max_order)
        if not res.found:
            raise DepthExceeded(f"could not place {args.mu} within order {args.max_order}")
        d = delta(mu, args.max_order)
        _emit(
            {"mu": _q(mu), "delta": _q(d), "slope": _slope(res.slope), "location": res.kind.value},
            args.format, out,
        )
        return EXIT_OK
    lo, hi = parse_rational(args.min), parse_rational(args.max)
    if args.denominator < 1 or hi < lo:
        raise ValueError("need --denominator >= 1 and --min <= --max")
    rows = []
    k = -(-lo.numerator * args.denominator // lo.denominator)  # ceil(lo * den)
    while Fraction(k, args.denominator) <= hi:
        mu = Fraction(k, args.denominator)
        d = delta(mu, args.max_order)
        rows.append((_q(mu), _dec(mu), _q(d), _dec(d)))
        k += 1
    _emit_rows(("mu", "mu_decimal", "delta", "delta_decimal"), rows, args.format, out)
    return EXIT_OK


def cmd_stable(args, out) -> int:
    v = parse_character(args.character)
    if v.is_torsion:
        verdict, code = "torsion (one-dimensional semistable sheaves)", EXIT_OK
    elif is_exceptional_character(v, args.max_order):
        verdict, code = "exceptional (moduli = point)", EXIT_OK
    elif exists_positive_dimensional_moduli(v, args.max_order):
        verdict, code = "positive-dimensional moduli", EXIT_OK
    else:
        verdict, code = "no semistable sheaves", EXIT_NOT_STABLE
    rec: Dict[str, object] = {"character": _char(v), "verdict": verdict}
    if not v.is_torsion:
        rec["delta"] = _q(v.delta)
        rec["delta_curve"] = _q(delta(v.mu, args.max_order))
    if args.format == "plain":
        out.write(verdict + "\n")
    else:
        _emit(rec, args.format, out)
    return code


def correspondence_record(v: ChernCharacter, max_order: int = DEFAULT_MAX_ORDER) -> Dict[str, object]:
    nu_plus, nu_minus = corresponding_exceptionals(v, max_order)
    res = resolution(v, max_order)
    rec: Dict[str, object] = {
        "nu_plus": _slope(nu_plus),
        "nu_minus": _slope(nu_minus),
        "sign_case": res.sign_case.value,
        "m1": res.m1,
        "m2": res.m2,
        "m3": res.m3,
        "k_char": _char(res.k_char),
        "kronecker": {"N": res.kronecker_shape.n, "b": res.kronecker_shape.b, "a": res.kronecker_shape.a},
        "u_plus": None,
        "u_minus": None,
    }
    if not v.is_torsion:
        pair = orthogonal_characters(v, max_order)
        rec["u_plus"] = _char(pair.u_plus)
        rec["u_minus"] = _char(pair.u_minus)
    return rec


def cmd_correspond(args, out) -> int:
    v = parse_character(args.character)
    _emit(correspondence_record(v, args.max_order), args.format, out)
    return EXIT_OK


def cmd_kronecker(args, out) -> int:
    if args.action == "orbit":
        rows = [(s.b, s.a) for s in exceptional_orbit(args.n, args.count)]
        _emit_rows(("b", "a"), rows, args.format, out)
        return EXIT_OK
    if args.action == "info":
        s = parse_shape(args.shape)
        dec = decompose_general(s)
        _emit(
            {
                "shape": str(s),
                "semistable": semistable_exists(s),
                "expected_dimension": expected_dimension(s),
                "decomposition": [f"{t.b},{t.a}x{m}" for t, m in dec.summands],
            },
            args.format, out,
        )
        return EXIT_OK
    f, e = parse_shape(args.f), parse_shape(args.e)
    hom, ext = general_hom_ext(f, e)
    _emit({"f": str(f), "e": str(e), "chi": euler_form(f, e), "hom": hom, "ext": ext}, args.format, out)
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    v, w = parse_character(args.v), parse_character(args.w)
    rep = generic_cohomology(v, w, args.max_order)
    _emit(rep.to_dict(), args.format, out)
    return EXIT_OK


def cmd_regions(args, out) -> int:
    v = parse_character(args.character)
    rows = (
        (_q(mu), _dec(mu), _q(d), _dec(d), label)
        for mu, d, label in region_map(
            v,
            parse_rational(args.mu_min),
            parse_rational(args.mu_max),
            parse_rational(args.delta_min),
            parse_rational(args.delta_max),
            args.grid,
            args.max_order,
        )
    )
    _emit_rows(("mu", "mu_decimal", "delta", "delta_decimal", "region"), rows, args.format, out)
    return EXIT_OK


def cmd_gg(args, out) -> int:
    v, w = parse_character(args.v), parse_character(args.w)
    _emit(
        {
            "hom": hom_globally_generated(v, w, args.max_order).value,
            "tensor": tensor_globally_generated(v, w, args.max_order).value,
        },
        args.format, out,
    )
    return EXIT_OK


def cmd_orthogonal(args, out) -> int:
    v, w = parse_character(args.v), parse_character(args.w)
    _emit(
        {
            "orthogonal": cohomologically_orthogonal(v, w, args.max_order),
            "sufficient_multiple": sufficient_multiple(v, w, args.max_order),
            "region": classify_region(v, w, args.max_order).value,
        },
        args.format, out,
    )
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.action == "delta":
        mu = parse_rational(args.mu)
        _emit({"mu": _q(mu), "max_order": args.max_order,
               "delta": _q(delta_brute_force(mu, args.max_order))}, args.format, out)
        return EXIT_OK
    cfg = OracleConfig(prime=args.prime, trials=args.trials, seed=args.seed)
    f, e = parse_shape(args.f), parse_shape(args.e)
    hom = kronecker_hom_oracle(f, e, cfg)
    _emit({"f": str(f), "e": str(e), "hom": hom, "prime": cfg.prime,
           "trials": cfg.trials, "seed": cfg.seed}, args.format, out)
    return EXIT_OK


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default=None)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="refinement depth for interval location")

    p = argparse.ArgumentParser(prog="p2tensor", description="Generic cohomology of tensor products on P^2")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chern", parents=[common], help="invariants of a Chern character")
    s.add_argument("character", help="'r c1 ch2' (torsion: '0 d chi')")
    s.add_argument("--twist", type=int, default=0)
    s.add_argument("--dual", action="store_true")
    s.add_argument("--serre-dual", action="store_true")
    s.add_argument("--with", dest="with_", metavar="W", help="second character for tensor and chi")
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("exceptional", parents=[common], help="exceptional slope by dyadic index")
    s.add_argument("index", help="'p/2^q'")
    s.set_defaults(func=cmd_exceptional)

    s = sub.add_parser("dlp", help="the stability curve delta(mu)")
    dsub = s.add_subparsers(dest="action", required=True)
    d = dsub.add_parser("value", parents=[common])
    d.add_argument("mu")
    d = dsub.add_parser("sample", parents=[common])
    d.add_argument("--min", required=True)
    d.add_argument("--max", required=True)
    d.add_argument("--denominator", type=int, required=True)
    d.set_defaults(default_format="csv")
    s.set_defaults(func=cmd_dlp)

    s = sub.add_parser("stable", parents=[common], help="existence of stable sheaves")
    s.add_argument("character")
    s.set_defaults(func=cmd_stable)

    s = sub.add_parser("correspond", parents=[common], help="nu+-, resolution and u+-")
    s.add_argument("character")
    s.set_defaults(func=cmd_correspond)

    s = sub.add_parser("kronecker", help="Kronecker module calculator")
    ksub = s.add_subparsers(dest="action", required=True)
    k = ksub.add_parser("orbit", parents=[common])
    k.add_argument("n", type=int)
    k.add_argument("count", type=int)
    k = ksub.add_parser("info", parents=[common])
    k.add_argument("shape", help="'N:b,a'")
    k = ksub.add_parser("homext", parents=[common])
    k.add_argument("f")
    k.add_argument("e")
    s.set_defaults(func=cmd_kronecker)

    s = sub.add_parser("cohomology", parents=[common], help="generic cohomology of V (x) W")
    s.add_argument("v")
    s.add_argument("w")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("regions", parents=[common], help="region map CSV for fixed v")
    s.add_argument("character")
    s.add_argument("--grid", type=int, required=True, help="grid denominator")
    s.add_argument("--mu-min", default="-2")
    s.add_argument("--mu-max", default="2")
    s.add_argument("--delta-min", default="1/2")
    s.add_argument("--delta-max", default="3")
    s.set_defaults(func=cmd_regions, default_format="csv")

    s = sub.add_parser("gg", parents=[common], help="global generation criteria")
    s.add_argument("v")
    s.add_argument("w")
    s.set_defaults(func=cmd_gg)

    s = sub.add_parser("orthogonal", parents=[common], help="cohomological orthogonality")
    s.add_argument("v")
    s.add_argument("w")
    s.set_defaults(func=cmd_orthogonal)

    s = sub.add_parser("oracle", help="independent verification engines")
    osub = s.add_subparsers(dest="action", required=True)
    o = osub.add_parser("kronecker-hom", parents=[common])
    o.add_argument("f")
    o.add_argument("e")
    o.add_argument("--prime", type=int, default=OracleConfig.prime)
    o.add_argument("--trials", type=int, default=OracleConfig.trials)
    o.add_argument("--seed", type=int, default=OracleConfig.seed)
    o = osub.add_parser("delta", parents=[common])
    o.add_argument("mu")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "plain")
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except OracleConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except NotStableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_STABLE
    except DepthExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEPTH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
