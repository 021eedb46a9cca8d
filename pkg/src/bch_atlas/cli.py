"""Command-line interface: ``bch-atlas <subcommand> ...``.

Exit codes: 0 success, 1 a verify suite reported a disagreement, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import codes, distance, leaders, verify
from .cosets import CosetContext, all_cosets, default_max_enum, k_largest_leaders, leader_table
from .errors import BchAtlasError
from .gf import prime_power
from .leaders import FamilyTag, family_length


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(codes.json_value(obj), indent=2)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(codes.json_value(v), separators=(",", ":"))
    return str(v)


def _dump_tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    lines = ["\t".join(header)]
    lines += ["\t".join(_cell(r.get(k)) for k in header) for r in rows]
    return "\n".join(lines)


def _emit(args, obj, rows: list[dict] | None = None) -> None:
    if args.format == "json":
        print(_dump_json(obj))
    else:
        if rows is None:
            rows = obj if isinstance(obj, list) else [obj]
        print(_dump_tsv(rows))


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _family_param(args) -> tuple[FamilyTag, int]:
    family = FamilyTag.parse(args.family)
    prime_power(args.q)
    if family is FamilyTag.ANTI:
        if args.s is None or args.m is not None:
            raise UsageError("the anti family takes --s (and not --m)")
        return family, args.s
    if args.m is None or args.s is not None:
        raise UsageError(f"the {family.value} family takes --m (and not --s)")
    return family, args.m


def _delta_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad delta range {text!r}; expected LO:HI") from None
    if a > b:
        raise UsageError(f"empty delta range {text!r}")
    return range(a, b + 1)


def _budgets(args) -> verify.Budgets:
    return verify.Budgets(args.max_enum, args.max_codewords, args.max_syndromes)


def _table_for(args, q: int, n: int):
    return leader_table(CosetContext.of(q, n), args.max_enum)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_cosets(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    ctx = CosetContext.of(args.q, n)
    out = []
    for c in all_cosets(ctx, args.max_enum):
        rec = {"leader": c.leader, "size": c.size}
        if args.elements:
            rec["elements"] = list(c.elements)
        out.append(rec)
    _emit(args, out)
    return 0


def _formula_leader(family: FamilyTag, q: int, param: int, rank: int):
    if family is FamilyTag.PRIMITIVE:
        return leaders.primitive_delta(q, param, rank)
    if family is FamilyTag.ANTI:
        return leaders.anti_delta(q, param, rank)
    if rank == 1:
        return leaders.proj_delta1(q, param)
    if rank == 2:
        return leaders.proj_delta2(q, param)
    raise BchAtlasError(f"rank {rank} not covered for the projective family")


def cmd_leaders(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    rows = []
    oracle = None
    if args.method in ("oracle", "both"):
        oracle = k_largest_leaders(CosetContext.of(args.q, n), args.k, args.max_enum)
    for rank in range(1, args.k + 1):
        rec: dict = {"rank": rank}
        if oracle is not None:
            v, sz = oracle[rank - 1] if rank <= len(oracle) else (None, None)
            rec.update(leader=v, size=sz)
        if args.method in ("formula", "both"):
            try:
                res = _formula_leader(family, args.q, param, rank)
                rec.update(formula=res.value, formula_size=res.coset_size, formula_id=res.formula_id)
            except BchAtlasError as exc:
                rec.update(formula=None, formula_size=None, formula_id=None, note=f"{type(exc).__name__}: {exc}")
            if oracle is None:
                rec["leader"], rec["size"] = rec["formula"], rec["formula_size"]
        rows.append(rec)
    _emit(args, {"family": family.value, "q": args.q, "n": n, "leaders": rows}, rows)
    return 0


def cmd_code(args) -> int:
    family, param = _family_param(args)
    rep = codes.params_report(
        family, args.q, param, args.delta, args.b,
        max_codewords=args.max_codewords, max_syndromes=args.max_syndromes,
        exhaustive=not args.no_exhaustive, dual_search=not args.no_dual_search,
    )
    _emit(args, rep.to_dict())
    return 0


def cmd_dual(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    tab = _table_for(args, args.q, n)
    code = codes.bch_code(family, args.q, param, args.delta, args.b, table=tab)
    dual = sorted(codes.dualize(code.defining_set))
    dual_leaders = sorted({int(tab.leader[r]) for r in dual})
    out = {
        "family": family.value, "q": args.q, "n": n, "b": args.b, "delta": args.delta,
        "dimension": code.dimension,
        "defining_set_leaders": [{"leader": int(l), "size": int(tab.size[l])} for l in code.defining_set.coset_leaders],
        "dual_dimension": n - code.dimension,
        "dual_defining_set_leaders": [{"leader": l, "size": int(tab.size[l])} for l in dual_leaders],
        "dual_defining_set_size": len(dual),
    }
    _emit(args, out)
    return 0


def cmd_dually_bch(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    tab = _table_for(args, args.q, n)
    code = codes.bch_code(family, args.q, param, args.delta, args.b, table=tab)
    v = codes.is_dually_bch_direct(code, tab)
    try:
        formula = codes.dually_bch_closed_form(family, args.q, param, args.delta, args.b)
        note = None
    except BchAtlasError as exc:
        formula, note = None, f"{type(exc).__name__}: {exc}"
    out = {
        "family": family.value, "q": args.q, "n": n, "b": args.b, "delta": args.delta,
        "direct": v.verdict, "formula": formula,
        "dual_b": v.b, "dual_delta": v.delta, "breaking_residue": v.breaking_residue,
        "note": note,
    }
    _emit(args, out)
    return 0


def cmd_distance(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    tab = _table_for(args, args.q, n)
    code = codes.bch_code(family, args.q, param, args.delta, args.b, table=tab)
    k = code.dimension
    out: dict = {
        "family": family.value, "q": args.q, "n": n, "k": k, "b": args.b, "delta": args.delta,
        "bose": codes.bose_distance(code.defining_set),
        "sphere_packing_max": distance.sphere_packing_max_d(n, k, args.q) if k > 0 else None,
        "divisor_multiple": distance.divisor_multiple_distance(args.q, n, args.delta) if args.b == 1 else None,
        "exhaustive": None,
        "dual_low_weight": None,
        "notes": [],
    }
    if k > 0 and not args.no_exhaustive:
        try:
            out["exhaustive"] = distance.exhaustive_min_distance(code, budget=args.max_codewords)
        except BchAtlasError as exc:
            out["notes"].append(f"exhaustive: {exc}")
    if args.dual_wmax:
        rows = sorted({int(tab.leader[r]) for r in codes.dualize(code.defining_set)})
        try:
            res = distance.low_weight_search(rows, n=n, q=args.q, wmax=args.dual_wmax, budget=args.max_syndromes)
            out["dual_low_weight"] = {"weight": res.weight, "support": list(res.support), "coefficients": list(res.coefficients)}
        except BchAtlasError as exc:
            out["notes"].append(f"dual low-weight: {exc}")
    _emit(args, out)
    return 0


def cmd_verify(args) -> int:
    names = args.suite or list(verify.SUITES)
    for name in names:
        if name not in verify.SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}")
    reports = verify.run_suites(names, _budgets(args), args.threads)
    for r in reports:
        s = r.summary
        print(f"{r.suite}: {s['agree']} agree, {s['disagree']} disagree, {s['skipped']} skipped", file=sys.stderr)
    if args.format == "json":
        print(_dump_json([r.to_dict() for r in reports]))
    else:
        rows = []
        for r in reports:
            for c in r.cases:
                d = c.to_dict()
                rows.append({"suite": r.suite, **{k: d[k] for k in ("id", "formula", "oracle", "status", "tag", "note")}})
        print(_dump_tsv(rows))
    return 0 if all(r.ok for r in reports) else 1


def cmd_table(args) -> int:
    family, param = _family_param(args)
    n, _ = family_length(family, args.q, param)
    tab = _table_for(args, args.q, n)
    rows = []
    for delta in _delta_range(args.delta):
        rep = codes.params_report(
            family, args.q, param, delta, args.b, table=tab,
            max_codewords=args.max_codewords, max_syndromes=args.max_syndromes,
            exhaustive=args.exhaustive, dual_search=False,
        )
        rows.append(rep.to_dict())
    _emit(args, rows)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--max-enum", type=int, default=None, help="coset enumeration budget (n*m steps)")
    common.add_argument("--max-codewords", type=int, default=None, help="exhaustive search budget")
    common.add_argument("--max-syndromes", type=int, default=None, help="low-weight search budget")

    fam = _Parser(add_help=False)
    fam.add_argument("--family", required=True, choices=[f.value for f in FamilyTag] + ["anti-primitive", "proj"])
    fam.add_argument("--q", type=int, required=True)
    fam.add_argument("--m", type=int)
    fam.add_argument("--s", type=int)

    code_args = _Parser(add_help=False)
    code_args.add_argument("--delta", type=int, required=True)
    code_args.add_argument("--b", type=int, default=1)

    p = _Parser(prog="bch-atlas", description="BCH codes over GF(q): cosets, leaders, duals and distances.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("cosets", parents=[common, fam], help="list cyclotomic cosets")
    sp.add_argument("--elements", action="store_true", help="include coset elements")
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("leaders", parents=[common, fam], help="k largest coset leaders")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    sp.set_defaults(func=cmd_leaders)

    sp = sub.add_parser("code", parents=[common, fam, code_args], help="parameters of one BCH code")
    sp.add_argument("--no-exhaustive", action="store_true")
    sp.add_argument("--no-dual-search", action="store_true")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("dual", parents=[common, fam, code_args], help="dual defining set and dimension")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("dually-bch", parents=[common, fam, code_args], help="is the dual a BCH code")
    sp.set_defaults(func=cmd_dually_bch)

    sp = sub.add_parser("distance", parents=[common, fam, code_args], help="distance bounds and oracles")
    sp.add_argument("--no-exhaustive", action="store_true")
    sp.add_argument("--dual-wmax", type=int, default=0, help="search the dual for weight <= W (1..4)")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("verify", parents=[common], help="closed forms against oracles")
    sp.add_argument("--suite", action="append", help="suite name (repeatable); default all")
    sp.add_argument("--threads", type=int, default=None, help="parallel suites (env BCH_ATLAS_THREADS)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", parents=[common, fam], help="parameters over a delta range")
    sp.add_argument("--delta", required=True, help="LO:HI, inclusive")
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--exhaustive", action="store_true", help="run exhaustive distance where affordable")
    sp.set_defaults(func=cmd_table)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_enum", None) is None and hasattr(args, "max_enum"):
            args.max_enum = default_max_enum()
        return args.func(args)
    except UsageError as exc:
        print(f"bch-atlas: error: {exc}", file=sys.stderr)
        return 2
    except (BchAtlasError, ValueError, KeyError) as exc:
        print(f"bch-atlas: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
