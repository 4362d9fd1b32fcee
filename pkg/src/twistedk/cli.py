"""Command-line interface: ``twistedk {basis,fusion,adams,nonequiv,verify}``.

Exit codes: 0 success, 1 usage error, 2 computation error (including a
failing ``verify`` run).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .adams import adams_coefficient, adams_equivariant, target_context
from .koszul import KoszulContext, LiftError, adams_on_generators, lift_chain_map
from .repring import weyl_dimension
from .rootsys import RootSystemError, build_root_system
from .torus import TorusError
from .verify import run_checks
from .verlinde import (
    TwistedContext,
    UnsupportedTypeError,
    VerlindeClass,
    VerlindeError,
    _fmt_weight,
    c_invariant,
    format_class,
    fusion_table,
    fusion_table_csv,
)

ZERO_NOTE = "zero theory: |n| < h^v, the twisted K-theory vanishes"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weight(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twistedk", description="Adams operations on twisted K-theory of compact Lie groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, ell=False, fmt=("json", "csv", "pretty")):
        sp.add_argument("--group", required=True, help='simple type such as "A2" or "E7"')
        sp.add_argument("--twist", type=int, required=True, help="twist level n (nonzero)")
        if ell:
            sp.add_argument("--ell", type=int, required=True, help="degree of the Adams operation")
        sp.add_argument("--format", choices=fmt, default="json")
        sp.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    common(sub.add_parser("basis", help="level-k weights with dimensions"))
    common(sub.add_parser("fusion", help="full fusion table"))
    sp = sub.add_parser("adams", help="psi^ell on basis classes")
    common(sp, ell=True)
    sp.add_argument("--weight", type=_weight, action="append", help="comma-separated Dynkin labels; repeatable")
    sp = sub.add_parser("nonequiv", help="nonequivariant action: coefficients and eta generators")
    common(sp, ell=True, fmt=("json", "pretty"))
    sp.add_argument("--support-bound", type=int, help="level bound for chain-map coefficients")
    common(sub.add_parser("verify", help="run the invariant suite"), ell=True, fmt=("json", "pretty"))
    return p


def _context(args) -> TwistedContext:
    try:
        rs = build_root_system(args.group)
    except RootSystemError as e:
        raise UsageError(str(e))
    if args.twist == 0:
        raise UsageError("twist n = 0 (untwisted K-theory) is not supported")
    return TwistedContext(rs, args.twist)


def _terms(a: VerlindeClass) -> list:
    return a.to_json()["terms"]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_basis(args) -> str:
    ctx = _context(args)
    rows = [(mu, weyl_dimension(ctx.rs, mu)) for mu in ctx.basis]
    if args.format == "json":
        obj = {"group": args.group, "twist": ctx.n, "level": ctx.k,
               "basis": [{"weight": list(mu), "dim": d} for mu, d in rows]}
        if ctx.is_zero:
            obj["note"] = ZERO_NOTE
        return _dump(obj)
    if args.format == "csv":
        return "weight,dim\n" + "".join(f"\"{_fmt_weight(mu)}\",{d}\n" for mu, d in rows)
    lines = [f"{ctx}  level k = {ctx.k}  rank {len(rows)}"]
    lines += [f"  {_fmt_weight(mu)}: {d}" for mu, d in rows]
    if ctx.is_zero:
        lines.append(ZERO_NOTE)
    return "\n".join(lines) + "\n"


def cmd_fusion(args) -> str:
    ctx = _context(args)
    table = fusion_table(ctx)
    if args.format == "csv":
        return fusion_table_csv(ctx, table)
    if args.format == "json":
        obj = {"group": args.group, "twist": ctx.n, "level": ctx.k,
               "basis": [list(mu) for mu in ctx.basis],
               "table": [{"left": list(a), "right": list(b), "product": _terms(table[a, b])}
                         for a in ctx.basis for b in ctx.basis]}
        if ctx.is_zero:
            obj["note"] = ZERO_NOTE
        return _dump(obj)
    if ctx.is_zero:
        return ZERO_NOTE + "\n"
    width = max(len(format_class(p)) for p in table.values())
    lines = []
    for a in ctx.basis:
        lines.append("  ".join(format_class(table[a, b]).ljust(width) for b in ctx.basis).rstrip())
    return "\n".join(lines) + "\n"


def cmd_adams(args) -> str:
    ctx = _context(args)
    tgt = target_context(ctx, args.ell)
    if args.weight:
        weights = []
        for w in args.weight:
            mu = tuple(w)
            if len(mu) != ctx.rs.rank or mu not in set(ctx.basis):
                raise UsageError(f"{mu} is not a level-{ctx.k} weight of {ctx.rs.lie_type}")
            weights.append(mu)
    else:
        weights = list(ctx.basis)
    images = [(mu, adams_equivariant(ctx, args.ell, VerlindeClass.basis_class(ctx, mu))) for mu in weights]
    notes = []
    if ctx.is_zero:
        notes.append(ZERO_NOTE)
    if args.ell == 0:
        notes.append("psi^0 = 0")
    if args.format == "json":
        obj = {"group": args.group, "ell": args.ell, "from_twist": ctx.n, "to_twist": args.ell * ctx.n,
               "images": [{"weight": list(mu), "terms": _terms(img)} for mu, img in images]}
        if notes:
            obj["note"] = "; ".join(notes)
        return _dump(obj)
    if args.format == "csv":
        return "weight,image\n" + "".join(f"\"{_fmt_weight(mu)}\",{format_class(img)}\n" for mu, img in images)
    lines = [f"psi^{args.ell}: {ctx} -> {tgt}"] + [f"  W{_fmt_weight(mu)} -> {format_class(img)}"
                                                    for mu, img in images]
    return "\n".join(lines + notes) + "\n"


def _rep_terms(r) -> list:
    return r.to_json()


def cmd_nonequiv(args) -> str:
    ctx = _context(args)
    rs, n, ell = ctx.rs, ctx.n, args.ell
    obj = {"group": args.group, "ell": ell, "from_twist": n, "to_twist": ell * n}
    if ctx.is_zero:
        obj["zero_theory"] = True
        obj["note"] = ZERO_NOTE
        return _render_nonequiv(obj, args.format)
    c_n = c_invariant(ctx)
    obj["c_source"] = c_n
    obj["coefficient"] = {"image_of_1": adams_coefficient(rs, n, ell, 1), "exponent": rs.num_positive_roots}
    if ell == 0:
        obj["note"] = "psi^0 = 0"
        return _render_nonequiv(obj, args.format)
    obj["c_target"] = c_invariant(target_context(ctx, ell))
    if rs.rank < 2:
        obj["eta"] = None
        obj["note"] = "rank 1: no exterior generators, only the coefficient group"
        return _render_nonequiv(obj, args.format)
    kn = KoszulContext.of(ctx)
    kl = KoszulContext.of(target_context(ctx, ell))
    lift = lift_chain_map(kn, kl, ell, support_bound=args.support_bound)
    act = adams_on_generators(kn, kl, ell, lift=lift)
    obj["chain_map"] = {
        "source_generators": [_rep_terms(y) for y in kn.generators],
        "target_generators": [_rep_terms(y) for y in kl.generators],
        "psi0_images": [_rep_terms(r) for r in lift.psi0_images],
        "psi1_matrix": [[_rep_terms(m) for m in row] for row in lift.psi1_matrix],
        "augmented": [list(r) for r in lift.augmented],
    }
    obj["eta"] = {
        "source_basis": [list(v) for v in act.source.kernel_basis],
        "target_basis": [list(v) for v in act.target.kernel_basis],
        "augmented_images": [list(v) for v in act.images],
        "matrix": [list(r) for r in act.matrix],
        "modulus": act.modulus,
    }
    return _render_nonequiv(obj, args.format)


def _render_nonequiv(obj, fmt) -> str:
    if fmt == "json":
        return _dump(obj)
    lines = [f"psi^{obj['ell']}: twist {obj['from_twist']} -> {obj['to_twist']}"]
    if obj.get("zero_theory"):
        return "\n".join(lines + [obj["note"]]) + "\n"
    lines.append(f"  c(G, n) = {obj['c_source']}")
    if "c_target" in obj:
        lines.append(f"  c(G, ell n) = {obj['c_target']}")
    lines.append(f"  coefficient: 1 -> {obj['coefficient']['image_of_1']}")
    eta = obj.get("eta")
    if eta:
        for i, row in enumerate(eta["matrix"]):
            rhs = " + ".join(f"{c}*eta_{j + 1}" for j, c in enumerate(row) if c) or "0"
            lines.append(f"  eta_{i + 1} -> {rhs}  (mod {eta['modulus']})")
    if "note" in obj:
        lines.append(obj["note"])
    return "\n".join(lines) + "\n"


def cmd_verify(args, fusion=None) -> tuple:
    ctx = _context(args)
    results = run_checks(ctx, args.ell, fusion=fusion)
    ok = all(r.ok for r in results)
    if args.format == "json":
        text = _dump({"group": args.group, "twist": ctx.n, "ell": args.ell, "passed": ok,
                      "checks": [{"name": r.name, "ok": r.ok, "witness": r.witness} for r in results]})
    else:
        text = "\n".join(r.line() for r in results) + "\n"
    return text, ok


COMMANDS = {"basis": cmd_basis, "fusion": cmd_fusion, "adams": cmd_adams, "nonequiv": cmd_nonequiv}


def main(argv: Optional[Sequence[str]] = None, fusion=None) -> int:
    """Entry point; ``fusion`` replaces the fusion product in ``verify`` (test hook)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            text, ok = cmd_verify(args, fusion=fusion)
        else:
            text, ok = COMMANDS[args.command](args), True
    except UsageError as e:
        print(f"twistedk: usage error: {e}", file=sys.stderr)
        return 1
    except (UnsupportedTypeError, LiftError, VerlindeError, TorusError, AssertionError) as e:
        print(f"twistedk: error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
