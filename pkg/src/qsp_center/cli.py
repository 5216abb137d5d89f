"""Command-line interface: ``qsp-center`` or ``python -m qsp_center``.

Exit codes: 0 success, 1 a verification or consistency failure, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import center_monoid as cm
from .coideal_center import (CoidealParams, UnsupportedPair, adjoint_closure, central_basis,
                             spherical_invariants)
from .lattice_core import Weight, simple_root, w0_action, weyl_dim
from .qfield import parse_ratfunc
from .symmetric_pairs import (CatalogError, admissible_pairs, catalog, load_satake, p_map,
                              parse_pair, pi_star, restricted_root, theta_matrix)


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> str | int:
    return int(x) if x.denominator == 1 else str(x)


def _coords(text: str, n: int, what: str) -> tuple[int, ...]:
    try:
        c = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    if len(c) != n:
        raise UsageError(f"{what} needs {n} coordinates, got {len(c)}")
    return c


def _diagram(args):
    if getattr(args, "satake", None):
        return load_satake(args.satake)
    if not args.label:
        raise UsageError("give a pair label or --satake FILE")
    return catalog(parse_pair(args.label, args.n, args.r))


def _params(args, sd) -> CoidealParams:
    out = {}
    for key in ("d", "s"):
        text = getattr(args, key)
        if text is None:
            out[key] = {}
            continue
        vals = [parse_ratfunc(v) for v in text.split(",")]
        if len(vals) != len(sd.white):
            raise UsageError(f"--{key} needs one value per white node ({len(sd.white)})")
        out[key] = dict(zip(sd.white, vals))
    return CoidealParams(d=out["d"], s=out["s"])


# -- subcommands -----------------------------------------------------------------

def cmd_pairs_list(args):
    rows = []
    for p in sorted(admissible_pairs(args.max_rank), key=cm._case_key):
        sd = catalog(p)
        rows.append({"pair": str(p), "label": p.label, "rank": p.rank, "r": p.r,
                     "type": str(sd.lie_type)})
    return {"pairs": rows}, 0


def cmd_pair_show(args):
    sd = _diagram(args)
    lt = sd.lie_type
    rest = {str(i): [_frac(c) for c in restricted_root(sd, simple_root(lt, i)).value.coords]
            for i in pi_star(sd)}
    return {"name": sd.name, "type": str(lt), "black": sorted(sd.black),
            "d": list(sd.d_perm), "p": [p_map(sd)[i] for i in sd.white], "white": sd.white,
            "theta_matrix": theta_matrix(sd), "pi_star": pi_star(sd),
            "restricted_simple_roots": rest}, 0


def cmd_monoid(args):
    sd = _diagram(args)
    mb = cm.monoid_generators(sd, args.cmax)
    return {"generators": [list(g.coords) for g in mb.generators],
            "rank": len(mb.generators)}, 0


def cmd_verify(args):
    fn = cm.verify_prop91 if args.which == "prop91" else cm.verify_prop92
    cases = fn(args.max_rank, args.jobs)
    passed = sum(c["pass"] for c in cases)
    report = {"check": args.which, "max_rank": args.max_rank, "cases": cases,
              "passed": passed, "total": len(cases), "all_pass": passed == len(cases)}
    return report, 0 if report["all_pass"] else 1


def _algebra_setup(args, key):
    sd = _diagram(args)
    text = getattr(args, key)
    mu = Weight(sd.lie_type, _coords(text, sd.lie_type.rank, f"--{key.replace('lam', 'lambda')}"))
    if not mu.is_dominant():
        raise UsageError(f"{text!r} is not a dominant weight")
    return sd, mu


def cmd_closure(args):
    sd, mu = _algebra_setup(args, "mu")
    cs = adjoint_closure(mu, args.cap)
    return {"mu": list(mu.coords), "dim": cs.dim, "basis_size": len(cs.basis),
            "expected_dim": weyl_dim(mu) * weyl_dim(-w0_action(mu))}, 0


def cmd_central(args):
    sd, mu = _algebra_setup(args, "mu")
    elems = central_basis(sd, _params(args, sd), mu, args.degree_bound, args.cap)
    return {"mu": list(mu.coords),
            "elements": [{"nu": list(c.nu.coords), "top_weight": list(c.top_weight.coords),
                          "element": str(c.element)} for c in elems]}, 0


def cmd_spherical(args):
    sd, lam = _algebra_setup(args, "lam")
    vecs = spherical_invariants(sd, _params(args, sd), lam, args.cap)
    return {"lambda": list(lam.coords), "invariant_dim": len(vecs)}, 0


# -- output ------------------------------------------------------------------------

def _table(obj) -> str:
    if isinstance(obj, dict):
        lists = [k for k, v in obj.items() if isinstance(v, list) and v and isinstance(v[0], dict)]
        lines = []
        for k in sorted(obj):
            if k not in lists:
                lines.append(f"{k}: {_cell(obj[k])}")
        for k in lists:
            lines.append("")
            lines.append(_rows(obj[k]))
        return "\n".join(lines).strip("\n")
    return _cell(obj)


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "-" if v is None else str(v)


def _rows(rows: list[dict]) -> str:
    keys = list(rows[0])
    body = [[_cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(b[i]) for b in body)) for i, k in enumerate(keys)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*keys), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*b) for b in body)
    return "\n".join(line.rstrip() for line in out)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("label", nargs="?", help="pair label, e.g. AI, DI-1, AI2, DIAGONAL-A1")
    pair.add_argument("-n", type=int, help="rank")
    pair.add_argument("--r", type=int, help="index r for the families that need one")
    pair.add_argument("--satake", metavar="FILE", help="load a JSON Satake diagram instead")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--cap", type=int, default=100, help="dimension cap for closures and modules")

    ap = argparse.ArgumentParser(prog="qsp-center",
                                 description="Centers of quantum symmetric pair coideal subalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    pairs = sub.add_parser("pairs", help="catalog browsing").add_subparsers(dest="action", required=True)
    pl = pairs.add_parser("list", parents=[common])
    pl.add_argument("--max-rank", type=int, default=8)
    pl.set_defaults(func=cmd_pairs_list)

    ps = sub.add_parser("pair", help="one Satake diagram").add_subparsers(dest="action", required=True)
    ps.add_parser("show", parents=[common, pair]).set_defaults(func=cmd_pair_show)

    mo = sub.add_parser("monoid", parents=[common, pair], help="generators of P_Theta")
    mo.add_argument("--cmax", type=int, default=3)
    mo.set_defaults(func=cmd_monoid)

    ve = sub.add_parser("verify", parents=[common], help="classification-wide checks")
    ve.add_argument("which", choices=("prop91", "prop92"))
    ve.add_argument("--max-rank", type=int, default=8)
    ve.add_argument("--jobs", type=int, default=1)
    ve.set_defaults(func=cmd_verify)

    qa = sub.add_parser("qalg", help="small-rank algebra computations").add_subparsers(
        dest="action", required=True)
    cl = qa.add_parser("closure", parents=[common, pair, alg])
    cl.add_argument("--mu", required=True)
    cl.set_defaults(func=cmd_closure)
    ce = qa.add_parser("central", parents=[common, pair, alg])
    ce.add_argument("--mu", required=True)
    ce.add_argument("--d", help="comma-separated d_i, one per white node")
    ce.add_argument("--s", help="comma-separated s_i, one per white node")
    ce.add_argument("--degree-bound", type=int)
    ce.set_defaults(func=cmd_central)
    sp = qa.add_parser("spherical", parents=[common, pair, alg])
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--d")
    sp.add_argument("--s")
    sp.set_defaults(func=cmd_spherical)
    return ap


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_rank", 2) < 2:
        err.write("error: --max-rank must be at least 2\n")
        return 2
    try:
        result, code = args.func(args)
    except (UsageError, CatalogError, UnsupportedPair, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (cm.CertificateError, RuntimeError) as exc:
        err.write(f"failure: {exc}\n")
        return 1
    out.write((dumps(result) if args.format == "json" else _table(result)) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
