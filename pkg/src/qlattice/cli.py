"""Command line front end: ``qlattice derive | verify | eval | list``.

Exit codes: 0 ok, 2 usage or parse error, 3 computation failure,
4 tolerance violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import catalog, families, relations
from .engine import RelationTriple, fit_common_scalar, relation_residual, solve_relation
from .errors import QLatticeError

SCHEMA = "qlattice/1"
EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_TOLERANCE = 0, 2, 3, 4

DEFAULTS = {
    "dual-hahn": {"a": "0.3", "b": "10.3", "c": "0.2"},
    "q-racah": {"N": "8", "beta": "0.3", "gamma": "0.5", "delta": "0.2", "q": "0.4"},
    "racah": {"N": "8", "beta": "0.3", "gamma": "0.5", "delta": "0.2"},
}

DEFAULT_Z = "0.37,1.61,2.23,3.49,4.71"
DEFAULT_NU = "2,3,4"

# verify entries beyond the catalog
EXTRA_ENTRIES = {
    "TTRR": "TTRR in nu between y_(nu-1), y_nu, y_(nu+1)",
    "DELTA+1": "raising Delta-ladder",
    "DELTA-1": "lowering Delta-ladder",
    "NABLA": "nabla-ladder between y_nu, its nabla derivative and y_(nu-1)",
    "DR1": "difference recurrence between Delta P_(n-1), Delta P_n, P_(n+1)",
    "DR2": "difference recurrence between P_(n-1), Delta P_n, P_(n+1)",
    "DIFF1": "sigma nabla P_n / nabla x against P_(n+1), P_n",
    "DIFF2": "Phi Delta P_n / Delta x against P_(n+1), P_n",
    "ORACLE": "TTRR values against the hypergeometric series",
}


class UsageError(Exception):
    pass


# --- config and parsing ---------------------------------------------------------------


def parse_config(text: str) -> dict:
    cfg = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, val = (p.strip() for p in line.split("=", 1))
        if not key:
            raise UsageError(f"config line {lineno}: empty key")
        cfg[key] = val
    return cfg


def _number(text: str, rational: bool):
    try:
        if rational:
            return Fraction(text)
        v = float(text)
        return int(v) if v.is_integer() and "." not in text and "e" not in text.lower() else v
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a number: {text!r}") from exc


def parse_list(text: str | None, rational: bool = False) -> list:
    """'1,2,3', '1..5' or '' (empty list)."""
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    if ".." in text and text.count("..") == 1 and "," not in text:
        lo, hi = text.split("..")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise UsageError(f"bad range {text!r}") from exc
    return [_number(t.strip(), rational) for t in text.split(",") if t.strip()]


def parse_pairs(text: str, rational: bool) -> tuple:
    pairs = []
    for chunk in text.split(";"):
        vals = parse_list(chunk, rational)
        if len(vals) != 2:
            raise UsageError(f"pair {chunk!r} needs two numbers")
        pairs.append(tuple(vals))
    if len(pairs) != 3:
        raise UsageError("a triple needs three pairs separated by ';'")
    return tuple(pairs)


def build_family(cfg: dict, rational: bool = False):
    name = cfg.get("family", "dual-hahn")
    if name not in DEFAULTS:
        raise UsageError(f"unknown family {name!r}; choose from {sorted(DEFAULTS)}")
    if rational and name == "q-racah":
        raise UsageError("the rational backend needs a quadratic lattice (dual-hahn or racah)")
    p = {k: _number(cfg.get(k, v), rational) for k, v in DEFAULTS[name].items()}
    if name == "dual-hahn":
        return families.make_dual_hahn(p["a"], p["b"], p["c"])
    if name == "racah":
        return families.make_racah(int(p["N"]), p["beta"], p["gamma"], p["delta"])
    return families.make_q_racah(int(p["N"]), p["beta"], p["gamma"], p["delta"], p["q"])


# --- output ---------------------------------------------------------------------------


def _num(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, complex):
        if abs(v.imag) <= 1e-14 * max(1.0, abs(v.real)):
            return v.real
        return {"re": v.real, "im": v.imag}
    if hasattr(v, "real") and not isinstance(v, (int, float)):
        return _num(complex(v))
    return v


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return _num(obj)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    rows = report.get("records", [])
    keys: list = []
    for r in rows:
        keys += [k for k in r if k not in keys]
    w = csv.writer(buf)
    if keys:
        w.writerow(keys)
    for r in rows:
        w.writerow([json.dumps(_jsonable(r[k])) if isinstance(r.get(k), (list, tuple, dict)) else _num(r.get(k, "")) for k in keys])
    summ = report.get("summary")
    if summ:
        buf.write("# summary " + " ".join(f"{k}={_num(v)}" for k, v in summ.items()) + "\n")
    return buf.getvalue()


# --- commands -------------------------------------------------------------------------


def _z_points(args, cfg, rational):
    if args.z is not None:
        return parse_list(args.z, rational)
    if args.random:
        rng = random.Random(args.seed)
        fam_grid = args._family.grid
        lo, hi = float(fam_grid[0]) + 1, float(fam_grid[1]) - 3
        return [round(rng.uniform(lo, hi), 6) for _ in range(args.random)]
    return parse_list(cfg.get("z", DEFAULT_Z), rational)


def cmd_derive(args, cfg) -> tuple[dict, int]:
    rational = args.backend == "rational"
    fam = args._family
    if args.pairs:
        pairs = parse_pairs(args.pairs, rational)
    elif args.entry:
        if args.entry not in catalog.CATALOG:
            raise UsageError(f"unknown catalog entry {args.entry!r}")
        pairs = catalog.CATALOG[args.entry].pairs(parse_list(args.nu or "3", rational)[0])
    else:
        raise UsageError("derive needs --pairs or --entry")
    try:
        triple = RelationTriple(pairs, fam.eq, bounds=fam.grid)
    except QLatticeError as exc:
        return {"error": f"{type(exc).__name__}: {exc}", "pairs": pairs, "records": []}, EXIT_COMPUTE
    records = []
    for z in _z_points(args, cfg, rational):
        rel = solve_relation(triple, z, exact=rational or None)
        records.append({"z": z, "A": list(rel.A), "q_support": list(rel.q_support),
                        "kernel_dim": rel.kernel_dim, "residual": rel.residual})
    worst = max((r["residual"] for r in records), default=0.0)
    report = {"pairs": pairs, "records": records, "summary": {"max_residual": worst}}
    return report, EXIT_OK if worst < args.tolerance else EXIT_TOLERANCE


def _verify_catalog(entry, fam, nus, zs, args):
    records = []
    kw = {}
    if args.variant:
        kw["variant"] = args.variant
    for nu in nus:
        triple = RelationTriple(catalog.CATALOG[entry].pairs(nu), fam.eq, bounds=fam.grid)
        for z in zs:
            A = catalog.catalog_coeffs(entry, fam.eq, nu, z, **kw)
            rel = solve_relation(triple, z)
            _, dev = fit_common_scalar(A, rel.A)
            records.append({
                "nu": nu, "z": z, "residual": relation_residual(triple, z, A),
                "engine_residual": rel.residual, "proportionality_dev": dev,
                "q_support": list(rel.q_support),
                "flag": "" if dev < 1e-8 else "catalog form disagrees with engine",
            })
    return records


def _verify_relation(entry, fam, nus, zs):
    records = []
    for nu in nus:
        for z in zs:
            if entry == "NABLA":
                r = relations.nabla_ladder_residual(fam.eq, nu, z, fam.grid)
            else:
                r = relations.derivative_relation_residual(fam.eq, relations.SPECIALIZATIONS[entry](nu), z, fam.grid)
            records.append({"nu": nu, "z": z, "residual": r})
    return records


def _verify_polynomial(entry, fam, ns, args):
    records = []
    for n in ns:
        for s in fam.interior:
            rec = {"n": n, "s": s}
            if entry in ("DR1", "DR2"):
                which = int(entry[-1])
                generic = families.diffrec_coeffs(fam, which, n, s)
                if fam.name == "dual-hahn":
                    B = families.diffrec_coeffs_dual_hahn(fam, which, n, s, args.variant or "printed")
                    _, dev = fit_common_scalar(B, generic)
                    rec["generic_dev"] = dev
                else:
                    B = generic
                rec["residual"] = families.diffrec_residual(fam, which, n, s, B)
            elif entry in ("DIFF1", "DIFF2"):
                rec["residual"] = families.diff_formula_residual(fam, int(entry[-1]), n, s)
            else:
                t, o = families.eval_ttrr(fam, n, s), fam.oracle(n, s)
                rec["residual"] = abs(t - o) / max(abs(o), 1.0)
            records.append(rec)
    return records


def cmd_verify(args, cfg) -> tuple[dict, int]:
    entry = args.entry
    if entry is None:
        raise UsageError("verify needs --entry")
    if entry not in catalog.CATALOG and entry not in EXTRA_ENTRIES:
        raise UsageError(f"unknown entry {entry!r}")
    fam = args._family
    if entry in catalog.CATALOG:
        records = _verify_catalog(entry, fam, parse_list(args.nu or cfg.get("nu", DEFAULT_NU)), _z_points(args, cfg, False), args)
    elif entry in relations.SPECIALIZATIONS or entry == "NABLA":
        records = _verify_relation(entry, fam, parse_list(args.nu or cfg.get("nu", DEFAULT_NU)), _z_points(args, cfg, False))
    else:
        records = _verify_polynomial(entry, fam, parse_list(args.n or cfg.get("n", "1..5")), args)
    worst = max((r["residual"] for r in records), default=0.0)
    summary = {"entry": entry, "max_residual": worst, "tolerance": args.tolerance}
    devs = [r["proportionality_dev"] for r in records if "proportionality_dev" in r]
    if devs:
        summary["max_proportionality_dev"] = max(devs)
        summary["flagged"] = sum(1 for r in records if r["flag"])
    return {"entry": entry, "records": records, "summary": summary}, EXIT_OK if worst < args.tolerance else EXIT_TOLERANCE


def cmd_eval(args, cfg) -> tuple[dict, int]:
    fam = args._family
    rational = args.backend == "rational"
    n = int(args.n or cfg.get("n", "0"))
    ss = parse_list(args.s, rational) if args.s is not None else fam.grid_points
    a, b = fam.grid
    records = []
    for s in ss:
        if not (a <= s <= b - 1):
            return {"error": f"s={s} lies outside the grid [{a}, {b - 1}]", "records": records}, EXIT_COMPUTE
        t = families.eval_ttrr(fam, n, s)
        o = fam.oracle(n, s)
        records.append({"s": s, "ttrr": t, "oracle": o, "difference": t - o})
    worst = max((abs(complex(r["difference"])) / max(abs(complex(r["oracle"])), 1.0) for r in records), default=0.0)
    return {"family": fam.name, "n": n, "records": records, "summary": {"max_relative_difference": worst}}, EXIT_OK


def cmd_list(args, cfg) -> tuple[dict, int]:
    records = [{"entry": k, "kind": "catalog", "pairs_at_nu_3": list(v.pairs(3)), "note": v.note} for k, v in catalog.CATALOG.items()]
    records += [{"entry": k, "kind": "check", "note": v} for k, v in EXTRA_ENTRIES.items()]
    records += [{"entry": k, "kind": "family", "note": ", ".join(f"{p}={d}" for p, d in v.items())} for k, v in DEFAULTS.items()]
    return {"records": records}, EXIT_OK


COMMANDS = {"derive": cmd_derive, "verify": cmd_verify, "eval": cmd_eval, "list": cmd_list}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file (family, a, b, c, N, beta, gamma, delta, q, ...)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("--tolerance", type=float, default=None, help="default 1e-8")
    common.add_argument("--seed", type=int, default=None, help="seed for --random sweeps")
    common.add_argument("--backend", choices=["float", "rational"], default=None)
    common.add_argument("--family", help="dual-hahn, racah or q-racah")

    p = argparse.ArgumentParser(prog="qlattice", description="Recurrences for hypergeometric-type functions on nonuniform lattices.")
    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("derive", parents=[common], help="derive a relation with the matching engine")
    d.add_argument("--pairs", help="'nu1,mu1;nu2,mu2;nu3,mu3'")
    d.add_argument("--entry", help="take the pairs of a catalog entry")
    d.add_argument("--nu", help="nu for --entry")
    d.add_argument("--z", help="comma separated z points (empty string: none)")
    d.add_argument("--random", type=int, default=0, help="draw this many z points with --seed")
    v = sub.add_parser("verify", parents=[common], help="residual table for a catalog entry or check")
    v.add_argument("--entry")
    v.add_argument("--nu", help="nu values, '2,3,4' or '2..4'")
    v.add_argument("--n", help="polynomial degrees, e.g. '1..5'")
    v.add_argument("--z")
    v.add_argument("--random", type=int, default=0)
    v.add_argument("--variant", help="formula variant (catalog or DR1 explicit coefficients)")
    e = sub.add_parser("eval", parents=[common], help="tabulate P_n(s) from the TTRR and the series")
    e.add_argument("--n")
    e.add_argument("--s", help="points; default is the whole grid")
    sub.add_parser("list", parents=[common], help="list entries and families")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = {}
        if args.config:
            try:
                with open(args.config) as fh:
                    cfg = parse_config(fh.read())
            except OSError as exc:
                raise UsageError(f"cannot read config: {exc}") from exc
        if args.family:
            cfg["family"] = args.family
        args.format = args.format or cfg.get("format", "json")
        args.backend = args.backend or cfg.get("backend", "float")
        if args.backend not in ("float", "rational"):
            raise UsageError(f"unknown backend {args.backend!r}")
        args.tolerance = args.tolerance if args.tolerance is not None else float(cfg.get("tolerance", "1e-8"))
        args.seed = args.seed if args.seed is not None else int(cfg.get("seed", "0"))
        args._family = None if args.command == "list" else build_family(cfg, args.backend == "rational")
        report, code = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"qlattice: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QLatticeError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"qlattice: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    report = {"schema": SCHEMA, "command": args.command, **report}
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if "error" in report:
        print(f"qlattice: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
