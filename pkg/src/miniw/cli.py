"""Command-line front end.

Subcommands: info, char, wchar, cohomology, verify, suite.  Plain text by
default; ``--format json`` gives byte-stable JSON (sorted keys, rationals
as "p/q" strings, graded series as ordered {level, dim} arrays) and
``--format csv`` a flat table.  ``--config FILE`` loads a JSON object
whose entries override the corresponding flags.  MINIW_THREADS bounds the
worker pool used for independent weight-block jobs.

Exit codes: 0 success, 1 computational failure (including a window that
failed to stabilize), 2 usage.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as Q

from . import acceptance
from . import weights as W
from .algebra import build_algebra, dual_coxeter, superdimension
from .brst import chain_window, cohomology_dims, verify_nilpotency
from .errors import MiniWError
from .verma import TruncationWindow, char_module
from .wchar import (central_charge, series_total, simple_w_character,
                    w_verma_character, _degree_grid)

ALGEBRAS = ("sl2", "sl3", "spo21", "sl21")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# plumbing

def _fraction(text):
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected a rational like 3, -2 or 1/3: %r" % text)


def _threads():
    raw = os.environ.get("MINIW_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _pmap(fn, items):
    """Map over independent jobs, bounded by MINIW_THREADS; order kept."""
    items = list(items)
    n = min(_threads(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _jsonable(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, Q):
        return str(x)
    if isinstance(x, (int, str)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _emit(args, obj, plain_lines, csv_rows):
    fmt = getattr(args, "format", "plain")
    if fmt == "json":
        print(json.dumps(_jsonable(obj), sort_keys=True, indent=2))
    elif fmt == "csv":
        w = csv.writer(sys.stdout)
        for row in csv_rows:
            w.writerow(row)
    else:
        for line in plain_lines:
            print(line)


def _add_format(p):
    p.add_argument("--format", choices=("plain", "json", "csv"),
                   default="plain")


def _resolve_weight(data, args, fallback_seed=0):
    """Weight from --lambda, with -k consistency; generic fallback."""
    spec = getattr(args, "lam", None)
    k = getattr(args, "level", None)
    if spec:
        try:
            lam = W.parse_weight_spec(data, spec)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad --lambda: %s" % exc)
        if k is not None and lam.level != k:
            raise UsageError("-k %s disagrees with the lambda spec level %s"
                             % (k, lam.level))
        return lam
    if k is not None:
        base = acceptance.generic_weight(data, fallback_seed)
        return W.make_weight(data, hf=list(base.h_part[:len(data.hf)]),
                             x=base.h_part[len(data.hf)], level=k)
    return acceptance.generic_weight(data, fallback_seed)


def _apply_config(args, parser):
    """Load --config JSON; its entries override parsed flags."""
    path = args.config
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, ValueError) as exc:
        parser.error("cannot read config %s: %s" % (path, exc))
    if not isinstance(cfg, dict):
        parser.error("config %s: expected a JSON object" % path)
    fraction_fields = {"level", "xi_level", "max_level"}
    for key, val in cfg.items():
        dest = key.replace("-", "_")
        if dest == "k":
            dest = "level"
        if not hasattr(args, dest):
            parser.error("config %s: unknown field %r" % (path, key))
        if dest in fraction_fields and isinstance(val, str):
            val = Q(val)
        setattr(args, dest, val)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_info(args):
    data = build_algebra(args.algebra)
    hv = dual_coxeter(data)
    theta2 = W.finite_pair(data, data.theta(), data.theta())
    report = {
        "algebra": data.name,
        "dimension": data.dim,
        "superdimension": superdimension(data),
        "dual_coxeter": hv,
        "critical_level": -hv,
        "theta_norm": theta2,
        "level": args.level,
        "central_charge": central_charge(data, args.level),
    }
    order = ("algebra", "dimension", "superdimension", "dual_coxeter",
             "critical_level", "theta_norm", "level", "central_charge")
    lines = ["%-15s %s" % (key, report[key]) for key in order]
    rows = [(key, report[key]) for key in order]
    _emit(args, report, lines, rows)
    return 0


def _cmd_char(args):
    data = build_algebra(args.algebra)
    lam = _resolve_weight(data, args)
    height = args.height if args.height is not None else 2 * args.depth
    window = TruncationWindow(args.depth, height)
    table = char_module(data, lam, args.which, window, dual=args.dual)
    entries = []
    for mu, dim in table.items():
        coords = W.decompose_drop(data, lam - mu)
        entries.append((coords[0], coords[1:], dim))
    entries.sort()
    obj = {
        "algebra": data.name,
        "which": args.which,
        "window": {"depth": args.depth, "height": height},
        "weights": [{"alpha0_drop": a, "simple_drops": list(bs), "dim": dim}
                    for a, bs, dim in entries],
    }
    lines = ["a=%s b=(%s) dim=%d" % (a, ",".join(str(b) for b in bs), dim)
             for a, bs, dim in entries]
    rows = [("alpha0_drop", "simple_drops", "dim")]
    rows += [(a, " ".join(str(b) for b in bs), dim) for a, bs, dim in entries]
    _emit(args, obj, lines, rows)
    return 0


def _cmd_wchar(args):
    data = build_algebra(args.algebra)
    grid = _degree_grid(data, args.max_level)
    wv = w_verma_character(data, args.max_level)

    if not args.compare_brst:
        series = [{"level": m, "dim": series_total(wv, m)} for m in grid]
        obj = {"algebra": data.name, "max_level": args.max_level,
               "series": series}
        lines = [",".join(str(series_total(wv, m)) for m in grid)]
        rows = [("level", "dim")] + [(str(m), series_total(wv, m))
                                     for m in grid]
        _emit(args, obj, lines, rows)
        return 0

    lam = _resolve_weight(data, args)
    k = lam.level
    depth = max(args.chain + 2, int(args.max_level) + 2)
    wwin = TruncationWindow(depth, 2 * depth)
    pred, mults = simple_w_character(data, lam, k, wwin,
                                     max_level=args.max_level)

    def brst_at(m):
        win = chain_window(data, lam, m, args.chain)
        dims = cohomology_dims(data, lam, "simple", m, win)
        return dims.get(0, (0, True))

    computed = _pmap(brst_at, grid)
    series = []
    mismatch = unstable = False
    for m, (dim, stab) in zip(grid, computed):
        want = series_total(pred, m)
        series.append({"level": m, "predicted": want, "complex": dim,
                       "stabilized": stab})
        mismatch |= want != dim
        unstable |= not stab
    obj = {"algebra": data.name, "max_level": args.max_level,
           "multiplicities": [{"alpha0_drop": a, "simple_drops": list(bs),
                               "mult": c}
                              for (a, bs), c in sorted(mults.items()) if c],
           "series": series}
    lines = ["level  predicted  complex  stabilized"]
    lines += ["%-6s %-10d %-8d %s"
              % (row["level"], row["predicted"], row["complex"],
                 "yes" if row["stabilized"] else "no") for row in series]
    rows = [("level", "predicted", "complex", "stabilized")]
    rows += [(str(r["level"]), r["predicted"], r["complex"],
              int(r["stabilized"])) for r in series]
    _emit(args, obj, lines, rows)
    if mismatch:
        print("predicted and computed series disagree", file=sys.stderr)
        return 1
    if unstable:
        print("window did not stabilize; deepen --chain", file=sys.stderr)
        return 1
    return 0


def _cmd_cohomology(args):
    data = build_algebra(args.algebra)
    lam = _resolve_weight(data, args)
    window = chain_window(data, lam, args.xi_level, args.chain)
    if args.depth is not None or args.height is not None:
        window = TruncationWindow(
            args.depth if args.depth is not None else window.depth,
            args.height if args.height is not None else window.height,
            args.chain)
    dims = cohomology_dims(data, lam, args.which, args.xi_level, window)
    xi = W.project_xi(data, lam)
    stabilized = all(stab for _, stab in dims.values())
    obj = {
        "xi": {"dW_offset": args.xi_level,
               "hf": [str(v) for v in xi.hf_part]},
        "dims": {str(i): dim for i, (dim, _) in sorted(dims.items())},
        "stabilized": stabilized,
        "window": {"depth": window.depth, "height": window.height,
                   "chain": window.chain},
    }
    lines = ["xi: dW offset %s below the top, hf %s"
             % (args.xi_level, tuple(str(v) for v in xi.hf_part))]
    if not dims:
        lines.append("t-weight unreachable: zero space")
    lines += ["degree %2d: dim %d%s" % (i, dim, "" if stab else " (drifting)")
              for i, (dim, stab) in sorted(dims.items())]
    lines.append("window: depth %d height %d chain %d"
                 % (window.depth, window.height, window.chain))
    rows = [("degree", "dim", "stabilized")]
    rows += [(i, dim, int(stab)) for i, (dim, stab) in sorted(dims.items())]
    _emit(args, obj, lines, rows)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(_jsonable(obj), fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if stabilized else 1


def _cmd_verify(args):
    data = build_algebra(args.algebra)
    ok, detail = acceptance.structure_report(args.algebra)
    print("structure identities: %s  (%s)" % ("PASS" if ok else "FAIL",
                                              detail))
    if not ok:
        return 1
    lam = _resolve_weight(data, args)
    height = args.height if args.height is not None else 2 * args.depth
    win = TruncationWindow(args.depth, height)
    try:
        rep = verify_nilpotency(data, lam, args.which, win)
    except MiniWError as exc:
        print("d^2 = 0: FAIL (%s)" % exc)
        return 1
    for label in ("d^2 = 0", "(d_chi)^2 = 0", "(d_st)^2 = 0",
                  "{d_chi, d_st} = 0"):
        print("%s: PASS" % label)
    print("checked %d states over %d weight blocks (depth %d, height %d)"
          % (rep.states_checked, rep.weights_checked, args.depth, height))
    return 0


def _cmd_suite(args):
    results = acceptance.run_all(only=args.only)
    if not results:
        raise UsageError("--only selected no criteria (valid: 1..%d)"
                         % len(acceptance.CRITERIA))
    width = max(len(label) for _, label, _, _, _ in results)
    all_ok = True
    for num, label, ok, detail, el in results:
        all_ok &= ok
        print("%d  %-*s  %s  %6.1fs  %s"
              % (num, width, label, "PASS" if ok else "FAIL", el, detail))
    print("suite: %s" % ("PASS" if all_ok else "FAIL"))
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser():
    top = argparse.ArgumentParser(
        prog="miniw",
        description="Exact BRST reduction for minimal W-(super)algebras "
                    "on finite truncation windows.")
    top.add_argument("--config", metavar="FILE",
                     help="JSON object whose fields override flags")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural invariants of one algebra")
    p.add_argument("algebra", choices=ALGEBRAS)
    p.add_argument("-k", "--level", type=_fraction, default=Q(1))
    _add_format(p)

    p = sub.add_parser("char",
                       help="weight multiplicities of a module on a window")
    p.add_argument("--algebra", required=True, choices=ALGEBRAS)
    p.add_argument("--lambda", dest="lam", metavar="SPEC",
                   help="'k=1/3; hf=[..]; x=1/5; delta=0'")
    p.add_argument("-k", "--level", type=_fraction)
    p.add_argument("--which", choices=("verma", "simple"), default="verma")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--height", type=int)
    p.add_argument("--dual", action="store_true",
                   help="label the output as the contragredient dual")
    _add_format(p)

    p = sub.add_parser("wchar",
                       help="graded character of the reduced module")
    p.add_argument("--algebra", required=True, choices=ALGEBRAS)
    p.add_argument("--lambda", dest="lam", metavar="SPEC")
    p.add_argument("-k", "--level", type=_fraction)
    p.add_argument("--max-level", type=_fraction, default=Q(5))
    p.add_argument("--compare-brst", action="store_true",
                   help="also run the complex on the irreducible module "
                        "and print both series")
    p.add_argument("--chain", type=int, default=4,
                   help="chain truncation for the comparison run")
    _add_format(p)

    p = sub.add_parser("cohomology",
                       help="windowed cohomology at one t-weight")
    p.add_argument("--algebra", required=True, choices=ALGEBRAS)
    p.add_argument("--lambda", dest="lam", metavar="SPEC")
    p.add_argument("-k", "--level", type=_fraction)
    p.add_argument("--which", choices=("verma", "simple"), default="verma")
    p.add_argument("--xi-level", type=_fraction, default=Q(0),
                   help="x+D offset below the image of the highest weight")
    p.add_argument("--chain", type=int, default=4)
    p.add_argument("--depth", type=int, help="override the window depth")
    p.add_argument("--height", type=int, help="override the window height")
    p.add_argument("--json", dest="json_path", metavar="FILE",
                   help="also write the JSON report to FILE")
    _add_format(p)

    p = sub.add_parser("verify",
                       help="nilpotency and structure-identity suite")
    p.add_argument("--algebra", required=True, choices=ALGEBRAS)
    p.add_argument("--lambda", dest="lam", metavar="SPEC")
    p.add_argument("-k", "--level", type=_fraction)
    p.add_argument("--which", choices=("verma", "simple"), default="verma")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--height", type=int)

    p = sub.add_parser("suite", help="run the acceptance criteria")
    p.add_argument("--only", type=int, action="append", metavar="N",
                   help="criterion number, repeatable")

    return top


_DISPATCH = {
    "info": _cmd_info,
    "char": _cmd_char,
    "wchar": _cmd_wchar,
    "cohomology": _cmd_cohomology,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
}


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.config:
        _apply_config(args, parser)
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except MiniWError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    except AssertionError as exc:
        print("internal consistency check failed: %s" % exc, file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
