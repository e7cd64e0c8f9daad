"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import replace
from pathlib import Path

from .complex import PackingComplex, ResourceLimitError
from .config import DEFAULT, Config
from .equivariant import homology_decomposition
from .render import decomposition_text, homology_json, homology_text
from .stability import stable_range_scan, syzygy_stability_check
from .syzygy import (
    SyzygyQuery,
    betti_entry,
    betti_table,
    linear_strand_segre,
    linear_strand_veronese,
    render_entry,
    top_laplacian_check,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def int_tuple(text: str) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return vals


_FIX = re.compile(r"^([A-Za-z])(\d+)=(-?\d+)$")
_RANGE = re.compile(r"^([A-Za-z])(\d+)=(-?\d+)\.\.(-?\d+)$")


def _coord(letter, idx, want, n):
    if letter != want:
        raise UsageError(f"expected coordinates named {want}1..{want}{n}, got {letter}{idx}")
    i = int(idx) - 1
    if not 0 <= i < n:
        raise UsageError(f"coordinate {letter}{idx} out of range for n={n}")
    return i


def parse_fix(items, want, n) -> dict:
    out = {}
    for item in items or []:
        m = _FIX.match(item)
        if not m:
            raise UsageError(f"bad --fix {item!r}; use e.g. {want}2=3")
        out[_coord(m[1], m[2], want, n)] = int(m[3])
    return out


def parse_ranges(items, want, n) -> dict:
    out = {}
    for item in items or []:
        m = _RANGE.match(item)
        if not m:
            raise UsageError(f"bad --range {item!r}; use e.g. {want}1=3..7")
        lo, hi = int(m[3]), int(m[4])
        if lo > hi:
            raise UsageError(f"empty range {item!r}")
        out[_coord(m[1], m[2], want, n)] = (lo, hi)
    return out


# -- configuration -------------------------------------------------------------------

def build_config(args) -> Config:
    cfg = Config.load(args.config) if args.config else DEFAULT
    cfg = cfg.with_env()
    over = {}
    if args.cache_dir is not None:
        over["cache_dir"] = args.cache_dir
    if args.format is not None:
        over["output_format"] = args.format
    if args.threads is not None:
        over["threads"] = args.threads
    if args.max_simplices is not None:
        over["max_simplices"] = args.max_simplices
    if args.max_oracle_entries is not None:
        over["max_oracle_entries"] = args.max_oracle_entries
    return replace(cfg, **over)


def _emit(obj, cfg, text: str, out) -> None:
    if cfg.output_format == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text)


def _same_length(**tuples):
    lens = {len(v) for v in tuples.values() if v is not None}
    if len(lens) > 1:
        raise UsageError(" and ".join(f"--{k}" for k in tuples) + " must have the same length")


# -- subcommands ---------------------------------------------------------------------

def cmd_homology(args, cfg, out) -> int:
    _same_length(N=args.N, d=args.d)
    N, d = args.N, args.d
    cx_top = min(a // b for a, b in zip(N, d)) - 1
    empty = cx_top < 0
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range(-1 if empty else 0, cx_top + 1))
    degrees = {k: homology_decomposition(N, d, k, cfg) for k in ks}
    _emit(homology_json(N, d, degrees, empty), cfg, homology_text(N, d, degrees, empty), out)
    return EXIT_OK


def cmd_betti(args, cfg, out) -> int:
    b = args.b if args.b is not None else (0,) * len(args.d)
    _same_length(d=args.d, b=b)
    table = betti_table(args.pmax, args.qmax, args.d, b, cfg)
    _emit(table.to_json(), cfg, table.render(), out)
    return EXIT_OK


def cmd_linear_strand(args, cfg, out) -> int:
    if args.veronese:
        if args.d is None:
            raise UsageError("--veronese needs --d")
        dec = linear_strand_veronese(args.p, args.d)
        obj = {"kind": "veronese", "p": args.p, "d": args.d, "entries": dec.to_json()}
        check = None
        if args.check:
            qy = SyzygyQuery(args.p, 0, (args.d,), (1,))
            check = betti_entry(qy, cfg) == dec
    else:
        if args.a is None:
            raise UsageError("Segre strand needs --a (or pass --veronese)")
        dec = linear_strand_segre(args.p, args.a, args.n)
        obj = {"kind": "segre", "p": args.p, "a": args.a, "n": args.n, "entries": dec.to_json()}
        check = None
        if args.check:
            qy = SyzygyQuery(args.p, 0, (1,) * args.n, (args.a,) + (0,) * (args.n - 1))
            check = betti_entry(qy, cfg) == dec
    obj["check"] = check
    text = decomposition_text(dec)
    if check is not None:
        text += f"homology check: {'PASS' if check else 'FAIL'}\n"
    _emit(obj, cfg, text, out)
    return EXIT_FAIL if check is False else EXIT_OK


def _scan_report(args, cfg):
    n = len(args.d)
    want = "b" if args.syzygy else "N"
    fixed = parse_fix(args.fix, want, n)
    ranges = parse_ranges(args.range, want, n)
    if not ranges:
        raise UsageError("need at least one --range")
    if set(fixed) & set(ranges):
        raise UsageError("a coordinate cannot be both fixed and scanned")
    if set(fixed) | set(ranges) != set(range(n)):
        raise UsageError(f"every coordinate 1..{n} must be fixed or scanned")
    scanned = sorted(ranges)
    lo = tuple(ranges[i][0] for i in scanned)
    hi = tuple(ranges[i][1] for i in scanned)
    if args.syzygy:
        if args.p is None or args.q is None:
            raise UsageError("--syzygy needs --p and --q")
        return syzygy_stability_check(args.p, args.q, args.d, fixed, lo, hi, cfg)
    if args.k is None:
        raise UsageError("homology scans need --k")
    return stable_range_scan(args.d, args.k, fixed, lo, hi, cfg)


def cmd_scan(args, cfg, out) -> int:
    report = _scan_report(args, cfg)
    _emit(report.to_json(), cfg, report.render(), out)
    if args.check and not report.passed:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, cfg, out) -> int:
    checks = run_suite(args.suite, cfg)
    failed = [c for c in checks if not c.ok]
    text = "".join(c.line() + "\n" for c in checks)
    text += f"{args.suite}: {len(checks)} checks, {len(failed)} failed\n"
    obj = {
        "suite": args.suite,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        "failed": len(failed),
    }
    _emit(obj, cfg, text, out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_export_complex(args, cfg, out) -> int:
    _same_length(N=args.N, d=args.d)
    cx = PackingComplex(args.N, args.d, max_simplices=cfg.max_simplices)
    if cfg.output_format == "json":
        faces = [list(s) for k in sorted(cx.simplices) if k >= 0 for s in cx.simplices[k]]
        verts = [[[x + 1 for x in a] for a in v] for v in cx.vertices]
        payload = json.dumps({"N": list(cx.N), "d": list(cx.d), "vertices": verts, "faces": faces}, sort_keys=True) + "\n"
    else:
        payload = cx.face_list()
    if args.out:
        Path(args.out).write_text(payload)
    else:
        out.write(payload)
    return EXIT_OK


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def cmd_report(args, cfg, out) -> int:
    from .plotting import betti_figure, scan_figure, spectra_figure

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    b = args.b if args.b is not None else (0,) * len(args.d)
    _same_length(d=args.d, b=b)
    table = betti_table(args.pmax, args.qmax, args.d, b, cfg)
    _write_csv(
        outdir / "betti.csv",
        ["p", "q", "entry", "dimension"],
        [(p, q, render_entry(table[(p, q)]), table[(p, q)].dimension())
         for q in range(args.qmax + 1) for p in range(args.pmax + 1)],
    )
    betti_figure(table, outdir / "betti.png")
    written = ["betti.csv", "betti.png"]

    if args.scan_k is not None:
        n = len(args.d)
        fixed = {i: args.scan_fixed for i in range(1, n)}
        scan = stable_range_scan(args.d, args.scan_k, fixed, (args.scan_from,), (args.scan_to,), cfg)
        _write_csv(
            outdir / "scan.csv",
            ["N1", "N", "decomposition", "unpadded_constituents", "total_multiplicity"],
            [(pt.values[0], ",".join(map(str, pt.N)), pt.decomposition.bracket(),
              len(pt.unpadded), sum(pt.unpadded.values())) for pt in scan.points],
        )
        scan_figure(scan, outdir / "scan.png")
        written += ["scan.csv", "scan.png"]

    if args.spectra_pmax > 0:
        reps = [top_laplacian_check(p, a, 2, cfg) for p in range(1, args.spectra_pmax + 1) for a in range(3)]
        _write_csv(
            outdir / "spectra.csv",
            ["p", "a", "n", "spectrum", "kernel_dim", "expected_kernel_dim", "ok"],
            [(r.p, r.a, r.n, " ".join(map(str, r.spectrum or [])), r.kernel_dim, r.expected_kernel_dim, r.ok)
             for r in reps],
        )
        spectra_figure(reps, outdir / "spectra.png")
        written += ["spectra.csv", "spectra.png"]

    _emit({"out": str(outdir), "files": written}, cfg, "".join(f"wrote {outdir / f}\n" for f in written), out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--config", help="JSON file with Config fields")
    g.add_argument("--cache-dir", help="on-disk homology cache (overrides $PACKSYZ_CACHE_DIR)")
    g.add_argument("--format", choices=["text", "json"])
    g.add_argument("--threads", type=int)
    g.add_argument("--max-simplices", type=int)
    g.add_argument("--max-oracle-entries", type=int)

    parser = argparse.ArgumentParser(prog="packsyz", description="Equivariant homology of packing complexes and Betti tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="reduced homology of C_N^d as S_N-representations")
    p.add_argument("--N", type=int_tuple, required=True)
    p.add_argument("--d", type=int_tuple, required=True)
    p.add_argument("--k", type=int, help="single degree (default: all)")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("betti", parents=[common], help="equivariant Betti table K_{p,q}^d(b)")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--d", type=int_tuple, required=True)
    p.add_argument("--b", type=int_tuple)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("linear-strand", parents=[common], help="closed-form linear strands")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--veronese", action="store_true")
    p.add_argument("--d", type=int)
    p.add_argument("--check", action="store_true", help="compare against the homology computation")
    p.set_defaults(func=cmd_linear_strand)

    p = sub.add_parser("scan", parents=[common], help="representation-stability scan")
    p.add_argument("--d", type=int_tuple, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--syzygy", action="store_true")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--fix", action="append", metavar="X2=V")
    p.add_argument("--range", action="append", metavar="X1=LO..HI")
    p.add_argument("--check", action="store_true", help="exit 1 unless stabilization is within the bound")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-complex", parents=[common], help="list the faces of C_N^d")
    p.add_argument("--N", type=int_tuple, required=True)
    p.add_argument("--d", type=int_tuple, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_complex)

    p = sub.add_parser("report", parents=[common], help="write CSV tables and PNG figures")
    p.add_argument("--out", required=True)
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=2)
    p.add_argument("--d", type=int_tuple, default=(1, 1))
    p.add_argument("--b", type=int_tuple)
    p.add_argument("--scan-k", type=int, default=1, help="homology degree of the N1 scan (omit the scan with -1)")
    p.add_argument("--scan-fixed", type=int, default=3)
    p.add_argument("--scan-from", type=int, default=3)
    p.add_argument("--scan-to", type=int, default=7)
    p.add_argument("--spectra-pmax", type=int, default=2)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "scan_k", None) == -1:
        args.scan_k = None
    try:
        cfg = build_config(args)
        return args.func(args, cfg, out)
    except ResourceLimitError as exc:
        print(f"packsyz: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError) as exc:
        print(f"packsyz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
