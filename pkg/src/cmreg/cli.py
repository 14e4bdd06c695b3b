"""Command-line front end.

    cmreg -i ideals.txt reg I
    cmreg -i ideals.txt betti IJ --engine both
    cmreg -i ideals.txt op intersect I J --format json
    cmreg family --m 2 --n 3
    cmreg check product --trials 200 --seed 1
    cmreg suite --config suite.json
    cmreg run script.txt            # executes the script's own command

Exit status: 0 success, 1 computation or assertion failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from . import homology
from . import monomial as mono
from .family import family
from .field import FieldSpec
from .groebner import (
    NotHomogeneous, PolyIdeal, colon_ideal, ideal_product, ideal_sum, intersect_poly, saturation,
)
from .parser import ParseError, Script, parse
from .resolution import free_resolution, minimize

log = logging.getLogger("cmreg")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default=argparse.SUPPRESS, help="q (default) or p:<prime>")
    p.add_argument("--format", default=argparse.SUPPRESS, choices=["text", "json", "csv"])
    p.add_argument("--engine", default=argparse.SUPPRESS, choices=["homology", "resolution", "both"],
                   help="engine for monomial regularity (default homology)")
    p.add_argument("-i", "--input", default=argparse.SUPPRESS, help="script file (default: stdin)")
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="cmreg", parents=[common],
                                 description="Castelnuovo-Mumford regularity of homogeneous ideals.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in [("reg", "regularity of an ideal"), ("betti", "graded Betti table"),
                        ("gb", "reduced Groebner basis"), ("resolve", "minimal free resolution")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("name")
    s = sub.add_parser("op", parents=[common], help="ideal arithmetic")
    s.add_argument("operation", choices=["product", "intersect", "colon", "sum"])
    s.add_argument("a")
    s.add_argument("b")
    s = sub.add_parser("saturate", parents=[common], help="saturation A : B^infinity")
    s.add_argument("a")
    s.add_argument("b")
    s = sub.add_parser("check", parents=[common], help="seeded trials of one theorem check")
    s.add_argument("check_id", choices=sorted(harness.TRIALS))
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--vars", type=int, default=6)
    s.add_argument("--maxdeg", type=int, default=4)
    s = sub.add_parser("family", parents=[common], help="the binomial counter-example family")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("suite", parents=[common], help="run a configured theorem suite")
    s.add_argument("--config", help="JSON config file (default: the built-in default suite)")
    s.add_argument("--out", help="directory for report.json and report.csv")
    s = sub.add_parser("run", parents=[common], help="run the command embedded in a script")
    s.add_argument("script")
    return ap


def _opts(ns) -> dict:
    return {
        "field": getattr(ns, "field", None),
        "format": getattr(ns, "format", "text"),
        "engine": getattr(ns, "engine", "homology"),
        "input": getattr(ns, "input", None),
    }


def _load_script(path: str | None, field: str | None) -> Script:
    text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    return parse(text, FieldSpec.parse(field) if field else None)


def _emit(out, data, fmt: str, text: str, csv_rows=None):
    if fmt == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is not available for this command")
        out.write(csv_rows)
    else:
        out.write(text.rstrip("\n") + "\n")


def _betti_table(I: PolyIdeal, engine: str, field: FieldSpec):
    M = I.as_monomial()
    if M is None or engine == "resolution":
        I.require_homogeneous()
        if M is not None and M.is_unit:
            return homology.betti_multigraded(M, field)
        return minimize(free_resolution(I)).betti()
    h = homology.betti_multigraded(M, field)
    if engine == "both":
        r = minimize(free_resolution(I)).betti()
        if r != h:
            raise Failure("engines disagree\nhomology:\n" + h.render() + "\nresolution:\n" + r.render())
    return h


def _ideal_json(I: PolyIdeal) -> dict:
    return {"ring": list(I.ring.names), "field": str(I.ring.field), "gens": [g.render() for g in I.gens]}


def dispatch(ns, script: Script | None, out=None) -> int:
    out = out or sys.stdout
    o = _opts(ns)
    fmt, engine = o["format"], o["engine"]
    cmd = ns.command
    if cmd == "run":
        sc = _load_script(ns.script, o["field"])
        if not sc.command:
            raise UsageError("script has no command")
        try:
            inner = build_parser().parse_args(sc.command)
        except SystemExit:
            raise UsageError(f"bad embedded command: {' '.join(sc.command)}") from None
        for k in ("format", "engine", "field"):
            if hasattr(ns, k) and not hasattr(inner, k):
                setattr(inner, k, getattr(ns, k))
        if inner.command == "run":
            raise UsageError("a script cannot run another script")
        return dispatch(inner, sc, out)

    if cmd == "family":
        rep = family(ns.m, ns.n, FieldSpec.parse(o["field"] or "q"))
        row = rep.to_json()
        csv_rows = ",".join(row_keys := [k for k in row if k != "predicted"]) + "\n"
        csv_rows += ",".join(str(row[k]) for k in row_keys) + "\n"
        _emit(out, row, fmt, rep.render(), csv_rows)
        return EXIT_OK if rep.matches else EXIT_FAIL

    if cmd == "check":
        cfg = harness.SuiteConfig(trials={ns.check_id: ns.trials}, master_seed=ns.seed,
                                  max_vars=ns.vars, max_deg=ns.maxdeg, field=o["field"] or "q",
                                  engine=engine)
        return _emit_suite(harness.run_suite(cfg), fmt, out)

    if cmd == "suite":
        cfg = harness.SuiteConfig.from_file(ns.config) if ns.config else harness.SuiteConfig.default()
        if o["field"]:
            cfg.field = o["field"]
        if hasattr(ns, "engine"):
            cfg.engine = engine
        rep = harness.run_suite(cfg)
        if ns.out:
            d = Path(ns.out)
            d.mkdir(parents=True, exist_ok=True)
            (d / "report.json").write_text(rep.to_json() + "\n")
            (d / "report.csv").write_text(rep.to_csv())
        return _emit_suite(rep, fmt, out)

    if script is None:
        script = _load_script(o["input"], o["field"])
    fld = script.ring.field

    if cmd in ("reg", "betti"):
        table = _betti_table(script.ideal(ns.name), engine, fld)
        if cmd == "reg":
            _emit(out, {"regularity": table.regularity}, fmt, str(table.regularity),
                  f"regularity\n{table.regularity}\n")
        else:
            rows = "i,degree,rank\n" + "".join(f"{i},{d},{r}\n" for (i, d), r in sorted(table.graded.items()))
            _emit(out, table.to_json(), fmt, table.render(), rows)
        return EXIT_OK

    if cmd == "gb":
        I = script.ideal(ns.name)
        G = I.gb
        _emit(out, {"gb": [g.render() for g in G]}, fmt, "\n".join(g.render() for g in G))
        return EXIT_OK

    if cmd == "resolve":
        I = script.ideal(ns.name)
        F = free_resolution(I)
        M = minimize(F)
        data = {"ranks": M.ranks(), "degrees": M.degrees, "nonminimal_ranks": F.ranks(),
                "valid": M.is_valid() and M.check_minimal(), **M.betti().to_json()}
        text = f"ranks {M.ranks()} (Schreyer frame {F.ranks()})\n" + M.betti().render()
        _emit(out, data, fmt, text)
        return EXIT_OK if data["valid"] else EXIT_FAIL

    if cmd == "op":
        A, B = script.ideal(ns.a), script.ideal(ns.b)
        R = _ideal_op(ns.operation, A, B)
        _emit(out, _ideal_json(R), fmt, R.render())
        return EXIT_OK

    if cmd == "saturate":
        A, B = script.ideal(ns.a), script.ideal(ns.b)
        R = saturation(A, B)
        _emit(out, _ideal_json(R), fmt, R.render())
        return EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")


def _ideal_op(op: str, A: PolyIdeal, B: PolyIdeal) -> PolyIdeal:
    MA, MB = A.as_monomial(), B.as_monomial()
    ring = A.ring
    if MA is not None and MB is not None:
        fn = {"product": mono.product, "intersect": mono.intersect,
              "colon": mono.colon, "sum": mono.ideal_sum}[op]
        return PolyIdeal.from_monomial(fn(MA, MB), ring)
    fn = {"product": ideal_product, "intersect": intersect_poly,
          "colon": colon_ideal, "sum": ideal_sum}[op]
    return fn(A, B)


def _emit_suite(rep: harness.SuiteReport, fmt: str, out) -> int:
    if fmt == "json":
        out.write(rep.to_json() + "\n")
    elif fmt == "csv":
        out.write(rep.to_csv())
    else:
        lines = []
        for cid, s in rep.summary().items():
            status = "ok" if s["kind"] == "exploration" or s["holds"] == s["trials"] else "FAIL"
            lines.append(f"{cid:<16} {s['kind']:<12} {s['holds']:>4}/{s['trials']:<4} "
                         f"notable={s['notable']:<3} {status}")
        lines.append(f"{'total':<16} failures={len(rep.failures)} findings={len(rep.findings)} "
                     f"seconds={rep.seconds:.1f}")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if getattr(ns, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return dispatch(ns, None)
    except (ParseError, UsageError, KeyError, FileNotFoundError, NotHomogeneous, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"cmreg: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (Failure, AssertionError, ArithmeticError, RuntimeError) as e:
        print(f"cmreg: failure: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
