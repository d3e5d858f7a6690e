"""Command-line entry point: build, verify and enumerate.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import grm, quadcode as qc
from .codes import LinearCode, macwilliams
from .designs import Design
from .errors import ConfigurationError, InfeasibleError
from .gf3m import field_new
from .verify import run_suite

M_RANGE = (2, 7)

class GuardError(Exception):
    pass

def _check_m(m: int) -> int:
    lo, hi = M_RANGE
    if not lo <= m <= hi:
        raise GuardError(f"range guard: m must lie in [{lo}, {hi}], got {m}")
    return m

def _parse_m_list(text: str):
    try:
        ms = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise GuardError(f"cannot parse --m {text!r}") from None
    if not ms:
        raise GuardError("--m needs at least one value")
    return [_check_m(m) for m in ms]

def _parse_budget(text: str | None):
    if text is None:
        return None
    t = text.strip().lower().removesuffix("s")
    try:
        val = float(t)
    except ValueError:
        raise GuardError(f"cannot parse --budget {text!r}") from None
    if val <= 0:
        raise GuardError("--budget must be positive")
    return val

# -- formatting -------------------------------------------------------------------

def _rows_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()

def format_code(code: LinearCode, fmt: str, label: str) -> str:
    g = code.generator_matrix()
    if fmt == "json":
        return json.dumps({"object": label, "n": code.n, "k": code.k, "generator": g.tolist()}) + "\n"
    if fmt == "csv":
        return _rows_csv(g.tolist())
    head = f"# {label} [{code.n},{code.k}] generator matrix (RREF)\n"
    return head + "".join("".join(map(str, r)) + "\n" for r in g.tolist())

def format_design(design: Design, fmt: str) -> str:
    if fmt == "json":
        return design.to_json() + "\n"
    if fmt == "csv":
        return _rows_csv(design.blocks)
    head = f"# design v={design.v} k={design.k} b={design.b}\n"
    return head + "".join(" ".join(map(str, b)) + "\n" for b in design.blocks)

def format_enumerators(named, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({name: json.loads(we.to_json()) for name, we in named}, indent=1) + "\n"
    if fmt == "csv":
        rows = [["enumerator", "weight", "count"]]
        for name, we in named:
            rows += [[name, w, we[w]] for w in we.nonzero()]
        return _rows_csv(rows)
    return "".join(f"{name} [n={we.n}, k={we.k}]: {we.polynomial()}\n" for name, we in named)

def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)

# -- subcommands ------------------------------------------------------------------

def cmd_build(args) -> int:
    m = _check_m(args.m)
    f = field_new(m)
    which = args.which
    if which == "code":
        text = format_code(qc.build_code(f), args.format, f"C({m},3)")
    elif which == "design":
        text = format_design(qc.min_weight_design(f), args.format)
    elif which == "design-code":
        basis, _ = qc.design_code_rank(f, workers=args.workers)
        text = format_code(LinearCode(basis), args.format, f"design code m={m}")
    elif which.startswith("grm:"):
        try:
            order = int(which[4:])
        except ValueError:
            raise GuardError(f"bad GRM order in {which!r}") from None
        text = format_code(grm.grm_code(f, order), args.format, f"R_3({order},{m})")
    else:
        raise GuardError(f"unknown --which {which!r}")
    _emit(text, args.out)
    return 0

def cmd_verify(args) -> int:
    ms = _parse_m_list(args.m)
    report = run_suite(ms, budget=_parse_budget(args.budget), workers=args.workers)
    text = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[args.format]()
    if not text.endswith("\n"):
        text += "\n"
    _emit(text, args.out)
    return report.exit_code()

def cmd_enumerate(args) -> int:
    m = _check_m(args.m)
    f = field_new(m)
    if args.target == "code":
        named = [("C", qc.build_code(f).weight_distribution(workers=args.workers))]
    else:
        basis, _ = qc.design_code_rank(f, workers=args.workers)
        dual = LinearCode(basis).dual()
        we = dual.weight_distribution(workers=args.workers)
        named = [("design_code_dual", we), ("design_code", macwilliams(we))]
    _emit(format_enumerators(named, args.format), args.out)
    return 0

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tridesign", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
        sp.add_argument("--out", metavar="PATH")
        sp.add_argument("--workers", type=int, default=1, metavar="N")

    b = sub.add_parser("build", help="write a generator matrix or block list")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--which", required=True, help="code | design | design-code | grm:<order>")
    common(b)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run the claim suite")
    v.add_argument("--m", required=True, help="comma-separated list, e.g. 2,3,4")
    v.add_argument("--budget", metavar="SECONDS")
    common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="exact weight enumerator")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--target", choices=["code", "design-code-dual"], required=True)
    common(e)
    e.set_defaults(func=cmd_enumerate)
    return p

def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except InfeasibleError as exc:
        print(f"error: {exc.guard or 'infeasible'} guard: {exc}", file=sys.stderr)
    except ConfigurationError as exc:
        print(f"error: configuration: {exc}", file=sys.stderr)
    return 2
