"""Command-line front end.

    bingbound [--format text|json|csv] [--precision D] [--jobs J]
              [--catalog FILE] [--tau-table FILE] [--batch FILE]
              {invariants,signature-function,bing-bound,reduce,report} ...

Exit codes: 0 success, 2 parse error, 3 computation error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .bing import reduce_to_companion
from .bounds import full_report
from .catalog import DEFAULT_CATALOG, load_catalog, load_tau_table
from .errors import BingBoundError, ParseError
from .expression import evaluate, parse, to_text
from .invariants import alexander, builtin_nus, g3_certify, nu_from_name, signature_at
from .signature_function import signature_function

EXIT_OK, EXIT_PARSE, EXIT_COMPUTE, EXIT_IO = 0, 2, 3, 4
TAU_TABLE_ENV = "BINGBOUND_TAU_TABLE"


@dataclass(frozen=True)
class Config:
    catalog_path: Optional[str] = None
    tau_table_path: Optional[str] = None
    fmt: str = "text"
    precision: int = 12
    jobs: int = 1

    def __post_init__(self):
        if self.precision < 6:
            raise ValueError("precision must be at least 6 digits")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.fmt not in ("text", "json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


@lru_cache(maxsize=8)
def _load_catalog(catalog_path, tau_table_path):
    catalog = DEFAULT_CATALOG
    if catalog_path:
        catalog = load_catalog(catalog_path)
    if tau_table_path:
        catalog = catalog.with_tau_overrides(load_tau_table(tau_table_path))
    return catalog


def catalog_for(cfg: Config):
    tau = cfg.tau_table_path or os.environ.get(TAU_TABLE_ENV) or None
    return _load_catalog(cfg.catalog_path, tau)


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- rendering -------------------------------------------------------------------


def _csv_rows(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _flatten(d: dict, prefix: str = ""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        elif isinstance(v, list):
            yield key, ", ".join(str(x) for x in v) if all(not isinstance(x, (dict, list)) for x in v) else json.dumps(v)
        else:
            yield key, v


def render(data: dict, fmt: str, batch: bool = False) -> str:
    if fmt == "json":
        return json.dumps(data) + "\n" if batch else json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        return _csv_rows([("field", "value"), *_flatten(data)])
    return "".join(f"{k}: {v}\n" for k, v in _flatten(data))


# -- commands ----------------------------------------------------------------------


def _parse_expr(text: str, base_dir=None):
    return parse(text, base_dir=base_dir)


def invariants_data(expr, catalog, digits: int) -> dict:
    sig = signature_at(expr, -1, catalog=catalog)
    cert = g3_certify(expr, catalog=catalog)
    sf = signature_function(expr, catalog=catalog)
    return {
        "expression": to_text(expr),
        "signature": sig.signature,
        "nullity": sig.nullity,
        "alexander": alexander(expr, catalog=catalog).to_text(),
        "g3": {"status": cert.status.value, "lower": cert.lower, "upper": cert.upper},
        "signature_function": {
            "jump_count": len(sf.jumps),
            "jumps": [j.enclosure_text(digits) for j in sf.jumps],
            "plateaus": list(sf.plateau_values),
            "at_jump_signature": [v.signature for v in sf.at_jump],
            "at_jump_nullity": [v.nullity for v in sf.at_jump],
        },
    }


def reduce_data(expr, n: int, catalog) -> tuple[dict, str]:
    companion, trace = reduce_to_companion(n, expr)
    counts = trace.counts()
    try:
        size = evaluate(companion, catalog).size
    except BingBoundError:
        size = "unknown"
    data = {
        "expression": to_text(expr),
        "n": n,
        "companion": to_text(companion),
        "steps": len(trace),
        "b_steps": counts.get("B", 0),
        "a_steps": counts.get("A", 0),
        "matrix_size": size,
        "trace_digest": trace.digest(),
    }
    return data, trace.to_jsonl()


def _nus(names):
    try:
        return [nu_from_name(s) for s in names] if names else None
    except ValueError as exc:
        raise _Failure(EXIT_PARSE, str(exc)) from exc


def run_one(command: str, opts: dict, cfg: Config, text: str, base_dir=None) -> str:
    """Output of one subcommand on one expression; raises _Failure."""
    try:
        expr = _parse_expr(text, base_dir)
    except ParseError as exc:
        raise _Failure(EXIT_PARSE, f"parse error: {exc}") from exc
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read matrix file: {exc}") from exc
    try:
        catalog = catalog_for(cfg)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read catalog or tau table: {exc}") from exc
    batch = opts.get("batch", False)
    try:
        if command == "invariants":
            return render(invariants_data(expr, catalog, cfg.precision), cfg.fmt, batch)
        if command == "signature-function":
            sf = signature_function(expr, catalog=catalog)
            table = sf.to_csv(cfg.precision)
            if opts.get("csv"):
                with open(opts["csv"], "w", newline="") as fh:
                    fh.write(table)
                return render({"expression": to_text(expr), "csv": opts["csv"], "jumps": len(sf.jumps)}, cfg.fmt, batch)
            if cfg.fmt == "json":
                rows = list(csv.DictReader(io.StringIO(table)))
                return render({"expression": to_text(expr), "rows": rows}, cfg.fmt, batch)
            return table
        if command == "reduce":
            data, jsonl = reduce_data(expr, opts["n"], catalog)
            if opts.get("trace"):
                Path(opts["trace"]).write_text(jsonl)
            if cfg.fmt == "json":
                data["trace"] = [json.loads(line) for line in jsonl.splitlines()]
                return render(data, cfg.fmt, batch)
            out = render(data, cfg.fmt, batch)
            return out if cfg.fmt == "csv" or batch else out + jsonl
        if command in ("bing-bound", "report"):
            nus = _nus(opts.get("nu"))
            if nus is None and command == "report":
                nus = builtin_nus()
            rep = full_report(expr, opts["n"], nus, catalog=catalog)
            if opts.get("trace"):
                Path(opts["trace"]).write_text(reduce_to_companion(opts["n"], expr)[1].to_jsonl())
            return render(rep.to_dict(), cfg.fmt, batch)
    except _Failure:
        raise
    except OSError as exc:
        raise _Failure(EXIT_IO, f"I/O error: {exc}") from exc
    except (BingBoundError, ValueError, ArithmeticError) as exc:
        raise _Failure(EXIT_COMPUTE, f"{type(exc).__name__}: {exc}") from exc
    raise _Failure(EXIT_PARSE, f"unknown command {command!r}")


def _batch_task(args):
    command, opts, cfg, text, base_dir = args
    try:
        return EXIT_OK, run_one(command, opts, cfg, text, base_dir)
    except _Failure as exc:
        return exc.code, str(exc)


def run_batch(command: str, opts: dict, cfg: Config, lines: list[str], base_dir=None) -> tuple[int, str]:
    """Run ``command`` on every expression line; output keeps input order."""
    exprs = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    opts = dict(opts, batch=True)
    tasks = [(command, opts, cfg, e, base_dir) for e in exprs]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_batch_task, tasks))
    else:
        results = [_batch_task(t) for t in tasks]
    code = EXIT_OK
    out = []
    for e, (c, text) in zip(exprs, results):
        code = max(code, c)
        if c != EXIT_OK:
            text = render({"expression": e, "error": text, "exit_code": c}, cfg.fmt, True)
        if cfg.fmt == "text":
            out.append(f"== {e}\n{text}")
        else:
            out.append(text)
    return code, "".join(out)


# -- argument parsing ------------------------------------------------------------------


def _at_least(lo: int, what: str):
    def conv(s):
        v = int(s)
        if v < lo:
            raise argparse.ArgumentTypeError(f"{what} must be at least {lo}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bingbound", description="Genus bounds for iterated Bing doubles.")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tau-table", metavar="FILE", help=f"tau values (falls back to ${TAU_TABLE_ENV})")
    p.add_argument("--catalog", metavar="FILE", help="JSON catalog replacing the built-in one")
    p.add_argument("--precision", type=_at_least(6, "precision"), default=12, help="digits for algebraic jumps")
    p.add_argument("--jobs", type=_at_least(1, "jobs"), default=1, help="worker processes for --batch")
    p.add_argument("--batch", metavar="FILE", help="read one expression per line from FILE")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="signature, Alexander polynomial, 3-genus, signature function")
    s.add_argument("expr", nargs="?")

    s = sub.add_parser("signature-function", help="the Levine-Tristram signature as a step function")
    s.add_argument("expr", nargs="?")
    s.add_argument("--csv", metavar="PATH", help="write the CSV table here")

    for name, helptext in (("bing-bound", "genus bounds for B_n(K)"), ("report", "full report over several nu")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("expr", nargs="?")
        s.add_argument("-n", type=_at_least(1, "n"), required=True)
        s.add_argument("--nu", action="append", help="sigma, tau or sigma_p:a/p (repeatable)")
        s.add_argument("--trace", metavar="PATH", help="write the rewrite trace as JSON lines")

    s = sub.add_parser("reduce", help="reduce B_n(K) to its companion knot")
    s.add_argument("-n", type=_at_least(1, "n"), required=True)
    s.add_argument("expr", nargs="?")
    s.add_argument("--trace", metavar="PATH", help="write the rewrite trace as JSON lines")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = Config(args.catalog, args.tau_table, args.format, args.precision, args.jobs)
    opts = {k: getattr(args, k, None) for k in ("n", "nu", "trace", "csv")}
    try:
        if args.batch:
            try:
                lines = Path(args.batch).read_text().splitlines()
            except OSError as exc:
                raise _Failure(EXIT_IO, f"cannot read batch file: {exc}") from exc
            code, out = run_batch(args.command, opts, cfg, lines, base_dir=Path(args.batch).parent)
            sys.stdout.write(out)
            return code
        if args.expr is None:
            raise _Failure(EXIT_PARSE, "missing knot expression")
        sys.stdout.write(run_one(args.command, opts, cfg, args.expr))
        return EXIT_OK
    except _Failure as exc:
        print(f"bingbound: {exc}", file=sys.stderr)
        return exc.code
