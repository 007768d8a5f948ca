"""Command-line entry point: ``trigraph <command> [options]``.

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage, configuration or resource-cap errors.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Sequence

from .chords import ColoredChordDiagram, DiagramError, parse_diagram
from .graphs import CapExceededError
from .lagrangian import LagrangianError, run_trials
from .report import SCHEMA_VERSION, Record, Report, compare
from .suites import IDENTITY_SUITES, VERIFY_SUITES, dims_records, run_suite, table_records, table_rows
from .tensors import DegenerateGenusError, contract_gl, contract_sp

DEFAULTS: Dict[str, Any] = {"seed": 0, "trials": 100, "n": 3, "m": 3, "format": "json", "out": None, "jobs": 1}
CONFIG_SECTION = "trigraph"
MAX_DIMS_DEGREE = 5


class UsageError(Exception):
    pass


def load_config(path: str | None) -> Dict[str, Any]:
    """Read ``key = value`` lines from the ``[trigraph]`` section of an INI file."""
    if not path:
        return {}
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise UsageError(f"cannot read config file {path}")
    if CONFIG_SECTION not in cp:
        raise UsageError(f"config file lacks a [{CONFIG_SECTION}] section")
    out: Dict[str, Any] = {}
    for key, val in cp[CONFIG_SECTION].items():
        if key not in DEFAULTS:
            raise UsageError(f"unknown config key {key!r}")
        if key in ("seed", "trials", "n", "m", "jobs"):
            try:
                out[key] = int(val)
            except ValueError:
                raise UsageError(f"config key {key} must be an integer") from None
        else:
            out[key] = val
    return out


def resolve(args: argparse.Namespace) -> Dict[str, Any]:
    cfg = dict(DEFAULTS)
    cfg.update(load_config(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    if cfg["format"] not in ("json", "csv", "text"):
        raise UsageError(f"unknown format {cfg['format']!r}")
    for key in ("trials", "n", "m", "jobs"):
        if cfg[key] < 1:
            raise UsageError(f"{key} must be positive")
    return cfg


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, help="random seed (default 0)")
    p.add_argument("--trials", type=int, help="trials per randomized check (default 100)")
    p.add_argument("--n", type=int, help="genus (default 3)")
    p.add_argument("--m", type=int, help="maximal graph degree for dims (default 3)")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), help="report format (default json)")
    p.add_argument("--config", help="INI file with a [trigraph] section of defaults")
    p.add_argument("--jobs", type=int, help="worker processes for independent suites (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="chord-diagram counts and graph quotient dimensions")
    _common(p)
    p = sub.add_parser("table219", help="ranks of the six invariant-space rows")
    _common(p)
    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    p.add_argument("--suite", action="append", choices=sorted(VERIFY_SUITES) + ["all"],
                   help="suite to run; repeatable (default all)")
    p = sub.add_parser("contract", help="dump the contraction tensor of a chord diagram")
    _common(p)
    p.add_argument("--diagram", required=True, help="e.g. '6: (1 4)(2 5)(3 6)' or '2: (1>2)'")

    lag = sub.add_parser("lagrangian", help="Lagrangian pair experiments")
    lsub = lag.add_subparsers(dest="action", required=True)
    p = lsub.add_parser("verify", help="random trials of the pair-distinguishing property")
    _common(p)

    ids = sub.add_parser("identities", help="group-ring identity suites")
    isub = ids.add_subparsers(dest="action", required=True)
    p = isub.add_parser("run")
    _common(p)
    p.add_argument("--suite", action="append", choices=sorted(IDENTITY_SUITES) + ["all"],
                   help="suite to run; repeatable (default all)")
    return parser


def _public_config(cfg: Dict[str, Any], keys: Sequence[str]) -> Dict[str, Any]:
    return {k: cfg[k] for k in keys}


def _run_suites(names: List[str], cfg: Dict[str, Any]) -> List[Record]:
    if cfg["jobs"] > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg["jobs"]) as pool:
            futures = [pool.submit(run_suite, nm, cfg["seed"], cfg["trials"], cfg["n"]) for nm in names]
            return [r for f in futures for r in f.result()]
    return [r for nm in names for r in run_suite(nm, cfg["seed"], cfg["trials"], cfg["n"])]


def _suite_names(requested: List[str] | None, available) -> List[str]:
    if not requested or "all" in requested:
        return sorted(available)
    return sorted(set(requested))


def cmd_dims(cfg: Dict[str, Any]) -> Report:
    if cfg["m"] > MAX_DIMS_DEGREE:
        raise CapExceededError("dims_degree", cfg["m"], MAX_DIMS_DEGREE)
    return Report("dims", _public_config(cfg, ["m"]), dims_records(cfg["m"]))


def cmd_table219(cfg: Dict[str, Any]) -> Report:
    return Report("table219", _public_config(cfg, ["n"]), table_records(cfg["n"]), {"rows": table_rows(cfg["n"])})


def cmd_verify(cfg: Dict[str, Any], suites: List[str] | None) -> Report:
    names = _suite_names(suites, VERIFY_SUITES)
    conf = _public_config(cfg, ["seed", "trials", "n"])
    conf["suites"] = names
    return Report("verify", conf, _run_suites(names, cfg))


def cmd_identities(cfg: Dict[str, Any], suites: List[str] | None) -> Report:
    names = _suite_names(suites, IDENTITY_SUITES)
    conf = _public_config(cfg, ["seed", "trials"])
    conf["suites"] = names
    return Report("identities", conf, _run_suites(names, cfg))


def cmd_lagrangian(cfg: Dict[str, Any]) -> Report:
    n = cfg["n"]
    recs = []
    for t in run_trials(n, cfg["trials"], cfg["seed"]):
        recs.append(compare(f"lagrangian-n{n}-t{t['trial']:04d}-{t['kind']}",
                            "cup forms agree iff the pairs are equal or swapped",
                            t["same_or_swapped"], t["forms_equal"]))
    return Report("lagrangian", _public_config(cfg, ["seed", "trials", "n"]), recs)


def cmd_contract(cfg: Dict[str, Any], text: str) -> Dict[str, Any]:
    d = parse_diagram(text)
    n = cfg["n"]
    t = contract_gl(d, n) if isinstance(d, ColoredChordDiagram) else contract_sp(d, n)
    entries = [[[t.space.label(i) for i in key], str(v)] for key, v in sorted(t.entries.items())]
    return {"schema": SCHEMA_VERSION, "diagram": str(d), "n": n, "arity": t.arity,
            "group": "gl" if isinstance(d, ColoredChordDiagram) else "sp", "entries": entries}


def _render_contract(data: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return "term,coefficient\n" + "".join(f"{'*'.join(k)},{v}\n" for k, v in data["entries"])
    lines = [f"{data['group']} contraction of {data['diagram']} at n={data['n']}"]
    lines += [f"{v:>4} {' ⊗ '.join(k)}" for k, v in data["entries"]]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        cfg = resolve(args)
        if args.command == "contract":
            _emit(_render_contract(cmd_contract(cfg, args.diagram), cfg["format"]), cfg["out"])
            return 0
        if args.command == "dims":
            report = cmd_dims(cfg)
        elif args.command == "table219":
            report = cmd_table219(cfg)
        elif args.command == "verify":
            report = cmd_verify(cfg, args.suite)
        elif args.command == "lagrangian":
            report = cmd_lagrangian(cfg)
        else:
            report = cmd_identities(cfg, args.suite)
    except (UsageError, CapExceededError, DegenerateGenusError, LagrangianError, DiagramError) as exc:
        print(f"trigraph: error: {exc}", file=sys.stderr)
        return 2
    _emit(report.render(cfg["format"]), cfg["out"])
    c = report.counts()
    print(f"trigraph {report.suite}: {c['pass']} pass, {c['fail']} fail, "
          f"{c['computed-no-expectation']} informational in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
