"""Command-line front end.

Exit codes: 0 success / everything passed, 1 an expected-negative outcome
(an axiom failed, no counterexample found, index outside the linear family),
2 usage or ingest error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import AssortativityError
from .indices import INDEX_NAMES, get_index
from .ingest import ingest_csv
from .matrix import MatchingMatrix, is_positive
from .report import build_report, decimal_string, dumps
from .search import (
    DEFAULT_BUDGET,
    SampleConfig,
    axiom_suite,
    find_heterogamy_violation,
    find_ordinal_disagreement,
    reproduce_counterexamples,
    resolve_axioms,
    verify_linear_characterization,
)

DEFAULTS = {
    "seed": 0,
    "samples": 1000,
    "positivity": "required",
    "workers": 1,
    "out": None,
    "indices": None,
    "axioms": "likelihood-ratio",
    "matrix": None,
    "csv": None,
    "threshold": None,
    "budget": DEFAULT_BUDGET,
    "against": None,
    "kind": "ordinal",
}
REPRO_SAMPLES = 200


class UsageError(Exception):
    pass


def parse_matrix(text: str) -> MatchingMatrix:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"--matrix needs four comma-separated entries, got {text!r}")
    try:
        return MatchingMatrix(*parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --matrix {text!r}: {exc}") from None


def _split_names(values) -> list[str]:
    """Flatten repeated/comma-separated index names; linear:A,B stays whole."""
    if values is None:
        return []
    if isinstance(values, str):
        values = [values]
    names = []
    for v in values:
        if v.startswith("linear:"):
            names.append(v.strip())
        else:
            names.extend(n.strip() for n in v.split(",") if n.strip())
    return names


def _sample_config(opts) -> SampleConfig:
    return SampleConfig(seed=int(opts["seed"]), count=int(opts["samples"]), positivity=opts["positivity"])


def _load_matrix(opts) -> MatchingMatrix:
    if opts["matrix"] and opts["csv"]:
        raise UsageError("give either --matrix or --csv, not both")
    if opts["matrix"]:
        return parse_matrix(opts["matrix"])
    if opts["csv"]:
        return ingest_csv(opts["csv"], opts["threshold"])
    raise UsageError("one of --matrix or --csv is required")


def _domain_flags(index, m: MatchingMatrix) -> dict:
    positive = is_positive(m)
    return {
        "positive": positive,
        "boundary": not positive,
        # linear-family weights are only pinned down on positive matrices
        "extension": index.name.startswith("linear:") and not positive,
    }


def cmd_compute(opts) -> tuple[dict, int]:
    m = _load_matrix(opts)
    names = _split_names(opts["indices"]) or list(INDEX_NAMES)
    results = []
    for name in names:
        index = get_index(name)
        entry = {"index": index.name, "matrix": m, "domain": _domain_flags(index, m)}
        if index.contains(m):
            value = index(m)
            entry.update(value=value, decimal=decimal_string(value))
        else:
            entry.update(error="OutOfDomain", message=f"{index.name} is undefined at {m}")
        results.append(entry)
    return build_report("compute", opts, results, [], 0, "values computed"), 0


def cmd_check_axioms(opts) -> tuple[dict, int]:
    names = _split_names(opts["indices"])
    if not names:
        raise UsageError("--index is required")
    axioms = resolve_axioms(opts["axioms"])
    config = _sample_config(opts)
    suites = [axiom_suite(get_index(n), axioms, config, workers=int(opts["workers"])) for n in names]
    certificates = [
        t.first_failure for s in suites for t in s.tallies.values() if t.first_failure is not None
    ]
    code = 0 if all(s.ok for s in suites) else 1
    meaning = "all axioms passed" if code == 0 else "at least one axiom failed"
    return build_report("check-axioms", opts, suites, certificates, code, meaning), code


def cmd_find_counterexample(opts) -> tuple[dict, int]:
    names = _split_names(opts["indices"])
    budget = int(opts["budget"])
    if opts["kind"] == "heterogamy":
        if len(names) != 1:
            raise UsageError("heterogamy search takes exactly one --index")
        cert = find_heterogamy_violation(get_index(names[0]), budget)
    elif opts["kind"] == "ordinal":
        names += _split_names(opts["against"])
        if len(names) != 2:
            raise UsageError("ordinal search takes two indices (--index A --against B)")
        cert = find_ordinal_disagreement(
            get_index(names[0]), get_index(names[1]), budget, _sample_config(opts)
        )
    else:
        raise UsageError(f"unknown --kind {opts['kind']!r}")
    result = {"kind": opts["kind"], "indices": names, "budget": budget, "found": cert is not None}
    code = 0 if cert is not None else 1
    meaning = "certificate found" if code == 0 else "no certificate within budget"
    return build_report("find-counterexample", opts, [result], [cert] if cert else [], code, meaning), code


def cmd_recover_params(opts) -> tuple[dict, int]:
    names = _split_names(opts["indices"])
    if not names:
        raise UsageError("--index is required")
    config = _sample_config(opts)
    reports = [verify_linear_characterization(get_index(n), config, int(opts["workers"])) for n in names]
    code = 0 if all(r.recovered.in_family for r in reports) else 1
    meaning = "linear weights recovered" if code == 0 else "index is outside the linear family"
    return build_report("recover-params", opts, reports, [], code, meaning), code


def cmd_repro(opts) -> tuple[dict, int]:
    config = SampleConfig(seed=int(opts["seed"]), count=int(opts["samples"]))
    repro = reproduce_counterexamples(config, int(opts["workers"]))
    code = 0 if repro.ok else 1
    meaning = "counterexamples reproduced" if code == 0 else "reproduction mismatch"
    return build_report("repro", opts, [repro], list(repro.certificates.values()), code, meaning), code


COMMANDS = {
    "compute": cmd_compute,
    "check-axioms": cmd_check_axioms,
    "find-counterexample": cmd_find_counterexample,
    "recover-params": cmd_recover_params,
    "repro": cmd_repro,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON file of option defaults; flags override it")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int, help="witnesses per axiom / recovery samples")
    common.add_argument("--positivity", choices=["required", "allow-boundary"])
    common.add_argument("--workers", type=int)
    common.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")

    parser = argparse.ArgumentParser(prog="assortativity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="evaluate indices at one matrix")
    p.add_argument("--matrix", help="a,b,c,d with integer or p/q entries")
    p.add_argument("--csv", type=Path, help="couple records: man_type,woman_type[,weight]")
    p.add_argument("--threshold", help="bin numeric types as H iff value > threshold")
    p.add_argument("--index", dest="indices", action="append")

    p = sub.add_parser("check-axioms", parents=[common], help="run a randomized axiom suite")
    p.add_argument("--index", dest="indices", action="append")
    p.add_argument("--axioms", help="list name or comma-separated axiom names")

    p = sub.add_parser("find-counterexample", parents=[common], help="search for a counterexample")
    p.add_argument("--index", dest="indices", action="append")
    p.add_argument("--against")
    p.add_argument("--kind", choices=["ordinal", "heterogamy"])
    p.add_argument("--budget", type=int)

    p = sub.add_parser("recover-params", parents=[common], help="recover linear-family weights")
    p.add_argument("--index", dest="indices", action="append")

    sub.add_parser("repro", parents=[common], help="reproduce the published counterexamples")
    return parser


def resolve_options(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if args.command == "repro":
        opts["samples"] = REPRO_SAMPLES
    if args.config is not None:
        try:
            loaded = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        opts.update(loaded)
    for key, value in vars(args).items():
        if key in DEFAULTS and value is not None:
            opts[key] = value
    for key in ("csv", "out"):
        if opts[key] is not None:
            opts[key] = str(opts[key])
    return opts


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        opts = resolve_options(args)
        report, code = COMMANDS[args.command](opts)
    except (UsageError, AssortativityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dumps(report)
    if opts["out"]:
        Path(opts["out"]).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
