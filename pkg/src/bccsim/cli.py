"""Command-line front end: scenario files, figure presets, CSV emission.

Subcommands::

    bccsim run --preset fig4 --seed 7 [--symbols N] [--jobs N] [--out PATH]
    bccsim run --config scenario.yaml ...
    bccsim preset fig5-weak [--out PATH]
    bccsim registry

``run`` emits one CSV row per BER point, sorted by (technique, power,
n_t).  Identical seeds produce byte-identical CSV regardless of the
worker count.  The default worker count can be set with the
``BCCSIM_JOBS`` environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

import yaml

from .channels import BurrXII, registry_name, table1_registry
from .config import load_scenario, scenario_to_config
from .errors import ConfigError, DegenerateTrainingError, DomainError, ParameterError
from .montecarlo import BerPoint, run_scenario
from .presets import PRESET_NAMES, preset

__all__ = ["main", "format_csv", "parse_csv", "CSV_HEADER", "JOBS_ENV_VAR"]

CSV_HEADER = "technique,tx_power_dbm,n_t,symbols,errors,ber,ci95"
JOBS_ENV_VAR = "BCCSIM_JOBS"


def format_csv(points) -> str:
    """Render BER points as CSV, sorted by (technique, power, n_t).

    Floats are written with repr so every row re-parses to the exact
    in-memory value.
    """
    rows = sorted(points, key=lambda p: (p.technique, p.tx_power_dbm, p.n_t))
    lines = [CSV_HEADER]
    for p in rows:
        lines.append(f"{p.technique},{p.tx_power_dbm!r},{p.n_t},"
                     f"{p.symbol_count},{p.error_count},{p.ber!r},{p.ci95!r}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[BerPoint]:
    """Inverse of format_csv."""
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ConfigError(f"CSV header mismatch; expected {CSV_HEADER!r}")
    points = []
    for line in lines[1:]:
        technique, power, n_t, symbols, errors, ber, ci95 = line.split(",")
        points.append(BerPoint(technique=technique, tx_power_dbm=float(power),
                               n_t=int(n_t), error_count=int(errors),
                               symbol_count=int(symbols), ber=float(ber),
                               ci95=float(ci95)))
    return points


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ConfigError, ParameterError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DegenerateTrainingError as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bccsim",
        description="Monte-Carlo BER simulator for noncoherent OOK detection "
                    "over body-channel links")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario and emit BER results as CSV")
    run.add_argument("--config", metavar="PATH", help="scenario YAML document")
    run.add_argument("--preset", metavar="NAME",
                     help=f"figure preset, one of: {', '.join(PRESET_NAMES)}")
    run.add_argument("--seed", type=int, metavar="U64", help="override the scenario seed")
    run.add_argument("--symbols", type=int, metavar="N",
                     help="override the per-point symbol budget")
    run.add_argument("--jobs", type=int, metavar="N",
                     help=f"worker processes (default: ${JOBS_ENV_VAR} or 1)")
    run.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")

    pre = sub.add_parser("preset", help="print a preset as an editable scenario document")
    pre.add_argument("name", metavar="NAME", help=f"one of: {', '.join(PRESET_NAMES)}")
    pre.add_argument("--out", metavar="PATH", help="write YAML here instead of stdout")

    sub.add_parser("registry", help="list the registry channel models")
    return parser


def _dispatch(args) -> int:
    if args.command == "registry":
        _write(_registry_table(), None)
        return 0
    if args.command == "preset":
        scenarios = preset(args.name)
        if not isinstance(scenarios, list):
            scenarios = [scenarios]
        text = yaml.safe_dump_all([scenario_to_config(s) for s in scenarios], sort_keys=False)
        _write(text, args.out)
        return 0
    return _run_command(args)


def _registry_table() -> str:
    lines = ["name,family,parameters,condition"]
    for profile in table1_registry():
        dist = profile.dist
        if isinstance(dist, BurrXII):
            family, params = "burr", (dist.alpha, dist.c, dist.k)
        else:
            family, params = "weibull", (dist.a, dist.b)
        lines.append(f"{registry_name(profile)},{family},"
                     f"{';'.join(repr(p) for p in params)},{profile.condition}")
    return "\n".join(lines) + "\n"


def _run_command(args) -> int:
    if bool(args.config) == bool(args.preset):
        raise ConfigError("exactly one of --config or --preset is required")
    if args.config:
        scenarios = load_scenario(args.config)
    else:
        scenarios = preset(args.preset)
    multi = isinstance(scenarios, list)
    scenario_list = scenarios if multi else [scenarios]

    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.symbols is not None:
        overrides["n_data_symbols"] = args.symbols
    if overrides:
        try:
            scenario_list = [replace(s, **overrides) for s in scenario_list]
        except ParameterError as exc:
            raise ConfigError(str(exc)) from None
    jobs = _resolve_jobs(args.jobs)

    if multi:
        # fig3 is one K=1 run per channel; the CSV schema has no node
        # column, so each channel gets its own file next to --out.
        if not args.out:
            raise ConfigError("--out is required with preset fig3 (one CSV per channel)")
        base = Path(args.out)
        for scenario in scenario_list:
            label = f"f{scenario.nodes[0].node_id}"
            points = run_scenario(scenario, jobs=jobs)
            if not points:
                raise DegenerateTrainingError(f"no BER points produced for channel {label}")
            _write(format_csv(points), str(base.with_name(f"{base.stem}_{label}{base.suffix}")))
        return 0

    points = run_scenario(scenario_list[0], jobs=jobs)
    if not points:
        raise DegenerateTrainingError("no BER points produced (all points degenerate)")
    _write(format_csv(points), args.out)
    return 0


def _resolve_jobs(value) -> int:
    if value is None:
        env = os.environ.get(JOBS_ENV_VAR, "")
        if env:
            try:
                value = int(env)
            except ValueError:
                raise ConfigError(f"{JOBS_ENV_VAR} must be an integer, got {env!r}") from None
        else:
            value = 1
    if value < 1:
        raise ConfigError(f"--jobs must be >= 1, got {value}")
    return value


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
