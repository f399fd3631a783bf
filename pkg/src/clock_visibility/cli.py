"""Command-line interface: `visibility point|sweep|figure|validate`.

Exit codes: 0 on success, 1 when the validation report contains failures,
2 on usage or configuration errors.
"""

import functools
import json
import sys

import click

from .errors import ConvergenceError, StructuralError, ValidationError
from .sweep import (MODELS, PRESET_NAMES, Axis, SweepSpec, evaluate_point,
                    run_figure_preset, run_sweep, serialize_records,
                    write_records)
from .validate import run_validation


def _domain_errors_exit_2(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValidationError, StructuralError, ConvergenceError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    return wrapper


@click.group()
@click.version_option(package_name="clock-visibility")
def main():
    """Interferometric visibility of a two-level clock coupled to a quantum
    environment (single-mode field or AD/PD/DP channel)."""


_PARAM_FLAGS = (
    ("--delta-e", "delta_e", "clock level splitting"),
    ("--omega", "omega", "field frequency (jc models)"),
    ("--lambda", "lambda", "coupling; arm 1 (and arm 2 unless --lambda2)"),
    ("--lambda2", "lambda2", "arm-2 coupling (channel models)"),
    ("--delta-tau", "delta_tau", "proper-time difference"),
    ("--temperature", "temperature", "field temperature (jc_thermal)"),
    ("--p1", "p1", "arm-1 transition probability (channel models)"),
    ("--p2", "p2", "arm-2 transition probability (channel models)"),
    ("--tau1", "tau1", "arm-1 proper time (channel models)"),
    ("--tau2", "tau2", "arm-2 proper time (channel models)"),
)


def _param_options(fn):
    for flag, name, help_text in reversed(_PARAM_FLAGS):
        fn = click.option(flag, name, type=float, default=None, help=help_text)(fn)
    return fn


@main.command()
@click.option("--model", required=True, type=click.Choice(MODELS))
@_param_options
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@_domain_errors_exit_2
def point(model, fmt, **params):
    """Evaluate a single parameter point and print one record."""
    bound = {name: value for name, value in params.items() if value is not None}
    record = evaluate_point(model, bound)
    click.echo(serialize_records([record], fmt), nl=False)


def load_sweep_config(path) -> SweepSpec:
    """Parse a JSON sweep configuration into a SweepSpec.

    Schema: {"model": str, "axes": [{"parameter", "start", "stop", "points"}],
    "fixed": {name: value}, "output": str, "format": "csv"|"json"}.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("config must be a JSON object")
    known = {"model", "axes", "fixed", "output", "format"}
    unknown = set(data) - known
    if unknown:
        raise ValidationError(f"unknown config key {sorted(unknown)[0]!r}")
    if "model" not in data:
        raise ValidationError("config is missing 'model'")
    axes_raw = data.get("axes")
    if not isinstance(axes_raw, list) or not axes_raw:
        raise ValidationError("config needs a non-empty 'axes' list")
    axes = []
    for entry in axes_raw:
        if not isinstance(entry, dict):
            raise ValidationError("each axis must be an object")
        missing = {"parameter", "start", "stop", "points"} - set(entry)
        if missing:
            raise ValidationError(f"axis is missing {sorted(missing)[0]!r}")
        extra = set(entry) - {"parameter", "start", "stop", "points"}
        if extra:
            raise ValidationError(f"unknown axis key {sorted(extra)[0]!r}")
        axes.append(Axis(parameter=entry["parameter"], start=entry["start"],
                         stop=entry["stop"], points=entry["points"]))
    fixed = data.get("fixed", {})
    if not isinstance(fixed, dict):
        raise ValidationError("'fixed' must be an object of name: value pairs")
    return SweepSpec(model=data["model"], axes=tuple(axes), fixed=fixed,
                     output_path=str(data.get("output", "")),
                     format=str(data.get("format", "csv")))


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON sweep configuration")
@click.option("--out", "out", default=None, type=click.Path(),
              help="output path (overrides the config's 'output')")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None,
              help="output format (overrides the config's 'format')")
@_domain_errors_exit_2
def sweep(config_path, out, fmt):
    """Run the sweep described by a config file.

    Flags override config values.  Without an output path the records go
    to stdout.
    """
    spec = load_sweep_config(config_path)
    fmt = fmt or spec.format
    path = out or spec.output_path
    records = run_sweep(spec)
    if path:
        write_records(records, path, fmt)
        click.echo(path)
    else:
        click.echo(serialize_records(records, fmt), nl=False)


@main.command()
@click.argument("preset_id")
@click.option("--out", default=None, type=click.Path(),
              help="output path (multi-file presets use it as a stem)")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@_domain_errors_exit_2
def figure(preset_id, out, fmt):
    """Regenerate a named reference dataset.

    Available presets: """ + ", ".join(PRESET_NAMES) + "."
    for path in run_figure_preset(preset_id, out, fmt):
        click.echo(path)


@main.command()
@click.option("--strict", is_flag=True, help="denser sampling, same tolerances")
def validate(strict):
    """Run the self-check suite and print the JSON report."""
    report = run_validation("strict" if strict else "default")
    click.echo(json.dumps(report, indent=2))
    if not report["ok"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
