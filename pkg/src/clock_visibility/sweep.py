"""Parameter sweeps, result serialization, and figure-preset datasets.

A sweep evaluates one model over a 1-D or 2-D parameter grid and emits
records in row-major grid order (outer axis slowest).  Evaluation may be
parallel (VISIBILITY_THREADS caps the worker count) but output order and
content are deterministic: the same spec always serializes to the same
bytes.

Models and their parameters:

  noiseless   delta_e, delta_tau [, lambda]  (lambda is recorded but inert;
              it lets comparison figures carry the flat no-noise reference)
  jc          delta_e, omega, lambda, delta_tau
  jc_thermal  delta_e, omega, lambda, delta_tau, temperature
  ad/pd/dp    delta_e; times as delta_tau or tau1+tau2; coupling as lambda
              (both arms), lambda+lambda2 (split), or p1+p2 (requires
              tau1/tau2; lambda_i = arcsin(sqrt(p_i))/tau_i)
"""

import concurrent.futures
import json
import math
import os
from dataclasses import dataclass, field, fields

import numpy as np

from .channels import ChannelKind, coupling_from_probability, two_arm_visibility
from .errors import ValidationError
from .interferometer import ArmConfig, ClockSpec, noiseless_overlap
from .jaynes_cummings import JcParams, ThermalParams, jc_overlap_analytic, jc_thermal_overlap

MODELS = ("noiseless", "jc", "jc_thermal", "ad", "pd", "dp")

CSV_COLUMNS = ("model", "delta_e", "omega", "lambda1", "lambda2", "delta_tau",
               "temperature", "p1", "p2", "tau1", "tau2",
               "kappa_re", "kappa_im", "visibility")

# parameter names a model accepts (values are validated at evaluation time)
_CHANNEL_PARAMS = frozenset({"delta_e", "delta_tau", "tau1", "tau2",
                             "lambda", "lambda2", "p1", "p2"})
_MODEL_PARAMS = {
    "noiseless": frozenset({"delta_e", "delta_tau", "lambda"}),
    "jc": frozenset({"delta_e", "omega", "lambda", "delta_tau"}),
    "jc_thermal": frozenset({"delta_e", "omega", "lambda", "delta_tau", "temperature"}),
    "ad": _CHANNEL_PARAMS,
    "pd": _CHANNEL_PARAMS,
    "dp": _CHANNEL_PARAMS,
}
_MODEL_REQUIRED = {
    "noiseless": frozenset({"delta_e", "delta_tau"}),
    "jc": frozenset({"delta_e", "omega", "lambda", "delta_tau"}),
    "jc_thermal": frozenset({"delta_e", "omega", "lambda", "delta_tau", "temperature"}),
}


@dataclass(frozen=True)
class Axis:
    """One swept parameter: uniform grid from start to stop inclusive."""

    parameter: str
    start: float
    stop: float
    points: int

    def __post_init__(self):
        if not isinstance(self.parameter, str) or not self.parameter:
            raise ValidationError("axis parameter name must be a non-empty string")
        for name in ("start", "stop"):
            val = getattr(self, name)
            try:
                val = float(val)
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"axis {self.parameter}: {name} must be a number") from exc
            if not math.isfinite(val):
                raise ValidationError(f"axis {self.parameter}: {name} must be finite")
            object.__setattr__(self, name, val)
        if not isinstance(self.points, (int, np.integer)) or isinstance(self.points, bool):
            raise ValidationError(f"axis {self.parameter}: points must be an integer")
        object.__setattr__(self, "points", int(self.points))
        if self.points < 2:
            raise ValidationError(f"axis {self.parameter}: points must be >= 2")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class SweepSpec:
    """A fully described sweep: model, 1-2 axes, remaining parameters fixed."""

    model: str
    axes: tuple
    fixed: dict = field(default_factory=dict)
    output_path: str = ""
    format: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "fixed", dict(self.fixed))
        validate_spec(self)


@dataclass(frozen=True)
class SweepRecord:
    """One grid point: every bound parameter plus the complex overlap and
    the visibility.  Unused parameters stay None (empty CSV fields)."""

    model: str
    delta_e: float = None
    omega: float = None
    lambda1: float = None
    lambda2: float = None
    delta_tau: float = None
    temperature: float = None
    p1: float = None
    p2: float = None
    tau1: float = None
    tau2: float = None
    kappa_re: float = 0.0
    kappa_im: float = 0.0
    visibility: float = 0.0


def validate_spec(spec: SweepSpec):
    if spec.model not in MODELS:
        raise ValidationError(
            f"unknown model {spec.model!r}; expected one of {', '.join(MODELS)}"
        )
    if not 1 <= len(spec.axes) <= 2:
        raise ValidationError(f"sweep needs 1 or 2 axes, got {len(spec.axes)}")
    for ax in spec.axes:
        if not isinstance(ax, Axis):
            raise ValidationError("axes must be Axis instances")
    axis_names = [ax.parameter for ax in spec.axes]
    if len(set(axis_names)) != len(axis_names):
        raise ValidationError(f"duplicate axis parameter {axis_names[0]!r}")
    if spec.format not in ("csv", "json"):
        raise ValidationError(f"format must be csv or json, got {spec.format!r}")
    allowed = _MODEL_PARAMS[spec.model]
    bound = set(axis_names)
    for name, value in spec.fixed.items():
        if name in bound:
            raise ValidationError(f"parameter {name!r} bound twice (axis and fixed)")
        bound.add(name)
        try:
            v = float(value)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"fixed parameter {name!r} must be a number") from exc
        if not math.isfinite(v):
            raise ValidationError(f"fixed parameter {name!r} must be finite")
    for name in sorted(bound):
        if name not in allowed:
            raise ValidationError(
                f"model {spec.model!r} does not take parameter {name!r}"
            )
    _check_binding_names(spec.model, bound)


def _check_binding_names(model: str, bound: set):
    """Name-level completeness/exclusivity; value checks happen per point."""
    if model in _MODEL_REQUIRED:
        missing = _MODEL_REQUIRED[model] - bound
        if missing:
            raise ValidationError(
                f"model {model!r} is missing parameter(s): {', '.join(sorted(missing))}"
            )
        return
    # channel models: time group
    has_dtau = "delta_tau" in bound
    has_taus = {"tau1", "tau2"} & bound
    if has_dtau and has_taus:
        raise ValidationError("time bound twice: give delta_tau or tau1/tau2, not both")
    if not has_dtau:
        if has_taus != {"tau1", "tau2"}:
            missing = {"tau1", "tau2"} - has_taus
            if has_taus:
                raise ValidationError(
                    f"missing parameter(s): {', '.join(sorted(missing))} "
                    "(tau1 and tau2 must be given together)"
                )
            raise ValidationError("missing time parameter: delta_tau or tau1/tau2")
    # coupling group
    lam_names = {"lambda", "lambda2"} & bound
    p_names = {"p1", "p2"} & bound
    if lam_names and p_names:
        raise ValidationError("coupling bound twice: give lambda/lambda2 or p1/p2, not both")
    if p_names:
        if p_names != {"p1", "p2"}:
            missing = {"p1", "p2"} - p_names
            raise ValidationError(
                f"missing parameter(s): {', '.join(sorted(missing))} "
                "(p1 and p2 must be given together)"
            )
        if has_dtau:
            raise ValidationError(
                "p1/p2 require explicit tau1 and tau2 (per-arm proper times)"
            )
    elif lam_names:
        if "lambda" not in lam_names:
            raise ValidationError("lambda2 requires lambda (the arm-1 coupling)")
    else:
        raise ValidationError("missing coupling: lambda (optionally lambda2) or p1/p2")
    if "delta_e" not in bound:
        raise ValidationError(f"model {model!r} is missing parameter(s): delta_e")


def evaluate_point(model: str, params: dict) -> SweepRecord:
    """Evaluate one fully bound parameter point and build its record."""
    if model not in MODELS:
        raise ValidationError(
            f"unknown model {model!r}; expected one of {', '.join(MODELS)}"
        )
    unknown = set(params) - _MODEL_PARAMS[model]
    if unknown:
        raise ValidationError(
            f"model {model!r} does not take parameter {sorted(unknown)[0]!r}"
        )
    _check_binding_names(model, set(params))
    vals = {}
    for name, value in params.items():
        try:
            v = float(value)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"parameter {name!r} must be a number") from exc
        if not math.isfinite(v):
            raise ValidationError(f"parameter {name!r} must be finite")
        vals[name] = v

    if model == "noiseless":
        clock = ClockSpec.balanced(vals["delta_e"])
        kappa = noiseless_overlap(clock, vals["delta_tau"])
        lam = vals.get("lambda")
        return _record(model, kappa, delta_e=vals["delta_e"], delta_tau=vals["delta_tau"],
                       lambda1=lam, lambda2=lam)
    if model in ("jc", "jc_thermal"):
        jc = JcParams(delta_e=vals["delta_e"], omega=vals["omega"],
                      coupling=vals["lambda"])
        if model == "jc":
            kappa = jc_overlap_analytic(jc, vals["delta_tau"])
            return _record(model, kappa, delta_e=vals["delta_e"], omega=vals["omega"],
                           lambda1=vals["lambda"], lambda2=vals["lambda"],
                           delta_tau=vals["delta_tau"])
        kappa = jc_thermal_overlap(jc, ThermalParams(temperature=vals["temperature"]),
                                   vals["delta_tau"])
        return _record(model, kappa, delta_e=vals["delta_e"], omega=vals["omega"],
                       lambda1=vals["lambda"], lambda2=vals["lambda"],
                       delta_tau=vals["delta_tau"], temperature=vals["temperature"])

    # channel models
    if "delta_tau" in vals:
        if vals["delta_tau"] < 0:
            raise ValidationError("delta_tau must be >= 0 for channel models "
                                  "(it is the arm-2 proper time)")
        tau1, tau2 = 0.0, vals["delta_tau"]
    else:
        tau1, tau2 = vals["tau1"], vals["tau2"]
    if "p1" in vals:
        for name in ("tau1", "tau2"):
            if vals[name] <= 0:
                raise ValidationError(f"{name} must be > 0 to map p to a coupling")
        lam1 = coupling_from_probability(vals["p1"], tau1)
        lam2 = coupling_from_probability(vals["p2"], tau2)
    else:
        lam1 = vals["lambda"]
        lam2 = vals.get("lambda2", lam1)
    clock = ClockSpec.balanced(vals["delta_e"])
    result = two_arm_visibility(clock, ChannelKind(model),
                                ArmConfig(tau=tau1, lambda_arm=lam1),
                                ArmConfig(tau=tau2, lambda_arm=lam2))
    return _record(model, result.kappa, delta_e=vals["delta_e"],
                   lambda1=lam1, lambda2=lam2,
                   delta_tau=vals.get("delta_tau", tau2 - tau1),
                   p1=vals.get("p1"), p2=vals.get("p2"),
                   tau1=vals.get("tau1"), tau2=vals.get("tau2"))


def _record(model, kappa, **bound) -> SweepRecord:
    visibility = abs(kappa)
    if visibility > 1.0 + 1e-12:
        raise ValidationError(f"visibility {visibility!r} exceeds 1; model {model!r}")
    return SweepRecord(model=model, kappa_re=kappa.real, kappa_im=kappa.imag,
                       visibility=visibility, **bound)


def worker_count() -> int:
    """Worker pool size: VISIBILITY_THREADS if set, else available cores."""
    raw = os.environ.get("VISIBILITY_THREADS")
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValidationError(
            f"VISIBILITY_THREADS must be a positive integer, got {raw!r}"
        ) from exc
    if n < 1:
        raise ValidationError(
            f"VISIBILITY_THREADS must be a positive integer, got {raw!r}"
        )
    return n


def run_sweep(spec: SweepSpec) -> list:
    """Evaluate the grid in row-major order (outer axis slowest).

    Results are buffered and returned in grid order no matter how many
    workers evaluate them, so repeated runs are byte-identical after
    serialization.
    """
    validate_spec(spec)
    grids = [ax.grid() for ax in spec.axes]
    names = [ax.parameter for ax in spec.axes]
    points = []
    if len(grids) == 1:
        for v in grids[0]:
            p = dict(spec.fixed)
            p[names[0]] = float(v)
            points.append(p)
    else:
        for outer in grids[0]:
            for inner in grids[1]:
                p = dict(spec.fixed)
                p[names[0]] = float(outer)
                p[names[1]] = float(inner)
                points.append(p)
    workers = worker_count()
    if workers <= 1 or len(points) < 64:
        return [evaluate_point(spec.model, p) for p in points]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(points) // (8 * workers))
        return list(pool.map(lambda p: evaluate_point(spec.model, p), points,
                             chunksize=chunk))


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    # repr of a Python float is the shortest string that round-trips,
    # never more than 17 significant digits
    return repr(float(value))


def records_to_csv(records) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        lines.append(",".join(_format_value(getattr(rec, col)) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def records_to_json(records) -> str:
    rows = []
    for rec in records:
        row = {}
        for col in CSV_COLUMNS:
            value = getattr(rec, col)
            row[col] = value if (value is None or isinstance(value, str)) else float(value)
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


def serialize_records(records, fmt: str) -> str:
    if fmt == "csv":
        return records_to_csv(records)
    if fmt == "json":
        return records_to_json(records)
    raise ValidationError(f"format must be csv or json, got {fmt!r}")


def write_records(records, path: str, fmt: str = "csv") -> str:
    text = serialize_records(records, fmt)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


@dataclass(frozen=True)
class PresetFile:
    """One output file of a preset: concatenation of the listed sweeps."""

    tag: str
    specs: tuple


@dataclass(frozen=True)
class FigurePreset:
    """A named dataset recipe; may span several output files (e.g. one per
    temperature) when the target figure has independent panels."""

    name: str
    description: str
    files: tuple


def _spec(model, axes, **fixed) -> SweepSpec:
    return SweepSpec(model=model, axes=tuple(Axis(*a) for a in axes), fixed=fixed)


_COMPARE_MODELS_LAMBDA = (
    ("noiseless", {}),
    ("jc", {"omega": 1.1}),
    ("ad", {}),
    ("pd", {}),
    ("dp", {}),
)

# per-model couplings for the delta_tau / delta_e comparison sweeps; chosen
# at desk scale so all curves show visible structure on one plot
_COMPARE_FIXED_COUPLING = (
    ("noiseless", {}),
    ("jc", {"omega": 1.1, "lambda": 1.0}),
    ("ad", {"lambda": 0.25}),
    ("pd", {"lambda": 0.25}),
    ("dp", {"lambda": 0.05}),
)


def _build_presets() -> dict:
    presets = {}

    def add(name, description, files):
        presets[name] = FigurePreset(name=name, description=description,
                                     files=tuple(files))

    add("jc-fringes",
        "Single-mode field at T=0: visibility over the clock-gap/coupling plane "
        "(omega=1.1, delta_tau=1).",
        [PresetFile(None, (_spec("jc", [("delta_e", 0.0, 2.0, 61), ("lambda", 0.0, 1.5, 61)],
                                 omega=1.1, delta_tau=1.0),))])
    add("jc-omega",
        "Single-mode field at T=0: visibility vs coupling for several field "
        "frequencies (delta_e=1, delta_tau=1).",
        [PresetFile(None, tuple(
            _spec("jc", [("lambda", 0.0, 1.5, 301)], delta_e=1.0, omega=w, delta_tau=1.0)
            for w in (0.5, 1.1, 1.5, 2.0)))])
    add("jc-thermal",
        "Thermal single-mode field: clock-gap/coupling heatmap grids at "
        "temperatures 1 and 10 (omega=1.1, delta_tau=1); one file per temperature.",
        [PresetFile("t1", (_spec("jc_thermal", [("delta_e", 0.0, 2.0, 41), ("lambda", 0.0, 1.5, 41)],
                                 omega=1.1, delta_tau=1.0, temperature=1.0),)),
         PresetFile("t10", (_spec("jc_thermal", [("delta_e", 0.0, 2.0, 41), ("lambda", 0.0, 1.5, 41)],
                                  omega=1.1, delta_tau=1.0, temperature=10.0),))])
    add("ad-fringes",
        "Amplitude damping: visibility over the clock-gap/coupling plane "
        "(equal couplings, delta_tau=1).",
        [PresetFile(None, (_spec("ad", [("delta_e", 0.0, 3.0, 61), ("lambda", 0.0, 1.5, 61)],
                                 delta_tau=1.0),))])
    add("ad-asymmetry",
        "Amplitude damping with unequal arm times (tau1=1, tau2=2, delta_e=1): "
        "visibility over the p1/p2 probability grid; asymmetric under p1<->p2.",
        [PresetFile(None, (_spec("ad", [("p1", 0.0, 1.0, 51), ("p2", 0.0, 1.0, 51)],
                                 tau1=1.0, tau2=2.0, delta_e=1.0),))])
    add("pd-fringes",
        "Phase damping: visibility over the clock-gap/coupling plane "
        "(equal couplings, delta_tau=1).",
        [PresetFile(None, (_spec("pd", [("delta_e", 0.0, 3.0, 61), ("lambda", 0.0, 1.5, 61)],
                                 delta_tau=1.0),))])
    add("pd-symmetry",
        "Phase damping with equal arm times (tau1=tau2=1, delta_e=1): "
        "visibility over the p1/p2 grid; symmetric under p1<->p2.",
        [PresetFile(None, (_spec("pd", [("p1", 0.0, 1.0, 51), ("p2", 0.0, 1.0, 51)],
                                 tau1=1.0, tau2=1.0, delta_e=1.0),))])
    add("dp-fringes",
        "Depolarizing: visibility over the clock-gap/coupling plane "
        "(equal couplings, delta_tau=1; the effective flip rate is 12x the "
        "coupling, hence the smaller lambda range).",
        [PresetFile(None, (_spec("dp", [("delta_e", 0.0, 3.0, 61), ("lambda", 0.0, 0.5, 61)],
                                 delta_tau=1.0),))])
    add("dp-grid",
        "Depolarizing with unequal arm times (tau1=1, tau2=2, delta_e=1): "
        "visibility over the p1/p2 probability grid.",
        [PresetFile(None, (_spec("dp", [("p1", 0.0, 1.0, 51), ("p2", 0.0, 1.0, 51)],
                                 tau1=1.0, tau2=2.0, delta_e=1.0),))])
    add("compare-lambda",
        "All models on one axis: visibility vs coupling at delta_e=1, "
        "delta_tau=1 (jc uses omega=1.1); the noiseless row is the flat "
        "reference at |cos(1/2)| ~ 0.8776.",
        [PresetFile(None, tuple(
            _spec(model, [("lambda", 0.0, 1.5, 301)], delta_e=1.0, delta_tau=1.0, **extra)
            for model, extra in _COMPARE_MODELS_LAMBDA))])
    add("compare-dtau-de",
        "All models vs proper-time difference (file -dtau, delta_e=1) and vs "
        "clock gap (file -de, delta_tau=1), at fixed per-model couplings; "
        "one file per abscissa.",
        [PresetFile("dtau", tuple(
            _spec(model, [("delta_tau", 0.0, 4.0 * math.pi, 301)], delta_e=1.0, **extra)
            for model, extra in _COMPARE_FIXED_COUPLING)),
         PresetFile("de", tuple(
            _spec(model, [("delta_e", 0.0, 2.0 * math.pi, 301)], delta_tau=1.0, **extra)
            for model, extra in _COMPARE_FIXED_COUPLING))])
    return presets


_PRESETS = _build_presets()
PRESET_NAMES = tuple(sorted(_PRESETS))


def figure_preset(name: str) -> FigurePreset:
    """Look up a named dataset recipe.

    Unknown names raise ValidationError listing every valid id.
    """
    try:
        return _PRESETS[name]
    except KeyError:
        raise ValidationError(
            f"unknown preset {name!r}; valid presets: {', '.join(PRESET_NAMES)}"
        ) from None


def preset_output_paths(preset: FigurePreset, out: str = None, fmt: str = "csv") -> list:
    """Resolve the output path for each file of a preset.

    Single-file presets write exactly to `out` (default <name>.<fmt>).
    Multi-file presets use `out` (minus any .csv/.json suffix) as a stem
    and append -<tag>.<fmt>.
    """
    ext = "." + fmt
    if len(preset.files) == 1:
        return [out or preset.name + ext]
    stem = out or preset.name
    for suffix in (".csv", ".json"):
        if stem.endswith(suffix):
            stem = stem[: -len(suffix)]
            break
    return [f"{stem}-{pf.tag}{ext}" for pf in preset.files]


def run_figure_preset(name: str, out: str = None, fmt: str = "csv") -> list:
    """Run every sweep of the preset and write its file(s); returns paths."""
    preset = figure_preset(name)
    paths = preset_output_paths(preset, out, fmt)
    for pf, path in zip(preset.files, paths):
        records = []
        for spec in pf.specs:
            records.extend(run_sweep(spec))
        write_records(records, path, fmt)
    return paths
