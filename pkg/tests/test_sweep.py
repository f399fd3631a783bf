import json
import math

import pytest

from clock_visibility.errors import ValidationError
from clock_visibility.sweep import (
    CSV_COLUMNS,
    Axis,
    SweepSpec,
    evaluate_point,
    figure_preset,
    PRESET_NAMES,
    records_to_csv,
    records_to_json,
    run_sweep,
    serialize_records,
)


def simple_spec(**overrides):
    base = dict(
        model="noiseless",
        axes=(Axis("delta_tau", 0.0, 2.0, 5),),
        fixed={"delta_e": 1.0},
    )
    base.update(overrides)
    return SweepSpec(**base)


def test_axis_validation():
    with pytest.raises(ValidationError):
        Axis("delta_tau", 0.0, 1.0, 1)  # too few points
    with pytest.raises(ValidationError):
        Axis("delta_tau", 0.0, math.inf, 5)


def test_spec_rejects_unknown_model():
    with pytest.raises(ValidationError):
        simple_spec(model="kraus")


def test_spec_rejects_unknown_parameter():
    with pytest.raises(ValidationError) as err:
        simple_spec(fixed={"delta_e": 1.0, "hbar": 1.0})
    assert "hbar" in str(err.value)


def test_spec_rejects_axis_fixed_overlap():
    with pytest.raises(ValidationError):
        simple_spec(fixed={"delta_e": 1.0, "delta_tau": 0.5})


def test_spec_rejects_missing_required():
    with pytest.raises(ValidationError) as err:
        SweepSpec(model="jc", axes=(Axis("lambda", 0.0, 1.0, 3),), fixed={"delta_e": 1.0, "delta_tau": 1.0})
    assert "omega" in str(err.value)


def test_spec_rejects_conflicting_time_binding():
    with pytest.raises(ValidationError):
        SweepSpec(
            model="ad",
            axes=(Axis("lambda", 0.0, 1.0, 3),),
            fixed={"delta_e": 1.0, "delta_tau": 1.0, "tau1": 1.0, "tau2": 2.0},
        )


def test_spec_rejects_probability_without_times():
    with pytest.raises(ValidationError) as err:
        SweepSpec(
            model="ad",
            axes=(Axis("p1", 0.0, 1.0, 3),),
            fixed={"delta_e": 1.0, "p2": 0.1, "delta_tau": 1.0},
        )
    assert "tau1" in str(err.value) or "tau2" in str(err.value)


def test_spec_rejects_mixed_coupling_binding():
    with pytest.raises(ValidationError):
        SweepSpec(
            model="pd",
            axes=(Axis("lambda", 0.0, 1.0, 3),),
            fixed={"delta_e": 1.0, "delta_tau": 1.0, "p1": 0.1, "p2": 0.2},
        )


def test_run_sweep_record_count_and_order():
    spec = SweepSpec(
        model="noiseless",
        axes=(Axis("delta_e", 0.0, 1.0, 3), Axis("delta_tau", 0.0, 2.0, 4)),
        fixed={},
    )
    records = run_sweep(spec)
    assert len(records) == 12
    # row-major: first axis outermost, second fastest
    assert [r.delta_e for r in records[:4]] == [0.0] * 4
    assert [r.delta_tau for r in records[:4]] == [0.0, 2.0 / 3, 4.0 / 3, 2.0]
    assert records[4].delta_e == pytest.approx(0.5)


def test_sweep_noiseless_traces_cosine():
    spec = SweepSpec(
        model="noiseless",
        axes=(Axis("delta_tau", 0.0, 6.0, 31),),
        fixed={"delta_e": 1.3},
    )
    for rec in run_sweep(spec):
        assert rec.visibility == pytest.approx(abs(math.cos(1.3 * rec.delta_tau / 2)), abs=1e-12)


def test_sweep_jc_endpoint():
    spec = SweepSpec(
        model="jc",
        axes=(Axis("lambda", 0.0, 1.0, 2),),
        fixed={"delta_e": 1.0, "omega": 1.1, "delta_tau": 1.0},
    )
    records = run_sweep(spec)
    assert records[0].visibility == pytest.approx(0.8525245220595057, abs=1e-12)
    assert records[1].visibility == pytest.approx(0.7998960920985458, abs=1e-12)


def test_evaluate_point_probability_binding():
    rec = evaluate_point(
        "ad", {"delta_e": 1.0, "p1": 0.8, "p2": 0.2, "tau1": 1.0, "tau2": 2.0}
    )
    assert rec.lambda1 == pytest.approx(math.asin(math.sqrt(0.8)) / 1.0)
    assert rec.lambda2 == pytest.approx(math.asin(math.sqrt(0.2)) / 2.0)
    assert rec.p1 == 0.8 and rec.p2 == 0.2
    assert 0.0 <= rec.visibility <= 1.0


def test_evaluate_point_single_coupling_mirrored():
    rec = evaluate_point("pd", {"delta_e": 1.0, "lambda": 0.25, "delta_tau": 1.0})
    assert rec.lambda1 == rec.lambda2 == 0.25
    assert rec.delta_tau == 1.0


def test_csv_header_and_shape():
    spec = simple_spec()
    text = records_to_csv(run_sweep(spec))
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[0] == (
        "model,delta_e,omega,lambda1,lambda2,delta_tau,temperature,"
        "p1,p2,tau1,tau2,kappa_re,kappa_im,visibility"
    )
    assert len(lines) == 1 + 5 + 1  # header + rows + trailing newline
    assert lines[-1] == ""
    assert "\r" not in text


def test_csv_unused_fields_empty():
    text = records_to_csv(run_sweep(simple_spec()))
    row = text.split("\n")[1].split(",")
    by_col = dict(zip(CSV_COLUMNS, row))
    assert by_col["model"] == "noiseless"
    assert by_col["omega"] == ""
    assert by_col["temperature"] == ""
    assert by_col["p1"] == ""


def test_csv_float_formatting_roundtrips():
    records = run_sweep(simple_spec())
    text = records_to_csv(records)
    row = text.split("\n")[2].split(",")
    by_col = dict(zip(CSV_COLUMNS, row))
    # repr formatting: the shortest string that round-trips exactly
    assert float(by_col["visibility"]) == records[1].visibility
    assert by_col["delta_tau"] == "0.5"


def test_json_roundtrip():
    records = run_sweep(simple_spec())
    data = json.loads(records_to_json(records))
    assert len(data) == 5
    assert data[0]["model"] == "noiseless"
    assert data[0]["visibility"] == records[0].visibility
    assert data[0]["omega"] is None


def test_serialize_records_dispatch():
    records = run_sweep(simple_spec())
    assert serialize_records(records, "csv").startswith("model,")
    assert serialize_records(records, "json").startswith("[")
    with pytest.raises(ValidationError):
        serialize_records(records, "yaml")


def test_sweep_determinism_across_thread_counts(monkeypatch):
    spec = SweepSpec(
        model="jc",
        axes=(Axis("lambda", 0.0, 1.5, 80),),
        fixed={"delta_e": 1.0, "omega": 1.1, "delta_tau": 1.0},
    )
    monkeypatch.setenv("VISIBILITY_THREADS", "1")
    serial = records_to_csv(run_sweep(spec))
    monkeypatch.setenv("VISIBILITY_THREADS", "5")
    threaded = records_to_csv(run_sweep(spec))
    assert serial == threaded


def test_worker_count_env_validation(monkeypatch):
    from clock_visibility.sweep import worker_count

    monkeypatch.setenv("VISIBILITY_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("VISIBILITY_THREADS", "zero")
    with pytest.raises(ValidationError):
        worker_count()


def test_figure_preset_lookup():
    preset = figure_preset("compare-lambda")
    assert preset.name == "compare-lambda"
    assert len(preset.files) == 1
    assert all(spec.model in ("noiseless", "jc", "ad", "pd", "dp")
               for spec in preset.files[0].specs)


def test_figure_preset_unknown_names_valid_ids():
    with pytest.raises(ValidationError) as err:
        figure_preset("nope")
    message = str(err.value)
    for name in PRESET_NAMES:
        assert name in message


def test_all_presets_validate():
    for name in PRESET_NAMES:
        preset = figure_preset(name)
        assert preset.files, name
        for pfile in preset.files:
            for spec in pfile.specs:
                assert spec.axes  # construction already ran validate_spec
