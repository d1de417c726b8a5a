import csv
import json

import pytest

from casimirpy.cli import RunConfig, parse_config, parse_material, load_document, main, write_rows
from casimirpy.cli import runner
from casimirpy.config import EXIT_SUCCESS, EXIT_VALIDATION_ERROR, EXIT_UNCONVERGED
from casimirpy.exceptions import ConfigValidationError, UnknownConfigKeysError, UnsupportedSchemaError, \
    UnknownMaterialError
from casimirpy.lifshitz import CavityConfig
from casimirpy.materials import VACUUM, PERFECT_MIRROR, Plasma, Drude, PlasmaShifted, Constant
from casimirpy.scenarios import SweepKind, SweepRow, casimir_ideal
from casimirpy.units import GOLD, ScaledUnits


def _write(tmp_path, document, name="run.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return str(path)


def _read(path):
    with open(str(path)) as f:
        return list(csv.reader(f))


def test_minimal_stress_config():
    config = parse_config({"schema": 1, "k_P_ds": 0.1, "contact": True})
    assert isinstance(config, RunConfig)
    assert config.scenario == "stress"
    assert config.units == GOLD
    label, cavity = config.cases[0]
    assert cavity == CavityConfig(PERFECT_MIRROR, 0.0, Plasma(1.0), 0.1, 0.0, PERFECT_MIRROR)


def test_json_text_is_accepted():
    config = parse_config('{"schema": 1, "scenario": "force", "k_P_ds": 0.1, "k_P_L": 0.3, "z": 0.5}')
    cavity = config.cases[0][1]
    assert cavity.d1 == pytest.approx(0.15)
    assert cavity.d2 == pytest.approx(0.05)


def test_lengths_in_meters():
    config = parse_config({"schema": 1, "d_s": 10e-9, "d1": 5e-9, "d2": 20e-9, "mirrors": "perfect"})
    cavity = config.cases[0][1]
    assert cavity.d_s == pytest.approx(10e-9 * GOLD.k_P)
    assert cavity.d2 == pytest.approx(20e-9 * GOLD.k_P)


def test_reference_scale():
    config = parse_config({"schema": 1, "reference": {"plasma_energy_eV": 4.5}, "k_P_ds": 1.0, "contact": True})
    assert config.units.k_P == pytest.approx(GOLD.k_P / 2)
    assert config.cases[0][1].slab.omega_P == pytest.approx(2.0)


def test_slab_energy_sets_the_scale():
    config = parse_config({"schema": 1, "slab": {"model": "plasma", "plasma_energy_eV": 4.5},
                           "mirrors": {"model": "drude", "contrast": 10}, "k_P_ds": 1.0, "contact": True})
    cavity = config.cases[0][1]
    assert cavity.slab.omega_P == pytest.approx(1.0)
    assert cavity.mirror1 == Drude(10.0, 1e-3 * 10.0)
    assert config.units == ScaledUnits.from_plasma_energy(4.5)


def test_parse_material():
    assert parse_material("perfect", "mirror1", GOLD) is PERFECT_MIRROR
    assert parse_material("vacuum", "slab", GOLD) is VACUUM
    assert parse_material({"model": "perfect_mirror"}, "m", GOLD) is PERFECT_MIRROR
    assert parse_material({"model": "constant", "eps": 2.5}, "m", GOLD) == Constant(2.5)
    assert parse_material({"model": "drude", "contrast": 100, "damping_ratio": 0.01}, "m", GOLD) == Drude(100, 1.0)
    drude = parse_material({"model": "drude", "omega_P": GOLD.omega_P, "Gamma": 1e-2 * GOLD.omega_P}, "m", GOLD)
    assert drude.Omega_P == pytest.approx(1.0)
    assert drude.Gamma == pytest.approx(1e-2)
    shifted = parse_material({"model": "plasma_shifted", "contrast": 0.5, "base": {"model": "constant", "eps": 80}},
                             "m", GOLD)
    assert shifted == PlasmaShifted(Constant(80.0), 0.5)


@pytest.mark.parametrize("node, error", [
    ("copper", UnknownMaterialError),
    ({"model": "lorentz"}, UnknownMaterialError),
    ({"model": "plasma"}, ConfigValidationError),
    ({"model": "plasma", "contrast": 1, "omega_P": 1e16}, ConfigValidationError),
    ({"model": "drude", "contrast": 1, "Gamma": 1.0, "damping_ratio": 0.1}, ConfigValidationError),
    ({"model": "constant"}, ConfigValidationError),
    ({"model": "vacuum", "eps": 1}, UnknownConfigKeysError),
    ({"model": "plasma", "contrast": "high"}, ConfigValidationError),
    ({"model": "plasma", "contrast": 1, "colour": "gold"}, UnknownConfigKeysError),
])
def test_invalid_materials(node, error):
    with pytest.raises(error):
        parse_material(node, "mirror1", GOLD)


@pytest.mark.parametrize("document, error", [
    ({"k_P_ds": 0.1, "contact": True}, UnsupportedSchemaError),
    ({"schema": 2, "k_P_ds": 0.1, "contact": True}, UnsupportedSchemaError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "speed": 3}, UnknownConfigKeysError),
    ({"schema": 1, "scenario": "plot", "k_P_ds": 0.1, "contact": True}, ConfigValidationError),
    ({"schema": 1, "scenario": "force", "k_P_ds": 0.1, "contact": True}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1}, ConfigValidationError),
    ({"schema": 1, "contact": True}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "k_P_L": 0.3, "z": 1.5}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "z": 0.5}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "k_P_d1": 0.1}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "k_P_d1": 0.1, "k_P_d2": 0.1, "k_P_L": 1.0}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "d_s": 1e-9, "contact": True}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": -0.1, "contact": True}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "slab": "perfect"}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "mirrors": "vacuum", "mirror1": "perfect"},
     ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "threads": 0}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "quadrature": {"rel_tol": 0.5}}, ConfigValidationError),
    ({"schema": 1, "k_P_ds": 0.1, "contact": True, "quadrature": {"order": 3}}, UnknownConfigKeysError),
    ({"schema": 1, "k_P_ds": True, "contact": True}, ConfigValidationError),
])
def test_invalid_configs(document, error):
    with pytest.raises(error):
        parse_config(document)


def test_unknown_keys_are_listed():
    with pytest.raises(UnknownConfigKeysError) as info:
        parse_config({"schema": 1, "k_P_ds": 0.1, "contact": True, "speed": 3, "colour": "red"})
    assert info.value.keys == ["colour", "speed"]


def test_invalid_json():
    with pytest.raises(ConfigValidationError):
        parse_config("{schema: 1")


def test_thickness_sweep_config():
    config = parse_config({"schema": 1, "scenario": "sweep", "mirrors": "perfect",
                           "sweep": {"kind": "thickness", "grid": {"start": 0.01, "stop": 1.0, "num": 3},
                                     "series": [{"label": "perfect"}, {"label": "free", "mirrors": "vacuum"}]}})
    assert config.sweep_kind is SweepKind.THICKNESS
    assert config.grid == pytest.approx((0.01, 0.1, 1.0))
    specs = dict(config.sweep_specs())
    assert list(specs) == ["perfect", "free"]
    assert specs["free"].template.mirror1 is VACUUM
    assert specs["perfect"].template.mirror2 is PERFECT_MIRROR
    assert specs["perfect"].template.is_contact


def test_position_sweep_config():
    config = parse_config({"schema": 1, "scenario": "sweep", "k_P_ds": 0.1, "k_P_L": 0.3,
                           "mirrors": {"model": "drude", "contrast": 1000},
                           "sweep": {"kind": "position", "grid": {"start": -0.5, "stop": 0.5, "num": 5}}})
    assert config.grid == (-0.5, -0.25, 0.0, 0.25, 0.5)
    (label, spec), = config.sweep_specs()
    assert label == "position"
    assert spec.config_at(0.5).d1 == pytest.approx(0.15)


def test_preset_config():
    config = parse_config({"schema": 1, "scenario": "sweep",
                           "sweep": {"preset": "mirror_limits", "grid": {"start": 0.1, "stop": 10, "num": 3}}})
    specs = config.sweep_specs()
    assert [label for label, _ in specs] == ["perfect", "freestanding"]
    assert specs[0][1].grid == pytest.approx((0.1, 1.0, 10.0))
    positions = parse_config({"schema": 1, "scenario": "sweep", "sweep": {"preset": "position_curves"}})
    assert len(positions.sweep_specs()) == 3


@pytest.mark.parametrize("preset, kind", [
    ("contrast_curves", SweepKind.THICKNESS),
    ("mirror_limits", SweepKind.THICKNESS),
    ("position_curves", SweepKind.POSITION),
    ("force_and_stress", SweepKind.POSITION),
])
def test_preset_grid_follows_the_preset_kind(preset, kind):
    config = parse_config({"schema": 1, "scenario": "sweep",
                           "sweep": {"preset": preset, "grid": {"start": 0.1, "stop": 0.9, "num": 3}}})
    assert config.sweep_kind is kind
    expected = (0.1, 0.3, 0.9) if kind == SweepKind.THICKNESS else (0.1, 0.5, 0.9)
    for label, spec in config.sweep_specs():
        assert spec.kind is kind
        assert spec.grid == pytest.approx(expected)


@pytest.mark.parametrize("sweep, extra", [
    ({"preset": "fig_unknown"}, {}),
    ({"preset": "contrast_curves"}, {"k_P_ds": 0.1}),
    ({"kind": "spiral"}, {}),
    ({}, {}),
    ({"kind": "thickness", "grid": []}, {}),
    ({"kind": "thickness", "grid": [1.0, 0.5]}, {}),
    ({"kind": "thickness", "grid": {"start": 0.0, "stop": 1.0, "num": 3}}, {}),
    ({"kind": "thickness", "grid": [0.1, 1.0]}, {"z": 0.1}),
    ({"kind": "position", "grid": [0.0, 0.5]}, {"k_P_ds": 0.1}),
    ({"kind": "thickness", "grid": [0.1], "series": [{"label": "a"}, {"label": "a"}]}, {}),
])
def test_invalid_sweeps(sweep, extra):
    document = dict({"schema": 1, "scenario": "sweep", "sweep": sweep}, **extra)
    with pytest.raises(ConfigValidationError):
        parse_config(document)


def test_load_document(tmp_path):
    assert load_document(_write(tmp_path, {"schema": 1}))["schema"] == 1
    with pytest.raises(ConfigValidationError):
        load_document(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ConfigValidationError):
        load_document(str(bad))


def test_write_rows_keeps_failed_rows(tmp_path):
    path = tmp_path / "rows.csv"
    write_rows(str(path), "z", [SweepRow(0.5, None, None, None, "boom")])
    header, row = _read(path)
    assert header[0] == "z" and header[-1] == "converged"
    assert len(row) == len(header)
    assert row[0] == "5.0000000000000000e-01"
    assert row[1:-2] == [""] * 7
    assert row[-2:] == ["0", "false"]


def test_stress_run(tmp_path):
    out = tmp_path / "stress.csv"
    assert main(["--config", _write(tmp_path, {"schema": 1, "k_P_ds": 1.0, "contact": True}),
                 "--out", str(out)]) == EXIT_SUCCESS
    header, row = _read(out)
    assert header == ["k_P_d_s", "F_s_dimensionless", "F_s_over_FC", "F_dimensionless", "F_s_SI", "F_SI",
                      "err_Fs", "err_F", "evals", "converged"]
    assert float(row[0]) == 1.0
    assert 0.0 < float(row[2]) < 1.0
    assert row[3] == "" and row[5] == "" and row[7] == ""
    assert float(row[4]) == pytest.approx(float(row[1]) * GOLD.pressure_scale)
    assert int(row[8]) > 0
    assert row[9] == "true"


def test_force_run(tmp_path):
    out = tmp_path / "force.csv"
    document = {"schema": 1, "k_P_ds": 0.1, "k_P_L": 0.3, "z": 0.5, "mirrors": {"model": "drude", "contrast": 1000}}
    assert main(["force", "--config", _write(tmp_path, document), "--out", str(out)]) == EXIT_SUCCESS
    header, row = _read(out)
    assert header[0] == "z"
    assert float(row[0]) == pytest.approx(0.5)
    assert float(row[3]) != 0.0
    assert row[9] == "true"


def test_unconverged_run(tmp_path):
    out = tmp_path / "stress.csv"
    document = {"schema": 1, "slab": "vacuum", "k_P_ds": 1.0, "contact": True,
                "quadrature": {"rel_tol": 1e-10, "abs_tol": 0, "max_evals": 1000}}
    assert main(["--config", _write(tmp_path, document), "--out", str(out)]) == EXIT_UNCONVERGED
    assert _read(out)[1][-1] == "false"


def test_rel_tol_override_is_validated(tmp_path):
    path = _write(tmp_path, {"schema": 1, "k_P_ds": 1.0, "contact": True})
    assert main(["--config", path, "--rel-tol", "0.5"]) == EXIT_VALIDATION_ERROR


@pytest.mark.parametrize("content", ["{", "[1, 2]", json.dumps({"schema": 1, "k_P_ds": 1.0})])
def test_invalid_config_file(tmp_path, content):
    path = tmp_path / "run.json"
    path.write_text(content)
    assert main(["--config", str(path)]) == EXIT_VALIDATION_ERROR


def test_missing_config_file(tmp_path):
    assert main(["--config", str(tmp_path / "missing.json")]) == EXIT_VALIDATION_ERROR
    assert main([]) == EXIT_VALIDATION_ERROR


@pytest.mark.parametrize("value", ["0", "many"])
def test_invalid_thread_environment(tmp_path, monkeypatch, value):
    monkeypatch.setenv("CASIMIR_THREADS", value)
    path = _write(tmp_path, {"schema": 1, "k_P_ds": 1.0, "contact": True})
    assert main(["--config", path, "--out", str(tmp_path / "out.csv")]) == EXIT_VALIDATION_ERROR


def test_threads_option_wins_over_environment(tmp_path, monkeypatch):
    seen = []
    monkeypatch.setenv("CASIMIR_THREADS", "4")
    monkeypatch.setattr(runner, "run", lambda config: seen.append(config.threads) or EXIT_SUCCESS)
    path = _write(tmp_path, {"schema": 1, "k_P_ds": 1.0, "contact": True, "threads": 2})
    assert main(["--config", path, "--threads", "3"]) == EXIT_SUCCESS
    assert main(["--config", path]) == EXIT_SUCCESS
    monkeypatch.delenv("CASIMIR_THREADS")
    assert main(["--config", path]) == EXIT_SUCCESS
    assert seen == [3, 4, 2]
    assert main(["--config", path, "--threads", "0"]) == EXIT_VALIDATION_ERROR


def test_sweep_run_writes_one_file_per_series(tmp_path, monkeypatch):
    monkeypatch.setenv("CASIMIR_THREADS", "2")
    document = {"schema": 1, "scenario": "sweep", "mirrors": "perfect",
                "sweep": {"kind": "thickness", "grid": [0.5, 1.0],
                          "series": [{"label": "perfect"}, {"label": "free", "mirrors": "vacuum"}]}}
    assert main(["--config", _write(tmp_path, document), "--out", str(tmp_path / "sweep.csv")]) == EXIT_SUCCESS
    perfect = _read(tmp_path / "sweep_perfect.csv")
    free = _read(tmp_path / "sweep_free.csv")
    assert [row[0] for row in perfect[1:]] == ["5.0000000000000000e-01", "1.0000000000000000e+00"]
    assert all(float(f[1]) < float(p[1]) for f, p in zip(free[1:], perfect[1:]))


def test_sweep_output_is_byte_identical(tmp_path):
    document = {"schema": 1, "scenario": "sweep", "k_P_ds": 0.1, "k_P_L": 0.3,
                "mirrors": {"model": "drude", "contrast": 1000},
                "sweep": {"kind": "position", "grid": [-0.5, -0.25, 0.25, 0.5]}}
    path = _write(tmp_path, document)
    outputs = []
    for run, threads in enumerate(("1", "3", "1", "3")):
        out = tmp_path / "run{0}.csv".format(run)
        assert main(["--config", path, "--out", str(out), "--threads", threads]) == EXIT_SUCCESS
        outputs.append((tmp_path / "run{0}_position.csv".format(run)).read_bytes())
    assert outputs[0]
    assert outputs.count(outputs[0]) == 4


def test_asymptote_run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    path = _write(tmp_path, {"schema": 1, "scenario": "asymptote", "sweep": {"grid": [1.0, 10.0]}})
    assert main(["--config", path]) == EXIT_SUCCESS
    header, first, second = _read(tmp_path / "asymptote.csv")
    assert header == ["k_P_d_s", "F_C_SI", "F_s_nr_SI", "F_s_thick_SI", "F_s_perfect_SI"]
    assert float(first[1]) == pytest.approx(casimir_ideal(GOLD.to_physical_length(1.0)))
    assert float(second[4]) < float(second[1])


def test_verify_mode(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(runner, "VERIFY_SPECTRAL_POINTS", 100)
    monkeypatch.setattr(runner, "verify_quadrature", lambda *args, **kwargs: {"stress": 1e-5, "net_force": 2e-5})
    assert main(["--verify"]) == EXIT_SUCCESS
    output = capsys.readouterr().out
    assert "recurrence_r" in output and "net_force" in output
    assert "FAILED" not in output

    monkeypatch.setattr(runner, "verify_quadrature", lambda *args, **kwargs: {"stress": 0.1, "net_force": 0.0})
    assert main(["verify"]) == EXIT_UNCONVERGED
    assert "FAILED" in capsys.readouterr().out


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "casimir 0.1.0" in capsys.readouterr().out
