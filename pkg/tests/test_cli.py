import json
import math
import os

import numpy as np
import pytest

from parroll import cli
from parroll.spectra import SpectrumSamples


def tiny_config(outdir, **run_overrides):
    cfg = cli.default_config()
    cfg["run"].update({"realizations": 2, "duration": 60.0, "dt": 1e-3,
                       "discard": 10.0, "dt_superposition": 0.02,
                       "moment_duration": 300.0})
    cfg["run"].update(run_overrides)
    cfg["outputs"] = str(outdir)
    return cfg


def write_config(tmp_path, cfg, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def test_config_round_trip():
    raw = cli.default_config()
    cfg = cli.RunConfig.from_dict(raw)
    again = cli.RunConfig.from_dict(cfg.to_dict())
    assert cfg.to_dict() == again.to_dict()


def test_config_field_errors():
    bad = cli.default_config()
    bad["sea"]["h13"] = 0.0
    with pytest.raises(cli.ConfigError, match="sea"):
        cli.RunConfig.from_dict(bad)

    bad = cli.default_config()
    del bad["ship"]
    with pytest.raises(cli.ConfigError, match="ship"):
        cli.RunConfig.from_dict(bad)

    bad = cli.default_config()
    bad["run"]["closure_order"] = 5
    with pytest.raises(cli.ConfigError, match="closure_order"):
        cli.RunConfig.from_dict(bad)

    bad = cli.default_config()
    bad["run"]["discard"] = 1e9
    with pytest.raises(cli.ConfigError, match="discard"):
        cli.RunConfig.from_dict(bad)


def test_config_rejects_unstable_filter():
    bad = cli.default_config()
    bad["filter"] = {"alpha": [0, 0, 0, 0, 0, 1.0], "k": 0.1}
    with pytest.raises(cli.ConfigError, match="stable"):
        cli.RunConfig.from_dict(bad)


def test_spectrum_command(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["spectrum", "--config", cfgp]) == 0
    for name in ("spectrum_wave.csv", "spectrum_effective.csv", "spectrum_filter.csv"):
        s = SpectrumSamples.from_csv(out / name)
        assert s.omega.shape == (512,)
    wave = SpectrumSamples.from_csv(out / "spectrum_wave.csv")
    eff = SpectrumSamples.from_csv(out / "spectrum_effective.csv")
    from parroll.spectra import grim_transfer
    bound = float(np.max(grim_transfer(wave.omega, math.pi, 262.0) ** 2))
    assert np.all(eff.density <= bound * wave.density + 1e-15)


def test_spectrum_without_filter(tmp_path):
    out = tmp_path / "out"
    cfg = tiny_config(out)
    cfg["filter"] = None
    cfgp = write_config(tmp_path, cfg)
    assert cli.main(["spectrum", "--config", cfgp]) == 0
    assert not (out / "spectrum_filter.csv").exists()


def test_manifest_lists_every_artifact(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["spectrum", "--config", cfgp]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    on_disk = sorted(p for p in os.listdir(out) if p != "manifest.json")
    assert manifest["files"] == on_disk
    assert manifest["command"] == "spectrum"
    assert manifest["version"]
    assert len(manifest["config_sha256"]) == 64


def test_simulate_emits_and_is_thread_deterministic(tmp_path):
    import hashlib

    digests = []
    for i, threads in enumerate((1, 2)):
        out = tmp_path / f"out{i}"
        cfg = cli.RunConfig.from_dict(tiny_config(out))
        files = cli.cmd_simulate(cfg, threads=threads)
        csvs = {os.path.basename(f): hashlib.sha256(open(f, "rb").read()).hexdigest()
                for f in files if f.endswith(".csv")}
        digests.append(csvs)
        stats = json.loads((out / "stats_sde.json").read_text())
        assert stats["realizations"] == 2
        assert "m_20000000" in stats["moments"]
    assert digests[0] == digests[1]
    expected = {"wave_superposition.csv", "gm_superposition.csv", "roll_sde.csv",
                "gm_sde.csv", "periodogram_sde.csv", "periodogram_superposition.csv",
                "hist_x1.csv", "hist_gm.csv"}
    assert expected <= set(digests[0])


def test_moments_command_with_flags(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["moments", "--config", cfgp, "--duration", "200",
                     "--closure", "2", "--window", "0.5"]) == 0
    header = open(out / "moments_trajectory.csv").readline().strip().split(",")
    assert header[0] == "t"
    assert len(header) == 45
    steady = json.loads((out / "moments_steady.json").read_text())
    assert steady["closure_order"] == 2
    assert "m_00100000" in steady["steady"]
    assert steady["steady"]["m_00200000"] > 0.5  # wave variance is building up


def test_fit_pdf_from_file(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    tpath = tmp_path / "targets.json"
    tpath.write_text(json.dumps({"m1": 0.0, "m2": 0.04, "m3": 0.0, "m4": 0.0048}))
    assert cli.main(["fit-pdf", "--config", cfgp, "--targets-from", "file",
                     "--targets-file", str(tpath)]) == 0
    for kind in ("type1", "type2"):
        data = json.loads((out / f"pdf_{kind}.json").read_text())
        assert set(data) >= {"kind", "d", "C", "residual"}
        assert len(data["d"]) == 4
        curve = open(out / f"pdf_{kind}.csv").readlines()
        assert curve[0].strip() == "x,p"
        assert len(curve) == 722


def test_fit_filter_command(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["fit-filter", "--config", cfgp]) == 0
    fit = json.loads((out / "filter_fit.json").read_text())
    assert all(re < 0 for re, _ in fit["poles"])
    assert fit["residual"] < 0.15
    overlay = open(out / "filter_fit_overlay.csv").readline().strip()
    assert overlay == "omega,target,fitted"


def test_export_closures(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["export-closures", "--config", cfgp]) == 0
    text = (out / "closures.txt").read_text()
    assert "m_3 = " in text
    assert "m_1,1,12 = " in text
    line3 = [l for l in text.splitlines() if l.startswith("m_3 ")][0]
    assert "3 m_1 m_2" in line3 and "2 m_1^3" in line3


def test_exit_code_config_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert cli.main(["spectrum", "--config", str(path)]) == 2
    cfg = tiny_config(tmp_path / "o")
    cfg["sea"]["h13"] = -2.0
    assert cli.main(["spectrum", "--config", write_config(tmp_path, cfg)]) == 2


def test_exit_code_numerical_failure(tmp_path):
    cfg = tiny_config(tmp_path / "o")
    # negative restoring with no cubic damping diverges within seconds
    cfg["ship"]["gamma"] = [-5.0, 0.0, 0.0, 0.0, 0.0]
    cfg["ship"]["beta3"] = 0.0
    cfg["run"]["duration"] = 400.0
    cfg["run"]["realizations"] = 1
    cfgp = write_config(tmp_path, cfg)
    assert cli.main(["simulate", "--config", cfgp]) == 3


def test_validate_subset_passes(tmp_path):
    out = tmp_path / "out"
    cfgp = write_config(tmp_path, tiny_config(out))
    assert cli.main(["validate", "--config", cfgp, "--only", "4", "5", "6"]) == 0
    report = json.loads((out / "validation.json").read_text())
    assert report["passed"] is True
    assert [c["criterion"] for c in report["criteria"]] == [4, 5, 6]


def test_validate_flags_tampered_closure_table(monkeypatch):
    from parroll import validate

    broken = dict(validate.EXPANSIONS)
    target = (1, 12)
    terms = list(broken[target])
    coeff, mono = terms[0]
    terms[0] = (coeff + 1, mono)
    broken[target] = tuple(terms)
    monkeypatch.setattr(validate, "EXPANSIONS", broken)
    result = validate.criterion_5_reference_expansions(validate.SharedArtifacts())
    assert not result.passed
    assert list(map(tuple, result.detail["mismatches"])) == [target]


def test_seed_and_out_overrides(tmp_path):
    cfg = tiny_config(tmp_path / "ignored")
    cfgp = write_config(tmp_path, cfg)
    out2 = tmp_path / "elsewhere"
    assert cli.main(["spectrum", "--config", cfgp, "--seed", "777",
                     "--out", str(out2)]) == 0
    assert (out2 / "spectrum_wave.csv").exists()
