import pytest

from rauxlab.cli import RunConfig, dispatch, fmt, fmt_c


def test_eval_at_zero(capsys):
    assert dispatch(["eval", "--s", "0,0"]) == 0
    out = capsys.readouterr().out
    line = next(x for x in out.splitlines() if x.startswith("R="))
    re, im = (float(v) for v in line[2:].split(","))
    assert abs(re + 0.5) < 1e-10 and abs(im) < 1e-10
    assert "abs_err=" in out


def test_eval_with_derivative(capsys):
    assert dispatch(["eval", "--s", "0.5,10", "--method", "direct", "--derivative"]) == 0
    assert "R'=" in capsys.readouterr().out


def test_theta(capsys):
    assert dispatch(["theta", "--x", "1"]) == 0
    assert "phi=" in capsys.readouterr().out


def test_usage_error_names_flag(capsys):
    assert dispatch(["eval", "--s", "zero"]) == 2
    assert "--s" in capsys.readouterr().err


def test_unknown_subcommand():
    assert dispatch(["plot"]) == 2


def test_precision_range():
    assert dispatch(["--precision", "1e-15", "theta", "--x", "1"]) == 2
    with pytest.raises(ValueError):
        RunConfig(precision_target=1e-3)


def test_counts_without_scan(tmp_path, capsys):
    assert dispatch(["counts", "--T", "100", "--store", str(tmp_path / "z.jsonl")]) == 1
    assert "incomplete" in capsys.readouterr().err.lower()


def test_store_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("RAUXLAB_STORE", str(tmp_path / "z.jsonl"))
    assert dispatch(["counts", "--T", "10"]) == 1


def test_store_required(monkeypatch):
    monkeypatch.delenv("RAUXLAB_STORE", raising=False)
    assert dispatch(["counts", "--T", "10"]) == 2


def test_formatting():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt_c(complex(-0.5, 0.0)) == "-0.5,0"


def test_scan_then_counts(tmp_path, capsys):
    path = str(tmp_path / "z.jsonl")
    assert dispatch(["zeros", "scan", "--tmin", "0", "--tmax", "30", "--smin", "-1", "--smax", "3", "--store", path]) == 0
    assert dispatch(["counts", "--T", "30", "--store", path, "--verify"]) == 0
    out = capsys.readouterr().out
    assert "N=" in out and "N_r=" in out


def test_thread_count_independence(tmp_path):
    paths = []
    for n in ("1", "2"):
        p = tmp_path / f"z{n}.jsonl"
        args = ["--threads", n, "zeros", "scan", "--tmin", "0", "--tmax", "60", "--store", str(p)]
        assert dispatch(args) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_all():
    assert dispatch(["verify", "--suite", "all"]) == 0


@pytest.mark.slow
def test_phase_output_is_deterministic(store, tmp_path, capsys):
    src = tmp_path / "zeros.jsonl"
    store.save(src)
    outs = []
    for k in range(2):
        out = tmp_path / f"phase{k}.csv"
        assert dispatch(["phase", "--tmax", "4", "--step", "2", "--store", str(src), "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].splitlines()[0] == b"t,omega,u,d,theta,residual"
    assert len(outs[0].splitlines()) == 4


@pytest.mark.slow
def test_constants(store, tmp_path, capsys):
    src = tmp_path / "zeros.jsonl"
    store.save(src)
    assert dispatch(["constants", "--store", str(src)]) == 0
    assert "B_estimate=" in capsys.readouterr().out
