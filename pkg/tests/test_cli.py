"""CLI parsing, output determinism, exit codes, and the remote path."""

import json
import math

import httpx
import pytest
from fastapi.testclient import TestClient

import hardy_annulus.cli as cli
from hardy_annulus.service.app import app


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_extremal_alpha_example(capsys):
    code, out, err = run(capsys, "extremal-alpha", "--R", "0.5", "--zeta", "0.7,0")
    assert code == 0 and err == ""
    record = json.loads(out)
    assert record["command"] == "extremal-alpha"
    assert record["outputs"]["alpha"] == pytest.approx(
        (1.0 - math.log(0.7) / math.log(0.5)) % 1.0, rel=1e-15
    )


def test_jk_example_negative_b(capsys):
    # a value starting with "-" must parse as the flag's argument
    code, out, _ = run(
        capsys, "jk", "--R", "0.5", "--b", "-0.5,0", "--t", "0.5,0", "--method", "both"
    )
    assert code == 0
    record = json.loads(out)
    assert record["outputs"]["difference"] < 1e-10


def test_curvature_grid_csv(capsys):
    code, out, _ = run(
        capsys, "curvature-grid", "--alpha", "0", "--R", "0.5",
        "--rmin", "0.55", "--rmax", "0.95", "--n", "9", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "r,curvature_log,bound,gap"
    assert len(lines) == 10
    for line in lines[1:]:
        r, curv, bound, gap = (float(cell) for cell in line.split(","))
        assert gap > 0.0
        assert curv == pytest.approx(bound + gap, rel=1e-12)


def test_weights_csv_roundtrip(capsys):
    code, out, _ = run(
        capsys, "weights", "--R", "0.5", "--alpha", "0", "--nmin", "0", "--nmax", "0",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,weight"
    n, w = lines[1].split(",")
    assert int(n) == 0
    # 17 significant digits reparse to the exact double
    assert float(w) == math.sqrt(0.75)


def test_output_is_deterministic(capsys):
    args = ("curvature", "--R", "0.5", "--alpha", "0.37", "--zeta", "0.7,0.1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_json_floats_roundtrip(capsys):
    _, out, _ = run(capsys, "kernel", "--R", "0.5", "--alpha", "0.37",
                    "--z", "0.8,0", "--w", "0.7,0.1")
    record = json.loads(out)
    from hardy_annulus import AnnulusGeometry, hardy_kernel

    direct = hardy_kernel(0.37, 0.8, 0.7 + 0.1j, AnnulusGeometry(0.5))
    assert record["outputs"]["value"]["re"] == direct.real
    assert record["outputs"]["value"]["im"] == direct.imag


def test_usage_errors(capsys):
    cases = [
        (),                                              # no command
        ("frobnicate",),                                 # unknown command
        ("kernel", "--R", "0.5"),                        # missing required flags
        ("kernel", "--R", "0.5", "--nope", "1"),         # unknown flag
        ("kernel", "--R", "x", "--alpha", "0", "--z", "0.8,0", "--w", "0.7,0"),
        ("jk", "--R", "0.5", "--b", "1,2,3", "--t", "0.5,0"),
        ("kernel", "--R", "0.5", "--alpha", "0", "--z", "0.8,0", "--w", "0.7,0",
         "--format", "csv"),                             # csv on a scalar command
        ("jk", "--R", "0.5", "--b", "-0.5,0", "--t"),    # dangling flag
    ]
    for argv in cases:
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert err.splitlines()[0].startswith("hardy: ")


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "kernel", "--R", "0.5", "--alpha", "0",
                       "--z", "5,0", "--w", "0.7,0")
    assert code == 2
    assert "hardy:" in err


def test_nonconvergence_exit_code(capsys):
    code, _, err = run(capsys, "jk", "--R", "0.5", "--b", "-0.5,0",
                       "--t", "0.97,0", "--max-terms", "8")
    assert code == 3
    assert "hardy:" in err


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "usage:" in out


def test_hardy_tol_env(capsys, monkeypatch):
    monkeypatch.setenv("HARDY_TOL", "1e-6")
    _, out, _ = run(capsys, "jk", "--R", "0.5", "--b", "-0.5,0", "--t", "0.5,0")
    assert json.loads(out)["inputs"]["tol"] == 1e-6
    # explicit flag wins over the environment
    _, out, _ = run(capsys, "jk", "--R", "0.5", "--b", "-0.5,0", "--t", "0.5,0",
                    "--tol", "1e-10")
    assert json.loads(out)["inputs"]["tol"] == 1e-10


def test_equals_form(capsys):
    code, out, _ = run(capsys, "extremal-alpha", "--R=0.5", "--zeta=0.7,0")
    assert code == 0
    assert json.loads(out)["outputs"]["alpha"] == pytest.approx(0.48542682717024166)


@pytest.fixture
def remote(monkeypatch):
    test_client = TestClient(app)

    def fake_post(url, json=None, timeout=None):
        path = url[url.index("/", len("http://")):]
        return test_client.post(path, json=json)

    monkeypatch.setattr(cli.httpx, "post", fake_post)
    return "http://service.test"


def test_remote_matches_local(capsys, remote):
    args = ("curvature", "--R", "0.5", "--alpha", "0.37", "--zeta", "0.7,0")
    code, local_out, _ = run(capsys, *args)
    assert code == 0
    code, remote_out, _ = run(capsys, *args, "--url", remote)
    assert code == 0
    assert remote_out == local_out


def test_remote_error_mapping(capsys, remote):
    code, _, err = run(capsys, "kernel", "--R", "0.5", "--alpha", "0",
                       "--z", "5,0", "--w", "0.7,0", "--url", remote)
    assert code == 2
    assert "extension band" in err
    code, _, err = run(capsys, "jk", "--R", "0.5", "--b", "-0.5,0", "--t", "0.97,0",
                       "--max-terms", "8", "--url", remote)
    assert code == 3


def test_remote_unreachable(capsys, monkeypatch):
    def refuse(url, json=None, timeout=None):
        raise httpx.ConnectError("connection refused")

    monkeypatch.setattr(cli.httpx, "post", refuse)
    code, _, err = run(capsys, "extremal-alpha", "--R", "0.5", "--zeta", "0.7,0",
                       "--url", "http://nowhere.test")
    assert code == 2
    assert "cannot reach service" in err
