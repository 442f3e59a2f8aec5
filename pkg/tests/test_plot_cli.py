import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from wrightfn import WrightParams, bessel_normalized, eval_normalized
from wrightfn.cli import main, parse_complex
from wrightfn.oracle import IDENTITY
from wrightfn.plot import PlotSpec, mapped_curves, parse_polylines, render_svg, write_svg
from wrightfn.errors import DomainError

GOLDEN = Path(__file__).parent / "golden"

# argv used to generate each golden disk-image panel
GOLDEN_PANELS = {
    "panel_a_confluent_b1.5_disk.svg": ["--family", "confluent", "--b", "1.5", "--radius", "1"],
    "panel_b_confluent_b1_half.svg": ["--family", "confluent", "--b", "1", "--radius", "0.5"],
    "panel_c_confluent_b1+sqrt3_half.svg": [
        "--family", "confluent", "--b", repr(1 + math.sqrt(3)), "--radius", "0.5"],
    "panel_d_wright_sqrt2_sqrt3_half.svg": [
        "--family", "four", "--mu", "1", "--a", repr(math.sqrt(2)), "--nu", "1",
        "--b", repr(math.sqrt(3)), "--radius", "0.5"],
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# --- plot library -------------------------------------------------------------


def test_identity_vertices_equal_inputs():
    spec = PlotSpec(IDENTITY, radius=1.0, n_circles=4, n_rays=6, samples=64)
    svg = render_svg(spec)
    circles = parse_polylines(svg, "circle")
    rays = parse_polylines(svg, "ray")
    assert len(circles) == 4 and len(rays) == 6
    theta = 2 * np.pi * np.arange(65) / 64
    for j, c in enumerate(circles, start=1):
        np.testing.assert_allclose(c, (j / 4) * np.exp(1j * theta), atol=1e-12)
    for k, r in enumerate(rays):
        ang = 2 * math.pi * k / 6
        expected = np.arange(64) / 63 * complex(math.cos(ang), math.sin(ang))
        np.testing.assert_allclose(r, expected, atol=1e-12)


def test_curves_are_closed():
    spec = PlotSpec(IDENTITY, n_circles=2, n_rays=2, samples=16)
    c = mapped_curves(spec)[0]
    assert abs(c[0] - c[-1]) < 1e-15


@pytest.mark.parametrize("kw", [dict(radius=0.0), dict(radius=1.5), dict(n_circles=1),
                                dict(n_rays=1), dict(samples=1)])
def test_plot_spec_validation(kw):
    with pytest.raises(DomainError):
        PlotSpec(IDENTITY, **kw)


def test_render_is_deterministic(tmp_path):
    from wrightfn import wright_map
    spec = PlotSpec(wright_map(WrightParams(1, 1, 1, 1.5)), title="a<b & c")
    p1 = write_svg(spec, tmp_path / "a.svg")
    p2 = write_svg(spec, tmp_path / "b.svg")
    assert p1.read_bytes() == p2.read_bytes()
    assert "<title>a&lt;b &amp; c</title>" in p1.read_text()


# --- CLI ----------------------------------------------------------------------


@pytest.mark.parametrize("text, value", [
    ("0.5", 0.5), ("0.5+0i", 0.5), ("-0.2-0.3i", -0.2 - 0.3j), ("1e-3+2i", 1e-3 + 2j), ("2i", 2j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_eval_matches_library(capsys):
    code, out, _ = run(["eval", "--family", "four", "--mu", "1", "--a", "1", "--nu", "1",
                        "--b", "2", "--z", "0.5+0i", "--json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["value"]["re"] == eval_normalized(WrightParams(1, 1, 1, 2), 0.5).value.real
    assert set(d) == {"value", "terms_used", "tail_bound"}


def test_eval_bessel_and_zero(capsys):
    code, out, _ = run(["eval", "--family", "bessel", "--beta", "1.5", "--z", "0.25", "--json"],
                       capsys)
    assert code == 0
    assert json.loads(out)["value"]["re"] == bessel_normalized(1.5, 0.25).value.real
    code, out, _ = run(["eval", "--family", "confluent", "--b", "2", "--z", "0", "--json"], capsys)
    assert json.loads(out)["value"] == {"re": 0.0, "im": 0.0}


def test_eval_invalid_exit_2(capsys):
    code, _, err = run(["eval", "--family", "four", "--mu", "1", "--a", "-1", "--nu", "1",
                        "--b", "2", "--z", "0.5"], capsys)
    assert code == 2
    assert "a > 0" in err


def test_eval_bad_complex_exit_2(capsys):
    code, _, _ = run(["eval", "--family", "confluent", "--b", "2", "--z", "zz"], capsys)
    assert code == 2


def test_criteria_commands(capsys):
    code, out, _ = run(["criteria", "--mu", "1", "--a", "1", "--nu", "1", "--b", "2.5",
                        "--json"], capsys)
    assert code == 0
    reports = {r["theorem_id"]: r for r in json.loads(out)["reports"]}
    assert reports["kt4_starlike_half"]["verdict"] == "Established"
    code, _, _ = run(["criteria", "--family", "bessel", "--beta", "1.4",
                      "--only", "threshold_starlike"], capsys)
    assert code == 1
    code, out, _ = run(["criteria", "--family", "confluent", "--b", "2.8", "--json"], capsys)
    reports = {r["theorem_id"]: r for r in json.loads(out)["reports"]}
    assert reports["threshold_convex_i"]["verdict"] == "Established"


@pytest.mark.parametrize("argv, code", [
    (["--family", "identity", "--property", "starlike"], 0),
    (["--family", "koebe", "--property", "starlike", "--r-max", "0.9"], 0),
    (["--family", "four", "--mu", "1", "--a", "1", "--nu", "1", "--b", "2.5",
      "--property", "starlike", "--radius", "0.5"], 0),
    (["--family", "four", "--mu", "2", "--a", "1", "--nu", "2", "--b", "1",
      "--property", "half-plane", "--N", "6"], 0),
    (["--family", "koebe", "--property", "starlike", "--eta", "0.5", "--r-max", "0.9"], 1),
])
def test_verify_exit_codes(argv, code, capsys):
    assert run(["verify", *argv], capsys)[0] == code


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--family", "confluent", "--b", "3.7", "--property", "sp",
                        "--json", "--grid-radii", "8", "--grid-angles", "32"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["grid"]["n_radii"] == 8 and d["grid"]["n_angles"] == 32
    assert d["verdict"] == "NoViolationFound"


@pytest.mark.parametrize("argv, code", [
    (["--coeffs=-1,0,1"], 0),
    (["--coeffs", "1,1"], 0),
    (["--family", "four", "--mu", "1.5", "--a", "1", "--nu", "1.5", "--b", "1",
      "--which", "raw", "--N", "8"], 0),
    (["--family", "four", "--mu", "1", "--a", "1.5", "--nu", "1", "--b", "1.5",
      "--which", "qfactor", "--N", "10"], 0),
])
def test_zeros_exit_codes(argv, code, capsys):
    # explicit polynomials carry no exterior verdict
    assert run(["zeros", *argv], capsys)[0] == code


def test_zeros_json(capsys):
    _, out, _ = run(["zeros", "--family", "four", "--mu", "2", "--a", "1", "--nu", "2",
                     "--b", "1", "--which", "raw", "--N", "10", "--json"], capsys)
    d = json.loads(out)
    assert d["verdict"] is True and len(d["roots"]) == 10


def test_sweep_json_and_determinism(capsys):
    argv = ["sweep", "--family", "bessel", "--vary", "beta", "--lo", "1", "--hi", "2",
            "--steps", "11", "--criteria", "threshold_starlike", "--json"]
    code, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert code == 0 and a == b
    d = json.loads(a)
    assert abs(d["boundaries"][0]["value"] - 1.5) <= 1e-6


def test_sweep_invalid(capsys):
    code, _, _ = run(["sweep", "--family", "confluent", "--vary", "b", "--lo", "3", "--hi", "1"],
                     capsys)
    assert code == 2


def test_plot_io_error(capsys, tmp_path):
    code, _, err = run(["plot", "--family", "identity", "--out",
                        str(tmp_path / "missing" / "x.svg")], capsys)
    assert code == 3
    assert "cannot write" in err


def test_out_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(["eval", "--family", "confluent", "--b", "2", "--z", "0.3", "--json",
                        "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["terms_used"] > 0


@pytest.mark.parametrize("name", sorted(GOLDEN_PANELS))
def test_golden_panels(name, tmp_path, capsys):
    out = tmp_path / name
    assert main(["plot", *GOLDEN_PANELS[name], "--out", str(out)]) == 0
    capsys.readouterr()
    assert out.read_bytes() == (GOLDEN / name).read_bytes()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wrightfn", "eval", "--family", "confluent",
                        "--b", "2", "--z", "0"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.startswith("value")
