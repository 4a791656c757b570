import json
import subprocess
import sys
from pathlib import Path

import pytest

from mldsl import cli
from mldsl.cache import GBCache, cache_key

from mldsl.polyring import GF, GrevLex, PolyRing

MODELS = Path(__file__).resolve().parent.parent / "models"


def run_cli(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ideal_file(tmp_path):
    def write(gens, vars=("x", "y"), field="q"):
        p = tmp_path / "ideal.json"
        p.write_text(json.dumps({"format": 1, "ring": {"vars": list(vars), "field": field}, "generators": gens}))
        return p
    return write


def test_parse_echoes_canonical_model(capsys):
    code, out, _ = run_cli(capsys, "parse", MODELS / "ternary_cubic.model", "--no-cache")
    assert code == 0
    assert "states: 3" in out and "label: ternary-cubic" in out and "field: fp:2147483647" in out
    code, out, _ = run_cli(capsys, "parse", MODELS / "ternary_cubic.model", "--field", "q", "--no-cache")
    assert "field: q" in out


def test_gb_unit_ideal(capsys, ideal_file):
    code, out, _ = run_cli(capsys, "gb", ideal_file(["x + 1", "x + 2"]), "--json", "--no-cache")
    assert code == 0 and json.loads(out)["generators"] == ["1"]


def test_eliminate_and_saturate(capsys, ideal_file):
    f = ideal_file(["y - x^2", "z - x^3"], vars=("x", "y", "z"))
    code, out, _ = run_cli(capsys, "eliminate", f, "--vars", "x", "--no-cache")
    assert code == 0 and out.strip() == "y^3 - z^2"
    f = ideal_file(["x^2*y"])
    code, out, _ = run_cli(capsys, "saturate", f, "--by", "x", "--no-cache")
    assert code == 0 and out.strip() == "y"


def test_dsl_of_cusp_is_empty(capsys):
    code, out, _ = run_cli(capsys, "dsl", MODELS / "cuspidal_cubic.model", "--json", "--no-cache")
    rep = json.loads(out)
    assert code == 0 and rep["dsl"] == ["1"] and rep["note"] == "data singular locus is empty"


def test_model_subcommands_on_ternary(capsys, tmp_path):
    cache = tmp_path / "c"
    for sub in ("singular", "conormal", "dual", "hadamard", "check-theorem"):
        code, out, _ = run_cli(capsys, sub, MODELS / "ternary_cubic.model", "--cache-dir", cache)
        assert code == 0 and out.startswith(("[", "codim"))
    code, out, _ = run_cli(capsys, "mldeg", MODELS / "ternary_cubic.model", "--cache-dir", cache)
    assert out.strip() == "ml_degree: 5"


@pytest.mark.parametrize("argv", [
    ["parse", "missing.model"],
    ["parse", "{bad}"],
    ["run-all", "{bad}"],
    ["parse", "{good}", "--field", "fp:12"],
    ["gb", "{bad}"],
    ["saturate", "{ideal}", "--by", "w"],
    ["eliminate", "{ideal}", "--vars", "w"],
])
def test_input_errors_exit_2(capsys, tmp_path, ideal_file, argv):
    bad = tmp_path / "bad.model"
    bad.write_text("states: 2\neq: p0^2 + p1\n")
    good = tmp_path / "good.model"
    good.write_text("states: 2\neq: p0*p1 - ps^2\n")
    ideal = ideal_file(["x"])
    argv = [a.format(bad=bad, good=good, ideal=ideal) for a in argv]
    code, _, err = run_cli(capsys, *argv, "--no-cache")
    assert code == 2 and err.startswith("error:") and "Traceback" not in err


def test_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "dsl", MODELS / "ternary_cubic.model", "--max-pairs", "3", "--no-cache")
    assert code == 3 and "budget" in err
    code, _, _ = run_cli(capsys, "dsl", MODELS / "ternary_cubic.model", "--budget-seconds", "0.001", "--no-cache")
    assert code == 3


def test_ml_degree_instability_exit_4(capsys, monkeypatch):
    from mldsl.mlpipeline.geometry import GeometryContext

    monkeypatch.setattr(GeometryContext, "ml_degree", lambda self, seed=0, attempts=5: 5 + seed)
    code, _, err = run_cli(capsys, "mldeg", MODELS / "ternary_cubic.model", "--no-cache")
    assert code == 4 and "differs" in err


def test_theorem_violation_exit_5(capsys, monkeypatch):
    from mldsl.mlpipeline import theorem

    monkeypatch.setattr(theorem, "variety_contains", lambda outer, inner: False)
    code, _, err = run_cli(capsys, "check-theorem", MODELS / "ternary_cubic.model", "--no-cache")
    assert code == 5 and "invariant" in err


def test_run_all_is_deterministic_hot_or_cold(capsys, tmp_path):
    model = MODELS / "ternary_cubic.model"
    cache = tmp_path / "cache"
    _, cold, _ = run_cli(capsys, "run-all", model, "--json", "--cache-dir", cache)
    code, hot, err = run_cli(capsys, "run-all", model, "--json", "--cache-dir", cache, "-v")
    _, none, _ = run_cli(capsys, "run-all", model, "--json", "--no-cache")
    assert code == 0 and cold == hot == none
    hits = int(err.split("cache: hits=")[1].split()[0])
    assert hits > 0
    assert json.loads(cold) == json.loads((MODELS / "expected" / "ternary_cubic.json").read_text())


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("GBCACHE_DIR", str(tmp_path / "env"))
    code, _, _ = run_cli(capsys, "dsl", MODELS / "cuspidal_cubic.model")
    assert code == 0 and list((tmp_path / "env").glob("*.json"))


def test_unwritable_cache_degrades(capsys, tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    code, out, _ = run_cli(capsys, "dsl", MODELS / "cuspidal_cubic.model", "--cache-dir", blocker / "sub")
    assert code == 0 and "empty" in out
    assert any("unavailable" in r.message for r in caplog.records)


def test_cache_entries_keyed_by_engine_version(tmp_path):
    R = PolyRing(["x", "y"], GF())
    gens = [R("x^2 - y"), R("x*y - 1")]
    calls = []

    def producer():
        calls.append(1)
        return [R("x - y^2"), R("y^3 - 1")]

    old = GBCache(tmp_path, engine="v1")
    old.get_or_compute(R, GrevLex(), gens, producer)
    assert old.get_or_compute(R, GrevLex(), gens, producer) == [R("x - y^2"), R("y^3 - 1")]
    assert (old.hits, old.misses, len(calls)) == (1, 1, 1)
    new = GBCache(tmp_path, engine="v2")
    new.get_or_compute(R, GrevLex(), gens, producer)
    assert (new.hits, new.misses, len(calls)) == (0, 1, 2)
    assert cache_key(R, GrevLex(), gens, "v1") != cache_key(R, GrevLex(), gens, "v2")


def test_corrupt_cache_entry_is_a_miss(tmp_path):
    R = PolyRing(["x"], GF())
    gens = [R("x^2")]
    c = GBCache(tmp_path)
    c.get_or_compute(R, GrevLex(), gens, lambda: [R("x^2")])
    for f in tmp_path.glob("*.json"):
        f.write_text("{not json")
    assert c.get_or_compute(R, GrevLex(), gens, lambda: [R("x^2")]) == [R("x^2")]
    assert c.hits == 0 and c.misses == 2


def test_module_entry_point_has_no_traceback(tmp_path):
    bad = tmp_path / "bad.model"
    bad.write_text("states: 3\neq: p0 +\n")
    proc = subprocess.run([sys.executable, "-m", "mldsl", "parse", str(bad), "--no-cache"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "Traceback" not in proc.stderr and "line 2" in proc.stderr


@pytest.mark.parametrize("name", [
    "cuspidal_cubic",
    "ternary_cubic",
    pytest.param("determinantal_cubic", marks=pytest.mark.slow),
    pytest.param("whitney_umbrella", marks=pytest.mark.slow),
])
def test_run_all_matches_expected_outputs(capsys, tmp_path, name):
    model = MODELS / f"{name}.model"
    code, out, _ = run_cli(capsys, "run-all", model, "--json", "--cache-dir", tmp_path)
    assert code == 0
    assert json.loads(out) == json.loads((MODELS / "expected" / f"{name}.json").read_text())
    code, text, _ = run_cli(capsys, "run-all", model, "--cache-dir", tmp_path)
    assert text == (MODELS / "expected" / f"{name}.txt").read_text()
