import json
import shutil
import subprocess
import sys

import pytest

from zcolor.cli import main
from zcolor.fixtures import fixture_path
from zcolor.reduction import MoveTrace, verify_trace


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_fixture(capsys):
    code, out, _ = run(capsys, "analyze", str(fixture_path("L8n6")))
    rep = json.loads(out)
    assert code == 0
    assert rep["determinant"] == 0 and rep["colorable"]


def test_analyze_pretzel(capsys):
    code, out, _ = run(capsys, "analyze", "--pretzel=2,-2,2,-2")
    rep = json.loads(out)
    assert code == 0 and rep["colorable"] and rep["simple_d"] is not None


def test_analyze_hopf(capsys):
    code, out, _ = run(capsys, "analyze", "hopf")
    rep = json.loads(out)
    assert code == 0 and rep["determinant"] == 2 and not rep["colorable"]


def test_reduce_pretzel(capsys):
    code, out, _ = run(capsys, "reduce", "--pretzel", "3,-3")
    assert code == 0 and json.loads(out)["achieved"] == 4


def test_reduce_hopf_exit_3(capsys):
    code, _, err = run(capsys, "reduce", str(fixture_path("hopf")))
    assert code == 3 and "not colorable" in err


def test_reduce_writes_trace(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "reduce", str(fixture_path("L10n32")), "--trace", str(out))
    assert code == 0
    assert verify_trace(MoveTrace.from_json(out.read_text()))


def test_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("X[1,2,3]")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "parse error" in err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    capsys.readouterr()
    assert main(["analyze"]) == 1


def test_palette_dot(capsys, tmp_path):
    dot = tmp_path / "p.dot"
    code, out, _ = run(capsys, "palette", "L8n6", "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert text.startswith("graph palette {")
    assert len(json.loads(out)["components"]) in (1, 2)


def test_palette_stdout_deterministic(capsys):
    a = run(capsys, "palette", "L11n379")[1]
    b = run(capsys, "palette", "L11n379")[1]
    assert a == b and a.startswith("graph palette {")


def test_palette_trivial_exit_3(capsys):
    assert run(capsys, "palette", "trefoil")[0] == 3


def test_batch_all(capsys, tmp_path):
    for name in ("trefoil", "L8n6"):
        shutil.copy(fixture_path(name), tmp_path)
    code, out, _ = run(capsys, "analyze", "--all", str(tmp_path))
    reps = json.loads(out)
    assert code == 0
    assert [r["link_name"] for r in reps] == ["L8n6", "trefoil"]


def test_analyze_is_byte_identical(capsys):
    a = run(capsys, "analyze", "L9n18", "hopf")[1]
    b = run(capsys, "analyze", "L9n18", "hopf")[1]
    assert a == b


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and json.loads(out)["failed"] == []


def test_selftest_names_corrupt_fixture(capsys, tmp_path, monkeypatch):
    from zcolor.fixtures import fixture_dir

    for p in fixture_dir().glob("*.pd"):
        shutil.copy(p, tmp_path)
    (tmp_path / "L8n8.pd").write_text("X[1,2,garbage")
    monkeypatch.setenv("ZCOLOR_FIXTURES", str(tmp_path))
    code, out, err = run(capsys, "selftest")
    assert code == 4
    assert "L8n8.pd" in err


def test_selftest_missing_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ZCOLOR_FIXTURES", str(tmp_path / "nowhere"))
    code, _, err = run(capsys, "selftest")
    assert code == 4 and "does not exist" in err


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "zcolor.cli", "analyze", "trefoil"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["determinant"] == 3
