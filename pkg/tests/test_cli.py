import json

import pytest

from g2so4 import cli
from g2so4.checks import ANCHORS
from g2so4.report import PLUMBING, STATUSES, ReportEntry, to_json, to_text


def run_json(capsys, *argv):
    code = cli.run(["--format", "json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["--suite", "nonsense"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [["--orbit", "12"], ["--involution", "x"], ["--format", "xml"]])
def test_bad_flags_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 2


def test_closed_orbit_report(capsys):
    cli.run(["--suite", "orbits", "--involution", "0", "--orbit", "7"])
    out = capsys.readouterr().out
    line = next(l for l in out.splitlines() if "geometry.x07.t0" in l)
    assert line.startswith("Verified")
    assert "Closed" in line and "M_x = M" in line and "U_x = U" in line


def test_json_schema_and_anchors(capsys):
    code, doc = run_json(capsys, "--suite", "group")
    assert set(doc) == {"meta", "entries"}
    keys = [(e["suite"], e["id"]) for e in doc["entries"]]
    assert keys == sorted(keys)
    allowed = set(ANCHORS.values()) | {PLUMBING}
    for e in doc["entries"]:
        assert e["status"] in STATUSES
        assert e["anchor"] in allowed
        assert "elapsed" not in e
    assert code == (1 if any(e["status"] == "Failed" for e in doc["entries"]) else 0)


def test_json_is_byte_stable(tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.run(["--suite", "parabolic", "--format", "json", "--out", str(a)])
    monkeypatch.setenv(cli.WORKERS_ENV, "1")
    cli.run(["--suite", "parabolic", "--format", "json", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_timings_flag(capsys):
    _, doc = run_json(capsys, "--suite", "parabolic", "--timings")
    assert all("elapsed" in e for e in doc["entries"])


def test_mod_torus_strict(capsys):
    _, doc = run_json(capsys, "--suite", "orbits", "--involution", "2", "--orbit", "2",
                      "--mod-torus", "strict")
    entry = next(e for e in doc["entries"] if e["id"] == "x-identity.x02.t2")
    assert entry["params"]["mode"] == "order2" and entry["status"] == "Failed"
    _, doc = run_json(capsys, "--suite", "orbits", "--involution", "2", "--orbit", "2")
    entry = next(e for e in doc["entries"] if e["id"] == "x-identity.x02.t2")
    assert entry["status"] == "VerifiedModTorus"


def test_rational_r3_recorded(capsys):
    _, doc = run_json(capsys, "--suite", "orbits", "--involution", "1", "--orbit", "11",
                      "--r3", "rational", "--seed", "1")
    entry = next(e for e in doc["entries"] if e["id"] == "theta-split.x11.t1")
    assert entry["params"]["r3"] == "3"


def test_report_entry_rejects_unknown_status():
    with pytest.raises(ValueError):
        ReportEntry("s", "c", PLUMBING, "Maybe")


def test_text_and_json_agree():
    entries = [ReportEntry("b", "2", PLUMBING, "Verified"), ReportEntry("a", "1", PLUMBING, "Failed",
                                                                       residual=("x - 1",))]
    doc = json.loads(to_json(entries, {}))
    assert [e["id"] for e in doc["entries"]] == ["1", "2"]
    assert doc["meta"]["summary"]["Failed"] == 1
    text = to_text(entries, {})
    assert text.index("Failed") < text.index("Verified")
    assert "residual: x - 1" in text


def test_full_run_exit_status_matches_entries(capsys):
    code, doc = run_json(capsys)
    failed = [e["id"] for e in doc["entries"] if e["status"] == "Failed"]
    assert code == (1 if failed else 0)


def test_full_run_is_clean(capsys):
    code, doc = run_json(capsys)
    failed = [e["id"] for e in doc["entries"] if e["status"] == "Failed"]
    assert code == 0, failed
