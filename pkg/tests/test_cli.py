import json
import subprocess
import sys
from pathlib import Path

import pytest

from yangian_audit.cli import RunConfig, UsageError, main, render, run, unexpected
from yangian_audit.present.an import a_relations
from yangian_audit.present.dfin import dfin_relations
from yangian_audit.present.dn import d_relations

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run_cli(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    rc = main(list(argv) + ["--output", str(out)])
    return rc, out.read_text() if out.exists() else None


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, tmp_path):
    rc, text = run_cli(CASES[name], tmp_path, name)
    assert rc == 0
    assert text == (GOLDEN / name).read_text()


def test_workers_do_not_change_bytes(tmp_path, monkeypatch):
    argv = CASES["audit_D_pi.json"]
    monkeypatch.setenv("YANGIAN_AUDIT_WORKERS", "3")
    _, par = run_cli(argv, tmp_path, "a.json")
    monkeypatch.setenv("YANGIAN_AUDIT_WORKERS", "1")
    _, seq = run_cli(argv, tmp_path, "b.json")
    assert par == seq


def test_report_schema(tmp_path):
    _, text = run_cli(["yangian", "--check", "rel2", "--rmax", "1"], tmp_path)
    doc = json.loads(text)
    assert set(doc) == {"version", "config", "results"}
    for r in doc["results"]:
        assert {"id", "bindings", "residual_zero", "residual_repr"} <= set(r)
        assert set(r) <= {"id", "bindings", "residual_zero", "residual_repr", "ledger_entry"}
    lit = [r for r in doc["results"] if r["id"] == "rel2" and not r["residual_zero"]]
    assert lit and all(r["ledger_entry"] for r in lit)


def test_d_pi_example(tmp_path):
    rc, text = run_cli(["audit", "--presentation", "D", "--target", "pi", "--n", "4",
                        "--rmax", "2", "--smax", "2"], tmp_path)
    assert rc == 0
    res = json.loads(text)["results"]
    fixed = [r for r in res if r["id"].endswith(":corrected")]
    assert fixed and all(r["residual_zero"] for r in fixed)
    assert any(r["id"] == "5120" and not r["residual_zero"] for r in res)


def test_ope_w2w2_example(tmp_path):
    rc, text = run_cli(["ope", "--check", "w2w2", "--n", "4"], tmp_path)
    assert rc == 0
    res = json.loads(text)["results"]
    assert all(r["residual_zero"] for r in res if r["id"].startswith("OPE") and "bare" not in r["id"])


@pytest.mark.parametrize("argv", [
    ["run"],
    ["audit", "--presentation", "ty", "--target", "pi"],
    ["audit", "--presentation", "D", "--target", "pi", "--n", "2"],
    ["audit", "--presentation", "D", "--target", "pi", "--check", "9999"],
    ["yangian", "--check", "rel13"],
    ["ope", "--check", "w2w2", "--n", "3"],
    ["ope", "--check", "w1w1", "--n", "2", "--indices", "1,7,1,1"],
    ["roots", "orbit", "--n", "3"],
    ["run", "--check", "nonsense"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["audit", "--presentation", "Q", "--target", "pi"],
    ["roots", "orbit", "--smax", "-1"],
    [],
])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_io_error_exit_2(tmp_path, capsys):
    rc = main(["roots", "orbit", "--n", "4", "--smax", "1", "--output", str(tmp_path / "no" / "x.json")])
    assert rc == 2
    assert "cannot write" in capsys.readouterr().err


def test_unreadable_config(tmp_path):
    bad = tmp_path / "c.json"
    bad.write_text("{not json")
    assert main(["run", "--config", str(bad)]) == 2
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == 2


def test_config_with_empty_checks(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n": 4, "windows": {"rmax": 1, "smax": 1}, "checks": []}))
    assert main(["run", "--config", str(cfg)]) == 2


def test_run_config_file(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n": 4, "windows": {"rmax": 1, "smax": 1, "truncate": 0},
                               "checks": ["roots", "audit:Dfin:phi", "rel99"], "format": "md"}))
    rc, text = run_cli(["run", "--config", str(cfg)], tmp_path, "r.md")
    assert rc == 0
    assert text.startswith("# audit report")
    assert "| orbit |" in text and "| rel99 |" in text


def test_exit_1_on_unexpected_nonzero(tmp_path, monkeypatch):
    import yangian_audit.cli as cli
    real = cli.orbit_report

    def broken(n, smax):
        cfg, recs = real(n, smax)
        recs[0].update(residual_zero=False, residual_repr="x")
        return cfg, recs

    monkeypatch.setattr(cli, "orbit_report", broken)
    rc, _ = run_cli(["roots", "orbit", "--n", "4", "--smax", "1"], tmp_path)
    assert rc == 1


def test_unexpected_ignores_ledgered():
    recs = [{"residual_zero": False, "ledger_entry": "known"}, {"residual_zero": True}]
    assert unexpected(recs) == []
    assert unexpected(recs + [{"residual_zero": False}]) == [{"residual_zero": False}]


def test_md_escapes_pipes():
    text = render({"c": 1}, [{"id": "x", "bindings": {}, "residual_zero": False,
                               "residual_repr": "a|b", "ledger_entry": "l"}], "md")
    assert "a\\|b" in text


def test_full_run_covers_every_relation_id():
    cfg, recs = run(RunConfig(n=4, rmax=1, smax=1, truncate=0,
                              checks=["audit:A:pi", "audit:D:pi", "audit:D:phi", "audit:Dfin:pi",
                                      "audit:ty:phi"]))
    ids = {r["id"].split(":")[0] for r in recs}
    for rels in (a_relations(4), d_relations(4), dfin_relations(4)):
        assert {r.id for r in rels} <= ids
    assert {f"rel{k}" for k in (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12)} <= ids
    assert not unexpected(recs)


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(checks=[]).validate()
    with pytest.raises(UsageError):
        RunConfig(checks=["roots"], rmax=-1).validate()
    with pytest.raises(UsageError):
        RunConfig(checks=["roots"], format="xml").validate()


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "yangian_audit", "roots", "orbit", "--n", "4", "--smax", "1"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["results"][0]["residual_zero"] is True
