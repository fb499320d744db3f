"""Command line interface: outputs, exit codes, determinism, caching."""

import json

import pytest

from eulerq import cli
from eulerq.cache import CacheEntry, list_entries, load, store
from eulerq.report import VerifyReport
from fixtures_tables import CHAR_TABLES


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_stats_single_permutation(capsys):
    rc, out = run(capsys, "stats", "32541")
    assert rc == 0
    assert "Des: {1,3,4}" in out
    assert "Exc: {1,3}" in out
    assert "Exd: {2,4}" in out
    assert "cycle type: 3,1,1" in out
    assert "des=3  exc=2  maj=8  comaj=2  inv=6  fix=2" in out


def test_stats_json_sorted(capsys):
    rc, out = run(capsys, "stats", "32541", "--output", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["Exd"] == [2, 4]
    assert list(payload) == sorted(payload)


def test_stats_table(capsys):
    rc, out = run(capsys, "stats", "--n", "3", "--table", "maj,exc")
    assert rc == 0
    assert "sums:" in out or "maj" in out
    rc, out = run(capsys, "stats", "--n", "0")
    assert rc == 0
    assert "S_0" in out


def test_stats_usage_errors(capsys):
    assert cli.main(["stats"]) == 2
    assert cli.main(["stats", "321", "--n", "3"]) == 2
    assert cli.main(["stats", "3x1"]) == 2
    assert cli.main(["stats", "--n", "4", "--table", "zeta"]) == 2
    assert cli.main(["stats", "--n", "11"]) == 2
    capsys.readouterr()


def test_qfun_text(capsys, tmp_path):
    rc, out = run(capsys, "qfun", "--n", "2", "--j", "1",
                  "--cache-dir", str(tmp_path))
    assert rc == 0
    assert out.strip() == "h[2]"
    rc, out = run(capsys, "qfun", "--lambda", "6", "--j", "3", "--basis", "s",
                  "--cache-dir", str(tmp_path))
    assert rc == 0
    assert out.strip() == "3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]"


def test_qfun_uses_cache(capsys, tmp_path):
    d = str(tmp_path)
    run(capsys, "qfun", "--n", "4", "--j", "2", "--cache-dir", d)
    rows = list_entries(d)
    assert len(rows) == 1
    # second run hits the stored entry and prints the identical text
    rc1, out1 = run(capsys, "qfun", "--n", "4", "--j", "2", "--cache-dir", d)
    assert rc1 == 0
    assert load(d, "qfun", ["n", 4, "j", 2, "k", None], "h", None) == out1.strip()


def test_qfun_usage_errors(capsys):
    assert cli.main(["qfun", "--n", "4"]) == 2  # missing j
    assert cli.main(["qfun", "--j", "1"]) == 2  # missing n and lambda
    assert cli.main(["qfun", "--n", "9", "--j", "1"]) == 2
    assert cli.main(["qfun", "--lambda", "9", "--j", "1"]) == 2
    assert cli.main(["qfun", "--lambda", "3,1", "--j", "1", "--k", "0"]) == 2
    capsys.readouterr()


def test_chartable_json_matches_reference(capsys, tmp_path):
    rc, out = run(capsys, "chartable", "5", "--output", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["columns"] == [[5, 1], [5, 2]]
    for row in payload["rows"]:
        assert tuple(row["values"]) == CHAR_TABLES[5][tuple(row["lam"])]


def test_chartable_text_cached(capsys, tmp_path):
    d = str(tmp_path)
    rc, out = run(capsys, "chartable", "4", "--cache-dir", d)
    assert rc == 0
    assert out.splitlines()[0].split() == ["lambda", "(4,1)", "(4,2)"]
    assert load(d, "chartable", ["n", 4]) is not None
    assert cli.main(["chartable", "9"]) == 2
    assert cli.main(["chartable", "0"]) == 2
    capsys.readouterr()


def test_chartable_heals_corrupt_cache(capsys, tmp_path):
    d = str(tmp_path)
    entry = CacheEntry("chartable", ["n", 4], None, None, "stale nonsense")
    store(d, entry)
    import os
    path = os.path.join(d, entry.filename())
    with open(path, "w") as f:
        f.write("garbage")
    rc, out = run(capsys, "chartable", "4", "--cache-dir", d)
    assert rc == 0
    assert "lambda" in out
    assert load(d, "chartable", ["n", 4]) == out.rstrip("\n")


def test_expand_reference(capsys):
    rc, out = run(capsys, "expand", "omega(Q[5,2,0])", "m", "--vars", "5")
    assert rc == 0
    assert out.strip() == "2*m[2,2,1] + 6*m[2,1,1,1] + 21*m[1,1,1,1,1]"


def test_expand_arithmetic(capsys):
    rc, out = run(capsys, "expand", "Q[4,2] - h[2]*h[1,1]", "h")
    assert rc == 0
    rc2, out2 = run(capsys, "expand", "Q[(4,4),2]", "s")
    assert rc2 == 0
    assert "s[" in out2
    rc3, out3 = run(capsys, "expand", "3", "h")
    assert rc3 == 0
    assert out3.strip() == "3"


def test_expand_usage_errors(capsys):
    assert cli.main(["expand", "Q[9,1]"]) == 2
    assert cli.main(["expand", "Q[4"]) == 2
    assert cli.main(["expand", "zeta[2]"]) == 2
    assert cli.main(["expand", "h[2]", "--vars", "1"]) == 2  # too few variables
    capsys.readouterr()


def test_verify_single_suite(capsys):
    rc, out = run(capsys, "verify", "genfun", "--n-max", "3")
    assert rc == 0
    assert out.strip().endswith("result: PASS")
    assert "genfun: PASS" in out


def test_verify_unknown_suite(capsys):
    rc = cli.main(["verify", "nonsense"])
    assert rc == 2
    err = capsys.readouterr().err
    assert "choose from" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    rep = VerifyReport("stub")
    rep.record("always wrong", {"n": 1}, False, witness="broken")
    monkeypatch.setattr(cli, "full_registry", lambda mode: [("stub", lambda: rep)])
    rc, out = run(capsys, "verify", "all")
    assert rc == 1
    assert "result: FAIL" in out
    assert "always wrong" in out


def test_verify_json_deterministic_across_jobs(capsys):
    outs = []
    for jobs in ("1", "3"):
        rc, out = run(capsys, "verify", "all", "--n-max", "2",
                      "--output", "json", "--jobs", jobs)
        assert rc == 0
        outs.append(out)
    assert outs[0] == outs[1]
    payload = json.loads(outs[0])
    assert payload["passed"] is True
    assert len(payload["suites"]) == 12


def test_cache_warm_list_clear(capsys, tmp_path):
    d = str(tmp_path)
    rc, out = run(capsys, "cache", "warm", "--cache-dir", d)
    assert rc == 0
    warmed = int(out.split()[1])
    assert warmed == 27  # 6 tables + 21 slice renders
    rc, out = run(capsys, "cache", "list", "--cache-dir", d)
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == warmed
    assert all("[ok]" in line for line in lines)
    # sample entries must equal a fresh computation
    from eulerq import q_symf
    for n, j in ((3, 1), (6, 2), (5, 0)):
        cached = load(d, "qfun", ["n", n, "j", j, "k", None], "h", None)
        assert cached == q_symf(n, j).to_basis("h").render()
    rc, out = run(capsys, "cache", "clear", "--cache-dir", d)
    assert rc == 0
    assert f"removed {warmed} entries" in out
    assert list_entries(d) == []


def test_cache_dir_env_override(capsys, tmp_path, monkeypatch):
    alt = tmp_path / "envcache"
    monkeypatch.setenv("EULERQ_CACHE_DIR", str(alt))
    rc, _ = run(capsys, "qfun", "--n", "3", "--j", "1")
    assert rc == 0
    assert len(list_entries(str(alt))) == 1


def test_argparse_rejects_unknown_command():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_entry_point_matches_module_main():
    import importlib.metadata as md
    eps = md.entry_points(group="console_scripts")
    ours = [e for e in eps if e.name == "eulerq"]
    assert ours and ours[0].value == "eulerq.cli:main"
