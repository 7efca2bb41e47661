import pytest

from curvecount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_census_g1(capsys):
    code, out = run(capsys, "census", "g1", "--q", "3")
    assert code == 0
    assert "total mass 3" in out


def test_census_writes_file(capsys, tmp_path):
    path = tmp_path / "out.jsonl"
    code, _ = run(capsys, "census", "g2", "--q", "3", "--out", str(path), "--quiet")
    assert code == 0 and path.read_text().count("\n") == 50


def test_sigma_and_traces(capsys):
    assert run(capsys, "sigma", "--genus", "1", "--q", "2", "--weight", "10") == (0, "-23\n")
    assert run(capsys, "trace", "g1", "--prime", "2", "--weight", "12") == (0, "-24\n")
    assert run(capsys, "trace", "g2", "--prime", "3", "--weight", "8", "8") == (0, "-6408\n")
    assert run(capsys, "trace", "g3", "--prime", "3", "--weight", "4", "2", "8") == (0, "970272\n")


def test_m1n(capsys):
    code, out = run(capsys, "m1n", "--q", "5", "--n", "4")
    assert code == 0 and out == "direct: 588\ngetzler: 588\n"


def test_fitpoly(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("2 9\n3 16\n5 36\n")
    assert run(capsys, "fitpoly", "--in", str(f), "--degree", "2", "--complete") == (0, "q^2+2q+1 symmetric=yes\n")
    f.write_text("2 4\n3 9\n5 25\n")
    assert run(capsys, "fitpoly", "--in", str(f), "--degree", "2", "--complete")[0] == 1


def test_mass(capsys):
    code, out = run(capsys, "mass", "--what", "ekedahl", "--p", "3", "--g", "2")
    assert (code, out) == (0, "1/288\n")
    code, out = run(capsys, "mass", "--what", "moret-bailly", "--p", "5", "--n", "3")
    assert code == 0 and "superspecial: 936" in out


def test_strata(capsys):
    code, out = run(capsys, "strata", "--char", "2", "--q", "2")
    assert code == 0 and "f<=2: 8" in out


def test_build_ss(capsys):
    code, out = run(capsys, "build-ss", "--p", "2", "--h", "2")
    assert code == 0 and "verified" in out and "genus=2" in out


def test_ingest(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODULI_CACHE_DIR", str(tmp_path))
    src = tmp_path / "in.txt"
    src.write_text("2 10 6 4 8079\n")
    assert run(capsys, "ingest", "sigma-abc", str(src))[0] == 0
    assert (tmp_path / "sigma_abc.txt").exists()


def test_explain(capsys):
    code, out = run(capsys, "--explain", "mass", "--what", "deuring", "--p", "11")
    assert code == 0 and out.startswith("# ")


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census", "g5", "--q", "3"])
    assert exc.value.code == 2
    assert main(["census", "g1", "--q", "2048"]) == 3
    assert main(["mass", "--what", "deuring", "--p", "9"]) == 2
    capsys.readouterr()
