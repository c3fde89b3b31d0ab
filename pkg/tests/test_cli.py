import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from hyperkit.cli import main, report_schema

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def validate(text):
    doc = json.loads(text)
    jsonschema.validate(doc, report_schema())
    return doc


@pytest.fixture(autouse=True)
def _no_env_seed(monkeypatch):
    monkeypatch.delenv("HYPERKIT_SEED", raising=False)


class TestExamples:
    def test_signs_hyperfield_json(self):
        code, text = run("check", "--builtin", "signs", "--suite", "hyperfield", "--json")
        assert code == 0
        doc = validate(text)
        assert doc["ok"] and doc["schema"] == 1
        assert all(r["status"] == "pass" for r in doc["reports"])

    def test_maxplus1_hypergroup(self):
        code, text = run("check", "--builtin", "maxplus1", "--suite", "hypergroup")
        assert code == 1
        line = next(x for x in text.splitlines() if x.startswith("associativity"))
        assert "\tfail\t" in line and "witness=(2, 2, 5)" in line
        assert "lhs={5, 9}" in line and "rhs={5}" in line
        assert text.rstrip().endswith("verdict: FAIL")

    def test_signs_closure(self):
        code, text = run("closure", "--builtin", "signs")
        assert code == 0
        assert text.splitlines() == [
            "# signs: 6 sets, saturated after 2 iterations",
            "{-1}", "{-1, 0}", "{-1, 0, 1}", "{0}", "{0, 1}", "{1}",
        ]


class TestSchema:
    @pytest.mark.parametrize("argv", [
        ["check", "--builtin", "maxplus2", "--suite", "all", "--samples", "50", "--json"],
        ["check", "--builtin", "triangle", "--suite", "hyperfield", "--samples", "50", "--json"],
        ["closure", "--builtin", "krasner", "--json"],
        ["identity", "--builtin", "triangle", "--expr",
         "(x1+x2)*(x3+x4) <= x1*x3 + x1*x4 + x2*x3 + x2*x4", "--samples", "50", "--json"],
        ["iso", "--samples", "100", "--json"],
        ["invertibles", "--builtin", "signs", "--json"],
    ])
    def test_documents_validate(self, argv):
        _, text = run(*argv)
        validate(text)

    def test_schema_rejects_missing_witness(self):
        _, text = run("check", "--builtin", "maxplus1", "--suite", "hypermonoid", "--json")
        doc = validate(text)
        bad = next(r for r in doc["reports"] if r["status"] == "fail")
        bad["witness"] = None
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(doc, report_schema())


class TestDeterminism:
    def test_same_seed_same_bytes(self):
        argv = ["check", "--builtin", "phase", "--suite", "all", "--samples", "200", "--seed", "7",
                "--json"]
        assert run(*argv)[1] == run(*argv)[1]

    def test_env_seed(self, monkeypatch):
        argv = ["check", "--builtin", "tropical", "--samples", "100", "--json"]
        monkeypatch.setenv("HYPERKIT_SEED", "11")
        doc = json.loads(run(*argv)[1])
        assert doc["seed"] == 11
        assert run(*argv, "--seed", "11")[1] == run(*argv)[1]
        # an explicit flag wins over the environment
        assert json.loads(run(*argv, "--seed", "3")[1])["seed"] == 3

    def test_bad_env_seed(self, monkeypatch):
        monkeypatch.setenv("HYPERKIT_SEED", "abc")
        assert run("iso", "--samples", "10")[0] == 2


class TestIdentityCommand:
    def test_inclusion_passes(self):
        code, text = run("identity", "--builtin", "triangle", "--expr",
                         "(x1+x2)*(x3+x4) <= x1*x3 + x1*x4 + x2*x3 + x2*x4")
        assert code == 0 and "inclusion_strict" in text

    def test_equality_fails(self):
        code, _ = run("identity", "--builtin", "triangle", "--expr",
                      "(x1+x2)*(x3+x4) = x1*x3 + x1*x4 + x2*x3 + x2*x4")
        assert code == 1

    def test_file_structure(self):
        code, text = run("identity", "--file", str(DATA / "signs.hyp"), "--expr", "x1+x2 = x2+x1")
        assert code == 0 and "multilinear=true" in text


class TestOtherCommands:
    def test_iso(self):
        code, text = run("iso")
        assert code == 0 and "tropical_supertropical_iso\tpass\tsamples=1000" in text

    def test_invertibles(self):
        code, text = run("invertibles", "--builtin", "signs")
        assert code == 0 and text.splitlines()[1:] == ["{1}", "{-1}"]

    def test_list(self):
        code, text = run("list")
        assert code == 0 and text.splitlines()[0] == "krasner\tfinite"

    def test_file_check(self):
        assert run("check", "--file", str(DATA / "signs.hyp"), "--suite", "all")[0] == 0


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["check"],
        ["check", "--builtin", "nope"],
        ["check", "--builtin", "signs", "--suite", "semigroup"],
        ["check", "--builtin", "signs", "--file", "x.hyp"],
        ["check", "--builtin", "signs", "--samples", "0"],
        ["check", "--builtin", "signs", "--samples", "many"],
        ["check", "--file", "/nonexistent/structure.hyp"],
        ["identity", "--builtin", "signs", "--expr", "x1 +"],
        ["closure", "--builtin", "tropical"],
    ])
    def test_exit_two(self, argv, capsys):
        assert run(*argv)[0] == 2
        assert capsys.readouterr().err

    def test_parse_error_in_file(self, tmp_path, capsys):
        path = tmp_path / "broken.hyp"
        path.write_text("carrier 0 1\nzero 0\nadd 0 0 -> {0}\nadd 0 1 -> {1}\n")
        assert run("check", "--file", str(path))[0] == 2
        assert "missing hyperadd row for (1,1)" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperkit", "check", "--builtin", "maxplus1",
                           "--suite", "hypergroup"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "witness=(2, 2, 5)" in proc.stdout
