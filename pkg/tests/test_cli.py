import os
import subprocess
import sys

from brunnlink.cli import main
from brunnlink.codec import parse_braid, parse_pd
from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def p(name):
    return os.path.join(DATA, name)


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", p("table_trefoil.pd"))
    assert code == 0
    assert out.splitlines() == ["linking matrix:", "0", "writhe: -3", "jones: -t^-4 + t^-3 + t^-1"]


def test_lambda(capsys):
    assert run(capsys, "lambda", p("rings_together.pd"), "--surface", "1")[1] == \
        "lambda(2,3) = 1/3 (canonical 1/3)\n"
    code, out, _ = run(capsys, "lambda", p("hopf.pd"), "--surface", "1")
    assert code == 1 and out.startswith("OddLinking:")


def test_arf_and_milnor(capsys):
    assert run(capsys, "arf", p("arf_pair2_twisted.pd"))[1] == "arf: 1\n"
    assert run(capsys, "milnor", p("borromean.pd"), "--index", "123")[1] == "mu(123) = -1 (mod 0)\n"
    assert run(capsys, "milnor", p("borromean.pd"), "--index", "1,2")[1] == "mu(12) = 0 (mod 0)\n"
    code, out, _ = run(capsys, "milnor", p("borromean.pd"), "--index", "113")
    assert code == 1 and out.startswith("RepeatedIndex:")


def test_brunnian_and_compare(capsys):
    assert run(capsys, "brunnian", p("borromean.pd"), "--k", "2")[1].startswith("YES\n")
    code, out, _ = run(capsys, "brunnian", p("borromean.pd"), "--k", "3")
    assert code == 1 and out.startswith("BadK:")
    assert run(capsys, "compare", p("rings_apart.pd"), p("rings_together.pd"), "--k", "2")[1] == \
        "CONSISTENT (all 2-component sublinks agree)\n"


def test_generate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--n", "3", "--clasper", "2:123:0:1")
    assert code == 0
    braid_line, pd_text = out.split("\n", 1)
    assert len(parse_braid(braid_line)) == 12
    f = tmp_path / "gen.pd"
    f.write_text(pd_text)
    assert parse_pd(pd_text).n_components == 3
    assert run(capsys, "brunnian", str(f), "--k", "2")[1].startswith("YES")
    b = tmp_path / "gen.braid"
    b.write_text(braid_line + "\n")
    assert run(capsys, "milnor", str(b), "--index", "123")[1] == "mu(123) = 1 (mod 0)\n"


def test_usage_errors(capsys):
    assert run(capsys, "arf", "missing.pd")[0] == 2
    assert run(capsys, "milnor", p("borromean.pd"), "--index", "1x")[0] == 2
    assert run(capsys, "generate", "--n", "3", "--clasper", "nonsense")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    code, out, _ = run(capsys, "generate", "--n", "3", "--clasper", "2:124:0:1")
    assert code == 1 and out.startswith("IndexError:")


def test_syntax_error_exit(capsys, tmp_path):
    f = tmp_path / "bad.pd"
    f.write_text("X(1,2,3)")
    code, out, _ = run(capsys, "invariants", str(f), "--format", "pd")
    assert code == 1 and out.startswith("SyntaxError: ")


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "brunnlink.cli", "invariants", p("borromean.pd")]
    outs = {subprocess.run(cmd, capture_output=True, env={**os.environ, "PYTHONHASHSEED": str(s)}).stdout
            for s in (0, 1, 2)}
    assert len(outs) == 1
