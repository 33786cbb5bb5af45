import io
import subprocess
import sys
from fractions import Fraction

import pytest

from hfbench.cli import Binding, Session, main, run_text
from hfbench.hf import caps, get_caps, von_neumann

N = von_neumann

EVENS = """\
N := #10; P := plus_graph 10
E := compr v in N . exists w in N . <w,w,v> in P
print E
"""


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# scripts

def test_evens_script():
    report = run_text(EVENS)
    assert report.status == 0
    assert report.lines[-1] == "{#0,#2,#4,#6,#8}"
    assert "> print E" in report.lines


def test_empty_script():
    report = run_text("")
    assert report.lines == [] and report.status == 0
    assert run_text("// only a comment\n\n").lines == []


def test_cover_script_prints_chain():
    report = run_text("U := proxy 0 3/4, 1 3/4\ncover U 0 1")
    assert report.lines[-3:] == ["true", "  chain 0 3/4", "  chain 1 3/4"]
    report = run_text("U := proxy 0 1/2, 1 1/2\ncover U 0 1")
    assert report.lines[-2:] == ["false", "  witness 1/2"]


def test_first_error_stops_unless_keep_going():
    text = "a := #2\nb := union(a, zz)\nprint a"
    report = run_text(text)
    assert report.status == 1
    assert report.lines[-1] == "! error code=unbound"
    assert "> print a" not in report.lines
    report = run_text(text, keep_going=True)
    assert report.status == 1 and report.lines[-1] == "#2"


@pytest.mark.parametrize("stmt, code, col", [
    ("x := formula v in", "parse", 18),
    ("x := {{}", "parse", None),
    ("print qq", "unbound", None),
    ("member U 1/2", "unbound", None),
    ("x := cut sqrt2 * 2", "parse", None),
    ("x := plus_graph -1", "parse", None),
    ("x := quotient #3 by a in b", "domain", None),
])
def test_error_codes_and_locations(stmt, code, col):
    report = run_text("a := #1\n" + stmt)
    (msg,) = report.errors
    assert msg.startswith(f"code={code} line=2 col=")
    if col is not None:
        assert f"col={col}:" in msg
    assert f"[in: {stmt}]" in msg


def test_cap_error_names_the_command():
    s = Session()
    with caps(rank=5):
        report = run_text("x := #3\ny := {{{{{{{x}}}}}}}", s)
    assert report.errors[0].startswith("code=cap line=2")
    assert "[in: y := {{{{{{{x}}}}}}}]" in report.errors[0]


def test_statement_commands():
    script = """\
T := <#1,#2>
ackermann #3
rank T
is_delta0 (exists v . v = v)
eval forall v . (v in N -> v sub N) over #5
P := plus_graph 8; lookup P 2 3; lookup P 5 5; check P
r := cut sqrt2
member r 7/5
compare r 7/5 1/100
bracket 1/2 1/10
L := cut limit(1 - 1/2**n, j + 1)
member L 1
C := closed 0 0, 1 1 window -1 2
member C 1
complement C -1 2
"""
    s = Session()
    s.bindings["N"] = Binding("set", N(5))
    lines = run_text(script, s).lines
    out = [line for line in lines if not line.startswith(">")]
    assert out == [
        "T : set, 2 members, rank 4", "11", "4", "false", "true",
        "P : graph plus_graph 8, 36 triples", "5", "undefined", "36 triples, 0 mismatches",
        "r : cut", "true", "greater", "2/5 1/2",
        "L : cut", "needs-more-accuracy",
        "C : closed, 2 intervals", "true", "proxy -1/2 1/2, 1/2 1/2, 3/2 1/2",
    ]


def test_print_parse_round_trip_of_bindings():
    script = """\
a := {#0, <#1,#2>, {{#3}}}
f := formula forall v in x . (v sub x /\\ ~(v = x))
U := proxy 0 3/4, 1/3 1/7
C := closed -1 0, 1/2 2 window -2 3
r := cut lub(sqrt2, 3/2) + neg(1/3)
R := random 4
"""
    for raw in (False, True):
        s = Session(seed=5, raw=raw)
        run_text(script, s)
        for name, b in list(s.bindings.items()):
            text = s.show(b)
            t = Session(seed=5, raw=raw)
            t.bindings.update({k: v for k, v in s.bindings.items() if k != name})
            run_text(f"{name}2 := {text}", t)
            b2 = t.bindings[f"{name}2"]
            assert b2.kind == b.kind
            if b.kind == "cut":
                assert t.show(b2) == text
            else:
                assert b2.value == b.value, (name, text)


def test_scripts_are_deterministic():
    text = "R := random 5; print R; S := random 4; print S; spot r" \
           "\nr := cut sqrt2; spot r"
    a = run_text(text, Session(seed=3)).text
    b = run_text(text, Session(seed=3)).text
    c = run_text(text, Session(seed=4)).text
    assert a == b and a != c


# repl

def test_repl_examples(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(
        "#3\nis_delta0 (exists v . v = v)\nackermann #3\n:caps\nprint nope\n:help\n:quit\nprint #1\n"))
    code, out, err = cli("repl")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "#3 = {{},{{}},{{},{{}}}}"
    assert lines[1:3] == ["false", "11"]
    assert lines[3].startswith("rank=")
    assert "#1" not in lines  # stopped at :quit
    assert "code=unbound" in err


# subcommands

def test_eval_and_compr():
    assert cli("eval", "union(#2, {#5})") == (0, "{#0,#1,#5}\n", "")
    assert cli("eval", "exists w . w in w", "--over", "#4")[1] == "false\n"
    assert cli("eval", "v sub w", "--let", "v=#2", "--let", "w=#5")[1] == "true\n"
    assert cli("--raw", "eval", "#2")[1] == "{{},{{}}}\n"
    assert cli("compr", "v", "#3", "v sub #1")[1] == "#2\n"


def test_arith_subcommands():
    code, out, _ = cli("arith", "plus-graph", "12")
    assert code == 0
    assert "routes agree: true" in out
    assert "0 mismatches" in out
    assert cli("arith", "times", "6", "--route", "witness", "--triples")[1].splitlines()[1:4] == \
        ["0 * 0 = 0", "0 * 1 = 0", "0 * 2 = 0"]
    assert cli("arith", "check", "2+3=5")[1] == \
        "true\nwitness {<#0,#3>,<#1,#4>,<#2,#5>} (verified)\n"
    assert cli("arith", "check", "2*3=5")[1] == "false\n"
    assert cli("arith", "leq", "4")[1] == "leq_graph 4: 10 pairs\n"


def test_arith_quotient(tmp_path):
    f = tmp_path / "x.hf"
    f.write_text("{<#1,#2>,<#2,#4>,<#2,#3>}\n")
    assert cli("arith", "quotient", str(f), "--rel", "rational")[1] == "{<#1,#2>,<#2,#3>}\n2 blocks\n"
    assert cli("arith", "quotient", str(f), "--rel", "a = a")[1].endswith("1 blocks\n")


def test_real_subcommands(tmp_path):
    u = tmp_path / "u.txt"
    u.write_text("# two balls\n0 3/4\n1 3/4\n")
    assert cli("real", "member", str(u), "1/2", "7/4", "-3/4")[1] == "1/2 true\n7/4 false\n-3/4 false\n"
    assert cli("real", "cover", str(u), "0", "1")[1] == "true\nchain 0 3/4\nchain 1 3/4\n"
    h = tmp_path / "h.txt"
    h.write_text("1/2 1/2\n")
    assert cli("real", "complement", str(h), "--window", "0", "1")[1] == "0 0\n1 1\n"
    c = tmp_path / "c.txt"
    c.write_text("0 0\n")
    assert cli("real", "complement", str(c), "--closed", "--window", "-1", "1")[1] == \
        "-1/2 1/2\n1/2 1/2\n"
    assert cli("real", "member", str(c), "0", "--closed")[1] == "0 true\n"


def test_cut_subcommands():
    assert cli("cut", "compare", "sqrt2", "7/5", "--eps", "1/100")[1] == "greater\n"
    out = cli("cut", "eval", "limit(1 - 1/2**n, j + 1, 0, 1)",
              "--member", "9/10", "--member", "1", "--member", "101/100")[1]
    assert out == "9/10 true\n1 false\n101/100 false\n"
    lo, hi = cli("cut", "eval", "sqrt2", "--bracket", "1/1000")[1].split()
    assert Fraction(hi) - Fraction(lo) <= Fraction(1, 1000)


def test_cli_errors():
    code, out, err = cli("eval", "union(#2")
    assert code == 1 and err.startswith("code=parse")
    code, _, err = cli("real", "member", "/nonexistent/file", "0")
    assert code == 1 and err.startswith("code=io")
    code, _, err = cli("cut", "eval", "sqrt2 ** 2")
    assert code == 1 and err.startswith("code=parse")


def test_caps_flag():
    before = get_caps()
    # caps apply when a node is first built, so use a literal nothing else builds
    deep = "{" * 17 + "#6" + "}" * 17
    code, _, err = cli("--caps", "rank=3", "eval", deep)
    assert code == 1 and err.startswith("code=cap")
    assert get_caps() == before
    assert cli("--caps", "rank=30", "eval", deep)[0] == 0
    with pytest.raises(SystemExit) as info:
        cli("--caps", "bogus=1", "eval", "#1")
    assert info.value.code == 2


def test_script_subcommand_and_console_entry(tmp_path):
    p = tmp_path / "s.hfs"
    p.write_text(EVENS)
    code, out, _ = cli("script", str(p))
    assert code == 0 and out.splitlines()[-1] == "{#0,#2,#4,#6,#8}"
    timed = cli("script", str(p), "--timing")[1]
    assert "s)" in timed.splitlines()[0]
    proc = subprocess.run([sys.executable, "-m", "hfbench", "--seed", "1", "script", str(p)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == out
