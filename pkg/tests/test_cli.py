import json
import subprocess
import sys

from vtwin.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_isid(capsys):
    assert run(capsys, "--n", "4", "isid", "s1 s3 s1 s3")[:2] == (0, "true\n")
    assert run(capsys, "--n", "4", "isid", "s1 s2 s1 s2")[:2] == (0, "false\n")


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "rewrite", "s1 r1", "--n", "4")
    assert (code, out) == (0, "L1.2\n")


def test_rewrite_json(capsys):
    code, out, _ = run(capsys, "--n", "4", "--format", "json", "rewrite", "s1 r1")
    assert code == 0 and json.loads(out)["rewrite"] == "L1.2"


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "--n", "4", "isid", "s1 q2")
    assert code == 2 and "column 3" in err and "^" in err


def test_not_in_kernel_exit_2(capsys):
    assert run(capsys, "--n", "3", "rewrite", "s1")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "--n", "4", "bogus")[0] == 2
    assert run(capsys, "--n", "1", "graph")[0] == 2
    assert run(capsys, "--n", "4", "--format", "xml", "graph")[0] == 2
    assert run(capsys, "--n", "4", "--format", "dot", "isid", "s1")[0] == 2


def test_pi_equal_nf_decompose(capsys):
    assert run(capsys, "--n", "3", "pi", "r1 r2")[1] == "[3,1,2]\n"
    assert run(capsys, "--n", "4", "equal", "s1 s3", "s3 s1")[1] == "true\n"
    assert run(capsys, "--n", "3", "equal", "s1 r2", "r2 s1")[1] == "false\n"
    assert run(capsys, "--n", "4", "nf", "L3.4 L1.2")[1] == "L1.2 L3.4\n"
    code, out, _ = run(capsys, "--n", "3", "--format", "json", "decompose", "s1")
    doc = json.loads(out)
    assert code == 0 and doc["pure"] == "L1.2" and doc["perm"] == [2, 1, 3]


def test_graph_outputs(capsys):
    code, out, _ = run(capsys, "--n", "4", "--format", "dot", "graph")
    assert code == 0 and out.startswith("graph PVT4 {") and "l_1_2 -- l_3_4;" in out
    doc = json.loads(run(capsys, "--n", "5", "--format", "json", "graphprops")[1])
    assert doc["chordal"] is False and doc["dominating_pairs"] == [] and doc["non_neighbors"] == [6]


def test_auts(capsys):
    assert run(capsys, "--n", "4", "auts")[1] == "48\n"
    assert run(capsys, "--n", "7", "auts")[0] == 2


def test_verify_json_default(capsys):
    code, out, _ = run(capsys, "--n", "4", "verify", "lcs")
    doc = json.loads(out)
    assert code == 0 and doc["suite"] == "lcs" and all(c["status"] == "pass" for c in doc["claims"])
    code, out, _ = run(capsys, "--n", "4", "--format", "text", "verify", "graph")
    assert code == 0 and "[PASS]" in out
    assert run(capsys, "--n", "5", "verify", "pvt4")[0] == 2


def test_verify_failure_exit_1(capsys, monkeypatch):
    from vtwin import theorems

    def broken(n):
        rep = theorems.VerificationReport("broken", n)
        rep.add("x", "always false", False, "w")
        return rep

    monkeypatch.setitem(theorems.SUITES, "lcs", broken)
    assert run(capsys, "--n", "4", "verify", "lcs")[0] == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vtwin.cli", "--n", "5", "verify", "all"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["suite"] == "all" and doc["n"] == 5 and doc["claims"]
