import json
import subprocess
import sys

from adjres.cli import run


def out(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_roots_e6(capsys):
    code, text, _ = out(capsys, ["roots", "E6"])
    assert code == 0
    assert text.splitlines()[0] == "1 4 5 7 8 11"


def test_roots_json(capsys):
    code, text, _ = out(capsys, ["roots", "G2", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["schema"] == "1" and data["exponents"] == [1, 5]


def test_resolve_e8_excluded(capsys):
    code, _, err = out(capsys, ["resolve", "E8"])
    assert code == 2 and "computation excluded at desk scale" in err


def test_e7_needs_opt_in(capsys):
    code, _, err = out(capsys, ["resolve", "E7"])
    assert code == 2 and "allow-e7" in err


def test_usage_errors(capsys):
    assert out(capsys, ["frobnicate", "A2"])[0] == 2
    assert out(capsys, ["roots", "Q7"])[0] == 2
    assert out(capsys, ["bbw", "A2"])[0] == 2
    assert out(capsys, ["cohom", "A2"])[0] == 2
    assert out(capsys, ["roots", "A2", "--threads", "0"])[0] == 2
    assert out(capsys, ["bbw", "A2", "--parabolic", "1", "--weight", "1"])[0] == 2


def test_resolve_json_deterministic(capsys):
    code1, a, _ = out(capsys, ["resolve", "G2", "--sheaf", "jacobian", "--format", "json"])
    code2, b, _ = out(capsys, ["resolve", "G2", "--sheaf", "jacobian", "--format", "json"])
    assert code1 == code2 == 0 and a == b
    data = json.loads(a)
    assert data["schema"] == "1" and data["diff"] == []


def test_resolve_b3_reports_mismatch(capsys):
    code, text, _ = out(capsys, ["resolve", "B3", "--sheaf", "jacobian", "--format", "json"])
    data = json.loads(text)
    assert code == 1 and data["schema"] == "1" and data["diff"]


def test_resolve_structure_b3(capsys):
    assert out(capsys, ["resolve", "B3", "--sheaf", "structure"])[0] == 0


def test_threads_do_not_change_output(capsys):
    _, a, _ = out(capsys, ["verify", "C3", "--format", "json"])
    _, b, _ = out(capsys, ["verify", "C3", "--format", "json", "--threads", "2"])
    assert a == b and json.loads(a)["ok"] is True


def test_bbw_and_cohom(capsys):
    code, text, _ = out(capsys, ["bbw", "A1", "--parabolic", "1", "--weight=-2"])
    assert code == 0 and "H^1: 1 x V[0]" in text
    code, text, _ = out(capsys, ["cohom", "G2", "--wedge", "2", "--twist-L", "1", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["cohomology"][1]["reps"][0]["dim"] == "7"


def test_verify_f4(capsys):
    code, text, _ = out(capsys, ["verify", "F4"])
    assert code == 0 and "found at (p, q) = [(3, 2)]" in text


def test_kernel_and_saito(capsys):
    assert out(capsys, ["kernel-check", "A1", "--max-degree", "4"])[0] == 0
    assert out(capsys, ["saito", "C2"])[0] == 0
    assert out(capsys, ["kernel-check", "G2"])[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "adjres", "roots", "A2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "1 2"
