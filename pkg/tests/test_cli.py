import contextlib
import io
import json
import subprocess
import sys

from skeinlab.cli import REPORT_HEADER, main
from skeinlab.diagrams import hopf_fixture, link_to_json


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(list(argv))
    return rc, out.getvalue(), err.getvalue()


def test_bracket_unknot():
    rc, out, _ = run_cli("bracket", "--fixture", "unknot")
    assert rc == 0
    assert out.strip() == "-A^2 - A^-2"


def test_bracket_hopf():
    rc, out, _ = run_cli("bracket", "--fixture", "hopf")
    assert rc == 0
    assert out.strip() == "A^6 + A^2 + A^-2 + A^-6"


def test_bracket_empty_link_file(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"crossings": [], "free_loops": 0}))
    rc, out, _ = run_cli("bracket", str(path))
    assert rc == 0
    assert out.strip() == "1"


def test_bracket_json_roundtrip(tmp_path):
    path = tmp_path / "hopf.json"
    path.write_text(link_to_json(hopf_fixture()))
    rc, out, _ = run_cli("bracket", str(path))
    assert rc == 0
    assert out.strip() == "A^6 + A^2 + A^-2 + A^-6"


def test_colored_bracket_file_colors(tmp_path):
    path = tmp_path / "colored.json"
    path.write_text(link_to_json(hopf_fixture(), colors=(1, 1)))
    rc, out, _ = run_cli("colored-bracket", str(path))
    assert rc == 0
    assert out.strip() == "A^6 + A^2 + A^-2 + A^-6"


def test_colored_bracket_flag_overrides_nothing_stored():
    rc, out, _ = run_cli("colored-bracket", "--fixture", "hopf",
                         "--colors", "1,1", "--d", "2", "--sign", "+")
    assert rc == 0
    assert out.strip() == "-1"


def test_colored_bracket_needs_colors():
    rc, _, err = run_cli("colored-bracket", "--fixture", "hopf")
    assert rc == 2
    assert "colors" in err


def test_colored_bracket_arity_error_exits_2(tmp_path):
    path = tmp_path / "hopf.json"
    path.write_text(link_to_json(hopf_fixture()))
    rc, _, err = run_cli("colored-bracket", str(path), "--colors", "1")
    assert rc == 2
    assert "E_ARITY" in err


def test_missing_file_exits_2(tmp_path):
    rc, _, err = run_cli("bracket", str(tmp_path / "nope.json"))
    assert rc == 2
    assert err.startswith("error:")


def test_wrt_torus_value():
    rc, out, _ = run_cli("wrt", "--fixture", "borromean", "--color", "1",
                         "--d", "3")
    assert rc == 0
    assert out.strip() == "1"


def test_wrt_s1xs2():
    rc, out, _ = run_cli("wrt", "--fixture", "unknot", "--d", "4")
    assert rc == 0
    assert out.strip() == "1"
    rc, out, _ = run_cli("wrt", "--fixture", "unknot", "--d", "4",
                         "--mode", "float")
    assert rc == 0
    re, im = (float(tok) for tok in out.split())
    assert abs(complex(re, im) - 1) < 1e-9


def test_wrt_needs_d():
    rc, _, err = run_cli("wrt", "--fixture", "hopf")
    assert rc == 2
    assert "--d" in err


def test_wrt_needs_input():
    rc, _, err = run_cli("wrt", "--d", "2")
    assert rc == 2
    assert "--fixture" in err


def test_report_header_exact():
    rc, out, _ = run_cli("report", "--window", "1..3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == REPORT_HEADER
    assert lines[0] == "quantity,d,sign,value_re,value_im,prediction,mode,status"
    # five quantities x three levels x two signs
    assert len(lines) == 1 + 5 * 3 * 2
    assert all(line.endswith(",PASS") for line in lines[1:])


def test_report_md_format():
    rc, out, _ = run_cli("report", "--window", "2..3", "--format", "md")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("| quantity |")
    assert lines[1].startswith("| ---")
    assert all(line.endswith("| PASS |") for line in lines[2:])


def test_report_json_format():
    rc, out, _ = run_cli("report", "--window", "1..4", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 5 * 4 * 2
    assert {row["status"] for row in rows} == {"PASS"}
    ratio4 = [r for r in rows if r["quantity"] == "ratio" and r["d"] == 4]
    assert all(r["prediction"] == "3/4" for r in ratio4)


def test_verify_paper_window_passes():
    rc, out, _ = run_cli("verify-paper", "--window", "1..2", "--format", "json")
    assert rc == 0
    report = json.loads(out)
    assert report["summary"]["fail"] == 0
    assert report["summary"]["total"] == len(report["checks"])


def test_verify_paper_byte_stable():
    cmd = [sys.executable, "-m", "skeinlab.cli", "verify-paper",
           "--window", "1..2"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout


def test_recoupling_hopf_table():
    rc, out, _ = run_cli("recoupling", "--table", "hopf", "--max-color", "1")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,a,value"
    assert lines[1] == '0,0,"1"'
    assert lines[-1] == '1,1,"A^6 + A^2 + A^-2 + A^-6"'


def test_recoupling_series_table():
    rc, out, _ = run_cli("recoupling", "--table", "series", "--color", "0",
                         "--window", "1..5")
    assert rc == 0
    lines = out.strip().splitlines()
    values = [line.split(",")[2] for line in lines[1:]]
    assert values == ['"1"', '"1"', '"2"', '"2"', '"3"', '"3"', '"4"', '"4"',
                      '"5"', '"5"']


def test_bad_precision_exits_2():
    rc, _, err = run_cli("wrt", "--fixture", "unknot", "--d", "2",
                         "--mode", "float", "--precision", "3")
    assert rc == 2
    assert "precision" in err
