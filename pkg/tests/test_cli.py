import io
import json
import subprocess
import sys

import pytest

from qginv.cli import main, parse_variant
from qginv.coreinv import CmpVariant
from qginv.demo import load_golden
from qginv.qmatrix import QMatrix, emit_matrix, identity, matrix_from_obj

NIL = QMatrix([[0, 1], [0, 0]])


@pytest.fixture
def write(tmp_path):
    def _write(M, name="a.json"):
        p = tmp_path / name
        p.write_text(M if isinstance(M, str) else emit_matrix(M))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_index_of_example(capsys, write, A4):
    code, report = run(capsys, "index", write(A4))
    assert code == 0 and report["index"] == 1
    code, report = run(capsys, "index", "--method", "both", write(A4))
    assert code == 0 and report["index"] == 1


def test_rank(capsys, write, A4):
    code, report = run(capsys, "rank", "--method", "both", write(A4))
    assert code == 0 and report["rank"] == 2 == report["elim_rank"]


def test_inverse_core_right_both(capsys, write, A4):
    gold = load_golden()
    code, report = run(capsys, "inverse", "--kind", "core-r", "--method", "both", write(A4))
    assert code == 0
    assert report["agree"] is True
    assert report["verification"]["ok"] is True
    assert matrix_from_obj(report["result"]) == matrix_from_obj(gold["core_right"])
    assert matrix_from_obj(report["input"]) == A4
    assert "timing" in report


@pytest.mark.parametrize("kind", ["mp", "drazin", "group", "core-l", "corep-r", "corep-l", "dmp", "mpd", "cmp"])
def test_every_kind_agrees_on_example(capsys, write, A4, kind):
    code, report = run(capsys, "--canonical", "inverse", "--kind", kind, "--method", "both", write(A4))
    assert code == 0 and report["agree"] and report["verification"]["ok"]


def test_group_of_nilpotent_is_precondition_error(capsys, write):
    code, _ = run(capsys, "inverse", "--kind", "group", write(NIL))
    assert code == 3
    code, _ = run(capsys, "inverse", "--kind", "core-r", "--method", "oracle", write(NIL))
    assert code == 3


def test_parse_error_exit_code(capsys, write):
    bad = '{"rows":1,"cols":1,"data":[[["1/0","0","0","0"]]]}'
    code, _ = run(capsys, "rank", write(bad))
    assert code == 5
    code, _ = run(capsys, "rank", "/nonexistent/file.json")
    assert code == 5


def test_parse_error_message_names_position(capsys, write):
    bad = '{"rows":1,"cols":1,"data":[[["1/0","0","0","0"]]]}'
    main(["rank", write(bad)])
    assert "data[0][0]" in capsys.readouterr().err


def test_size_cap_exit_code(capsys, write):
    code, _ = run(capsys, "--cap", "2", "rank", write(identity(3)))
    assert code == 4


def test_hermitian_form_on_non_hermitian(capsys, write, A4):
    code, _ = run(capsys, "inverse", "--kind", "mp", "--form", "hermitian_row", write(A4))
    assert code == 3


def test_disagreement_exit_code(capsys, write, A4, monkeypatch):
    import qginv.cli as cli

    monkeypatch.setattr(cli, "by_oracle", lambda kind, A: identity(3))
    code, report = run(capsys, "inverse", "--kind", "mp", "--method", "both", write(A4))
    assert code == 2
    assert report["agree"] is False and "oracle_result" in report


def test_verify_candidate(capsys, write, A4):
    gold = load_golden()
    good = write(json.dumps(gold["mp"]), "good.json")
    code, report = run(capsys, "verify", "--kind", "mp", write(A4), "--candidate", good)
    assert code == 0 and report["verification"]["ok"]
    code, report = run(capsys, "verify", "--kind", "mp", write(A4), "--candidate", write(identity(3), "bad.json"))
    assert code == 2 and not report["verification"]["ok"]


def test_verify_random(capsys):
    code, report = run(capsys, "--canonical", "verify", "--random", "6", "--seed", "3", "--sizes", "2", "3")
    assert code == 0
    assert report["failures"] == []
    assert report["tally"]["mp"]["checked"] == 6


def test_det_verb(capsys, write):
    H = QMatrix([[1, "0"], ["0", 3]])
    code, report = run(capsys, "det", write(H))
    assert code == 0
    assert report["hermitian"] is True
    assert report["rdet"]["1"] == ["3", "0", "0", "0"]
    code, report = run(capsys, "det", "--col", "2", write(H))
    assert list(report["cdet"]) == ["2"] and report["rdet"] == {}


def test_split_verb(capsys, write):
    code, report = run(capsys, "split", write(NIL))
    assert code == 0
    assert matrix_from_obj(report["nilpotent"]) == NIL


def test_cmp_variant_flag(capsys, write, A4):
    assert parse_variant("2:rdet") == CmpVariant(2, "rdet")
    assert parse_variant("1:cdet:hermitian") == CmpVariant(1, "cdet", "hermitian")
    code, report = run(capsys, "inverse", "--kind", "cmp", "--variant", "2:rdet", "--method", "both", write(A4))
    assert code == 0 and report["agree"]


def test_side_shorthand(capsys, write, A4):
    code, report = run(capsys, "verify", "--side", "left", write(A4))
    assert code == 0 and report["kind"] == "corep-l"


def test_canonical_output_is_byte_stable(capsys, write, A4):
    path = write(A4)
    outs = []
    for _ in range(2):
        main(["--canonical", "inverse", "--kind", "dmp", "--method", "both", path])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert "timing" not in outs[0]


def test_stdin_input(capsys, monkeypatch, A4):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(emit_matrix(A4).encode())))
    code, report = run(capsys, "index")
    assert code == 0 and report["index"] == 1


def test_demo(capsys):
    code, out = run(capsys, "demo")
    assert code == 0 and "all values reproduced" in out
    code, report = run(capsys, "demo", "--json")
    assert code == 0 and report["ok"] is True
    assert all(c["ok"] for c in report["checks"])


def test_demo_with_corrupted_golden_file(capsys, tmp_path):
    gold = load_golden()
    gold["rdet_sums"]["21"] = ["0", "0", "0", "4"]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(gold))
    code, out = run(capsys, "demo", "--golden", str(p))
    assert code == 2
    assert "FAIL rdet sum a21" in out


def test_module_entry_point(tmp_path, A4):
    p = tmp_path / "a.json"
    p.write_text(emit_matrix(A4))
    proc = subprocess.run([sys.executable, "-m", "qginv", "--canonical", "index", str(p)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"index": 1, "verb": "index"}
