import json

import pytest

from sl2current.cli import main, parse_window, InputError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_char_pretty(capsys):
    code, out, _ = run(capsys, "char", "weyl-local", "2", "--format", "pretty")
    assert code == 0
    assert out.splitlines()[1:] == ["V(2): 1", "V(0): u"]
    code, out, _ = run(capsys, "char", "tilting", "0", "--format", "pretty")
    assert out.splitlines()[1:] == ["V(0): 1"]


def test_char_json_negative_window(capsys):
    code, out, _ = run(capsys, "char", "wedge-w1", "2", "--window", "-4:10")
    assert code == 0
    data = json.loads(out)
    assert data["window"] == {"lo": -4, "hi": 10}
    assert [t["weight"] for t in data["terms"]] == [0, 2]
    zero = next(t for t in data["terms"] if t["weight"] == 0)["series"]
    assert zero["coeffs"][:3] == [[0, 1], [1, 1], [2, 2]]


def test_char_csv(capsys):
    code, out, _ = run(capsys, "char", "weyl-local", "3", "--format", "csv")
    assert out.splitlines() == ["weight,exponent,coefficient", "1,1,1", "1,2,1", "3,0,1"]


def test_decompose_tensor(capsys):
    code, out, _ = run(capsys, "decompose", "--tensor", "global:1", "global:1", "--basis", "global")
    assert code == 0
    data = json.loads(out)
    assert data["reconstructs"] and data["certified_nonneg"]
    mults = {m["weight"]: m["series"] for m in data["mults"]}
    assert mults[2]["coeffs"] == [[0, 1], [1, 1]]
    assert mults[0]["coeffs"] == [[k, 1] for k in range(25)]


def test_decompose_dual(capsys):
    code, out, _ = run(capsys, "decompose", "--dual", "local:3", "--basis", "local", "--format", "pretty")
    assert code == 0
    assert "[3]: 1" in out
    assert "[1]: u^-2 + u^-1 - u - u^2" in out


def test_decompose_basis_character(capsys, tmp_path):
    code, out, _ = run(capsys, "char", "weyl-local", "4")
    path = tmp_path / "c.json"
    path.write_text(out)
    code, out, _ = run(capsys, "decompose", "--input", str(path), "--basis", "local")
    data = json.loads(out)
    assert code == 0
    assert [m["weight"] for m in data["mults"]] == [4]
    assert data["mults"][0]["series"]["coeffs"] == [[0, 1]]


def test_decompose_reconstruction_failure_exits_one(capsys, tmp_path, monkeypatch):
    from sl2current import filtration
    real = filtration.FiltMultiplicity.reconstruct

    def broken(self, window=None):
        chi = real(self, window)
        return chi + chi
    monkeypatch.setattr(filtration.FiltMultiplicity, "reconstruct", broken)
    code, _, _ = run(capsys, "decompose", "--dual", "local:2", "--basis", "local")
    assert code == 1


def test_decompose_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "decompose", "--input", str(path))
    assert code == 2 and "malformed" in err
    path.write_text('{"window": {"lo": 0}}')
    assert run(capsys, "decompose", "--input", str(path))[0] == 2


def test_invalid_inputs_exit_two(capsys):
    assert run(capsys, "char", "weyl-local", "-1")[0] == 2
    assert run(capsys, "char", "tilting", "3", "--window", "5:1")[0] == 2
    assert run(capsys, "char", "tilting", "3", "--window", "abc")[0] == 2
    assert run(capsys, "char", "nonsense", "3")[0] == 2
    assert run(capsys, "decompose", "--tensor", "foo:1", "global:1")[0] == 2
    assert run(capsys, "decompose", "--dual", "global:2")[0] == 2
    assert run(capsys, "module", "tensor", "7", "--trunc", "3")[0] == 2
    assert run(capsys, "verify", "nothing")[0] == 2
    assert run(capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_parse_window():
    assert parse_window("-4:10") == (-4, 10)
    with pytest.raises(InputError):
        parse_window("3")


def test_module_json(capsys):
    code, out, _ = run(capsys, "module", "wedge", "2", "--trunc", "3")
    data = json.loads(out)
    assert code == 0
    assert data["kind"] == "wedge" and data["trunc"] == 3
    top = [b["dim"] for b in data["blocks"] if b["weight"] == 2]
    assert top == [1, 1, 2]


def test_module_matrix_dump(capsys):
    code, out, _ = run(capsys, "module", "sym", "1", "--trunc", "1", "--matrix", "x", "0", "--format", "csv")
    assert code == 0
    assert "# x(x)t^0: block (0, -1) -> (0, 1), 1x1\n1/1" in out


def test_module_local_quotient_pretty(capsys):
    code, out, _ = run(capsys, "module", "local", "3", "--trunc", "3", "--format", "pretty")
    assert code == 0
    assert "total dim 8" in out
    assert "V(1): u + u^2" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "modulelab", "--lambda-max", "3", "--trunc", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(l.startswith("PASS ") for l in lines)
    code, out, _ = run(capsys, "verify", "filtration")
    assert code == 0 and "PASS b-recursion" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    from sl2current import suites
    monkeypatch.setattr(suites, "local_dims", lambda *a: False)
    code, out, _ = run(capsys, "verify", "characters")
    assert code == 1
    assert "FAIL local-dims" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ("char", "tilting", "4", "--window", "-6:12"),
    ("decompose", "--tensor", "global:2", "global:1", "--format", "csv"),
    ("module", "sym", "2", "--trunc", "4", "--format", "pretty"),
])
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
