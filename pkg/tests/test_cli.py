import json

from toricsurf.cli import main
from toricsurf.fan import fan_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestFan:
    def test_builtin_round_trip(self, capsys, tmp_path):
        code, out = run(capsys, "fan", "builtin", "--name", "king")
        assert code == 0
        fan = fan_from_json(out)
        assert fan.n == 7
        path = tmp_path / "fan.json"
        path.write_text(out)
        code, out = run(capsys, "fan", "validate", "--file", str(path))
        assert code == 0 and json.loads(out)["valid"]

    def test_builtin_with_blowups(self, capsys):
        code, out = run(
            capsys, "fan", "builtin", "--name", "hirzebruch:2",
            "--blowup", "4", "--blowup", "5", "--blowup", "6",
        )
        assert code == 0
        assert sorted(map(tuple, json.loads(out)["rays"])) == sorted(
            [(1, -1), (2, -1), (3, -1), (1, 0), (0, 1), (-1, 2), (0, -1)]
        )

    def test_invalid_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"rays": [[0,1],[1,0],[-1,2],[0,-1]]}')
        code, out = run(capsys, "fan", "validate", "--file", str(path))
        assert code == 1 and not json.loads(out)["valid"]


class TestCohom:
    def test_structure_sheaf(self, capsys):
        code, out = run(capsys, "cohom", "--fan", "king", "--divisor", "[0,0,0,0,0,0,0]")
        assert code == 0 and json.loads(out) == {"h": [1, 0, 0]}

    def test_normalized_divisor_form(self, capsys):
        code, out = run(capsys, "cohom", "--fan", "king", "--divisor", "[1,2,3,1,0]")
        assert code == 0 and json.loads(out)["h"] == [2, 0, 0]

    def test_witnesses(self, capsys):
        code, out = run(
            capsys, "cohom", "--fan", "king", "--divisor", "[0,0,0,0,1]", "--witnesses"
        )
        data = json.loads(out)
        assert code == 0
        assert {"m": [-1, -1], "signature": "0---0-+", "h": [0, 1, 0]} in data["witnesses"]

    def test_text_format(self, capsys):
        code, out = run(
            capsys, "cohom", "--fan", "p2", "--divisor", "[1,0,0]", "--format", "text"
        )
        assert code == 0 and "h = (3, 0, 0)" in out


class TestChiAcyclic:
    def test_chi(self, capsys):
        code, out = run(capsys, "chi", "--fan", "king", "--divisor", "[0,0,0,0,0]")
        assert code == 0 and json.loads(out) == {"chi": 1}

    def test_acyclic_pass(self, capsys):
        code, out = run(capsys, "acyclic", "--fan", "king", "--divisor", "[2,4,7,3,2]")
        assert code == 0
        assert json.loads(out) == {"higher_vanishes": True, "biacyclic": True, "label": "C_1"}

    def test_acyclic_fail_exit_code(self, capsys):
        code, out = run(capsys, "acyclic", "--fan", "king", "--divisor", "[2,4,8,3,2]")
        assert code == 1 and not json.loads(out)["biacyclic"]


class TestClassify:
    def test_c5_two_slice(self, capsys):
        code, out = run(capsys, "classify", "--fan", "king", "--c5", "2", "--box", "14")
        rows = json.loads(out)
        assert code == 0 and len(rows) == 11
        labels = {r["label"] for r in rows}
        assert {f"C_{j}" for j in range(1, 12)} == labels

    def test_csv_format(self, capsys):
        code, out = run(
            capsys, "classify", "--fan", "king", "--c5", "3", "--box", "6", "--format", "csv"
        )
        assert code == 0 and out.strip() == "label,coeffs"

    def test_symbolic_table(self, capsys):
        code, out = run(capsys, "classify", "--fan", "king", "--symbolic")
        table = json.loads(out)
        assert code == 0 and len(table["b_series"]) == 7


class TestSearch:
    def test_p2(self, capsys):
        code, out = run(capsys, "search", "--fan", "p2", "--length", "3", "--box", "3")
        seqs = json.loads(out)
        assert code == 0
        assert {"classes": [[0, 0, 0], [1, 0, 0], [2, 0, 0]], "hom_order": [0, 1, 2]} in seqs


class TestVerifyKing:
    def test_pass_and_exit_zero(self, capsys):
        code, out = run(capsys, "verify-king", "--box", "8", "--c5-bound", "3",
                        "--kmax", "6", "--corroboration-box", "6")
        cert = json.loads(out)
        assert code == 0
        assert cert["verdict"] == "pass"
        assert [c["id"] for c in cert["claims"]] == list(range(1, 10))

    def test_skip_claim_exits_nonzero(self, capsys):
        code, out = run(capsys, "verify-king", "--box", "6", "--c5-bound", "3",
                        "--kmax", "5", "--corroboration-box", "4", "--skip-claim", "6")
        cert = json.loads(out)
        assert code == 1 and cert["verdict"] == "qualified"


class TestArrangement:
    def test_vertices(self, capsys):
        code, out = run(
            capsys, "arrangement", "--fan", "king", "--divisor", "[0,0,0,0,1]",
            "--emit", "vertices",
        )
        rows = json.loads(out)
        assert code == 0
        assert {"lines": [0, 4], "point": ["-1", "-1"]} in rows

    def test_lines(self, capsys):
        code, out = run(
            capsys, "arrangement", "--fan", "king", "--divisor", "[0,0,0,0,1]",
            "--emit", "lines",
        )
        rows = json.loads(out)
        assert code == 0 and len(rows) == 7
        assert all(set(r) == {"ray", "offset", "segment"} for r in rows)


class TestUsageErrors:
    def test_bad_divisor(self, capsys):
        code = main(["cohom", "--fan", "king", "--divisor", "[1,2]"])
        assert code == 2

    def test_unknown_fan_file(self, capsys):
        code = main(["cohom", "--fan", "/nonexistent.json", "--divisor", "[0,0,0]"])
        assert code == 2
