import json


from gring.cli import main
from gring.groups import cyclic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDecompose:
    def test_example_3_4_text(self, capsys):
        code, out, _ = run(capsys, "decompose", "--group", "c5xc5", "--n", "36")
        assert code == 0
        assert "Z_4" in out and "6 Z_4[xi_4]" in out and "6 Z_9[xi_4]" in out

    def test_example_3_4_json(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--group", "c5xc5", "--n", "36", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 36
        assert [p["p"] for p in report["primes"]] == [2, 3]
        for prime in report["primes"]:
            mults = [row["multiplicity"] for row in prime["components"]]
            degs = [row["ring"]["m"] for row in prime["components"]]
            assert mults == [1, 6] and degs == [1, 4]
            assert prime["dimension_check"]

    def test_trivial_group(self, capsys):
        code, out, _ = run(capsys, "decompose", "--group", "c1", "--p", "3", "--r", "2")
        assert code == 0
        assert "Z_9" in out

    def test_determinism_byte_identical(self, capsys):
        _, out1, _ = run(capsys, "decompose", "--group", "s4", "--n", "35", "--format", "json")
        _, out2, _ = run(capsys, "decompose", "--group", "s4", "--n", "35", "--format", "json")
        assert out1 == out2

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "d8", "--p", "3", "--r", "2", "--format", "json")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload


class TestUsageErrors:
    def test_gcd_violation_exit_2(self, capsys):
        code, _, err = run(capsys, "decompose", "--group", "c5", "--n", "10")
        assert code == 2
        assert "prime 5" in err

    def test_missing_group(self, capsys):
        code, _, err = run(capsys, "decompose", "--n", "36")
        assert code == 2

    def test_unknown_group(self, capsys):
        code, _, err = run(capsys, "decompose", "--group", "xyzzy", "--n", "7")
        assert code == 2

    def test_n_conflicts_with_p(self, capsys):
        code, _, err = run(capsys, "decompose", "--group", "c5", "--n", "4", "--p", "2")
        assert code == 2

    def test_units_rejects_composite_n(self, capsys):
        code, _, err = run(capsys, "units", "--group", "c5", "--n", "36")
        assert code == 2
        assert "single prime power" in err


class TestUnits:
    def test_c5_r1_single_generator(self, capsys):
        code, out, _ = run(
            capsys, "units", "--group", "c5", "--p", "2", "--r", "1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["generators"]) == 1
        assert payload["generators"][0]["order"] == 15

    def test_c5_r3_fixture_orders(self, capsys):
        code, out, _ = run(
            capsys, "units", "--group", "c5", "--p", "2", "--r", "3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert [g["order"] for g in payload["generators"]] == [2, 2, 60, 4, 4, 2, 2]
        assert all(g["kind"] == "fixture" for g in payload["generators"])

    def test_certify_closure(self, capsys):
        code, out, _ = run(
            capsys, "units", "--group", "c5", "--p", "2", "--r", "2",
            "--certify-closure", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["closure"]["certified"]
        assert payload["closure"]["closure_order"] == 480

    def test_general_synthesis(self, capsys):
        code, out, _ = run(
            capsys, "units", "--group", "s3", "--p", "5", "--r", "1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        kinds = {g["kind"] for g in payload["generators"]}
        assert kinds == {"diagonal", "elementary"}


class TestGalois:
    def test_gr_8_2(self, capsys):
        code, out, _ = run(
            capsys, "galois", "--p", "2", "--r", "3", "--m", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["unit_count"] == 48
        assert payload["closure_order"] == 48
        assert payload["modulus"] == [1, 1, 1]

    def test_bad_p(self, capsys):
        code, _, err = run(capsys, "galois", "--p", "4", "--r", "1", "--m", "2")
        assert code == 2


class TestVerify:
    def test_verify_passes_and_emits_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--format", "json")
        assert code == 0
        payload = json.loads(out.splitlines()[-1])
        assert payload["ok"]
        assert all(r["ok"] for r in payload["results"])


class TestFileInput:
    def test_cayley_file(self, tmp_path, capsys):
        g = cyclic(3)
        path = tmp_path / "c3.tbl"
        path.write_text(
            "3\n" + "\n".join(" ".join(str(v) for v in row) for row in g.table)
        )
        code, out, _ = run(
            capsys, "decompose", "--group-file", str(path), "--p", "2", "--r", "2"
        )
        assert code == 0
        assert "Z_4" in out

    def test_perm_file(self, tmp_path, capsys):
        path = tmp_path / "a4.gens"
        path.write_text("(1 2 3)\n(2 3 4)\n")
        code, out, _ = run(
            capsys, "decompose", "--perm-file", str(path), "--p", "5", "--r", "1"
        )
        assert code == 0
        assert "M_3" in out

    def test_missing_file(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--group-file", "/no/such/file", "--p", "3", "--r", "1"
        )
        assert code == 2
