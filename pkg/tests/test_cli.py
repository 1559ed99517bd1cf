import json
import subprocess
import sys

import numpy as np
import pytest

from cli_cases import MALFORMED, fx
from paragroup import make_standard
from paragroup.cli import main
from paragroup.serialize import (FormatError, dumps, loads, parse_rees_spec,
                                 parse_semigroup, rees_spec_to_dict,
                                 semigroup_to_dict)
from paragroup.zoo import random_rees


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestSerialization:
    def test_round_trip(self, semigroups):
        for _, S in semigroups:
            text = dumps(semigroup_to_dict(S))
            T = parse_semigroup(loads(text))
            assert T.table.tobytes() == S.table.tobytes() and T.names == S.names
            assert dumps(semigroup_to_dict(T)) == text

    def test_rees_round_trip(self):
        R = random_rees(11, 8, 4, 4)
        R2 = parse_rees_spec(loads(dumps(rees_spec_to_dict(R))))
        assert R2.shape == R.shape and np.array_equal(R2.sigma, R.sigma)

    def test_duplicate_key(self):
        with pytest.raises(FormatError, match="duplicate"):
            loads('{"kind": "cayley", "kind": "cayley"}')

    def test_names_checked(self):
        with pytest.raises(FormatError, match="names"):
            parse_semigroup({"kind": "cayley", "order": 1, "table": [[0]], "names": ["a", "b"]})


class TestCommands:
    def test_analyze_band(self, capsys, tmp_path):
        code, out, _ = run(capsys, "zoo", "rectangular_band", 2, 3, "-o", tmp_path / "b.json")
        assert code == 0
        code, out, _ = run(capsys, "analyze", tmp_path / "b.json")
        report = json.loads(out)
        assert code == 0
        assert list(report) == ["order", "verified", "idempotent_count", "idempotents", "is_simple",
                                "primitive_idempotents", "is_completely_simple", "maximal_subgroup_orders"]
        assert report["is_simple"] and report["is_completely_simple"]
        assert report["idempotent_count"] == 6 and report["maximal_subgroup_orders"] == [1] * 6

    def test_analyze_zero(self, capsys, tmp_path):
        run(capsys, "zoo", "zero_semigroup", 3, "-o", tmp_path / "z.json")
        code, out, _ = run(capsys, "analyze", tmp_path / "z.json")
        assert code == 0 and json.loads(out)["is_simple"] is False

    def test_construct_band(self, capsys, tmp_path):
        spec = {"kind": "rees", "group": semigroup_to_dict(make_standard("cyclic_group", 1)),
                "x_size": 2, "y_size": 3, "sigma": [[0, 0]] * 3}
        (tmp_path / "r.json").write_text(json.dumps(spec))
        assert run(capsys, "construct", tmp_path / "r.json", "-o", tmp_path / "s.json")[0] == 0
        data = json.loads((tmp_path / "s.json").read_text())
        assert data["names"][:2] == ["(0,0,0)", "(0,0,1)"]
        code, out, _ = run(capsys, "analyze", tmp_path / "s.json")
        assert json.loads(out)["is_completely_simple"]

    def test_construct_group(self, capsys, tmp_path):
        c3 = semigroup_to_dict(make_standard("cyclic_group", 3))
        spec = {"kind": "rees", "group": c3, "x_size": 1, "y_size": 1, "sigma": [[0]]}
        (tmp_path / "r.json").write_text(json.dumps(spec))
        run(capsys, "construct", tmp_path / "r.json", "-o", tmp_path / "s.json")
        assert json.loads((tmp_path / "s.json").read_text())["table"] == c3["table"]

    @pytest.mark.parametrize("kind,params,shape", [
        ("left_zero", [2], (2, 1, 1)), ("cyclic_group", [5], (1, 5, 1))])
    def test_decompose(self, capsys, tmp_path, kind, params, shape):
        run(capsys, "zoo", kind, *params, "-o", tmp_path / "s.json")
        assert run(capsys, "decompose", tmp_path / "s.json", "-o", tmp_path / "d.json")[0] == 0
        d = json.loads((tmp_path / "d.json").read_text())
        assert (len(d["X_e"]), d["group"]["order"], len(d["Y_e"])) == shape
        code, out, _ = run(capsys, "verify", tmp_path / "s.json", tmp_path / "d.json")
        assert code == 0 and json.loads(out)["passed"]

    def test_decompose_zero_witness(self, capsys, tmp_path):
        code, out, err = run(capsys, "decompose", fx("zero_semigroup_2.json"), "-o", tmp_path / "d.json")
        assert code == 4 and out == ""
        assert '"proper_ideal_element": 0' in err
        assert not (tmp_path / "d.json").exists()

    def test_fixture_decomposition_is_current(self, capsys, tmp_path):
        run(capsys, "decompose", fx("band_2x3.json"), "-o", tmp_path / "d.json")
        with open(fx("band_2x3_decomposition.json")) as f:
            assert (tmp_path / "d.json").read_text() == f.read()

    def test_verify_report_always_printed(self, capsys):
        code, out, err = run(capsys, "verify", fx("band_2x3.json"), fx("band_2x3_decomposition_swapped.json"))
        assert code == 5
        assert json.loads(out) == {"bijective": True, "homomorphic": False,
                                   "size_consistent": True, "passed": False}
        code, out, _ = run(capsys, "verify", fx("band_2x3.json"),
                           fx("band_2x3_decomposition_size_inconsistent.json"))
        assert code == 5 and json.loads(out)["size_consistent"] is False

    def test_zoo_random_rees(self, capsys, tmp_path):
        for name in ("a.json", "b.json"):
            run(capsys, "zoo", "random-rees", "--seed", 42, "-o", tmp_path / name)
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
        assert json.loads((tmp_path / "a.json").read_text())["kind"] == "rees"

    def test_zoo_budget(self, capsys, tmp_path):
        code, _, err = run(capsys, "--max-order", "10", "zoo", "full_transformation_monoid", 3,
                           "-o", tmp_path / "t.json")
        assert code == 3 and "budget" in err
        code, _, _ = run(capsys, "zoo", "full_transformation_monoid", 3, "--max-order", "27",
                         "-o", tmp_path / "t.json")
        assert code == 0

    def test_zoo_bad_params(self, capsys, tmp_path):
        assert run(capsys, "zoo", "symmetric_group", 9, "-o", tmp_path / "x.json")[0] == 2
        assert run(capsys, "zoo", "left_zero", "two", "-o", tmp_path / "x.json")[0] == 2

    def test_bicyclic(self, capsys):
        code, out, _ = run(capsys, "bicyclic", "--check-primitive-up-to", 1000)
        report = json.loads(out)
        assert code == 0 and report["pairs"] == 1000 and report["all_strict"]
        assert report["last_pair"] == [[1000, 1000], [999, 999]]

    @pytest.mark.parametrize("name,argv,code,needle", MALFORMED, ids=[m[0] for m in MALFORMED])
    def test_malformed(self, capsys, tmp_path, name, argv, code, needle):
        argv = [a.replace("{out}", str(tmp_path / "out.json")) for a in argv]
        got, out, err = run(capsys, *argv)
        assert got == code
        assert needle in err
        assert err.startswith("paragroup ")

    def test_console_script(self, tmp_path):
        proc = subprocess.run([sys.executable, "-m", "paragroup.cli", "analyze", fx("band_2x3.json")],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and json.loads(proc.stdout)["order"] == 6
