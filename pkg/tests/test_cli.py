import json

import pytest

from sectavg import io as pio
from sectavg.cli import main
from sectavg.gallery import quadrilateral_sum, pappus_generators


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_json_roundtrip(tmp_path):
    P = quadrilateral_sum()
    pio.save(P, tmp_path / "p.json")
    Q = pio.load(tmp_path / "p.json")
    assert Q.key() == P.key() and Q.facet_census() == P.facet_census()
    G = pappus_generators()
    pio.save(G, tmp_path / "g.json")
    assert pio.load(tmp_path / "g.json") == G


def test_rationals_serialised_as_strings(tmp_path):
    from sectavg.exact import Rat
    from sectavg.polytope import box

    d = pio.polytope_to_dict(box((0, 0, 0), (Rat(1, 3), 1, 1)))
    assert ["1/3", "1", "1"] in d["vertices"]


def test_avg_exact_cube(tmp_path, capsys):
    f = tmp_path / "cube.json"
    assert run(capsys, "example", "cube", "--out", str(f))[0] == 0
    code, out, _ = run(capsys, "avg", "--polytope", str(f), "--dir", "1,1,1", "--exact")
    assert code == 0
    d = json.loads(out)
    assert d["value"] == "4" and d["method"] == "exact" and d["seed"] == 0


def test_avg_sweep_is_reproducible(capsys):
    a = run(capsys, "avg", "--polytope", "tetrahedron", "--dir", "2,1,1", "--sweep", "5000", "--seed", "4")[1]
    b = run(capsys, "--seed", "4", "avg", "--polytope", "tetrahedron", "--dir", "2,1,1", "--sweep", "5000")[1]
    assert a == b and "stderr" in json.loads(a)


def test_tiling_command(capsys):
    code, out, _ = run(capsys, "tiling", "--normal", "1,1,-1", "--offset", "0", "--window", "50")
    assert code == 0 and json.loads(out)["average"] == "3"
    code, out, _ = run(capsys, "tiling", "--normal", "1,2,3", "--offset", "1/2", "--series", "10,20", "--out", "csv")
    assert out.splitlines()[0] == "m,tiles,n3,n4,n5,n6,average"


def test_zono_command(capsys):
    code, out, _ = run(capsys, "zono", "--generators", "pappus_generators", "--predict-lambda")
    d = json.loads(out)
    assert code == 0 and d["lambda"] == 10 and d["constant"]


def test_example_with_params(tmp_path, capsys):
    f = tmp_path / "z.json"
    run(capsys, "example", "parabola_generators", "n=4", "--out", str(f))
    assert len(json.loads(f.read_text())["generators"]) == 4


def test_fragment_csv_bytes_identical(capsys):
    argv = ["fragment", "--polytope", "cube", "--steps", "2", "--policy", "paths:50", "--seed", "3", "--format", "csv"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv, "--threads", "2")[1]
    assert a == b and a.splitlines()[0] == "step,mean_V,stderr,n_fragments"


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as e:
        main(["avg", "--polytope", "cube", "--dir", "x"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["nosuch"])
    assert e.value.code == 2
    assert main(["avg", "--polytope", "cube", "--dir", "0,0,0"]) == 1
    assert main(["fragment", "--polytope", "cube", "--steps", "11", "--policy", "full"]) == 1
    assert main(["tiling", "--normal", "0,0,1", "--offset", "99/2", "--window", "3"]) == 1


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "1,8,11")
    assert code == 0 and out.strip().endswith("3/3 checks passed")
