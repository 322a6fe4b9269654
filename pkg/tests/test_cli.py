import json
import subprocess
import sys

import pytest

from nccrkit import cli
from nccrkit.fixtures import fixture_path
from nccrkit.formats import read_dimer
from nccrkit.toric import InternalFault


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def fx(name):
    return str(fixture_path(name))


def summary(out):
    line = next(l for l in out.splitlines() if l.startswith("summary: "))
    return line[len("summary: "):].split("; ")


def test_toric_sigma(capsys):
    code, out, _ = run(capsys, "toric", fx("sigma_cone"))
    assert code == 0
    assert "Cl = Z + Z/2 + Z/2" in out and "steady splitting NCCR: NO" in out
    assert "simplicial: no" in out
    assert "splitting NCCR may exist while steady does not" in out


def test_toric_octant(capsys):
    code, out, _ = run(capsys, "toric", fx("octant_cone"))
    assert code == 0
    assert "quotient group: trivial" in out and "steady splitting NCCR: YES" in out


def test_toric_z14(capsys):
    code, out, _ = run(capsys, "toric", fx("z14_cone"))
    assert code == 0 and "quotient group: Z/14" in out


def test_toric_malformed_ray(capsys):
    code, _, err = run(capsys, "toric", fx("malformed_cone"))
    assert code == 2
    assert "non_primitive" in err and "ray 2" in err


def test_toric_bad_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 3,\n "rays": [[1, 0, 0],, ]}')
    code, _, err = run(capsys, "toric", p)
    assert code == 2 and f"{p}:2:" in err


def test_toric_bad_field(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2, "rays": [[1, 0], [0, "x"]]}')
    code, _, err = run(capsys, "toric", p)
    assert code == 2 and "rays[1][1]" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "toric", "/nonexistent/cone.json")
    assert code == 2 and "cannot read" in err


def test_dimer_one_hexagon(capsys):
    code, out, _ = run(capsys, "dimer", fx("one_hexagon"))
    assert code == 0
    parts = summary(out)
    for want in "consistent: yes; hexagonal: yes; steady: yes; group: trivial".split("; "):
        assert want in parts


def test_dimer_sigma(capsys):
    code, out, _ = run(capsys, "dimer", fx("sigma_dimer"))
    parts = summary(out)
    for want in "hexagonal: no; steady: no; polygon hull: 2×2 square".split("; "):
        assert want in parts


def test_dimer_conifold(capsys):
    code, out, _ = run(capsys, "dimer", fx("conifold"))
    parts = summary(out)
    for want in "consistent: yes; hexagonal: no; Cl = Z".split("; "):
        assert want in parts


def test_dimer_bigon_certificate(capsys):
    code, out, _ = run(capsys, "dimer", fx("bigon"))
    assert code == 0 and "certificate: trivial_class" in out


def test_dimer_exports(tmp_path, capsys):
    dot, poly = tmp_path / "q.dot", tmp_path / "p.txt"
    code, _, _ = run(capsys, "dimer", fx("conifold"), "--emit-dot", dot, "--emit-polygon", poly)
    assert code == 0
    assert dot.read_text().count("->") == 4
    assert sorted(poly.read_text().split("\n")[:-1]) == ["0 0 1", "0 1 1", "1 0 1", "1 1 1"]


def test_dimer_matching_bound(capsys):
    code, _, err = run(capsys, "dimer", fx("sigma_dimer"), "--max-matchings", "3")
    assert code == 2 and "bound" in err


def test_generate_z14(tmp_path, capsys):
    out_file = tmp_path / "g.json"
    code, out, _ = run(capsys, "generate", "14", "1,5,8", "-o", out_file)
    assert code == 0 and "dual quiver ≅ McKay quiver: yes" in out
    assert read_dimer(out_file).F == 14


def test_generate_trivial(tmp_path, capsys):
    out_file = tmp_path / "g.json"
    code, _, _ = run(capsys, "generate", "1", "0,0,0", "-o", out_file)
    m = read_dimer(out_file)
    assert code == 0 and (m.V, m.E, m.F) == (2, 3, 1)


def test_generate_bad_sum(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "4", "2,2,1", "-o", tmp_path / "g.json")
    assert code == 2 and "sum" in err
    assert not (tmp_path / "g.json").exists()


def test_mckay_dot(capsys):
    code, out, _ = run(capsys, "mckay", "2", "1,1,0")
    assert code == 0 and out.startswith("digraph McKay") and out.count("->") == 6


def test_steady_outputs(capsys):
    assert "steady: yes" in run(capsys, "steady", "4", "0,2")[1]
    assert "steady: no; closure = {0,1,2,3}" in run(capsys, "steady", "4", "0,1,2")[1]
    assert "steady: yes; generates Cl: no" in run(capsys, "steady", "2,2", "(0,0),(1,0)")[1]


def test_steady_empty(capsys):
    code, _, err = run(capsys, "steady", "4", "")
    assert code == 2 and "0 ≠ M" in err


def test_steady_infinite_group(capsys):
    code, out, _ = run(capsys, "steady", "Z + Z/2", "(0,0),(0,1)")
    assert code == 0 and "steady: yes" in out and "undecided" in out


@pytest.mark.parametrize("argv", [
    ["toric", fx("sigma_cone")], ["dimer", fx("sigma_dimer")], ["steady", "4", "0,1,2"],
    ["mckay", "14", "1,5,8"],
])
def test_json_is_deterministic(capsys, argv):
    code, first, _ = run(capsys, *argv, "--format", "json")
    _, second, _ = run(capsys, *argv, "--format", "json")
    assert code == 0 and first == second
    data = json.loads(first)
    assert data["schema"] == 1 and data["command"] == argv[0]


def test_internal_fault_exit_code(monkeypatch, capsys):
    def boom(C):
        raise InternalFault("forced")
    monkeypatch.setattr(cli, "condition_report", boom)
    code, _, err = run(capsys, "toric", fx("octant_cone"))
    assert code == 1 and "internal fault" in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dimer", fx("conifold"), "--max-matchings", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["generate", "14", "1,5,8"])  # -o is required


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nccrkit", "steady", "6", "0,3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "steady: yes" in res.stdout
