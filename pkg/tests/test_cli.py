import json

from zdgraph.cli import main
from zdgraph.rings import make_zn, multiplicative_semigroup
from zdgraph.topology import make_space


def test_analyze_ring_invariants(capsys):
    assert main(["analyze", "--ring", "Zn:6", "--tasks", "invariants"]) == 0
    out = capsys.readouterr().out
    assert "diameter = 2" in out and "clique = 2" in out


def test_analyze_json_report(capsys):
    assert main(["analyze", "--ring", "Zn:6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["object"] == "Zn:6"
    assert data["results"]["invariants"]["gamma"]["girth"] == "inf"


def test_analyze_triangle_vs_point(capsys):
    code = main([
        "analyze", "--ring", "mvq:p=2;vars=x,y;rel=x2,xy,y2",
        "--tasks", "invariants,eq-quotient", "--json",
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["invariants"]["gamma"]["diameter"] == 1
    assert data["results"]["eq-quotient"]["gamma_e"]["diameter"] == 0


def test_analyze_fan_specs_suite(capsys):
    code = main(["analyze", "--poset", "fan:generics=1;sharing=all",
                 "--tasks", "specs-suite", "--json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["specs-suite"]["passed"] is True


def test_analyze_content_check(capsys):
    code = main(["analyze", "--ring", "Zn:6", "--check", "armendariz",
                 "--degree", "1", "--json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["armendariz"]["passed"] is True


def test_analyze_semigroup_file(tmp_path, capsys):
    table = multiplicative_semigroup(make_zn(6))
    path = tmp_path / "z6.json"
    path.write_text(table.to_json())
    assert main(["analyze", "--semigroup", str(path), "--tasks", "eq-quotient"]) == 0
    out = capsys.readouterr().out
    assert "nilpotent_free = True" in out


def test_analyze_space_axioms(tmp_path, capsys):
    X = make_space(["a", "b"], [frozenset(), frozenset({1}), frozenset({0, 1})])
    path = tmp_path / "sierpinski.json"
    path.write_text(X.to_json())
    assert main(["analyze", "--space", str(path), "--tasks", "axioms"]) == 0
    out = capsys.readouterr().out
    assert "t_half = True" in out and "t1 = False" in out


def test_analyze_lattice(capsys):
    assert main(["analyze", "--lattice", "powerset:3", "--tasks", "t1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["t1"] == {
        "diameter": 3, "girth": 3, "clique": 3, "chromatic": 3}
    assert main(["analyze", "--lattice", "symbolic-cofinite", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["invariants"]["t1_lattice"]["clique"] == "countably-infinite"


def test_analyze_requires_one_object(capsys):
    assert main(["analyze", "--tasks", "invariants"]) == 1
    assert main(["analyze", "--ring", "Zn:6", "--space", "x.json"]) == 1


def test_analyze_bad_spec_is_input_error(capsys):
    assert main(["analyze", "--ring", "bogus:9"]) == 1


def test_export_dot_stable(capsys):
    assert main(["export", "--ring", "Zn:6", "--graph", "gamma", "--format", "dot"]) == 0
    first = capsys.readouterr().out
    assert main(["export", "--ring", "Zn:6", "--graph", "gamma", "--format", "dot"]) == 0
    assert capsys.readouterr().out == first
    assert '"3" -- "4";' in first


def test_export_ag_json(capsys):
    code = main(["export", "--ring", "prod:Zn:2,Zn:2,Zn:2", "--graph", "ag",
                 "--format", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["vertices"]) == 6  # proper nonzero ideals


def test_export_empty_graph(capsys):
    assert main(["export", "--ring", "gf:5", "--graph", "gamma", "--format", "dot"]) == 0
    assert capsys.readouterr().out == "graph zd {\n}\n"


def test_export_to_file(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["export", "--ring", "Zn:6", "-o", str(out)]) == 0
    assert '"2" -- "3";' in out.read_text()


def test_verify_known_suite(capsys):
    assert main(["verify", "comaximal"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["verify", "triangle-point", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True and data["suite"] == "triangle-point"


def test_verify_unknown_suite(capsys):
    assert main(["verify", "nope"]) == 1


def test_verify_seeded(capsys):
    assert main(["verify", "symbolic-lattice", "--seed", "11", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["seed"] == 11


def test_failed_check_exits_2(capsys):
    code = main(["analyze", "--ring", "mvq:p=2;vars=x,y;rel=x2,y2",
                 "--check", "armendariz", "--degree", "1", "--json"])
    assert code == 2
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["armendariz"]["passed"] is False
    assert data["results"]["armendariz"]["witness"] is not None


def test_ideals_task(capsys):
    assert main(["analyze", "--ring", "Zn:6", "--tasks", "ideals", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    ideals = data["results"]["ideals"]
    assert ideals["ideals"] == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert ideals["labels"] == ["(0)", "(3)", "(2)", "(1)"]


def test_validate_task(tmp_path, capsys):
    table = multiplicative_semigroup(make_zn(4))
    path = tmp_path / "z4.json"
    path.write_text(table.to_json())
    assert main(["analyze", "--semigroup", str(path), "--tasks", "validate",
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"]["validate"]["ok"] is True
    assert data["results"]["validate"]["nilpotent_free"] is False


def test_guard_exceeded_is_input_error(capsys, monkeypatch):
    monkeypatch.setenv("ZDGRAPH_MAX_POLYS", "10")
    assert main(["analyze", "--ring", "Zn:6", "--check", "armendariz",
                 "--degree", "1"]) == 1
    assert "guard exceeded" in capsys.readouterr().err


def test_reports_deterministic_for_fixed_seed(capsys):
    from zdgraph.suites import verify_symbolic_lattice

    a = verify_symbolic_lattice(seed=5).to_dict()
    b = verify_symbolic_lattice(seed=5).to_dict()
    a.pop("elapsed_s"), b.pop("elapsed_s")
    assert a == b
