import json
from fractions import Fraction

import pytest

from kwaycut.cli import EXIT_OK, EXIT_SIZE, EXIT_USAGE, EXIT_VIOLATION, RatioReport, main
from kwaycut.graph import Graph
from kwaycut.graphio import ParseError, parse_graph, serialize_graph
from kwaycut.instances import RandomGraphConfig, make_random_graph

from corpus import complete_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    path.write_text(serialize_graph(complete_graph(5)))
    return str(path)


def test_parse_examples():
    g = parse_graph("3 3\n0 1 1\n0 2 1\n1 2 1\n")
    assert g == complete_graph(3)
    g = parse_graph(b"# comment\n2 1\n0 1 3/2\n")
    assert g.edges[0].weight == Fraction(3, 2)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("2 1\n0 0 5\n", 2, "self-loop"),
        ("2 1\n0 1 0\n", 2, "positive"),
        ("2 1\n0 2 1\n", 2, "out of range"),
        ("2 1\n0 1 1.5\n", 2, "not an integer"),
        ("2 1\n0 1\n", 2, "u v w"),
        ("2 2\n0 1 1\n", 2, "declares 2 edges"),
        ("x y\n", 1, "header"),
        ("# only a comment\n", 1, "header"),
        ("3 1\n0 1 1/0\n", 2, "denominator"),
        ("3 1\n-1 1 1\n", 2, "nonnegative"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as info:
        parse_graph(text)
    assert info.value.lineno == line


def test_roundtrip():
    for seed in range(10):
        g = make_random_graph(RandomGraphConfig(7, Fraction(1, 2), (1, 9), seed))
        g = Graph(g.n, tuple(e._replace(weight=e.weight / (1 + seed % 3)) for e in g.edges))
        assert parse_graph(serialize_graph(g, comment="x\ny")) == g


def test_solve_k5(capsys, k5_file):
    code, out, err = run(capsys, "solve", "--input", k5_file, "--k", "5", "--h", "2")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["theoretical_bound"] == "8/5"
    assert report["sequence"] == [2, 2, 2, 2]
    assert report["optimal_weight"] is None and report["achieved_ratio"] is None
    assert report["achieved_weight"] == "10"
    assert len(report["trace"]) == 4
    assert "iterative-split" in err


def test_verify_and_exact(capsys, k5_file):
    code, out, _ = run(capsys, "verify", "--input", k5_file, "--k", "5", "--sequence", "2,2,3")
    assert code == EXIT_OK
    report = json.loads(out)
    assert Fraction(report["achieved_ratio"]) <= Fraction(report["theoretical_bound"])
    code, out, _ = run(capsys, "exact", "--input", k5_file, "--k", "3")
    assert code == EXIT_OK and json.loads(out)["achieved_weight"] == "7"


def test_reports_deterministic(capsys, k5_file):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "--input", k5_file, "--k", "4", "--h", "3")
        doc = json.loads(out)
        doc.pop("runtime_ms")
        outs.append(doc)
    assert outs[0] == outs[1]


def test_ratio(capsys):
    code, out, _ = run(capsys, "ratio", "--k", "7", "--h", "4")
    assert code == EXIT_OK and json.loads(out) == "10/7"
    _, out, _ = run(capsys, "ratio", "--sequence", "2,4,4")
    assert json.loads(out) == "43/28"


def test_facts(capsys):
    code, out, err = run(capsys, "facts", "--kmax", "12")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert len(reports) == 7
    assert all(r["violations"] == [] for r in reports)
    assert "0 violations" in err


def test_gen_tight_then_verify(capsys, tmp_path):
    path = tmp_path / "tight.txt"
    code, out, _ = run(capsys, "gen", "tight", "--sequence", "2,3,3", "--output", str(path))
    assert code == EXIT_OK
    meta = json.loads(out)
    assert meta["theoretical_ratio"] == "23/15" and meta["optimal_weight"] == "15"
    code, out, _ = run(capsys, "verify", "--input", str(path), "--sequence", "2,3,3")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["achieved_ratio"] == "23/15" == report["theoretical_bound"]
    adversarial = sorted(i for s in meta["adversarial_split_edge_ids"] for i in s)
    assert report["cut_edge_ids"] == adversarial


def test_tight_k8_solve_and_size_limit(capsys, tmp_path):
    path = tmp_path / "tight8.txt"
    run(capsys, "gen", "tight", "--k", "8", "--h", "4", "--output", str(path))
    code, out, _ = run(capsys, "solve", "--input", str(path), "--k", "8", "--h", "4")
    assert code == EXIT_OK
    assert Fraction(json.loads(out)["achieved_weight"]) / 28 == Fraction(43, 28)
    # the exact 8-way optimum needs 15 vertices after contraction
    code, _, err = run(capsys, "verify", "--input", str(path), "--k", "8", "--h", "4")
    assert code == EXIT_SIZE and "limit" in err


def test_gen_random_stdout(capsys):
    code, out, err = run(capsys, "gen", "random", "--n", "8", "--p", "1/2", "--seed", "42")
    assert code == EXIT_OK
    g = parse_graph(out)
    assert g == make_random_graph(RandomGraphConfig(8, Fraction(1, 2), (1, 10), 42))
    assert json.loads(err)["m"] == g.m


def test_exit_codes(capsys, tmp_path, k5_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0 5\n")
    assert run(capsys, "solve", "--input", str(bad), "--k", "2", "--h", "2")[0] == EXIT_USAGE
    assert run(capsys, "solve", "--input", k5_file, "--k", "6", "--h", "2")[0] == EXIT_USAGE
    assert run(capsys, "solve", "--input", k5_file, "--sequence", "3,2")[0] == EXIT_USAGE
    disconnected = tmp_path / "two.txt"
    disconnected.write_text("4 2\n0 1 1\n2 3 1\n")
    code, _, err = run(capsys, "solve", "--input", str(disconnected), "--k", "3", "--h", "2")
    assert code == EXIT_USAGE and "star_closure" in err
    big = tmp_path / "big.txt"
    big.write_text(serialize_graph(complete_graph(16)))
    assert run(capsys, "exact", "--input", str(big), "--k", "3")[0] == EXIT_SIZE
    with pytest.raises(SystemExit):
        main(["solve", "--input", k5_file, "--k", "5", "--h", "2", "--sequence", "2,2,2,2"])


def test_ratio_report_violation_flag():
    report = RatioReport("x", 3, [2, 2], Fraction(5), Fraction(4, 3), optimal_weight=Fraction(3))
    assert not report.within_bound()
    assert EXIT_VIOLATION == 1
