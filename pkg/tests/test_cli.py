import json

import pytest

from matchpose import ParseError
from matchpose.cli import (
    EXIT_DISAGREE,
    EXIT_NOT_FACTORIZABLE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_TOO_LARGE,
    main,
    parse_graph,
    parse_report,
    serialize_report,
)

from helpers import e1

E1_TEXT = "4 4\n0 1\n2 3\n0 2\n0 3\n"
C6_TEXT = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"
K3_TEXT = "3 3\n0 1\n1 2\n0 2\n"


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_graph_k2(tmp_path):
    g, labels = parse_graph(_write(tmp_path, "k2.txt", "2 1\n0 1\n"))
    assert g.n == 2 and g.edges == frozenset({(0, 1)})
    assert labels == ["0", "1"]


def test_parse_graph_e1(tmp_path):
    g, _ = parse_graph(_write(tmp_path, "e1.txt", E1_TEXT))
    assert g.edges == e1().edges


def test_parse_graph_self_loop(tmp_path):
    with pytest.raises(ParseError) as exc:
        parse_graph(_write(tmp_path, "loop.txt", "2 1\n0 0\n"))
    assert exc.value.line == 2


def test_parse_graph_labeled_round_trip(tmp_path):
    g, labels = parse_graph(_write(tmp_path, "lab.txt", "4 3\na b\nb c\nc d\n"))
    assert g.n == 4 and labels == ["a", "b", "c", "d"]
    ids = {lab: i for i, lab in enumerate(labels)}
    assert all(labels[ids[lab]] == lab for lab in labels)
    assert g.has_edge(ids["a"], ids["b"]) and g.has_edge(ids["c"], ids["d"])


def test_parse_graph_json(tmp_path):
    path = _write(tmp_path, "g.json", json.dumps({"n": 2, "edges": [[0, 1]]}))
    g, labels = parse_graph(path)
    assert g.edges == frozenset({(0, 1)}) and labels == ["0", "1"]


def test_parse_graph_errors(tmp_path):
    with pytest.raises(ParseError):
        parse_graph(_write(tmp_path, "bad.txt", "not a header\n"))
    with pytest.raises(ParseError):
        parse_graph(_write(tmp_path, "dup.txt", "2 2\n0 1\n1 0\n"))
    with pytest.raises(ParseError):
        parse_graph(_write(tmp_path, "count.txt", "2 2\n0 1\n"))
    with pytest.raises(ParseError):
        parse_graph(str(tmp_path / "missing.txt"))


def test_analyze_e1_golden(tmp_path, capsys):
    path = _write(tmp_path, "e1.txt", E1_TEXT)
    assert main(["analyze", path, "--json"]) == EXIT_OK
    report = parse_report(capsys.readouterr().out)
    assert report == {
        "schema": 1,
        "graph": {"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [2, 3]]},
        "labels": ["0", "1", "2", "3"],
        "matching": [[0, 1], [2, 3]],
        "decomposition": {
            "allowed": [[0, 1], [2, 3]],
            "components": [[0, 1], [2, 3]],
        },
        "partition": {
            "classes": [
                {"component": 0, "vertices": [0]},
                {"component": 0, "vertices": [1]},
                {"component": 1, "vertices": [2]},
                {"component": 1, "vertices": [3]},
            ]
        },
        "poset": {
            "arcs": [[0, 1]],
            "leq": [[True, True], [False, True]],
            "covers": [[0, 1]],
        },
    }
    assert len(report["decomposition"]["components"]) == 2
    assert all(len(c["vertices"]) == 1 for c in report["partition"]["classes"])
    assert len(report["poset"]["covers"]) == 1


def test_analyze_c6_golden(tmp_path, capsys):
    path = _write(tmp_path, "c6.txt", C6_TEXT)
    assert main(["analyze", path, "--json"]) == EXIT_OK
    report = parse_report(capsys.readouterr().out)
    assert report["decomposition"]["components"] == [[0, 1, 2, 3, 4, 5]]
    assert [c["vertices"] for c in report["partition"]["classes"]] == [
        [0, 2, 4],
        [1, 3, 5],
    ]
    assert report["poset"]["covers"] == []


def test_analyze_text_output(tmp_path, capsys):
    path = _write(tmp_path, "e1.txt", E1_TEXT)
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "components\t2" in out
    assert "covers\tH0<H1" in out


def test_analyze_not_factorizable(tmp_path):
    assert main(["analyze", _write(tmp_path, "k3.txt", K3_TEXT)]) == (
        EXIT_NOT_FACTORIZABLE
    )


def test_analyze_parse_error(tmp_path):
    assert main(["analyze", _write(tmp_path, "bad.txt", "junk\n")]) == EXIT_PARSE


def test_report_round_trip(tmp_path, capsys):
    path = _write(tmp_path, "e1.txt", E1_TEXT)
    main(["analyze", path, "--json"])
    report = parse_report(capsys.readouterr().out)
    assert parse_report(serialize_report(report)) == report
    assert parse_report(serialize_report(report, compact=True)) == report


def test_analyze_dot_and_figure(tmp_path, capsys):
    path = _write(tmp_path, "e1.txt", E1_TEXT)
    dot = tmp_path / "e1.dot"
    fig = tmp_path / "e1.png"
    assert main(["analyze", path, "--dot", str(dot), "--figure", str(fig)]) == EXIT_OK
    text = dot.read_text()
    assert "digraph matchpose" in text
    assert 'label="H0: [0, 1]"' in text
    assert 'label="H1: [2, 3]"' in text
    assert "ltail=cluster_h0, lhead=cluster_h1" in text
    assert fig.stat().st_size > 0


def test_verify_file_ok(tmp_path, capsys):
    path = _write(tmp_path, "e1.txt", E1_TEXT)
    assert main(["verify", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "agreed\tallowed-edges" in out
    assert "MISMATCH" not in out


def test_verify_random_ok(capsys):
    assert main(["verify", "--random", "6", "9", "7", "4"]) == EXIT_OK
    lines = [l for l in capsys.readouterr().out.splitlines() if l]
    assert all(l.startswith("agreed") for l in lines)


def test_verify_oversized(tmp_path, monkeypatch):
    n = 20
    text = f"{n} {n // 2}\n" + "".join(
        f"{2 * i} {2 * i + 1}\n" for i in range(n // 2)
    )
    path = _write(tmp_path, "big.txt", text)
    monkeypatch.delenv("MATCHPOSE_ORACLE_MAX_N", raising=False)
    assert main(["verify", path]) == EXIT_TOO_LARGE


def test_verify_env_override(tmp_path, monkeypatch, capsys):
    n = 14
    text = f"{n} {n // 2}\n" + "".join(
        f"{2 * i} {2 * i + 1}\n" for i in range(n // 2)
    )
    path = _write(tmp_path, "mid.txt", text)
    monkeypatch.setenv("MATCHPOSE_ORACLE_MAX_N", "10")
    assert main(["verify", path]) == EXIT_TOO_LARGE
    capsys.readouterr()
    monkeypatch.setenv("MATCHPOSE_ORACLE_MAX_N", "14")
    assert main(["verify", path]) == EXIT_OK


def test_verify_detects_disagreement(tmp_path, monkeypatch, capsys):
    """Exit code 1 when an oracle disagrees (simulated by sabotage)."""
    import matchpose.cli as cli

    path = _write(tmp_path, "e1.txt", E1_TEXT)
    real = cli.oracle_allowed
    monkeypatch.setattr(
        cli, "oracle_allowed", lambda g, max_n=None: frozenset({(0, 1)})
    )
    assert main(["verify", path]) == EXIT_DISAGREE
    out = capsys.readouterr().out
    assert "MISMATCH" in out
    monkeypatch.setattr(cli, "oracle_allowed", real)


def test_verify_usage_error():
    assert main(["verify"]) == EXIT_PARSE
    assert main(["verify", "--random", "7", "5", "1", "1"]) == EXIT_PARSE


def test_verify_not_factorizable(tmp_path):
    assert main(["verify", _write(tmp_path, "k3.txt", K3_TEXT)]) == (
        EXIT_NOT_FACTORIZABLE
    )


def test_analyze_empty_graph(tmp_path, capsys):
    """The empty graph counts as factorizable (vacuous perfect matching)."""
    path = _write(tmp_path, "empty.txt", "0 0\n")
    assert main(["analyze", path, "--json"]) == EXIT_OK
    report = parse_report(capsys.readouterr().out)
    assert report["graph"] == {"n": 0, "edges": []}
    assert report["decomposition"]["components"] == []
    assert report["poset"]["leq"] == []
