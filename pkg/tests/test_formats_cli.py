from __future__ import annotations

import json

import pytest

from onecross import families
from onecross.cli import main
from onecross.formats import (
    FormatError,
    detect_format,
    parse_edge_list,
    parse_graph6,
    parse_input,
    write_edge_list,
    write_graph6,
)
from onecross.graph import build


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def test_graph6_roundtrip_families():
    for g in (families.complete_graph(5), families.v8(), families.cube_graph(),
              families.path_graph(4), families.complete_bipartite(3, 4)):
        back = parse_graph6(write_graph6(g))
        assert back.n == g.n
        assert sorted(tuple(sorted(p)) for _, p in back.edge_items()) == sorted(
            tuple(sorted(p)) for _, p in g.edge_items()
        )


def test_graph6_known_encoding():
    # K4 on 4 vertices: all six bits set
    k4 = families.complete_graph(4)
    assert write_graph6(k4) == "C~"
    assert parse_graph6("C~").m == 6


def test_graph6_header_accepted():
    g = parse_graph6(">>graph6<<C~")
    assert g.n == 4 and g.m == 6


def test_graph6_rejects_parallel_edges():
    with pytest.raises(FormatError):
        write_graph6(build([(0, 1), (0, 1)]))


def test_graph6_rejects_truncation():
    with pytest.raises(FormatError):
        parse_graph6("F")  # seven vertices, no adjacency payload


def test_nx_agreement():
    import networkx as nx

    for g6 in ("C~", "D?{", "E?~o"):
        mine = parse_graph6(g6)
        theirs = nx.from_graph6_bytes(g6.encode())
        assert mine.n == theirs.number_of_nodes()
        assert sorted(tuple(sorted(p)) for _, p in mine.edge_items()) == sorted(
            tuple(sorted(e)) for e in theirs.edges()
        )


# ---------------------------------------------------------------------------
# edge lists
# ---------------------------------------------------------------------------


def test_edge_list_labels_and_comments():
    text = "# a square\nA B\nB C\nC D\nD A  # closing\n"
    g, labels = parse_edge_list(text)
    assert labels == ["A", "B", "C", "D"]
    assert g.n == 4 and g.m == 4


def test_edge_list_parallel_edges():
    g, _ = parse_edge_list("a b\na b\n")
    assert g.m == 2


def test_edge_list_roundtrip(v8):
    labels = [f"v{i}" for i in range(8)]
    g, back_labels = parse_edge_list(write_edge_list(v8, labels))
    assert back_labels == labels
    assert g == v8


def test_format_detection(v8):
    assert detect_format(write_graph6(families.complete_graph(4))) == "graph6"
    assert detect_format("a b\nb c\n") == "edgelist"
    assert detect_format(">>graph6<<C~") == "graph6"
    g, _ = parse_input(write_edge_list(v8), "auto")
    assert g == v8


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


@pytest.fixture()
def v8_file(tmp_path, v8):
    path = tmp_path / "v8.txt"
    path.write_text(write_edge_list(v8, [f"v{i}" for i in range(8)]))
    return str(path)


def test_cli_decide_v8(v8_file, capsys):
    code = main(["decide", v8_file])
    report = json.loads(capsys.readouterr().out)
    assert code == 1
    assert report["schema"] == 1
    assert report["verdict"] == "one"
    assert sorted(report["drawing"]["crossing_pair"]) in [[0, 3], [0, 4], [0, 5]]


def test_cli_decide_planar(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text(write_edge_list(families.path_graph(3)))
    assert main(["decide", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "planar"


def test_cli_decide_k6_graph6(tmp_path, capsys):
    path = tmp_path / "k6.g6"
    path.write_text(write_graph6(families.complete_graph(6)) + "\n")
    assert main(["decide", str(path)]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "two_plus"
    assert report["rejected_pairs"]


def test_cli_decide_deterministic(v8_file, capsys):
    main(["decide", v8_file])
    first = capsys.readouterr().out
    main(["decide", v8_file])
    assert capsys.readouterr().out == first


def test_cli_decide_verify(v8_file, capsys):
    code = main(["decide", v8_file, "--verify"])
    assert code == 1
    assert json.loads(capsys.readouterr().out)["verified"] is True


def test_cli_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("a b c d\n")
    assert main(["decide", str(path)]) == 64
    assert "input error" in capsys.readouterr().err


def test_cli_pairs_v8(v8_file, capsys):
    code = main(["pairs", v8_file])
    report = json.loads(capsys.readouterr().out)
    assert code == 1
    got = sorted(tuple(sorted(r["pair"])) for r in report["crossing_pairs"])
    assert (0, 4) in got
    assert all(9 not in pair for pair in got)
    assert all(r["agree"] for r in report["crossing_pairs"] + report["rejected_pairs"])


def test_cli_pairs_siran(tmp_path, siran, capsys):
    path = tmp_path / "siran.txt"
    labels = ["u", "v", "w", "x", "y", "z"]
    path.write_text(write_edge_list(siran, labels))
    assert main(["pairs", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    ux, wz, uy = 3 * 0 + 0, 3 * 2 + 2, 3 * 0 + 1
    crossing = {tuple(sorted(r["pair"])) for r in report["crossing_pairs"]}
    assert tuple(sorted((uy, wz))) in crossing
    assert tuple(sorted((ux, wz))) not in crossing
    rejected = {tuple(sorted(r["pair"])): r for r in report["rejected_pairs"]}
    assert rejected[tuple(sorted((ux, wz)))]["separation"]["separated"] is True


def test_cli_pairs_planar_input(tmp_path, capsys):
    path = tmp_path / "q3.txt"
    path.write_text(write_edge_list(families.cube_graph()))
    assert main(["pairs", str(path)]) == 65


def test_cli_draw(v8_file, tmp_path, capsys):
    svg = tmp_path / "out.svg"
    code = main(["draw", v8_file, "--pair", "v0,v1", "v4,v5", "--svg", str(svg)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("graph onedrawing")
    assert "crossing" in out
    assert svg.read_text().startswith("<svg")


def test_cli_draw_rejects_non_crossing_pair(v8_file, capsys):
    assert main(["draw", v8_file, "--pair", "v1,v5", "v0,v1"]) == 66


def test_cli_draw_unknown_edge(v8_file):
    assert main(["draw", v8_file, "--pair", "v0,v9", "v4,v5"]) == 64


def test_cli_draw_output_file(v8_file, tmp_path):
    out = tmp_path / "d.dot"
    assert main(["draw", v8_file, "--pair", "v0,v1", "v4,v5", "-o", str(out)]) == 0
    assert out.read_text().startswith("graph onedrawing")


def test_cli_corpus_small(capsys):
    code = main(["corpus", "--max-n", "5"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["inconsistencies"] == 0
    assert report["graphs_checked"] == 31


def test_cli_corpus_random_seeded(capsys):
    code = main(["corpus", "--max-n", "7", "--count", "12", "--seed", "5"])
    first = capsys.readouterr().out
    assert code == 0
    main(["corpus", "--max-n", "7", "--count", "12", "--seed", "5"])
    assert capsys.readouterr().out == first
    assert json.loads(first)["inconsistencies"] == 0


def test_cli_corpus_over_budget(capsys):
    assert main(["corpus", "--max-n", "40"]) == 69


def test_cli_corpus_parallel_jobs_deterministic(capsys):
    assert main(["corpus", "--max-n", "5", "--jobs", "2"]) == 0
    parallel = capsys.readouterr().out
    assert main(["corpus", "--max-n", "5"]) == 0
    assert capsys.readouterr().out == parallel


def test_cli_pairs_verify_recheck(v8_file, capsys):
    assert main(["pairs", v8_file, "--verify"]) == 1
    assert json.loads(capsys.readouterr().out)["verified"] is True
