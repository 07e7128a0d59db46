import pytest

from bookturan.checkers import is_nonpartite_book_free
from bookturan.cli import main
from bookturan.graph6 import decode_graph6, encode_graph6
from bookturan.canon import is_isomorphic
from bookturan.constructions import c5_blowup, generalized_book, turan_graph
from bookturan.graphs import empty_graph, join


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_book(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "book",
                           "--r", "3", "--k", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    g = decode_graph6(lines[0])
    assert g.order == 5 and g.edge_count() == 9
    assert is_isomorphic(g, generalized_book(3, 2))


def test_construct_g3(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "g3",
                           "--n", "11", "--r", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert decode_graph6(lines[0]).edge_count() == 38


def test_construct_turan(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "turan",
                           "--n", "10", "--r", "3")
    assert code == 0
    g = decode_graph6(out.strip())
    assert is_isomorphic(g, turan_graph(10, 3))


def test_construct_c5blowup(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "c5blowup",
                           "--profile", "1,1,1,1,1")
    assert code == 0
    g = decode_graph6(out.strip())
    assert is_isomorphic(g, c5_blowup((1, 1, 1, 1, 1)))


def test_construct_emitted_graphs_satisfy_claimed_predicates(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "g2",
                           "--n", "12", "--r", "3", "--k", "2")
    assert code == 0
    for line in out.splitlines():
        g = decode_graph6(line)
        assert g.order == 12
        assert is_nonpartite_book_free(g, 3, 2)


def test_construct_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "g3", "--n", "11"])  # missing --r
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "c5blowup", "--profile", "1,1,1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_construct_domain_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "construct", "--family", "g1",
                           "--n", "8", "--r", "3")
    assert code == 1
    assert "q >= 3" in err


def test_eval(capsys):
    code, out, _ = run_cli(capsys, "eval", "--n", "12", "--r", "3")
    assert code == 0
    assert out.strip() == ("n=12 r=3 k=1 q=4 p=0 mode=theorem1 value=45"
                           " case=G1_G2 families=G1,G2")
    code, out, _ = run_cli(capsys, "eval", "--n", "11", "--r", "3")
    assert "value=38" in out and "families=G3" in out
    code, out, _ = run_cli(capsys, "eval", "--n", "8", "--r", "3",
                           "--mode", "theorem14")
    assert code == 0
    assert "value=20" in out and "families=C5_JOIN" in out


def test_eval_domain_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--n", "8", "--r", "3")
    assert code == 1 and "asymptotic" in err
    code, _, err = run_cli(capsys, "eval", "--n", "5", "--r", "3")
    assert code == 1


def test_check(tmp_path, capsys):
    w7 = join(c5_blowup((1, 1, 1, 1, 1)), empty_graph(2))
    t39 = turan_graph(9, 3)
    k5 = turan_graph(5, 5)
    path = tmp_path / "in.g6"
    path.write_text("\n".join(encode_graph6(g) for g in (w7, t39, k5)) + "\n")
    code, out, _ = run_cli(capsys, "check", "--input", str(path),
                           "--r", "3", "--k", "2", "--witness")
    assert code == 0
    lines = out.splitlines()
    assert "candidate=true" in lines[0]
    assert "candidate=false" in lines[1] and "coloring=" in lines[1]
    assert "candidate=false" in lines[2] and "book_clique=" in lines[2]

    # witnesses re-validate against the decoded graphs
    coloring = [f for f in lines[1].split() if f.startswith("coloring=")][0]
    classes = [int(x) for x in coloring.split("=")[1].split(",")]
    for u, v in t39.edges():
        assert classes[u] != classes[v]
    fields = dict(f.split("=") for f in lines[2].split())
    clique = [int(x) for x in fields["book_clique"].split(",")]
    pages = [int(x) for x in fields["book_pages"].split(",")]
    for u in clique:
        for v in clique:
            if u != v:
                assert k5.has_edge(u, v)
    for p in pages:
        for u in clique:
            assert k5.has_edge(p, u)


def test_check_malformed_line_reports_line_number(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("A_\nA\x19_\n")
    code, _, err = run_cli(capsys, "check", "--input", str(path),
                           "--r", "3", "--k", "1")
    assert code == 1
    assert "line 2" in err


def test_search_enumerate(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "7", "--r", "3",
                           "--k", "1", "--method", "enumerate")
    assert code == 0
    lines = out.splitlines()
    assert "optimum=15" in lines[0] and "classes=1" in lines[0]
    assert "exhaustive=true" in lines[0]
    g = decode_graph6(lines[1])
    assert is_nonpartite_book_free(g, 3, 1) and g.edge_count() == 15


def test_search_emit_file(tmp_path, capsys):
    out_path = tmp_path / "extremal.g6"
    code, out, _ = run_cli(capsys, "search", "--n", "7", "--r", "3",
                           "--k", "1", "--method", "bb",
                           "--emit", str(out_path))
    assert code == 0
    assert "optimum=15" in out
    lines = out_path.read_text().splitlines()
    assert len(lines) == 1
    assert decode_graph6(lines[0]).edge_count() == 15


def test_search_workers_byte_identical(capsys):
    outs = set()
    for w in ("1", "2", "4"):
        code, out, _ = run_cli(capsys, "search", "--n", "7", "--r", "3",
                               "--k", "1", "--method", "bb", "--workers", w)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "--r", "3", "--k", "1",
                           "--n-from", "7", "--n-to", "8",
                           "--mode", "theorem14")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all("verdict=AGREE" in line for line in lines)
    assert "formula=15" in lines[0] and "formula=20" in lines[1]


def test_verify_strict_flags_disagreement(capsys):
    code, out, _ = run_cli(capsys, "verify", "--r", "3", "--k", "1",
                           "--n-from", "6", "--n-to", "6",
                           "--mode", "theorem14")
    assert code == 0  # findings are not failures by default
    assert "verdict=DISAGREE" in out
    code, out, _ = run_cli(capsys, "verify", "--r", "3", "--k", "1",
                           "--n-from", "6", "--n-to", "6",
                           "--mode", "theorem14", "--strict")
    assert code == 1


def test_identical_invocations_are_byte_identical(capsys):
    a = run_cli(capsys, "eval", "--n", "23", "--r", "4")
    b = run_cli(capsys, "eval", "--n", "23", "--r", "4")
    assert a == b
    a = run_cli(capsys, "construct", "--family", "g2", "--n", "15", "--r", "3")
    b = run_cli(capsys, "construct", "--family", "g2", "--n", "15", "--r", "3")
    assert a == b
