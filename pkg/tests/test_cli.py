import json

import pytest

from seulerian import Graph, is_connected, parse_graph, parse_subgraph, serialize_graph
from seulerian.cli import main

from conftest import complete, cycle, path

K4 = serialize_graph(complete(4))
K4_PATH = "s 0\ns 3\ns 5\n"  # 0-1, 1-2, 2-3


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decide_yes_no_and_input_error(capsys, files):
    g, h = files("k4.graph", K4), files("k4.sub", K4_PATH)
    assert run(capsys, "decide", "--graph", g, "--sub", h)[:2] == (0, "YES\n")
    p = files("p.graph", serialize_graph(path(3)))
    ps = files("p.sub", "s 0\ns 1\n")
    assert run(capsys, "decide", "--graph", p, "--sub", ps, "--mode", "closed")[:2] == (3, "NO\n")
    bad = files("bad.graph", "p 3 2\ne 0 1\n")
    code, _, err = run(capsys, "decide", "--graph", bad, "--sub", ps)
    assert code == 2 and "error" in err
    assert run(capsys, "decide", "--graph", g + ".missing", "--sub", h)[0] == 2


def test_trail_then_verify(capsys, files):
    g, h = files("k4.graph", K4), files("k4.sub", K4_PATH)
    code, out, _ = run(capsys, "trail", "--graph", g, "--sub", h)
    assert code == 0 and out.startswith("t closed 0\n") and out.count("\ne ") == 4
    t = files("t.txt", out)
    assert run(capsys, "verify", "--graph", g, "--sub", h, "--trail", t)[:2] == (0, "OK\n")


def test_trail_eulerian_and_infeasible(capsys, files):
    c = files("c.graph", serialize_graph(cycle(5)))
    cs = files("c.sub", "".join(f"s {e}\n" for e in range(5)))
    code, out, _ = run(capsys, "trail", "--graph", c, "--sub", cs)
    assert code == 0 and sorted(int(x.split()[1]) for x in out.splitlines()[1:]) == list(range(5))
    p = files("p.graph", serialize_graph(path(3)))
    ps = files("p.sub", "s 0\ns 1\n")
    assert run(capsys, "trail", "--graph", p, "--sub", ps)[:2] == (3, "NO\n")


def test_verify_diagnostics(capsys, files):
    g, h = files("k4.graph", K4), files("k4.sub", K4_PATH)
    rep = files("rep.txt", "t closed 0\ne 0\ne 0\n")
    code, _, err = run(capsys, "verify", "--graph", g, "--sub", h, "--trail", rep)
    assert code == 3 and "edge repeated" in err
    miss = files("miss.txt", "t closed 0\ne 0\ne 3\ne 1\n")
    code, _, err = run(capsys, "verify", "--graph", g, "--sub", h, "--trail", miss)
    assert code == 3 and "uncovered H edge" in err


def test_json_report_keys(capsys, files):
    g, h = files("k4.graph", K4), files("k4.sub", K4_PATH)
    code, out, _ = run(capsys, "trail", "--graph", g, "--sub", h, "--json", "--seed", "3")
    rep = json.loads(out)
    assert code == 0
    for key in ("command", "n", "m", "hv", "he", "mode", "answer", "trail", "micros", "seed"):
        assert key in rep
    assert rep["answer"] == "yes" and rep["seed"] == 3 and len(rep["trail"]["steps"]) == 4
    assert (rep["n"], rep["m"], rep["hv"], rep["he"]) == (4, 6, 4, 3)


def test_disconnected_h_goes_to_oracle(capsys, files):
    g = files("c.graph", serialize_graph(cycle(6)))
    h = files("c.sub", "s 0\ns 3\n")
    code, out, err = run(capsys, "decide", "--graph", g, "--sub", h, "--json")
    assert code == 0 and json.loads(out)["route"] == "oracle" and "oracle" in err


def test_oracle_flag_agrees(capsys, files):
    g, h = files("k4.graph", K4), files("k4.sub", K4_PATH)
    for mode in ("closed", "open"):
        a = run(capsys, "decide", "--graph", g, "--sub", h, "--mode", mode)
        b = run(capsys, "decide", "--graph", g, "--sub", h, "--mode", mode, "--oracle")
        assert a[:2] == b[:2]
    code, out, _ = run(capsys, "oracle", "--graph", g, "--sub", h)
    assert code == 0 and out.startswith("t closed")


def test_budget_exit_code(capsys, files):
    k5 = list(complete(5).edges)
    text = serialize_graph(Graph(10, k5 + [(u + 5, v + 5) for u, v in k5]))
    g = files("two.graph", text)
    h = files("two.sub", "v 0\nv 5\n")
    assert run(capsys, "decide", "--graph", g, "--sub", h, "--budget-ms", "1")[0] == 4


def test_gen_determinism_and_errors(capsys, tmp_path):
    a = run(capsys, "gen", "--kind", "subcubic", "--n", "8", "--seed", "1")
    b = run(capsys, "gen", "--kind", "subcubic", "--n", "8", "--seed", "1")
    assert a[0] == 0 and a[1] == b[1]
    assert max(len(inc) for inc in parse_graph(a[1]).incidence) <= 3
    assert run(capsys, "gen", "--kind", "subcubic", "--n", "4", "--m", "7")[0] == 2
    assert run(capsys, "gen", "--kind", "instance", "--n", "6", "--seed", "7")[0] == 2
    prefix = str(tmp_path / "inst")
    assert run(capsys, "gen", "--kind", "instance", "--n", "6", "--seed", "7", "--out", prefix)[0] == 0
    g = parse_graph(open(prefix + ".graph").read())
    assert is_connected(parse_subgraph(open(prefix + ".sub").read(), g))


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "1000", "--trials", "2")
    assert code == 0 and "slope" not in out
    code, out, _ = run(capsys, "bench", "--sizes", "1000,4000", "--trials", "2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["slope"] is not None and [r["m"] for r in rep["rows"]] == [1000, 4000]
    assert run(capsys, "bench", "--sizes", "1000", "--trials", "0")[0] == 2
    assert run(capsys, "bench", "--sizes", "4000,1000")[0] == 2


def test_audit(capsys, files):
    code, out, err = run(capsys, "audit", "--max-n", "5")
    assert code == 0 and len(out.splitlines()) == 19
    assert all(line.endswith(" consistent") for line in out.splitlines())
    code, out, _ = run(capsys, "audit", "--max-n", "1")
    assert code == 0 and out == ""
    k5 = files("k5.graph", serialize_graph(complete(5)))
    code, out, err = run(capsys, "audit", "--max-n", "1", k5)
    assert code == 0 and "skipped" in err


def test_reduce_hc(capsys, files):
    g = files("k4.graph", K4)
    code, out, _ = run(capsys, "reduce-hc", "--graph", g)
    assert code == 0 and out.splitlines()[-1] == "YES" and len(out.splitlines()) == 7
    s = files("star.graph", "p 4 3\ne 0 1\ne 0 2\ne 0 3\n")
    code, out, _ = run(capsys, "reduce-hc", "--graph", s)
    assert code == 3 and out.splitlines()[-1] == "NO"
