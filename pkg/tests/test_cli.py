import json

import pydot
import pytest

from weakcode.cli import RunConfig, main, run
from weakcode.emit import emit_dot
from weakcode.orders import interval_left
from weakcode.posets import FinitePoset

from conftest import perm


def call(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_code(capsys):
    assert call(capsys, "code", "--perm", "3,1,5,2,4") == (0, "(2,0,2,0,0)\n", "")
    status, out, _ = call(capsys, "code", "--perm", "31524", "--emit", "json")
    assert json.loads(out) == [2, 0, 2, 0, 0]


def test_extcode(capsys):
    status, out, _ = call(capsys, "extcode", "--perm", "3,1,5,2,4")
    assert out.splitlines()[0] == "0 0 1 1 2 2"


def test_interval_single_node(capsys):
    status, out, _ = call(capsys, "interval", "--perm", "1", "--emit", "json")
    data = json.loads(out)
    assert status == 0 and data["size"] == 1 and data["covers"] == []


def test_malformed_permutation_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["interval", "--perm", "1,2,2"])
    assert exc.value.code == 2
    assert "appears more than once" in capsys.readouterr().err


def test_interval_orders(capsys):
    _, out, _ = call(capsys, "rankgen", "--perm", "3,4,1,2", "--order", "bruhat")
    assert out == "1 + 3q + 5q^2 + 4q^3 + q^4\n"
    _, out, _ = call(capsys, "interval", "--perm", "2,3,1", "--order", "right", "--emit", "json")
    assert json.loads(out)["order"] == "right-weak"


def test_dot_outputs_parse(capsys):
    for cmd in ("interval", "codelattice", "baseposet"):
        status, out, _ = call(capsys, cmd, "--perm", "3,2,5,1,4", "--emit", "dot")
        (graph,) = pydot.graph_from_dot_data(out)
        assert status == 0 and graph.get_type() == "digraph"
    _, out, _ = call(capsys, "codelattice", "--perm", "32514", "--emit", "dot")
    assert '"21200"' in out


def test_emit_dot_counts(w32514):
    text = emit_dot(interval_left(w32514))
    (graph,) = pydot.graph_from_dot_data(text)
    nodes = [n for n in graph.get_nodes() if n.get_name() not in ("node", "graph", "edge")]
    nodes += [n for sg in graph.get_subgraphs() for n in sg.get_nodes()]
    assert len({n.get_name() for n in nodes}) == 14
    assert len(graph.get_edges()) == 21
    empty = emit_dot(FinitePoset(0, frozenset()))
    (graph,) = pydot.graph_from_dot_data(empty)
    assert graph.get_edges() == [] and "->" not in empty


def test_realizable(capsys):
    assert call(capsys, "realizable", "--poly", "1,4,5,3,1") == (0, "NONE\n", "")
    status, out, _ = call(capsys, "realizable", "--poly", "1,3,3,4,4,3,3,1", "--min", "3", "--max", "3")
    assert out == "NONE\n"
    status, out, _ = call(capsys, "realizable", "--poly", "1,2,2,1", "--emit", "json")
    assert json.loads(out)["witness"]["size"] == 3


def test_counterexamples(capsys):
    status, out, _ = call(capsys, "counterexample", "d4")
    assert status == 0
    assert "1 + q + 3q^2 + 3q^3 + 4q^4 + 4q^5 + 3q^6 + 3q^7 + q^8 + q^9" in out
    assert "time:" in out and "WITNESS" not in out
    status, out, _ = call(capsys, "counterexample", "bruhat-3412", "--emit", "json")
    assert json.loads(out)["verdict"] == "NONE"


def test_symmetric_scan(capsys):
    status, out, _ = call(capsys, "symmetric-scan", "--n", "4")
    data = json.loads(out)
    assert data["count"] == 22 and len(data["permutations"]) == 22


def test_verify_depth4(capsys):
    status, out, _ = call(capsys, "verify", "--suite", "all", "--depth", "4")
    report = json.loads(out)
    assert status == 0 and report["passed"]
    status, _, err = call(capsys, "verify", "--suite", "nonsense")
    assert status == 2 and "unknown suite" in err


def test_json_is_deterministic(capsys):
    outs = {call(capsys, "baseposet", "--perm", "4,1,5,2,8,6,3,7", "--emit", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("verify", oracle_depth=7)
    status, text = run(RunConfig("code", perm=perm("21")))
    assert (status, text) == (0, "(1,0)\n")
