import json

import pytest

from syzlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


G12 = '{"vertices":[[0,2],[6,0],[2,6]]}'
TRI = '{"vertices":[[0,0],[6,0],[0,3]]}'


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", G12, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["g"] == 12
    assert rep["interior_polygon"]["lattice_width"] == 4
    assert rep["clifford"]["value"] == 4
    assert rep["gwf"] is False


def test_analyze_human(capsys):
    code, out, _ = run(capsys, "analyze", TRI)
    assert code == 0
    assert "g: 4" in out


def test_resolve(capsys):
    code, out, _ = run(capsys, "resolve", TRI, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["inserted_rays"] == [[0, -1]]
    assert rep["gorenstein_weak_fano"] is True


def test_malformed_inputs(capsys):
    assert run(capsys, "analyze", '{"vertices":[[0,0],[1,0],[2,0]]}')[0] == 2
    assert run(capsys, "analyze", '{"vertices": "nope"}')[0] == 2
    assert run(capsys, "analyze", "{not json")[0] == 2
    assert run(capsys, "analyze", "/no/such/file.json")[0] == 2
    # segment interior
    assert run(capsys, "analyze", '{"vertices":[[0,0],[4,0],[4,2],[0,2]]}')[0] == 2
    # bad primes
    assert run(capsys, "betti-surface", TRI, "--primes", "4,9")[0] == 2
    # bad --f
    assert run(capsys, "verify", TRI, "--f", "x^")[0] == 2


def test_budget_refusal_exit3(capsys):
    code, _, err = run(capsys, "betti-curve",
                       '{"vertices":[[4,0],[0,10],[10,4]]}', "--seed", "1")
    assert code == 3


def test_betti_surface(capsys):
    code, out, _ = run(capsys, "betti-surface", TRI, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["g"] == 4
    assert rep["b"] == [1] and rep["c"] == [0]
    assert rep["prime_agreement"] is True


def test_verify_gwf(capsys):
    code, out, _ = run(capsys, "verify", TRI, "--seed", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["failed_checks"] == []
    assert rep["a"] == [1]
    assert rep["hypotheses"]["passed"] is True


def test_cache_roundtrip(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code1, out1, err1 = run(capsys, "betti-surface", TRI, "--json",
                            "--cache-dir", cache, "--seed", "1")
    code2, out2, err2 = run(capsys, "betti-surface", TRI, "--json",
                            "--cache-dir", cache, "--seed", "1")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "cache hit" in err2 and "cache hit" not in err1
    # unimodularly equivalent input shares the cache entry
    code3, out3, err3 = run(capsys, "betti-surface",
                            '{"vertices":[[0,0],[6,12],[-3,-3]]}', "--json",
                            "--cache-dir", cache, "--seed", "1")
    assert "cache hit" in err3 and out3 == out1


def test_enumerate_small(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-points", "6", "--box", "4",
                       "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["only_upsilon"] is True
