import json
import pathlib

import pytest

import selfsimilar as ss

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def doc(name):
    return json.loads((FIXTURES / name).read_text())


def test_validate_and_error_kind():
    ss.validate(doc("swap.json"))
    with pytest.raises(ss.SsgError) as info:
        ss.validate(doc("broken.json"))
    assert info.value.kind == "CocycleViolation"
    assert isinstance(info.value, ValueError)


def test_normalize_round_trip():
    out = ss.normalize(doc("z2_two_vertex.json"))
    assert ss.normalize(out) == out


def test_analyze_verdicts():
    od = ss.analyze(doc("od.json"))
    assert od["pseudo_free"] == "YES"
    assert od["simple"]["verdict"] == "YES"
    nh = ss.analyze(json.dumps(doc("nh.json")))
    assert nh["hausdorff"]["verdict"] == "NO"
    assert nh["hausdorff"]["witness"]["loop"] == "e:1:1:0 e:1:1:1"


def test_katsura_summary():
    s = ss.katsura([[2, 1], [1, 2]], [[1, 0], [0, 1]], ktheory=True)
    assert s["simple"] == "YES"
    assert s["purely_infinite_simple"] == "YES"
    assert s["k_theory"] == {"K0": "Z^3", "K1": "Z^3"}
    assert ss.katsura([[2]], [[2]])["simple"] == "NO"
    with pytest.raises(ss.SsgError) as info:
        ss.katsura([[0]], [[1]])
    assert info.value.kind == "InvalidKatsuraData"


def test_minimal_strongly_fixed_paths():
    m = ss.minimal_strongly_fixed_paths(doc("k15.json"), 1)
    assert m["kind"] == "finite"
    assert sorted(m["paths"]) == ["e:1:2:0", "e:2:1:0"]
    nh = ss.minimal_strongly_fixed_paths(doc("nh.json"), 1)
    assert nh["kind"] == "infinite"
    assert "witness" in nh


def test_smith_normal_form_with_big_entries():
    big = 10**30
    U, S, V = ss.smith_normal_form([[2 * big, 0], [0, 3 * big]])
    assert S == [[big, 0], [0, 6 * big]]
    M = [[2 * big, 0], [0, 3 * big]]
    mul = lambda a, b: [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]
    assert mul(mul(U, M), V) == S


def test_k_theory_and_correspondence():
    assert ss.k_theory([[2]], [[1]]) == ("Z", "Z")
    checks = ss.verify_correspondence(json.dumps(doc("swap.json")))
    assert len(checks) == 13
    assert all(passed for _, passed, _ in checks)
    with pytest.raises(ss.SsgError) as info:
        ss.verify_correspondence(json.dumps(doc("od.json")))
    assert info.value.kind == "UnsupportedBackend"
