import json

import pytest

import nnil


def model(worlds, order, val, variables):
    return json.dumps({"worlds": worlds, "order": order, "val": val, "vars": variables})


CHAIN = model(["w1", "w2"], [["w1", "w2"]], {"p1": ["w2"], "p2": ["w2"]}, ["p1", "p2"])
FLAT = model(
    ["a", "b", "c"],
    [["a", "b"], ["b", "c"]],
    {"p1": ["c"], "p2": ["c"]},
    ["p1", "p2"],
)
TOP = model(["w1"], [], {"p1": ["w1"], "p2": ["w1"]}, ["p1", "p2"])


def test_universal_model():
    assert nnil.universal_stats(2) == [4, 9, 5]
    assert nnil.universal_stats(1) == [2, 1]
    assert nnil.classes(1) == 5
    assert "cluster_17" in nnil.universal_dot(2)
    assert len(json.loads(nnil.universal_model_json(2))["worlds"]) == 18


def test_check():
    assert nnil.check("p -> (q -> r)") == {"nnil": True, "normal_form": "p -> q -> r"}
    assert nnil.check("~~p")["nnil"] is False
    assert nnil.check("~~p")["normal_form"] is None


def test_beta_and_refutation():
    b = nnil.beta(CHAIN)
    assert "->" in b and "p1" in b
    assert nnil.refute(TOP, CHAIN) == {"w1": "w2"}
    bottom = model(["w1"], [], {}, ["p1", "p2"])
    assert nnil.refute(TOP, bottom) is None
    hit = nnil.refute_on_frame(TOP, json.dumps({"worlds": ["u", "v"], "order": [["u", "v"]]}))
    assert hit is not None
    witness, refuting = hit
    assert set(witness) == {"w1"}
    assert json.loads(refuting)["worlds"] == ["u", "v"]


def test_canonical_reduction():
    assert nnil.canonical(FLAT) == nnil.canonical(CHAIN)
    assert nnil.canonical_code(FLAT) == nnil.canonical_code(CHAIN)
    reduced, onto = nnil.reduce(FLAT)
    assert len(json.loads(reduced)["worlds"]) == 2
    assert set(onto) == {"a", "b", "c"}
    assert nnil.nnil_equiv(FLAT, "a", CHAIN, "w1")


def test_prover():
    assert nnil.prove("p -> p")
    assert not nnil.prove("p | ~p")
    assert nnil.prove("q", axioms=["p", "p -> q"])
    cm = nnil.countermodel("p | ~p")
    assert cm is not None
    parsed = json.loads(cm)
    assert len(parsed["worlds"]) == 2
    assert nnil.countermodel("p -> p") is None


def test_fnf_and_force():
    nf = nnil.fnf("p & q")
    assert len(nf["vars"]) == 3
    assert nf["vars"][2].startswith("s_")
    assert nf["prime"].endswith(nf["vars"][2])
    assert nnil.force(CHAIN, "w2", "p1 & p2")
    assert not nnil.force(CHAIN, "w1", "p1 | ~p1")


def test_errors():
    with pytest.raises(nnil.Error):
        nnil.prove("p &")
    with pytest.raises(nnil.Error):
        nnil.force(CHAIN, "w9", "p1")
    with pytest.raises(nnil.Error):
        nnil.classes(3)
