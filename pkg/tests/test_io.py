import json

import pytest

from conftest import D8_parts, system
from fusebiset import io
from fusebiset.bisets import lambda_f
from fusebiset.errors import GroupSpecError
from fusebiset.stable import basis_element


@pytest.mark.parametrize("name", io.bundled_names())
def test_bundled_files_load(name):
    doc = io.load_json(name)
    assert doc.get("format", io.FORMAT) == io.FORMAT
    if "p" in doc:
        F = system(name)
        assert F.S.order % F.p == 0


def test_biset_round_trip(a6):
    L = lambda_f(a6)
    doc = json.loads(io.dumps(io.biset_json(L)))
    assert io.read_biset(a6, doc) == L
    assert io.read_biset(a6, {"lambda": doc}) == L


def test_sset_round_trip(a6):
    X = basis_element(a6, a6.C(a6.S))
    assert io.read_sset(a6, json.loads(io.dumps(io.sset_json(X)))) == X


def test_indices_and_labels_agree():
    F = system("d8-a6-gen")
    G = F.S.group
    by_label = io.read_map(G, [["s", "r^2"], ["r^2", "sr^2"]])
    by_index = io.read_map(G, [[G.index("s"), G.index("r^2")], [G.index("r^2"), G.index("sr^2")]])
    assert by_label == by_index == D8_parts(G)["alpha"]
    assert io.read_diagonal(F, "diag-v-alpha") == by_label


def test_ref_indirection():
    assert io.load_json({"ref": "d8-a6"}) == io.load_json("d8-a6")


def test_k_spec_kinds():
    F = system("q8-c3-gen")
    P, K = io.read_k_spec(F, "k-kappa")
    assert P == F.S and len(K) == 3
    P, K = io.read_k_spec(F, {"k": "aut_f"})
    assert len(K) == 12
    P, K = io.read_k_spec(F, {"k": "trivial"})
    assert len(K) == 1


def test_errors():
    G = system("d8-a6-gen").S.group
    with pytest.raises(GroupSpecError):
        io.element(G, "x")
    with pytest.raises(GroupSpecError):
        io.subgroup(G, ["s", "r"])
    with pytest.raises(GroupSpecError):
        io.read_fusion({"p": 2})
    with pytest.raises(GroupSpecError):
        io.read_fusion({"s": {"kind": "named", "name": "dihedral", "n": 8}})
