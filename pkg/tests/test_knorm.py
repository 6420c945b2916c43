import pytest

from conftest import a6_parts
from fusebiset.bisets import Biset, is_semicharacteristic, lambda_f
from fusebiset.errors import GroupSpecError
from fusebiset.fusion import is_saturated
from fusebiset.groups import automorphisms, centralizer, close_maps, normalizer
from fusebiset.knorm import (
    AutSubgroup,
    PointBiset,
    aut_subgroups,
    extension_count,
    is_fully_k_normalized,
    k_normalizer_fusion,
    k_relation,
    n_omega_k,
    n_s_k,
    orbit_bijection,
    verify_k_normalizer_theorems,
)


def kappa_of(qc):
    return next(m for m in qc.aut(qc.S) if len(close_maps([m], qc.S)) == 3)


def test_aut_subgroup_validation(a6):
    p = a6_parts(a6)
    V = p["V"]
    with pytest.raises(GroupSpecError):
        AutSubgroup(V, [p["alpha"]])
    K = AutSubgroup.generated(V, [p["alpha"]])
    assert len(K) == 3
    assert AutSubgroup.trivial(V) <= K
    assert len(AutSubgroup(V, automorphisms(V))) == 6


def test_n_s_k_examples(a6, qc):
    S = a6.S
    for P in a6.subgroups:
        assert n_s_k(S, P, AutSubgroup(P, automorphisms(P))) == normalizer(S, P)
        assert n_s_k(S, P, AutSubgroup.trivial(P)) == centralizer(S, P)
    K = AutSubgroup.generated(qc.S, [kappa_of(qc)])
    N = n_s_k(qc.S, qc.S, K)
    assert N.order == 2 and N == qc.C(qc.S)


def test_fully_k_normalized_examples(a6, qc):
    p = a6_parts(a6)
    K = AutSubgroup.generated(qc.S, [kappa_of(qc)])
    assert is_fully_k_normalized(qc, qc.S, K)
    Z = p["Z"]
    assert is_fully_k_normalized(a6, Z, AutSubgroup(Z, automorphisms(Z)))
    Q1 = p["Q1"]
    assert not is_fully_k_normalized(a6, Q1, AutSubgroup(Q1, automorphisms(Q1)))


def test_criteria_agree_exhaustively(a6):
    # the criterion cross-check raises on disagreement
    n = 0
    for P in a6.subgroups:
        for K in aut_subgroups(P):
            n += is_fully_k_normalized(a6, P, K)
    assert n > 20


def test_subsystems(a6, qc):
    p = a6_parts(a6)
    Z = p["Z"]
    C = k_normalizer_fusion(a6, Z, AutSubgroup.trivial(Z))
    assert C.S == a6.S and is_saturated(C)
    K = AutSubgroup.generated(qc.S, [kappa_of(qc)])
    N = k_normalizer_fusion(qc, qc.S, K)
    assert N.S.order == 2
    assert all(m.is_identity() for P in N.subgroups for m in N.homs_from(P))


def test_point_biset_stabilizers_match_search(a6):
    L = lambda_f(a6)
    pb = PointBiset(L)
    assert len(pb) == 104
    S = a6.S
    for i in range(0, len(pb), 3):
        st = pb.stabilizer(i)
        brute = pb.stabilizer_in(i, S)
        expected = {(st(q), q) for q in st.source.elements}
        assert brute == expected


def test_nn_stabilizer_lemma(a6):
    L = lambda_f(a6)
    pb = PointBiset(L)
    p = a6_parts(a6)
    for P, K in [(p["V"], AutSubgroup(p["V"], a6.aut(p["V"]))), (p["Z"], AutSubgroup.trivial(p["Z"]))]:
        nk = n_omega_k(pb, P, K)
        N = nk.N
        for i in nk.points[::2]:
            st = pb.stabilizer(i)
            expected = {(st(q), q) for q in st.source.elements if q in N.set and st(q) in N.set}
            assert pb.stabilizer_in(i, N) == expected


def test_identity_biset_filter(a6):
    S = a6.S
    p = a6_parts(a6)
    for P, K in [(p["V"], AutSubgroup.trivial(p["V"])), (S, AutSubgroup.inner(S))]:
        nk = n_omega_k(Biset(S, {S.identity_map(): 1}), P, K)
        assert nk.biset == Biset(nk.N, {nk.N.identity_map(): 1})


def test_counterexample(qc):
    K = AutSubgroup.generated(qc.S, [kappa_of(qc)])
    r = verify_k_normalizer_theorems(qc, qc.S, K)
    assert r.relation == "neither"
    assert r.fully_k_normalized and r.centric
    assert r.id_orbits == 3
    assert r.n_lambda == 3 * Biset(r.N, {r.N.identity_map(): 1})
    assert r.lambda_n == Biset(r.N, {r.N.identity_map(): 1})
    assert not r.equal
    assert r.consistent()
    assert any("neither" in n for n in r.notes)


def test_report_examples(a6):
    p = a6_parts(a6)
    S = a6.S
    for P in (S, p["V"]):
        r = verify_k_normalizer_theorems(a6, P, AutSubgroup(P, automorphisms(P)))
        assert r.fully_k_normalized and r.equal and r.consistent()
        assert r.id_orbits == 1


def test_semicharacteristic_for_every_fully_k_normalized(a6):
    L = lambda_f(a6)
    pb = PointBiset(L)
    for P in a6.subgroups:
        for K in aut_subgroups(P):
            if not is_fully_k_normalized(a6, P, K):
                continue
            nk = n_omega_k(pb, P, K)
            sub = k_normalizer_fusion(a6, P, K)
            assert is_semicharacteristic(sub, nk.biset)


def test_orbit_bijection(a6):
    pb = PointBiset(lambda_f(a6))
    p = a6_parts(a6)
    V = p["V"]
    H = AutSubgroup.trivial(V)
    K = H.times(AutSubgroup.inner(V))
    assert orbit_bijection(pb, V, H, K)


def test_extension_count(a6):
    p = a6_parts(a6)
    Z = p["Z"]
    sub = k_normalizer_fusion(a6, Z, AutSubgroup(Z, automorphisms(Z)))
    for A in sub.subgroups:
        for phi in sub.homs_from(A):
            assert extension_count(sub, Z, phi) >= 1


def test_k_relation(a6, qc):
    p = a6_parts(a6)
    V = p["V"]
    assert k_relation(V, AutSubgroup.trivial(V)) == "K<=Inn(P)"
    assert k_relation(a6.S, AutSubgroup(a6.S, automorphisms(a6.S))) == "Inn(P)<=K"
    assert k_relation(V, AutSubgroup.generated(V, [p["alpha"]])) == "Inn(P)<=K"  # V is abelian
    assert k_relation(qc.S, AutSubgroup.generated(qc.S, [kappa_of(qc)])) == "neither"
