import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import D8_parts, a6_parts, saturated_names, sylow_realized, system
from fusebiset.constructions import cyclic, dihedral, direct_product, quaternion, symmetric
from fusebiset.errors import GroupSpecError, NotInFusionSystem
from fusebiset.fusion import (
    extender,
    fusion_isomorphism,
    fusion_of_group,
    generate_fusion,
    is_saturated,
    normalizer_map_check,
)
from fusebiset.groups import GroupMap, all_subgroups, conjugate, homomorphisms, normalizer

D8 = dihedral(8)
C4C2 = direct_product(cyclic(4), cyclic(2))
_maps = {G.label: [m for P in all_subgroups(G.whole()) if P.order > 1 for m in homomorphisms(P, G.whole())]
         for G in (D8, C4C2)}


def generated(G, idx):
    ms = _maps[G.label]
    return generate_fusion(G.whole(), 2, [ms[i % len(ms)] for i in idx])


gen_systems = st.builds(
    generated, st.sampled_from([D8, C4C2]), st.lists(st.integers(0, 10**6), min_size=0, max_size=2)
)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(gen_systems)
def test_generated_system_is_closed(F):
    for P in F.subgroups:
        for m in F.homs_from(P):
            assert m.is_injective() and m.is_homomorphism()
            for R in F.subgroups_below(P):
                assert F.contains(m.restrict(R))
            inv = m.inverse()
            assert F.contains(GroupMap(F.subgroup(inv.source.elements), inv.images, F.S.group))
            for n in F.homs_from(F.subgroup(m.image.elements)):
                assert F.contains(n.compose(m))
        assert {m for m in F.aut_s(P)} <= set(F.aut(P))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(gen_systems)
def test_closure_is_idempotent(F):
    gens = [m for P in F.subgroups for m in F.homs_from(P)]
    again = generate_fusion(F.S, 2, gens)
    assert again.same_table(F)


@pytest.mark.parametrize("name", [n for n in saturated_names()])
def test_bundled_systems_contain_hom_s(name):
    F = system(name)
    for P in F.subgroups:
        assert set(F.hom_s(P)) <= set(F.homs_from(P))


def test_a6_counts(a6):
    assert a6.morphism_count() == 44
    assert len(a6.classes()) == 6
    assert a6.out_order() == 1
    p = a6_parts(a6)
    assert len(a6.aut(p["V"])) == 6 and len(a6.aut(p["Vp"])) == 6
    assert a6.is_conjugate(p["Q1"], p["Z"]) and a6.is_conjugate(p["Q2"], p["Z"])


def test_generated_equals_ambient():
    for gen_name, amb_name in [("d8-a6-gen", "d8-a6"), ("d8-s4-gen", "d8-s4"), ("q8-c3-gen", "q8-c3")]:
        A, B = system(gen_name), system(amb_name)
        sigma = fusion_isomorphism(A, B)
        assert sigma is not None, gen_name


def test_s4_and_s5_agree():
    assert fusion_isomorphism(system("d8-s4"), system("d8-s5")) is not None
    assert fusion_isomorphism(system("d8-s4"), system("d8-a6")) is None


def test_aut_f_q8(qc):
    assert len(qc.aut(qc.S)) == 12
    assert qc.out_order() == 3


def test_sylow_systems_saturated():
    for name in saturated_names():
        F = system(name)
        if sylow_realized(F):
            assert is_saturated(F), name
            assert normalizer_map_check(F), name


@pytest.mark.parametrize(
    "name,axiom,witness",
    [
        ("d8-nonsat", "II", ["e", "r^2", "s", "sr^2"]),
        ("d8-outer-nonsat", "I", ["e", "r", "r^2", "r^3", "s", "sr", "sr^2", "sr^3"]),
        ("d8-q1z-nonsat", "II", ["e", "s"]),
    ],
)
def test_nonsaturated_witnesses(name, axiom, witness):
    v = is_saturated(system(name))
    assert not v
    assert v.axiom == axiom
    assert sorted(v.subgroup.labels()) == sorted(witness)


def test_extender_brute_force(a6):
    S = a6.S
    G = S.group
    for P in a6.subgroups:
        NP = normalizer(S, P)
        for phi in a6.homs_from(P):
            f = phi.as_dict
            brute = set()
            for x in NP.elements:
                ok = any(
                    all(f[G.conj(x, a)] == G.conj(y, f[a]) for a in P.elements) for y in S.elements
                )
                if ok:
                    brute.add(x)
            E = extender(a6, phi)
            assert E.set == brute
            assert P.set <= E.set
            if a6.is_fully_centralized(phi.image):
                assert a6.extensions(phi, E)


def test_extender_rejects_foreign_map(a6):
    S = a6.S
    P = next(Q for Q in a6.subgroups if Q.order == 2 and Q != a6.C(S))
    Z = a6.C(S)
    bad = GroupMap(P, [Z.elements[0], Z.elements[1]])
    # maps P onto Z; it is in F only if P is F-conjugate to Z
    if not a6.is_conjugate(P, Z):
        with pytest.raises(NotInFusionSystem):
            extender(a6, bad)


def test_fully_normalized_representatives(a6):
    for c in a6.classes():
        assert c.representative in c.fully_normalized
        assert a6.is_fully_normalized(c.representative)
        for Q in c.fully_normalized:
            assert a6.is_fully_centralized(Q)


def test_non_sylow_warns():
    G = symmetric(4)
    V = G.subgroup(["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"])
    with pytest.warns(UserWarning):
        F = fusion_of_group(G, V, 2)
    assert len(F.aut(F.S)) == 6


def test_fusion_errors():
    with pytest.raises(GroupSpecError):
        generate_fusion(symmetric(3).whole(), 2)
    D = D8_parts()
    with pytest.raises(GroupSpecError):
        fusion_of_group(symmetric(4), D["S"], 2)


def test_trivial_systems_are_group_systems():
    for G in (cyclic(4), quaternion(8), dihedral(8)):
        F = generate_fusion(G.whole(), 2)
        assert is_saturated(F)
        assert fusion_of_group(G, G.whole(), 2).morphism_count() == F.morphism_count()


def test_conjugate_helper():
    D = D8_parts()
    G = D["G"]
    assert conjugate(G.index("r"), D["Q1"]) in (D["Q1p"], D["Q1"])
    assert conjugate(G.index("r"), D["Q1"]) == D["Q1p"]
