import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusebiset.constructions import (
    alternating,
    build_group,
    cyclic,
    dihedral,
    direct_product,
    permutation_group,
    quaternion,
    semidirect_product,
    symmetric,
)
from fusebiset.errors import CapExceeded, GroupSpecError, NotAHomomorphism
from fusebiset.groups import (
    FiniteGroup,
    all_subgroups,
    automorphisms,
    canonical_conjugate,
    centralizer,
    conjugacy_class_of_subgroup,
    hom_from_generators,
    homomorphisms,
    induced_group,
    is_sylow,
    normalizer,
    op_prime_subgroup,
    op_subgroup,
    sylow_p,
)

SMALL = [cyclic(4), cyclic(8), dihedral(8), quaternion(8), direct_product(cyclic(2), cyclic(2), cyclic(2))]


def brute_subgroups(G):
    """Subsets closed under multiplication (finite, so subgroups), by brute force over subsets."""
    n = G.order
    out = []
    for mask in range(1 << (n - 1)):
        s = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        if all(G.mul(a, b) in s for a in s for b in s):
            out.append(frozenset(s))
    return set(out)


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.label)
def test_subgroup_lattice_matches_brute_force(G):
    assert G.index(G.labels[0]) == 0 and G.mul(0, 0) == 0
    assert {P.set for P in all_subgroups(G.whole())} == brute_subgroups(G)


@pytest.mark.parametrize("G,n", [(cyclic(4), 3), (cyclic(8), 4), (dihedral(8), 10), (quaternion(8), 6)])
def test_subgroup_counts(G, n):
    assert len(all_subgroups(G.whole())) == n


@pytest.mark.parametrize(
    "G,n",
    [(cyclic(4), 2), (cyclic(8), 4), (dihedral(8), 8), (quaternion(8), 24), (direct_product(cyclic(2), cyclic(2)), 6)],
)
def test_automorphism_counts(G, n):
    auts = automorphisms(G.whole())
    assert len(auts) == n
    assert all(a.is_homomorphism() and a.is_injective() for a in auts)


def test_automorphisms_brute_force_d8():
    G = dihedral(8)
    brute = 0
    for perm in itertools.permutations(range(8)):
        if perm[0] == 0 and all(perm[G.mul(a, b)] == G.mul(perm[a], perm[b]) for a in range(8) for b in range(8)):
            brute += 1
    assert brute == 8


def test_named_orders():
    assert symmetric(4).order == 24 and alternating(6).order == 360 and alternating(5).order == 60
    assert quaternion(8).element_orders.count(4) == 6
    assert dihedral(8).element_orders.count(2) == 5


def test_dihedral_labels():
    D = dihedral(8)
    r, s = D.index("r"), D.index("s")
    assert D.mul(D.mul(s, r), s) == D.index("r^3")
    assert D.labels[D.mul(s, r)] == "sr"


def test_semidirect_q8_c3():
    Q, C = quaternion(8), cyclic(3)
    G = semidirect_product(Q, C, [{"i": "j", "j": "k"}])
    assert G.order == 24
    S = sylow_p(G, 2)
    assert S.order == 8 and is_sylow(G, S, 2)
    assert op_subgroup(G, 2).order == 8
    assert op_prime_subgroup(G, 2).order == 1


def test_sylow_and_op():
    S4 = symmetric(4)
    S = sylow_p(S4, 2)
    assert S.order == 8
    assert is_sylow(S4, S, 2)
    assert not is_sylow(S4, S4.trivial(), 2)
    assert op_subgroup(S4, 2).order == 4
    assert op_subgroup(alternating(6), 2).order == 1
    assert op_prime_subgroup(S4, 2).order == 1
    assert op_prime_subgroup(S4, 3).order == 4


def test_op_matches_lattice():
    for G, p in [(symmetric(4), 2), (symmetric(4), 3), (alternating(5), 2), (dihedral(8), 2)]:
        normal_p = [
            P for P in all_subgroups(G.whole())
            if P.order & (P.order - 1) == 0 and p == 2 or P.order in (1, 3, 9) and p == 3
        ]
        normal_p = [P for P in normal_p if normalizer(G, P).order == G.order]
        assert op_subgroup(G, p).order == max(P.order for P in normal_p)


def test_normalizer_centralizer_d8():
    D = dihedral(8)
    V = D.subgroup(["e", "r^2", "s", "sr^2"])
    Q1 = D.subgroup(["e", "s"])
    assert normalizer(D, V).order == 8
    assert normalizer(D, Q1) == V
    assert centralizer(D, V) == V
    assert len(conjugacy_class_of_subgroup(D, Q1)) == 2
    assert canonical_conjugate(D, Q1) == canonical_conjugate(D, D.subgroup(["e", "sr^2"]))


def test_hom_from_generators():
    D = dihedral(8)
    src = D.generate([D.index("r"), D.index("s")])
    m = hom_from_generators(src, [(D.index("r"), D.index("r^3")), (D.index("s"), D.index("s"))])
    assert m.is_homomorphism() and m.is_injective()
    with pytest.raises(NotAHomomorphism):
        hom_from_generators(src, [(D.index("r"), D.index("s")), (D.index("s"), D.index("r"))])


def test_homomorphism_enumeration_counts():
    D = dihedral(8)
    V = D.subgroup(["e", "r^2", "s", "sr^2"])
    # injective maps V -> D8: 3 ordered pairs of distinct commuting involutions, per Klein subgroup
    assert len(list(homomorphisms(V, D.whole()))) == 12
    assert len(list(homomorphisms(D.whole(), D.whole(), injective=False))) > 8


def test_compose_inverse_restrict():
    D = dihedral(8)
    auts = automorphisms(D.whole())
    for a in auts:
        assert a.compose(a.inverse()).is_identity()
        Z = D.subgroup(["e", "r^2"])
        assert a.restrict(Z).image == Z


def test_induced_group():
    S4 = symmetric(4)
    S = sylow_p(S4, 2)
    H, emb = induced_group(S)
    assert H.order == 8 and len(emb) == 8
    assert len(all_subgroups(H.whole())) == 10
    for a in range(8):
        for b in range(8):
            assert emb[H.mul(a, b)] == S4.mul(emb[a], emb[b])


def test_errors():
    with pytest.raises(GroupSpecError):
        dihedral(8).index("nope")
    with pytest.raises(GroupSpecError):
        dihedral(8).subgroup(["s", "r"])
    with pytest.raises(GroupSpecError):
        FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(GroupSpecError):
        build_group({"kind": "named", "name": "nope"})
    with pytest.raises(CapExceeded):
        permutation_group(8, ["(1,2,3,4,5,6,7,8)", "(1,2)"])


def test_build_group_specs():
    assert build_group({"kind": "named", "name": "dihedral", "n": 8}).order == 8
    assert build_group({"kind": "perm", "degree": 4, "generators": ["(1,2,3,4)", "(1,3)"]}).order == 8
    assert build_group({"kind": "product", "factors": [{"kind": "named", "name": "cyclic", "n": 2}] * 3}).order == 8


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_generate_is_closed(G, data):
    gens = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = G.generate(gens)
    assert all(G.mul(a, b) in H.set for a in H.elements for b in H.elements)
    assert G.order % H.order == 0
    assert set(gens) <= H.set


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_conjugation_is_automorphism(G, data):
    g = data.draw(st.integers(0, G.order - 1))
    a, b = data.draw(st.integers(0, G.order - 1)), data.draw(st.integers(0, G.order - 1))
    assert G.conj(g, G.mul(a, b)) == G.mul(G.conj(g, a), G.conj(g, b))
    assert G.mul(a, G.inv(a)) == 0
