import warnings

import pytest

from fusebiset import io
from fusebiset.constructions import dihedral
from fusebiset.groups import GroupMap, close_maps, is_sylow

SYSTEM_NAMES = [n for n in io.bundled_names() if "p" in io.load_json(n)]

_cache = {}


def system(name):
    if name not in _cache:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _cache[name] = io.read_fusion(name)
    return _cache[name]


def saturated_names():
    return [n for n in SYSTEM_NAMES if "nonsat" not in n]


def sylow_realized(F):
    if F.realization is None:
        return False
    G, emb = F.realization
    from fusebiset.groups import Subgroup

    return is_sylow(G, Subgroup(G, emb), F.p)


def D8_parts(D=None):
    """Named subgroups and maps of the abstract dihedral group of order 8."""
    D = D or dihedral(8)
    sub = lambda *xs: D.subgroup(xs)
    parts = {
        "G": D,
        "S": D.whole(),
        "Z": sub("e", "r^2"),
        "C4": sub("e", "r", "r^2", "r^3"),
        "V": sub("e", "r^2", "s", "sr^2"),
        "Vp": sub("e", "r^2", "sr", "sr^3"),
        "Q1": sub("e", "s"),
        "Q1p": sub("e", "sr^2"),
        "Q2": sub("e", "sr"),
        "Q2p": sub("e", "sr^3"),
    }
    i = D.index
    parts["alpha"] = GroupMap.from_dict(
        parts["V"], {i("e"): i("e"), i("s"): i("r^2"), i("r^2"): i("sr^2"), i("sr^2"): i("s")}
    )
    parts["beta"] = GroupMap.from_dict(
        parts["Vp"], {i("e"): i("e"), i("sr"): i("r^2"), i("r^2"): i("sr^3"), i("sr^3"): i("sr")}
    )
    return parts


def a6_parts(F):
    """Identify Z, V, V', alpha, beta, Q1, Q2 inside F_S(A6) from its hom-table alone."""
    S = F.S
    Z = F.C(S)
    fours = [P for P in F.subgroups if P.order == 4 and Z.set <= P.set]
    klein = [P for P in fours if all(S.group.element_orders[x] <= 2 for x in P.elements)]
    V, Vp = sorted(klein, key=lambda P: P.elements)
    order3 = lambda P: next(m for m in F.aut(P) if len(close_maps([m], P)) == 3)
    alpha, beta = order3(V), order3(Vp)
    Q1 = alpha.inverse().restrict(Z).image
    Q1 = F.subgroup(Q1.elements)
    Q2 = F.subgroup(beta.inverse().restrict(Z).image.elements)
    a1 = alpha.restrict(Q1)
    ba = beta.inverse().compose(GroupMap(a1.source, a1.images, S.group))
    b2 = beta.restrict(Q2)
    ab = alpha.inverse().compose(GroupMap(b2.source, b2.images, S.group))
    return dict(S=S, Z=Z, V=V, Vp=Vp, alpha=alpha, beta=beta, Q1=Q1, Q2=Q2, ba=ba, ab=ab)


@pytest.fixture(scope="session")
def a6():
    return system("d8-a6")


@pytest.fixture(scope="session")
def qc():
    return system("q8-c3")


@pytest.fixture(scope="session")
def s4():
    return system("d8-s4")
