"""Fusion systems on a finite p-group with a fully materialized hom-table."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import CapExceeded, GroupSpecError, NotInFusionSystem
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    all_subgroups,
    centralizer,
    conjugate,
    conjugation_map,
    homomorphisms,
    induced_group,
    is_p_group_order,
    is_prime,
    is_sylow,
    normalizer,
    p_part,
    subgroups_of,
)

FUSION_CAP = 128
HOM_SET_CAP = 10**5


@lru_cache(maxsize=None)
def hom_s_keys(S: Subgroup, A: Subgroup) -> frozenset:
    """Image tuples of the maps ``c_y|_A`` for ``y`` in ``S`` (targets ignored)."""
    G = S.group
    return frozenset(tuple(G.conj(y, a) for a in A.elements) for y in S.elements)


def extender_elements(S: Subgroup, phi: GroupMap) -> list[int]:
    """``{x in N_S(P) : phi∘c_x = c_y∘phi for some y in S}``."""
    G = S.group
    P = phi.source
    f = phi.as_dict
    back = dict(zip(phi.images, P.elements))
    img = phi.image
    keys = hom_s_keys(S, img)
    out = []
    for x in normalizer(S, P).elements:
        eta = tuple(f[G.conj(x, back[a])] for a in img.elements)
        if eta in keys:
            out.append(x)
    return out


class FusionSystem:
    """A fusion system on ``S`` stored as ``Hom_F(P, S)`` for every ``P <= S``.

    ``homs(P, Q)`` is derived by filtering on images. ``S`` may be a proper
    subgroup of its parent group (this is how subsystems on ``N_S^K(P)`` are
    represented). ``realization`` optionally records ``(G, embedding)`` when the
    system came from an ambient group.
    """

    def __init__(self, S: Subgroup, p: int, table: dict, realization=None, name: str = ""):
        if S.order > FUSION_CAP:
            raise CapExceeded(f"fusion work limited to |S| <= {FUSION_CAP}")
        if not is_prime(p) or not is_p_group_order(S.order, p):
            raise GroupSpecError(f"S of order {S.order} is not a {p}-group")
        self.S = S
        self.p = p
        self.name = name
        self.realization = realization
        self.subgroups = all_subgroups(S)
        self._by_elements = {P.elements: P for P in self.subgroups}
        self._table = {P: frozenset(table.get(P, ())) for P in self.subgroups}
        self._cache: dict = {}

    def __repr__(self):
        return f"<FusionSystem {self.name or ''} on |S|={self.S.order}, p={self.p}>"

    # -- lookups

    def subgroup(self, elements) -> Subgroup:
        key = tuple(sorted(set(elements)))
        try:
            return self._by_elements[key]
        except KeyError:
            raise GroupSpecError("element set is not a subgroup of S") from None

    def homs_from(self, P: Subgroup) -> frozenset:
        return self._table[P]

    def homs(self, P: Subgroup, Q: Subgroup | None = None) -> list[GroupMap]:
        maps = self._table[P]
        if Q is not None:
            maps = [m for m in maps if m.image.set <= Q.set]
        return sorted(maps, key=lambda m: m.images)

    def aut(self, P: Subgroup) -> list[GroupMap]:
        return [m for m in self.homs(P) if m.image == P]

    def isos(self, P: Subgroup, Q: Subgroup) -> list[GroupMap]:
        return [m for m in self.homs(P) if m.image == Q]

    def contains(self, phi: GroupMap) -> bool:
        P = self._by_elements.get(phi.source.elements)
        return P is not None and phi in self._table[P]

    def morphism_count(self) -> int:
        return sum(len(v) for v in self._table.values())

    def table(self) -> dict:
        return dict(self._table)

    def same_table(self, other: "FusionSystem") -> bool:
        return self.S == other.S and all(self._table[P] == other._table.get(P) for P in self.subgroups)

    def subgroups_below(self, P: Subgroup) -> list[Subgroup]:
        key = ("below", P)
        if key not in self._cache:
            self._cache[key] = subgroups_of(P, self.subgroups)
        return self._cache[key]

    def N(self, P: Subgroup) -> Subgroup:
        key = ("N", P)
        if key not in self._cache:
            self._cache[key] = self._by_elements.get(normalizer(self.S, P).elements) or normalizer(self.S, P)
        return self._cache[key]

    def C(self, P: Subgroup) -> Subgroup:
        key = ("C", P)
        if key not in self._cache:
            C = centralizer(self.S, P)
            self._cache[key] = self._by_elements.get(C.elements, C)
        return self._cache[key]

    def hom_s(self, P: Subgroup) -> set[GroupMap]:
        """``Hom_S(P, S)``: restrictions of inner automorphisms of ``S``."""
        return {conjugation_map(s, P) for s in self.S.elements}

    def aut_s(self, P: Subgroup) -> list[GroupMap]:
        return sorted({m for m in self.hom_s(P) if m.image == P}, key=lambda m: m.images)

    def extensions(self, phi: GroupMap, R: Subgroup) -> list[GroupMap]:
        """Maps in ``F(R, S)`` restricting to ``phi`` (``phi.source <= R``)."""
        return [m for m in self.homs(R) if m.restrict(phi.source).key == phi.key]

    def f_class(self, P: Subgroup) -> list[Subgroup]:
        key = ("class", P)
        if key not in self._cache:
            imgs = {m.image.elements for m in self._table[P]}
            self._cache[key] = sorted((self._by_elements[e] for e in imgs), key=lambda Q: Q.sort_key)
        return self._cache[key]

    def is_conjugate(self, P: Subgroup, Q: Subgroup) -> bool:
        return Q in self.f_class(P)

    def is_fully_normalized(self, P: Subgroup) -> bool:
        return self.N(P).order == max(self.N(Q).order for Q in self.f_class(P))

    def is_fully_centralized(self, P: Subgroup) -> bool:
        return self.C(P).order == max(self.C(Q).order for Q in self.f_class(P))

    def s_class(self, P: Subgroup) -> list[Subgroup]:
        key = ("sclass", P)
        if key not in self._cache:
            seen = {conjugate(s, P).elements for s in self.S.elements}
            self._cache[key] = sorted((self._by_elements[e] for e in seen), key=lambda Q: Q.sort_key)
        return self._cache[key]

    def s_rep(self, P: Subgroup) -> Subgroup:
        """Canonical representative of the ``S``-conjugacy class of ``P``."""
        return self.s_class(P)[0]

    def class_rep(self, P: Subgroup) -> Subgroup:
        """Fully normalized member of ``(P)_F``: largest ``|N_S|``, then least element tuple."""
        return min(self.f_class(P), key=lambda Q: (-self.N(Q).order, Q.elements))

    def classes(self) -> "FConjClasses":
        if "classes" not in self._cache:
            self._cache["classes"] = f_classes(self)
        return self._cache["classes"]

    def out_order(self) -> int:
        """``|Out_F(S)| = |Aut_F(S)| / |Inn(S)|``."""
        return len(self.aut(self.S)) // len(self.aut_s(self.S))


# ------------------------------------------------------------- construction


def _check_s(S: Subgroup, p: int):
    if not is_prime(p):
        raise GroupSpecError(f"{p} is not prime")
    if S.order % p and S.order != 1:
        raise GroupSpecError(f"p = {p} does not divide |S| = {S.order}")
    if not is_p_group_order(S.order, p):
        raise GroupSpecError(f"S of order {S.order} is not a {p}-group")


def fusion_of_group(G: FiniteGroup, S: Subgroup, p: int, name: str = "") -> FusionSystem:
    """``F_S(G)``: all conjugation maps ``c_g|_P`` with ``g P g^-1 <= S``.

    ``S`` is re-indexed as a group of its own; ``F.realization`` holds ``G`` and
    the embedding. A non-Sylow ``S`` only triggers a warning.
    """
    if S.group is not G or not S.set <= G.whole().set:
        raise GroupSpecError("S is not a subgroup of G")
    _check_s(S, p)
    if not is_sylow(G, S, p):
        warnings.warn(f"S is not a Sylow {p}-subgroup of G; saturation is not guaranteed", stacklevel=2)
    Sg, emb = induced_group(S, label=f"S<{G.label}" if G.label else "S")
    local = {x: i for i, x in enumerate(emb)}
    Sloc = Sg.whole()
    table: dict = {}
    for P in all_subgroups(Sloc):
        Pg = [emb[x] for x in P.elements]
        maps = set()
        for g in G:
            imgs = [G.conj(g, x) for x in Pg]
            if all(y in local for y in imgs):
                maps.add(GroupMap(P, [local[y] for y in imgs]))
        table[P] = maps
    return FusionSystem(Sloc, p, table, realization=(G, emb), name=name)


def generate_fusion(S: Subgroup, p: int, generators: Sequence[GroupMap] = (), name: str = "") -> FusionSystem:
    """Smallest fusion system on ``S`` containing the given injective maps.

    Worklist closure under restriction, composition and inversion of
    isomorphisms onto their images, seeded with ``Hom_S``.
    """
    _check_s(S, p)
    lattice = all_subgroups(S)
    by_el = {P.elements: P for P in lattice}
    below = {P: subgroups_of(P, lattice) for P in lattice}

    def canon(m: GroupMap) -> GroupMap:
        src = by_el.get(m.source.elements)
        if src is None or not m.image.set <= S.set:
            raise NotInFusionSystem(f"{m!r} is not a map between subgroups of S")
        return GroupMap(src, m.images, S.group)

    table: dict = {P: set() for P in lattice}
    by_image: dict = {P.elements: set() for P in lattice}
    work: list[GroupMap] = []

    def add(m: GroupMap):
        if m not in table[m.source]:
            table[m.source].add(m)
            by_image[m.image.elements].add(m)
            if len(table[m.source]) > HOM_SET_CAP:
                raise CapExceeded(f"more than {HOM_SET_CAP} morphisms out of one subgroup")
            work.append(m)

    for P in lattice:
        for s in S.elements:
            add(conjugation_map(s, P))
    for g in generators:
        g.check()
        add(canon(g))
    while work:
        m = work.pop()
        P = m.source
        for R in below[P]:
            if R != P:
                add(m.restrict(R))
        inv = m.inverse()
        add(GroupMap(by_el[inv.source.elements], inv.images, S.group))
        for psi in list(table[by_el[m.image.elements]]):
            add(psi.compose(m))
        for chi in list(by_image[P.elements]):
            add(m.compose(chi))
    return FusionSystem(S, p, table, name=name)


def transport(F: FusionSystem, sigma: GroupMap, S2: Subgroup) -> dict:
    """Hom-table of ``F`` pushed along an isomorphism ``sigma: F.S -> S2``."""
    s = sigma.as_dict
    inv = {v: k for k, v in s.items()}
    G2 = S2.group
    out: dict = {}
    for P in F.subgroups:
        P2 = Subgroup(G2, [s[x] for x in P.elements])
        out[P2.elements] = {tuple(s[m(inv[y])] for y in P2.elements) for m in F.homs_from(P)}
    return out


def fusion_isomorphism(F1: FusionSystem, F2: FusionSystem) -> GroupMap | None:
    """An isomorphism ``S1 -> S2`` carrying the hom-table of ``F1`` exactly onto ``F2``."""
    if F1.S.order != F2.S.order or F1.morphism_count() != F2.morphism_count():
        return None
    target = {P.elements: {m.images for m in F2.homs_from(P)} for P in F2.subgroups}
    for sigma in homomorphisms(F1.S, F2.S, injective=True):
        if transport(F1, sigma, F2.S) == target:
            return sigma
    return None


# ----------------------------------------------------------------- classes


@dataclass(frozen=True)
class FClass:
    members: tuple
    s_reps: tuple
    fully_normalized: tuple
    fully_centralized: tuple
    representative: Subgroup

    @property
    def order(self) -> int:
        return self.representative.order


@dataclass
class FConjClasses:
    classes: list
    _lookup: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for c in self.classes:
            for P in c.members:
                self._lookup[P] = c

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def class_of(self, P: Subgroup) -> FClass:
        return self._lookup[P]

    def at_order(self, n: int) -> list:
        return [c for c in self.classes if c.order == n]


def f_classes(F: FusionSystem) -> FConjClasses:
    """Partition of the subgroups of ``S`` into F-conjugacy classes.

    Classes are sorted by descending order, then by representative.
    """
    seen = set()
    out = []
    for P in F.subgroups:
        if P in seen:
            continue
        members = tuple(F.f_class(P))
        seen.update(members)
        nmax = max(F.N(Q).order for Q in members)
        cmax = max(F.C(Q).order for Q in members)
        s_reps = tuple(sorted({F.s_rep(Q) for Q in members}, key=lambda Q: Q.sort_key))
        out.append(
            FClass(
                members=members,
                s_reps=s_reps,
                fully_normalized=tuple(Q for Q in members if F.N(Q).order == nmax),
                fully_centralized=tuple(Q for Q in members if F.C(Q).order == cmax),
                representative=F.class_rep(P),
            )
        )
    out.sort(key=lambda c: (-c.order, c.representative.elements))
    return FConjClasses(out)


# -------------------------------------------------------------- saturation


@dataclass
class SaturationVerdict:
    saturated: bool
    axiom: str | None = None
    subgroup: Subgroup | None = None
    morphism: GroupMap | None = None
    detail: str = ""

    def __bool__(self):
        return self.saturated


def extender(F: FusionSystem, phi: GroupMap) -> Subgroup:
    if not F.contains(phi):
        raise NotInFusionSystem(f"{phi!r} is not a morphism of F")
    return F.subgroup(extender_elements(F.S, phi))


def is_saturated(F: FusionSystem) -> SaturationVerdict:
    """Check both saturation axioms for every subgroup, largest first."""
    p = F.p
    for P in sorted(F.subgroups, key=lambda Q: (-Q.order, Q.elements)):
        if F.is_fully_normalized(P):
            if not F.is_fully_centralized(P):
                return SaturationVerdict(False, "I", P, None, "fully normalized but not fully centralized")
            a_s, a_f = len(F.aut_s(P)), len(F.aut(P))
            if a_s != p_part(a_f, p):
                return SaturationVerdict(
                    False, "I", P, None, f"|Aut_S(P)| = {a_s} is not the {p}-part of |Aut_F(P)| = {a_f}"
                )
        for phi in F.homs(P):
            if not F.is_fully_centralized(phi.image):
                continue
            Nphi = F.subgroup(extender_elements(F.S, phi))
            if not F.extensions(phi, Nphi):
                return SaturationVerdict(
                    False, "II", P, phi, f"no extension to the extender of order {Nphi.order}"
                )
    return SaturationVerdict(True)


@dataclass
class NormalizerMapVerdict:
    holds: bool
    counterexample: tuple | None = None

    def __bool__(self):
        return self.holds


def normalizer_map_check(F: FusionSystem) -> NormalizerMapVerdict:
    """For fully normalized ``P`` and each ``Q`` in its class: some ``F(N_S Q, N_S P)`` map sends ``Q`` to ``P``."""
    for c in F.classes():
        for P in c.fully_normalized:
            NP = F.N(P)
            for Q in c.members:
                ok = any(m.image.set <= NP.set and m.restrict(Q).image == P for m in F.homs(F.N(Q)))
                if not ok:
                    return NormalizerMapVerdict(False, (P, Q, F.N(Q)))
    return NormalizerMapVerdict(True)
