"""Normal p-subgroups of fusion systems, constrained systems and their models."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .bisets import Biset, biset_of_group, canonical_orbit_type, lambda_f
from .errors import GroupSpecError, InternalCheckFailed
from .fusion import FusionSystem, fusion_isomorphism, fusion_of_group, is_saturated
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    centralizer,
    conjugacy_class_of_subgroup,
    generate,
    is_normal,
    is_sylow,
    op_prime_subgroup,
    op_subgroup,
    sylow_p,
)


def is_normal_in_fusion(F: FusionSystem, N: Subgroup) -> bool:
    """Every ``phi in F(P,S)`` extends to ``F(PN,S)`` with ``N`` mapped onto itself."""
    if not is_normal(F.S, N):
        return False
    G = F.S.group
    for P in F.subgroups:
        PN = F.subgroup(generate(G, list(P.elements) + list(N.elements)).elements)
        for phi in F.homs_from(P):
            if not any(m.restrict(N).image == N for m in F.extensions(phi, PN)):
                return False
    return True


def op_fusion(F: FusionSystem) -> Subgroup:
    """Largest subgroup of ``S`` normal in ``F``.

    Normal subgroups of ``S`` are scanned from the largest down; the product
    of any two passing subgroups is checked to pass as well.
    """
    if not is_saturated(F):
        warnings.warn("O_p of a non-saturated fusion system", stacklevel=2)
    normals = [N for N in F.subgroups if is_normal(F.S, N)]
    passing = [N for N in normals if is_normal_in_fusion(F, N)]
    best = max(passing, key=lambda N: (N.order, N.elements))
    G = F.S.group
    for A in passing:
        for B in passing:
            AB = F.subgroup(generate(G, list(A.elements) + list(B.elements)).elements)
            if not AB.set <= best.set:
                raise InternalCheckFailed("normal subgroups of F are not contained in a unique largest one")
    return best


def is_constrained(F: FusionSystem) -> bool:
    """``O_p(F)`` is F-centric, cross-checked with ``C_S(O_p(F)) <= O_p(F)``."""
    from .centric import is_centric

    O = op_fusion(F)
    a = is_centric(F, O)
    b = F.C(O).set <= O.set
    if a != b:
        raise InternalCheckFailed("constrainedness criteria disagree")
    return a


@dataclass
class ModelVerdict:
    is_model: bool
    p_reduced: bool
    p_constrained: bool
    sylow: bool
    same_fusion: bool
    embedding: GroupMap | None = None
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.is_model


def find_embedding(G: FiniteGroup, F: FusionSystem) -> tuple[Subgroup, GroupMap] | None:
    """A Sylow subgroup ``T`` of ``G`` and an isomorphism ``F.S -> T`` carrying ``F`` onto ``F_T(G)``."""
    p = F.p
    T0 = sylow_p(G, p)
    if T0.order != F.S.order:
        return None
    for T in conjugacy_class_of_subgroup(G, T0):
        FG = fusion_of_group(G, T, p)
        sigma = fusion_isomorphism(F, FG)
        if sigma is not None:
            _, emb = FG.realization
            return T, GroupMap(F.S, [emb[y] for y in sigma.images], G)
    return None


def is_model(G: FiniteGroup, F: FusionSystem) -> ModelVerdict:
    """p'-reduced, p-constrained, Sylow ``S``, and ``F_S(G) = F``.

    If ``F`` came from ``G`` itself its embedding is used, otherwise one is
    searched for over the Sylow subgroups of ``G``.
    """
    p = F.p
    notes = []
    reduced = op_prime_subgroup(G, p).order == 1
    O = op_subgroup(G, p)
    constrained = centralizer(G, O).set <= O.set
    if not reduced:
        notes.append("O_p'(G) is nontrivial")
    if not constrained:
        notes.append("C_G(O_p(G)) is not contained in O_p(G)")
    emb = None
    if F.realization is not None and F.realization[0] is G:
        _, e = F.realization
        emb = GroupMap(F.S, [e[x] for x in F.S.elements], G)
        same = True
        T = Subgroup(G, e)
    else:
        found = find_embedding(G, F)
        if found is None:
            notes.append("no Sylow subgroup of G realizes F")
            same = False
            T = None
        else:
            T, emb = found
            same = True
    syl = T is not None and is_sylow(G, T, p)
    return ModelVerdict(reduced and constrained and syl and same, reduced, constrained, syl, same, emb, notes)


@dataclass
class ModelTheoremVerdict:
    holds: bool
    group_biset: Biset
    lambda_biset: Biset
    diff: dict
    only_top_identity: bool
    one_identity_orbit: bool

    def __bool__(self):
        return self.holds


def verify_model_theorem(G: FiniteGroup, F: FusionSystem) -> ModelTheoremVerdict:
    """Compare ``G`` as an ``(S,S)``-biset with ``Lambda_F``.

    Also checks that the only untwisted orbit of ``G`` is ``[S,id]``, and that
    it occurs once.
    """
    v = is_model(G, F)
    if not v:
        raise GroupSpecError("G is not a model for F: " + "; ".join(v.notes))
    if F.realization is not None and F.realization[0] is G:
        gb = biset_of_group(F)
    else:
        e = v.embedding
        T = e.image
        back = {y: x for x, y in e.as_dict.items()}
        raw = biset_of_group(G, T)
        gb = Biset(
            F.S,
            {
                GroupMap(Subgroup(F.S.group, [back[x] for x in t.source.elements]), [back[y] for y in t.phi.images]): c
                for t, c in raw.items()
            },
        )
    lam = lambda_f(F)
    keys = set(gb.counts) | set(lam.counts)
    diff = {t: (gb[t], lam[t]) for t in sorted(keys) if gb[t] != lam[t]}
    untwisted = [t for t, _ in gb.items() if t.is_identity()]
    only_top = all(t.order == F.S.order for t in untwisted)
    one = gb[canonical_orbit_type(F.S, F.S.identity_map())] == 1
    return ModelTheoremVerdict(not diff and only_top and one, gb, lam, diff, only_top, one)
