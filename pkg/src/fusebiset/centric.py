"""F-centric subgroups and the biset built from nonextendable isomorphisms."""

from __future__ import annotations

from dataclasses import dataclass

from .bisets import Biset, OrbitType, canonical_orbit_type
from .fusion import FusionSystem
from .groups import GroupMap, Subgroup


def is_centric(F: FusionSystem, P: Subgroup) -> bool:
    """``C_S(Q) <= Q`` for every ``Q`` in the F-class of ``P``."""
    return all(F.C(Q).set <= Q.set for Q in F.f_class(F.subgroup(P.elements)))


def centric_subgroups(F: FusionSystem) -> list[Subgroup]:
    return [P for P in F.subgroups if is_centric(F, P)]


def is_nonextendable(F: FusionSystem, phi: GroupMap) -> bool:
    """No map of ``F`` on a strictly larger source restricts to ``phi``.

    Only overgroups inside ``N_S(P)`` are scanned: any extension to some
    ``P' > P`` restricts to one on ``N_{P'}(P) > P``.
    """
    P = F.subgroup(phi.source.elements)
    NP = F.N(P)
    for R in F.subgroups_below(NP):
        if R.order > P.order and P.set <= R.set and F.extensions(phi, R):
            return False
    return True


def nonextendable_extensions(F: FusionSystem, phi: GroupMap) -> list[GroupMap]:
    """All nonextendable maps of ``F`` (any source) restricting to ``phi``."""
    P = phi.source
    out = []
    for R in F.subgroups:
        if P.set <= R.set:
            out.extend(m for m in F.extensions(phi, R) if is_nonextendable(F, m))
    return out


@dataclass(frozen=True)
class NonextendableClass:
    representative: OrbitType

    @property
    def phi(self) -> GroupMap:
        return self.representative.phi

    @property
    def source(self) -> Subgroup:
        return self.representative.source


def nonextendable_classes(F: FusionSystem, centric_only: bool = True) -> list[NonextendableClass]:
    """Classes of nonextendable F-maps up to ``phi ~ c_a∘phi∘c_b``."""
    seen = set()
    for P in F.subgroups:
        if centric_only and not is_centric(F, P):
            continue
        for phi in F.homs(P):
            if is_nonextendable(F, phi):
                seen.add(canonical_orbit_type(F.S, phi))
    return [NonextendableClass(t) for t in sorted(seen)]


def centric_minimal(F: FusionSystem) -> Biset:
    """One orbit ``[Q,psi]`` per class of nonextendable maps with centric source."""
    return Biset(F.S, {c.representative: 1 for c in nonextendable_classes(F)}, canonical=True)


def truncate_centric(F: FusionSystem, omega: Biset) -> Biset:
    """The orbits of ``omega`` whose source is F-centric."""
    return omega.restrict_to(lambda t: is_centric(F, t.source))
