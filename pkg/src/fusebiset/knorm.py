"""K-normalizer subgroups, subsystems and sub-bisets for ``K <= Aut(P)``.

The sub-biset ``N_W^K(P)`` is not an ``(S,S)``-biset, so it is computed on
explicit points: every orbit ``[Q,psi]`` is listed as cosets of its
stabilizer in ``S x S`` and each point carries its own stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bisets import POINT_CAP, Biset, canonical_orbit_type, is_characteristic, is_semicharacteristic, lambda_f
from .errors import CapExceeded, GroupSpecError, InternalCheckFailed
from .fusion import FusionSystem, is_saturated
from .groups import (
    GroupMap,
    Subgroup,
    all_subgroups,
    automorphisms,
    close_maps,
    conjugation_map,
    generate,
    maps_group,
    p_part,
)


class AutSubgroup:
    """A group ``K`` of automorphisms of ``base``, closed under composition."""

    def __init__(self, base: Subgroup, maps):
        maps = list(maps)
        self.base = base
        self.keys = frozenset(m.images for m in maps)
        for m in maps:
            if m.source != base or m.image != base:
                raise GroupSpecError("K must consist of automorphisms of P")
        if base.identity_map().images not in self.keys:
            raise GroupSpecError("K does not contain the identity")
        for a in maps:
            for b in maps:
                if a.compose(b).images not in self.keys:
                    raise GroupSpecError("K is not closed under composition")
        self.maps = sorted(maps, key=lambda m: m.images)

    @classmethod
    def generated(cls, base: Subgroup, gens) -> "AutSubgroup":
        return cls(base, close_maps([g.check() for g in gens], base))

    @classmethod
    def inner(cls, base: Subgroup) -> "AutSubgroup":
        return cls(base, {conjugation_map(x, base) for x in base.elements})

    @classmethod
    def trivial(cls, base: Subgroup) -> "AutSubgroup":
        return cls(base, [base.identity_map()])

    def __contains__(self, m: GroupMap) -> bool:
        return m.source == self.base and m.images in self.keys

    def __len__(self):
        return len(self.keys)

    def __eq__(self, other):
        return isinstance(other, AutSubgroup) and self.base == other.base and self.keys == other.keys

    def __hash__(self):
        return hash((self.base, self.keys))

    def __le__(self, other: "AutSubgroup") -> bool:
        return self.base == other.base and self.keys <= other.keys

    def __repr__(self):
        return f"AutSubgroup(|K|={len(self)}, |P|={self.base.order})"

    def times(self, other: "AutSubgroup") -> "AutSubgroup":
        return AutSubgroup(self.base, close_maps(self.maps + other.maps, self.base))

    def intersect(self, maps) -> list[GroupMap]:
        return [m for m in maps if m.images in self.keys]

    def transport(self, phi: GroupMap) -> "AutSubgroup":
        """``phi K phi^-1`` as automorphisms of ``phi P``."""
        inv = phi.inverse()
        return AutSubgroup(inv.source, [phi.compose(k).compose(inv) for k in self.maps])


def n_s_k(S: Subgroup, P: Subgroup, K: AutSubgroup) -> Subgroup:
    """``{n in N_S(P) : c_n|_P in K}``."""
    G = S.group
    out = []
    for n in S.elements:
        imgs = tuple(G.conj(n, x) for x in P.elements)
        if imgs in K.keys:
            out.append(n)
    return Subgroup(G, out)


def _saturated(F: FusionSystem) -> bool:
    if "saturated" not in F._cache:
        F._cache["saturated"] = bool(is_saturated(F))
    return F._cache["saturated"]


def is_fully_k_normalized(F: FusionSystem, P: Subgroup, K: AutSubgroup) -> bool:
    """``|N_S^K(P)| >= |N_S^{phi K}(phi P)|`` for every ``phi in F(P,S)``.

    For saturated ``F`` the equivalent criterion (fully centralized, and
    ``Aut_S(P) ∩ K`` Sylow in ``Aut_F(P) ∩ K``) is also evaluated and any
    disagreement raises ``InternalCheckFailed``.
    """
    S = F.S
    mine = n_s_k(S, P, K).order
    by_def = all(mine >= n_s_k(S, phi.image, K.transport(phi)).order for phi in F.homs(P))
    if _saturated(F):
        a_s = len(K.intersect(F.aut_s(P)))
        a_f = len(K.intersect(F.aut(P)))
        by_crit = F.is_fully_centralized(P) and a_s == p_part(a_f, F.p)
        if by_crit != by_def:
            raise InternalCheckFailed(f"fully K-normalized criteria disagree for P = {P.labels()}")
    return by_def


def k_normalizer_fusion(F: FusionSystem, P: Subgroup, K: AutSubgroup) -> FusionSystem:
    """``N_F^K(P)`` on ``N = N_S^K(P)``.

    A map ``A -> N`` is kept when it is the restriction of some
    ``phi~ in F(PA, S)`` with ``phi~ P = P``, ``phi~|_P in K`` and
    ``phi~(A) <= N``.
    """
    S = F.S
    G = S.group
    N = n_s_k(S, P, K)
    table = {}
    for A in all_subgroups(N):
        PA = F.subgroup(generate(G, list(P.elements) + list(A.elements)).elements)
        maps = set()
        for ext in F.homs_from(PA):
            if ext.restrict(P).images not in K.keys:
                continue
            r = ext.restrict(A)
            if r.image.set <= N.set:
                maps.add(GroupMap(A, r.images, G))
        table[A] = maps
    return FusionSystem(N, F.p, table, name=f"N^K({F.name})" if F.name else "")


# ----------------------------------------------------------- point bisets


class PointBiset:
    """Element-level listing of a biset given as orbit types.

    A point is stored as ``(orbit, copy, y, x)`` meaning ``(y, x) . w_0`` where
    ``w_0`` is the base point of the orbit with stabilizer ``(Q, psi)``. Its
    stabilizer is ``(x Q x^-1, c_y∘psi∘c_x^-1)``.
    """

    def __init__(self, omega: Biset):
        A = omega.A
        if omega.size > POINT_CAP:
            raise CapExceeded(f"biset has more than {POINT_CAP} points")
        G = A.group
        self.A = A
        self.omega = omega
        elems = np.array(A.elements)
        n = len(elems)
        self.n = n
        pos = np.full(G.order, -1)
        pos[elems] = np.arange(n)
        self._pos = pos
        self._elems = A.elements
        self._T = pos[G.table[np.ix_(elems, elems)]]
        Y, X = np.divmod(np.arange(n * n), n)
        self.types = []
        self._labels = []
        self.points: list[tuple] = []
        self._index: dict = {}
        for ti, (t, mult) in enumerate(omega.items()):
            self.types.append(t)
            label = None
            for q, pq in zip(*t.key):
                idx = self._T[Y, pos[pq]] * n + self._T[X, pos[q]]
                label = idx if label is None else np.minimum(label, idx)
            self._labels.append(label)
            reps = np.unique(label)
            for c in range(mult):
                for r in reps:
                    y, x = divmod(int(r), n)
                    self._index[(ti, c, int(r))] = len(self.points)
                    self.points.append((ti, c, y, x))
        if len(self.points) != omega.size:
            raise InternalCheckFailed("materialized point count differs from the biset size")
        self._stab: dict = {}

    def __len__(self):
        return len(self.points)

    def stabilizer(self, i: int) -> GroupMap:
        if i not in self._stab:
            ti, _, y, x = self.points[i]
            G = self.A.group
            t = self.types[ti]
            yy, xx = self._elems[y], self._elems[x]
            xi = G.inv(xx)
            f = t.phi.as_dict
            src = Subgroup(G, [G.conj(xx, q) for q in t.source.elements])
            imgs = [G.conj(yy, f[G.conj(xi, s)]) for s in src.elements]
            self._stab[i] = GroupMap(src, imgs, G)
        return self._stab[i]

    def act(self, i: int, u: int, v: int) -> int:
        """Index of ``u . w_i . v^-1`` for ``u, v`` in ``A``."""
        ti, c, y, x = self.points[i]
        pos, T, n = self._pos, self._T, self.n
        k = int(T[pos[u], y]) * n + int(T[pos[v], x])
        return self._index[(ti, c, int(self._labels[ti][k]))]

    def stabilizer_in(self, i: int, N: Subgroup) -> set[tuple[int, int]]:
        """``{(u, v) in N x N : u . w . v^-1 = w}`` by direct search."""
        return {(u, v) for u in N.elements for v in N.elements if self.act(i, u, v) == i}


@dataclass
class KSubBiset:
    """Points of ``N_W^K(P)`` and their ``(N,N)``-orbit decomposition."""

    N: Subgroup
    points: list
    orbit_of: dict
    orbits: list
    biset: Biset


def k_points(pb: PointBiset, P: Subgroup, K: AutSubgroup) -> list[int]:
    """Points whose stabilizer ``(Q,psi)`` has ``P <= Q``, ``psi P = P``, ``psi|_P in K``."""
    out = []
    for i in range(len(pb)):
        st = pb.stabilizer(i)
        if not P.set <= st.source.set:
            continue
        r = st.restrict(P)
        if r.images in K.keys:
            out.append(i)
    return out


def n_omega_k(omega, P: Subgroup, K: AutSubgroup) -> KSubBiset:
    """``N_W^K(P)`` as an ``(N,N)``-biset for ``N = N_S^K(P)``.

    Orbits are found by search under ``N x N``; each orbit is recorded with
    the stabilizer ``(N ∩ Q, psi|)`` of a representative, and its size is
    checked against ``|N|^2 / |N ∩ Q|``.
    """
    pb = omega if isinstance(omega, PointBiset) else PointBiset(omega)
    G = pb.A.group
    N = n_s_k(pb.A, P, K)
    pts = k_points(pb, P, K)
    inside = set(pts)
    gens = N.generators
    ident = G.identity
    orbit_of: dict[int, int] = {}
    orbits = []
    counts: dict = {}
    for i in pts:
        if i in orbit_of:
            continue
        k = len(orbits)
        orbit_of[i] = k
        queue = [i]
        for j in queue:
            for g in gens:
                for nb in (pb.act(j, g, ident), pb.act(j, ident, g)):
                    if nb not in inside:
                        raise InternalCheckFailed("K-normalizer points are not (N,N)-stable")
                    if nb not in orbit_of:
                        orbit_of[nb] = k
                        queue.append(nb)
        st = pb.stabilizer(i)
        NQ = Subgroup(G, sorted(N.set & st.source.set))
        local = st.restrict(NQ)
        if not local.image.set <= N.set:
            raise InternalCheckFailed("restricted stabilizer leaves N")
        if len(queue) != N.order * N.order // NQ.order:
            raise InternalCheckFailed("(N,N)-orbit size does not match its stabilizer")
        orbits.append((i, local))
        t = canonical_orbit_type(N, local)
        counts[t] = counts.get(t, 0) + 1
    return KSubBiset(N, pts, orbit_of, orbits, Biset(N, counts, canonical=True))


def orbit_bijection(omega, P: Subgroup, H: AutSubgroup, K: AutSubgroup) -> bool:
    """Whether ``N_W^H(P) ⊆ N_W^K(P)`` induces a bijection on orbits."""
    pb = omega if isinstance(omega, PointBiset) else PointBiset(omega)
    small, big = n_omega_k(pb, P, H), n_omega_k(pb, P, K)
    if not set(small.points) <= set(big.points):
        raise InternalCheckFailed("H-points are not contained in K-points")
    image = [big.orbit_of[i] for i, _ in small.orbits]
    return len(set(image)) == len(image) == len(big.orbits)


def extension_count(F_sub: FusionSystem, P: Subgroup, phi: GroupMap) -> int:
    """Number of maps in ``F_sub`` with source ``P·A`` that restrict to ``phi: A -> B``."""
    G = F_sub.S.group
    PA = F_sub.subgroup(generate(G, list(P.elements) + list(phi.source.elements)).elements)
    return len(F_sub.extensions(phi, PA))


# ----------------------------------------------------------------- report


def k_relation(P: Subgroup, K: AutSubgroup) -> str:
    inn = AutSubgroup.inner(P)
    if K <= inn:
        return "K<=Inn(P)"
    if inn <= K:
        return "Inn(P)<=K"
    return "neither"


@dataclass
class KNormReport:
    P: Subgroup
    K: AutSubgroup
    N: Subgroup
    relation: str
    fully_k_normalized: bool
    centric: bool
    subsystem_saturated: bool
    n_lambda: Biset
    lambda_n: Biset | None
    semicharacteristic: bool
    characteristic: bool
    id_orbits: int
    lambda_n_copies: int | None
    equal: bool | None
    inner_bijection: bool
    notes: list = field(default_factory=list)

    @property
    def one_copy_expected(self) -> bool:
        return self.fully_k_normalized and self.relation != "neither"

    @property
    def equality_expected(self) -> bool:
        return self.one_copy_expected and self.centric

    def consistent(self) -> bool:
        """Whether every conclusion whose hypotheses hold is observed."""
        ok = self.inner_bijection
        if self.fully_k_normalized:
            ok = ok and self.semicharacteristic and self.subsystem_saturated
        if self.one_copy_expected:
            ok = ok and self.id_orbits == 1 and self.characteristic
        if self.equality_expected:
            ok = ok and bool(self.equal)
        return ok


def verify_k_normalizer_theorems(
    F: FusionSystem, P: Subgroup, K: AutSubgroup, omega: Biset | None = None, lam: Biset | None = None
) -> KNormReport:
    """Compute ``N_Lambda^K(P)`` and ``Lambda`` of the subsystem and compare them.

    Hypotheses that fail are recorded in ``notes``; conclusions are reported,
    never assumed.
    """
    from .centric import is_centric

    lam = lam if lam is not None else lambda_f(F)
    pb = omega if isinstance(omega, PointBiset) else PointBiset(lam)
    fkn = is_fully_k_normalized(F, P, K)
    rel = k_relation(P, K)
    cen = is_centric(F, P)
    notes = []
    if not fkn:
        notes.append("P is not fully K-normalized")
    if rel == "neither":
        notes.append("K neither contains nor is contained in Inn(P)")
    if not cen:
        notes.append("P is not F-centric")
    sub = k_normalizer_fusion(F, P, K)
    sat = bool(is_saturated(sub))
    nk = n_omega_k(pb, P, K)
    semi = bool(is_semicharacteristic(sub, nk.biset))
    char = bool(is_characteristic(sub, nk.biset))
    N = nk.N
    id_type = canonical_orbit_type(N, N.identity_map())
    id_orbits = nk.biset[id_type]
    lam_n = None
    copies = None
    equal = None
    if sat:
        lam_n = lambda_f(sub)
        copies = _copies(nk.biset, lam_n)
        equal = nk.biset == lam_n
    else:
        notes.append("subsystem is not saturated; its minimal biset was not computed")
    L = K.times(AutSubgroup.inner(P))
    bij = orbit_bijection(pb, P, K, L)
    return KNormReport(P, K, N, rel, fkn, cen, sat, nk.biset, lam_n, semi, char, id_orbits, copies, equal, bij, notes)


def _copies(big: Biset, small: Biset) -> int:
    k = 0
    while small * (k + 1) <= big:
        k += 1
    return k


def aut_subgroups(P: Subgroup, cap: int = 64) -> list[AutSubgroup]:
    """Every subgroup of ``Aut(P)`` (used for exhaustive checks)."""
    auts = automorphisms(P)
    if len(auts) > cap:
        raise CapExceeded(f"|Aut(P)| = {len(auts)} exceeds {cap}")
    table, maps = maps_group(auts)
    return [AutSubgroup(P, [maps[i] for i in H.elements]) for H in all_subgroups(table)]
